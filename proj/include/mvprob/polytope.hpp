#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mvprob/linalg.hpp"

namespace mvprob {

/// Polyhedron {x : A x <= b} in a fixed ambient dimension. Equalities are
/// stored as a pair of opposite inequalities.
class Polytope {
public:
  explicit Polytope(std::size_t dim) : dim_(dim) {}
  Polytope(RatMat a, RatVec b);

  std::size_t dim() const { return dim_; }
  std::size_t constraint_count() const { return rows_.size(); }
  const std::vector<RatVec>& rows() const { return rows_; }
  const RatVec& rhs() const { return rhs_; }
  RatMat matrix() const { return RatMat::from_rows(rows_, dim_); }

  void add_inequality(RatVec a, Rat b);  // a.x <= b
  void add_equality(const RatVec& a, const Rat& b);

  bool contains(const RatVec& x) const;
  /// Indices of constraints satisfied with equality at x.
  std::vector<std::size_t> active(const RatVec& x) const;

private:
  std::size_t dim_;
  std::vector<RatVec> rows_;
  RatVec rhs_;
};

/// All vertices of a bounded polytope, sorted and deduplicated. Brute force
/// over constraint subsets of size dim(); meant for small dimensions only.
/// Throws UnboundedPolytope when the recession cone is nontrivial.
std::vector<RatVec> vertex_enumerate(const Polytope& p);

/// x is feasible and lies on dim() linearly independent active constraints.
bool is_vertex(const Polytope& p, const RatVec& x);

/// Dimension of the affine hull of a finite point set (-1 for the empty set).
long affine_dimension(const std::vector<RatVec>& points);

/// Barycentric coordinates of `query` w.r.t. affinely independent vertices.
/// Throws DegenerateVertices or OutsideHull.
RatVec barycentric(const std::vector<RatVec>& vertices, const RatVec& query);

/// Evaluates the unique affine extension of vertex -> value at `query`.
RatVec affine_extend(const std::vector<std::pair<RatVec, RatVec>>& vertex_values,
                     const RatVec& query);

}  // namespace mvprob
