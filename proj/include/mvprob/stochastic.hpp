#pragma once

#include <optional>

#include "mvprob/linalg.hpp"
#include "mvprob/polytope.hpp"
#include "mvprob/probmap.hpp"

namespace mvprob {

/// Square matrix with nonnegative entries and unit row sums.
class StochMat {
public:
  /// Throws NotStochastic.
  static StochMat make(RatMat m);
  std::size_t n() const { return m_.rows(); }
  const RatMat& entries() const { return m_; }
  /// Row-major entries, the coordinates used by stochastic_polytope.
  RatVec flatten() const;

  friend bool operator==(const StochMat& a, const StochMat& b) { return a.m_ == b.m_; }

private:
  explicit StochMat(RatMat m) : m_(std::move(m)) {}
  RatMat m_;
};

/// S with S_ij = p(e_j)_i. Linearity is checked on the whole domain when
/// finite, else on the grid {0,1/2,1}^n and seeded samples; failure throws
/// NotRepresentable.
StochMat to_stochastic(const ProbMap& p, std::size_t samples = 64, std::uint64_t seed = 1);
/// a |-> S a on [0,1]^n.
ProbMap from_stochastic(const StochMat& s);
RatVec apply_stochastic(const StochMat& s, const RatVec& a);

/// {x in R^(n*n) : x >= 0, every row sums to 1}, row-major.
Polytope stochastic_polytope(std::size_t n);

/// Maps from a finite algebra into [0,1]^k that fix 0 and 1 and are
/// additive on disjoint pairs. Coordinates: x[index(a) * k + y].
Polytope additivity_polytope(const AlgebraHandle& from, std::size_t k);
/// The point of additivity_polytope given by p.
RatVec map_point(const ProbMap& p);

struct ExtremeReport {
  bool extreme = false;
  bool hom = false;
  /// Vertex test; absent for function-algebra codomains.
  std::optional<bool> vertex;
};

/// Extremality decided by the homomorphism criterion and, for rational
/// codomains, independently by a vertex test. Disagreement throws
/// InternalInconsistency.
ExtremeReport is_extreme(const ProbMap& p);

}  // namespace mvprob
