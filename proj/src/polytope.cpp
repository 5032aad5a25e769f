#include "mvprob/polytope.hpp"

#include <algorithm>

#include "mvprob/errors.hpp"

namespace mvprob {

Polytope::Polytope(RatMat a, RatVec b) : dim_(a.cols()) {
  if (a.rows() != b.size()) throw DimensionError("polytope: A and b row counts differ");
  for (std::size_t i = 0; i < a.rows(); ++i) rows_.push_back(a.row(i));
  rhs_ = std::move(b);
}

void Polytope::add_inequality(RatVec a, Rat b) {
  if (a.size() != dim_) throw DimensionError("polytope: constraint has wrong dimension");
  rows_.push_back(std::move(a));
  rhs_.push_back(std::move(b));
}

void Polytope::add_equality(const RatVec& a, const Rat& b) {
  add_inequality(a, b);
  add_inequality(Rat(-1) * a, -b);
}

bool Polytope::contains(const RatVec& x) const {
  if (x.size() != dim_) throw DimensionError("polytope: point has wrong dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (dot(rows_[i], x) > rhs_[i]) return false;
  return true;
}

std::vector<std::size_t> Polytope::active(const RatVec& x) const {
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (dot(rows_[i], x) == rhs_[i]) act.push_back(i);
  return act;
}

namespace {

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Brute force over d-subsets of the constraints.
std::vector<RatVec> vertices_by_subsets(const Polytope& p) {
  const std::size_t d = p.dim();
  const auto& rows = p.rows();
  if (d == 0) return {RatVec{}};
  if (rank(rows, d) < d)
    throw UnboundedPolytope("polytope contains a line (constraint matrix rank < dimension)");

  std::vector<RatVec> verts;
  for_each_subset(rows.size(), d, [&](const std::vector<std::size_t>& s) {
    RatMat a(d, d);
    RatVec b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(i, j) = rows[s[i]][j];
      b[i] = p.rhs()[s[i]];
    }
    auto x = solve_linear(a, b);
    if (x && p.contains(*x)) verts.push_back(std::move(*x));
  });
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  // A pointed polyhedron is unbounded iff its recession cone {y : A y <= 0}
  // has an extreme ray; each such ray spans the kernel of d-1 independent rows.
  if (!verts.empty() && d >= 1) {
    bool unbounded = false;
    for_each_subset(rows.size(), d - 1, [&](const std::vector<std::size_t>& s) {
      if (unbounded) return;
      std::vector<RatVec> sub;
      for (auto i : s) sub.push_back(rows[i]);
      auto ker = d == 1 ? std::vector<RatVec>{RatVec{Rat(1)}} : null_space(RatMat::from_rows(sub, d));
      if (ker.size() != 1) return;
      for (int sgn : {1, -1}) {
        RatVec y = Rat(sgn) * ker[0];
        bool in_cone = std::all_of(rows.begin(), rows.end(),
                                   [&](const RatVec& r) { return dot(r, y).sign() <= 0; });
        if (in_cone) unbounded = true;
      }
    });
    if (unbounded) throw UnboundedPolytope("polytope has a recession direction");
  }
  return verts;
}

}  // namespace

std::vector<RatVec> vertex_enumerate(const Polytope& p) {
  const std::size_t d = p.dim();
  const auto& rows = p.rows();
  const auto& rhs = p.rhs();

  // Pair up opposite inequalities into equalities; vertices are then found
  // inside the affine subspace they cut out, which is usually far smaller.
  std::vector<char> paired(rows.size(), 0);
  std::vector<std::size_t> eq;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (paired[i]) continue;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (paired[j] || rhs[j] != -rhs[i] || rows[j] != Rat(-1) * rows[i]) continue;
      paired[i] = paired[j] = 1;
      eq.push_back(i);
      break;
    }
  }
  if (eq.empty() || d == 0) return vertices_by_subsets(p);

  RatMat aug(eq.size(), d + 1);
  RatMat hom(eq.size(), d);
  for (std::size_t r = 0; r < eq.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) aug(r, c) = hom(r, c) = rows[eq[r]][c];
    aug(r, d) = rhs[eq[r]];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == d) return {};
  RatVec x0(d);
  for (std::size_t r = 0; r < pivots.size(); ++r) x0[pivots[r]] = aug(r, d);
  auto basis = null_space(hom);
  const std::size_t m = basis.size();

  Polytope reduced(m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (paired[i]) continue;
    RatVec a(m);
    for (std::size_t k = 0; k < m; ++k) a[k] = dot(rows[i], basis[k]);
    reduced.add_inequality(std::move(a), rhs[i] - dot(rows[i], x0));
  }
  if (m == 0) return reduced.contains({}) ? std::vector<RatVec>{x0} : std::vector<RatVec>{};

  std::vector<RatVec> verts;
  for (const auto& t : vertices_by_subsets(reduced)) {
    RatVec x = x0;
    for (std::size_t k = 0; k < m; ++k) x = x + t[k] * basis[k];
    verts.push_back(std::move(x));
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

bool is_vertex(const Polytope& p, const RatVec& x) {
  if (!p.contains(x)) return false;
  std::vector<RatVec> act;
  for (auto i : p.active(x)) act.push_back(p.rows()[i]);
  if (act.empty()) return p.dim() == 0;
  return rank(act, p.dim()) == p.dim();
}

long affine_dimension(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) return 0;
  return static_cast<long>(rank(diffs, points[0].size()));
}

RatVec barycentric(const std::vector<RatVec>& vertices, const RatVec& query) {
  if (vertices.empty()) throw DegenerateVertices("no vertices given");
  const std::size_t d = vertices[0].size();
  for (const auto& v : vertices)
    if (v.size() != d) throw DimensionError("vertices of differing dimension");
  if (query.size() != d) throw DimensionError("query has wrong dimension");
  if (affine_dimension(vertices) != static_cast<long>(vertices.size()) - 1)
    throw DegenerateVertices("vertices are not affinely independent");

  const std::size_t k = vertices.size();
  RatMat a(d + 1, k);
  RatVec b(d + 1);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < k; ++i) a(c, i) = vertices[i][c];
    b[c] = query[c];
  }
  for (std::size_t i = 0; i < k; ++i) a(d, i) = 1;
  b[d] = 1;
  auto lambda = solve_linear(a, b);
  if (!lambda) throw OutsideHull("query is not in the affine hull of the vertices");
  for (const auto& l : *lambda)
    if (l.sign() < 0) throw OutsideHull("query lies outside the convex hull");
  return *lambda;
}

RatVec affine_extend(const std::vector<std::pair<RatVec, RatVec>>& vertex_values,
                     const RatVec& query) {
  std::vector<RatVec> verts;
  for (const auto& [v, _] : vertex_values) verts.push_back(v);
  RatVec lambda = barycentric(verts, query);
  const std::size_t m = vertex_values[0].second.size();
  RatVec out(m);
  for (std::size_t i = 0; i < vertex_values.size(); ++i) {
    if (vertex_values[i].second.size() != m) throw DimensionError("values of differing dimension");
    if (lambda[i].sign() == 0) continue;
    out = out + lambda[i] * vertex_values[i].second;
  }
  return out;
}

}  // namespace mvprob
