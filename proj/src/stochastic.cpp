#include "mvprob/stochastic.hpp"

#include <set>

#include "mvprob/errors.hpp"
#include "mvprob/sampling.hpp"

namespace mvprob {

namespace {

const Rat& zero_rat() {
  static const Rat r(0);
  return r;
}
const Rat& one_rat() {
  static const Rat r(1);
  return r;
}

bool is_unit_power(const Algebra& a) {
  if (a.kind() == AlgebraKind::UnitInterval) return true;
  auto* p = as_product(a);
  return p && p->base()->kind() == AlgebraKind::UnitInterval;
}

RatVec basis(std::size_t n, std::size_t j) {
  RatVec e(n, zero_rat());
  e[j] = one_rat();
  return e;
}

}  // namespace

StochMat StochMat::make(RatMat m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw NotStochastic("matrix must be square and nonempty");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat sum(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < zero_rat()) throw NotStochastic("negative entry in row " + std::to_string(i));
      sum += m(i, j);
    }
    if (sum != one_rat()) throw NotStochastic("row " + std::to_string(i) + " sums to " + sum.str());
  }
  return StochMat(std::move(m));
}

RatVec StochMat::flatten() const {
  RatVec v;
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) v.push_back(m_(i, j));
  return v;
}

StochMat to_stochastic(const ProbMap& p, std::size_t samples, std::uint64_t seed) {
  const Algebra& m = *p.domain();
  const Algebra& n = *p.codomain();
  if (!is_rational_product(m) || !is_rational_product(n))
    throw UnsupportedAlgebra("stochastic matrices need powers of rational chains");
  const std::size_t k = coordinate_count(m);
  if (coordinate_count(n) != k) throw DimensionError("domain and codomain orders differ");
  RatMat s(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    RatVec col = coordinates(n, p(from_coordinates(m, basis(k, j))));
    for (std::size_t i = 0; i < k; ++i) s(i, j) = col[i];
  }
  std::vector<Elem> points;
  if (m.is_finite()) {
    points = m.carrier();
  } else {
    if (k <= 4) {
      const Rat grid[] = {Rat(0), Rat(1, 2), Rat(1)};
      std::vector<std::size_t> digit(k, 0);
      while (true) {
        RatVec c;
        for (auto d : digit) c.push_back(grid[d]);
        points.push_back(from_coordinates(m, c));
        std::size_t i = 0;
        while (i < k && ++digit[i] == 3) digit[i++] = 0;
        if (i == k) break;
      }
    }
    for (auto& x : sample_elements(m, samples, seed)) points.push_back(std::move(x));
  }
  for (const auto& a : points)
    if (coordinates(n, p(a)) != s * coordinates(m, a))
      throw NotRepresentable("map is not linear at " + to_string(a));
  return StochMat::make(std::move(s));
}

RatVec apply_stochastic(const StochMat& s, const RatVec& a) {
  if (a.size() != s.n()) throw DimensionError("vector length differs from the matrix order");
  for (const auto& x : a)
    if (x < zero_rat() || x > one_rat()) throw RangeError("vector entry " + x.str() + " outside [0,1]");
  return s.entries() * a;
}

ProbMap from_stochastic(const StochMat& s) {
  AlgebraHandle a = product(unit_interval(), static_cast<unsigned>(s.n()));
  return ProbMap::from_rule(a, a, "stochastic", [s, a](const Elem& x) {
    return from_coordinates(*a, apply_stochastic(s, coordinates(*a, x)));
  });
}

Polytope stochastic_polytope(std::size_t n) {
  const std::size_t d = n * n;
  Polytope p(d);
  for (std::size_t i = 0; i < d; ++i) p.add_inequality(Rat(-1) * basis(d, i), zero_rat());
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(d, zero_rat());
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = one_rat();
    p.add_equality(row, one_rat());
  }
  return p;
}

Polytope additivity_polytope(const AlgebraHandle& from, std::size_t k) {
  const auto& t = from->tables();
  const std::size_t n = t.n;
  const std::size_t d = n * k;
  Polytope p(d);
  for (std::size_t i = 0; i < d; ++i) {
    p.add_inequality(basis(d, i), one_rat());
    p.add_inequality(Rat(-1) * basis(d, i), zero_rat());
  }
  for (std::size_t y = 0; y < k; ++y) {
    p.add_equality(basis(d, t.zero * k + y), zero_rat());
    p.add_equality(basis(d, t.one * k + y), one_rat());
  }
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (a == t.zero || b == t.zero || t.odot[a * n + b] != t.zero) continue;
      const std::size_t s = t.oplus[a * n + b];
      if (!seen.insert({a, b}).second) continue;
      for (std::size_t y = 0; y < k; ++y)
        p.add_equality(basis(d, s * k + y) - basis(d, a * k + y) - basis(d, b * k + y), zero_rat());
    }
  return p;
}

RatVec map_point(const ProbMap& p) {
  RatVec x;
  for (const auto& v : p.values())
    for (auto& c : coordinates(*p.codomain(), v)) x.push_back(std::move(c));
  return x;
}

ExtremeReport is_extreme(const ProbMap& p) {
  const Algebra& n = *p.codomain();
  const bool functions = n.kind() == AlgebraKind::Pwl || n.kind() == AlgebraKind::Free1;
  if (!functions && !is_rational_product(n))
    throw UnsupportedAlgebra("extremality needs a function-algebra codomain, got " + n.name());
  ExtremeReport r;
  r.hom = is_mv_hom(p);
  if (functions) {
    r.extreme = r.hom;
    return r;
  }
  if (p.domain()->is_finite()) {
    Polytope poly = additivity_polytope(p.domain(), coordinate_count(n));
    r.vertex = is_vertex(poly, map_point(p));
  } else if (is_unit_power(*p.domain())) {
    StochMat s = to_stochastic(p);
    r.vertex = is_vertex(stochastic_polytope(s.n()), s.flatten());
  } else {
    throw UnsupportedAlgebra("no vertex test for maps out of " + p.domain()->name());
  }
  if (*r.vertex != r.hom)
    throw InternalInconsistency("homomorphism and vertex tests disagree on extremality");
  r.extreme = r.hom;
  return r;
}

}  // namespace mvprob
