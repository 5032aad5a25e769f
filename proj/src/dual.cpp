#include "mvprob/dual.hpp"

#include <map>

#include "mvprob/errors.hpp"
#include "mvprob/sampling.hpp"
#include "mvprob/stochastic.hpp"

namespace mvprob {

namespace {

bool is_unit_power(const Algebra& a) {
  if (a.kind() == AlgebraKind::UnitInterval) return true;
  auto* p = as_product(a);
  return p && p->base()->kind() == AlgebraKind::UnitInterval;
}

std::vector<Elem> test_points(const Algebra& a) {
  if (a.is_finite()) return a.carrier();
  auto pts = sample_elements(a, 200, 1);
  if (auto* p = as_product(a))
    for (unsigned i = 0; i < p->arity(); ++i) pts.push_back(p->unit_vector(i));
  return pts;
}

State dual_state(const ProbMap& p, const MaxEntry& e) {
  const AlgebraHandle& m = p.domain();
  if (m->is_finite()) {
    RatVec v;
    for (const auto& x : m->carrier()) v.push_back(e.embed(p(x)));
    return State::from_table(m, std::move(v));
  }
  if (is_rational_product(*m)) {
    const unsigned k = coordinate_count(*m);
    RatVec w;
    for (unsigned j = 0; j < k; ++j) {
      RatVec c(k, Rat(0));
      c[j] = Rat(1);
      w.push_back(e.embed(p(from_coordinates(*m, c))));
    }
    State lin = State::linear(m, w);
    bool linear = true;
    for (const auto& x : test_points(*m))
      if (lin(x) != e.embed(p(x))) {
        linear = false;
        break;
      }
    if (linear) return lin;
  }
  auto embed = e.embed;
  return State::from_function(m, [p, embed](const Elem& x) { return embed(p(x)); });
}

}  // namespace

DualMap dual(const ProbMap& p, bool require_semisimple) {
  if (require_semisimple && !is_semisimple(p.codomain()))
    throw UnsupportedAlgebra(p.codomain()->name() + " is not semisimple");
  DualMap d{p.domain(), p.codomain(), all_maximal_ideals(p.codomain()), {}};
  for (const auto& e : d.max.entries) d.states.push_back(dual_state(p, e));
  return d;
}

ProbMap from_dual(const DualMap& d) {
  const AlgebraHandle& n = d.codomain;
  if (d.states.size() != d.max.size()) throw DimensionError("one state per maximal ideal");
  std::function<Elem(const RatVec&)> lift;
  if (n->is_finite()) {
    auto table = std::make_shared<std::map<RatVec, Elem>>();
    for (const auto& y : n->carrier()) table->emplace(star(d.max, y), y);
    lift = [table](const RatVec& v) {
      auto it = table->find(v);
      if (it == table->end()) throw NotRepresentable("no codomain element has these values");
      return it->second;
    };
  } else if (is_unit_power(*n)) {
    auto max = d.max;
    lift = [n, max](const RatVec& v) {
      RatVec c(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) c[max.entries[i].ideal.coord] = v[i];
      return from_coordinates(*n, c);
    };
  } else {
    throw UnsupportedAlgebra("cannot rebuild elements of " + n->name() + " from their star");
  }
  auto states = d.states;
  auto f = [states, lift](const Elem& x) {
    RatVec v;
    for (const auto& s : states) v.push_back(s(x));
    return lift(v);
  };
  if (d.domain->is_finite()) {
    std::vector<Elem> vals;
    for (const auto& x : d.domain->carrier()) vals.push_back(f(x));
    return ProbMap::from_table(d.domain, n, std::move(vals));
  }
  return ProbMap::from_rule(d.domain, n, "from_dual", f);
}

bool same_dual(const DualMap& a, const DualMap& b) {
  if (a.states.size() != b.states.size()) return false;
  for (std::size_t i = 0; i < a.states.size(); ++i)
    if (!same_state(a.states[i], b.states[i])) return false;
  return true;
}

bool dual_roundtrip(const ProbMap& p) {
  DualMap d = dual(p);
  ProbMap q = from_dual(d);
  return same_map(p, q) && same_dual(dual(q), d);
}

DualEquivalences check_dual_equivalences(const ProbMap& p) {
  DualEquivalences r;
  ExtremeReport ex = is_extreme(p);
  r.extreme = ex.extreme;
  r.hom = ex.hom;
  DualMap d = dual(p);
  MaxSpace dom = all_maximal_ideals(p.domain());
  auto ext = ext_states(dom);
  r.duals_extreme = true;
  for (const auto& s : d.states) {
    bool found = false;
    for (const auto& e : ext)
      if (same_state(s, e)) {
        found = true;
        break;
      }
    if (!found) r.duals_extreme = false;
  }
  const auto points = test_points(*p.domain());
  std::vector<std::size_t> f;
  for (const auto& n : d.max.entries) {
    std::optional<std::size_t> hit;
    for (std::size_t m = 0; m < dom.size() && !hit; ++m) {
      bool ok = true;
      for (const auto& a : points)
        if (dom.entries[m].embed(a) != n.embed(p(a))) {
          ok = false;
          break;
        }
      if (ok) hit = m;
    }
    if (!hit) break;
    f.push_back(*hit);
  }
  r.factors = f.size() == d.max.size();
  if (r.factors) r.index_map = std::move(f);
  return r;
}

}  // namespace mvprob
