#include "mvprob/spectra.hpp"

#include <algorithm>
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

Elem distance(const Algebra& m, const Elem& a, const Elem& b) {
  return m.oplus(m.ominus(a, b), m.ominus(b, a));
}

// Closure of a member set of a finite algebra under oplus and downward closure.
std::vector<std::size_t> close_finite(const Algebra& a, std::set<std::size_t> s) {
  const auto& t = a.tables();
  const std::size_t n = t.n;
  s.insert(t.zero);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto i : cur)
      for (auto j : cur)
        if (s.insert(t.oplus[i * n + j]).second) changed = true;
    cur.assign(s.begin(), s.end());
    for (std::size_t x = 0; x < n; ++x) {
      if (s.count(x)) continue;
      for (auto i : cur)
        if (t.leq[x * n + i]) {
          s.insert(x);
          changed = true;
          break;
        }
    }
  }
  return {s.begin(), s.end()};
}

Ideal members_ideal(const AlgebraHandle& a, std::vector<std::size_t> m) {
  Ideal i;
  i.algebra = a;
  i.form = IdealForm::Members;
  i.members = std::move(m);
  return i;
}

Ideal symbolic(const AlgebraHandle& a, IdealForm f, unsigned coord = 0) {
  Ideal i;
  i.algebra = a;
  i.form = f;
  i.coord = coord;
  return i;
}

}  // namespace

bool Ideal::contains(const Elem& x) const {
  if (!algebra->contains(x)) return false;
  switch (form) {
    case IdealForm::Members:
      return std::binary_search(members.begin(), members.end(), algebra->index_of(x));
    case IdealForm::ChangZero: return x == algebra->zero();
    case IdealForm::ChangRad: return !x.chang().coinf;
    case IdealForm::ChangAll: return true;
    case IdealForm::Zero: return x == algebra->zero();
    case IdealForm::CoordKernel:
      return x.is<Rat>() ? x.rat() == zero_rat() : x.tuple().at(coord).rat() == zero_rat();
  }
  return false;
}

std::string Ideal::describe() const {
  switch (form) {
    case IdealForm::Members: {
      std::string s = "{";
      const auto& c = algebra->carrier();
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ", ";
        s += to_string(c[members[i]]);
      }
      return s + "}";
    }
    case IdealForm::ChangZero: return "{0}";
    case IdealForm::ChangRad: return "{fin(n)}";
    case IdealForm::ChangAll: return "all";
    case IdealForm::Zero: return "{0}";
    case IdealForm::CoordKernel: return "ker" + std::to_string(coord);
  }
  return "?";
}

Ideal make_ideal(const AlgebraHandle& a, std::vector<Elem> members) {
  if (!a->is_finite()) throw UnsupportedAlgebra("explicit ideals need a finite algebra");
  std::set<std::size_t> s;
  for (const auto& x : members) s.insert(a->index_of(x));
  if (!s.count(a->tables().zero)) throw NotAnIdeal("0 is missing");
  auto closed = close_finite(*a, s);
  if (closed.size() != s.size()) {
    for (auto i : closed)
      if (!s.count(i))
        throw NotAnIdeal("not closed: " + to_string(a->carrier()[i]) + " is missing");
  }
  return members_ideal(a, {s.begin(), s.end()});
}

Ideal ideal_closure(const AlgebraHandle& a, const std::vector<Elem>& gens) {
  if (a->kind() == AlgebraKind::Chang) {
    bool any_fin = false;
    for (const auto& g : gens) {
      if (!a->contains(g)) throw AlgebraMismatch(to_string(g) + " is not in chang");
      if (g.chang().coinf) return symbolic(a, IdealForm::ChangAll);
      if (g.chang().n > 0) any_fin = true;
    }
    return symbolic(a, any_fin ? IdealForm::ChangRad : IdealForm::ChangZero);
  }
  if (!a->is_finite()) throw UnsupportedAlgebra("ideal closure is not available for " + a->name());
  std::set<std::size_t> s;
  for (const auto& g : gens) s.insert(a->index_of(g));
  return members_ideal(a, close_finite(*a, std::move(s)));
}

std::vector<Ideal> all_ideals(const AlgebraHandle& a) {
  if (a->kind() == AlgebraKind::Chang)
    return {symbolic(a, IdealForm::ChangZero), symbolic(a, IdealForm::ChangRad),
            symbolic(a, IdealForm::ChangAll)};
  if (!a->is_finite()) throw UnsupportedAlgebra("ideal lattice is not available for " + a->name());
  // Every ideal of a finite algebra is principal.
  std::set<std::vector<std::size_t>> found;
  for (std::size_t i = 0; i < a->size(); ++i) found.insert(close_finite(*a, {i}));
  std::vector<Ideal> out;
  for (const auto& m : found) out.push_back(members_ideal(a, m));
  return out;
}

MaxSpace all_maximal_ideals(const AlgebraHandle& a) {
  MaxSpace ms;
  ms.algebra = a;
  if (a->kind() == AlgebraKind::Chang) {
    ms.entries.push_back({symbolic(a, IdealForm::ChangRad), 1u,
                          [](const Elem& x) { return x.chang().coinf ? one_rat() : zero_rat(); }});
    return ms;
  }
  if (a->kind() == AlgebraKind::UnitInterval) {
    ms.entries.push_back({symbolic(a, IdealForm::Zero), std::nullopt,
                          [](const Elem& x) { return x.rat(); }});
    return ms;
  }
  if (is_unit_power(*a)) {
    for (unsigned i = 0; i < as_product(*a)->arity(); ++i)
      ms.entries.push_back({symbolic(a, IdealForm::CoordKernel, i), std::nullopt,
                            [i](const Elem& x) { return x.tuple()[i].rat(); }});
    return ms;
  }
  if (!a->is_finite()) throw UnsupportedAlgebra("maximal ideals are not available for " + a->name());

  const std::size_t one = a->tables().one;
  std::vector<std::vector<std::size_t>> proper;
  for (const auto& i : all_ideals(a))
    if (!std::binary_search(i.members.begin(), i.members.end(), one)) proper.push_back(i.members);
  auto subset = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  const auto& c = a->carrier();
  for (const auto& m : proper) {
    bool maximal = true;
    for (const auto& o : proper)
      if (o != m && subset(m, o)) maximal = false;
    if (!maximal) continue;
    Ideal ideal = members_ideal(a, m);
    // Class representatives; the quotient is a finite chain ordered by
    // [b] <= [x] iff b - x lies in the ideal.
    std::vector<Elem> reps;
    for (const auto& x : c) {
      bool fresh = true;
      for (const auto& r : reps)
        if (ideal.contains(distance(*a, x, r))) fresh = false;
      if (fresh) reps.push_back(x);
    }
    const unsigned k = static_cast<unsigned>(reps.size() - 1);
    auto embed = [a, ideal, reps, k](const Elem& x) {
      long below = -1;
      for (const auto& r : reps)
        if (ideal.contains(a->ominus(r, x))) ++below;
      return Rat(below, static_cast<long>(k));
    };
    for (const auto& x : c)
      for (const auto& y : c)
        if (embed(a->oplus(x, y)) != min(embed(x) + embed(y), one_rat()) ||
            embed(a->neg(x)) != one_rat() - embed(x))
          throw InternalInconsistency("quotient by " + ideal.describe() + " is not a chain");
    ms.entries.push_back({ideal, k, embed});
  }
  return ms;
}

Ideal radical(const AlgebraHandle& a) {
  auto ms = all_maximal_ideals(a);
  if (a->kind() == AlgebraKind::Chang) return symbolic(a, IdealForm::ChangRad);
  if (a->kind() == AlgebraKind::UnitInterval || is_unit_power(*a)) return symbolic(a, IdealForm::Zero);
  std::vector<std::size_t> common;
  for (std::size_t i = 0; i < a->size(); ++i) common.push_back(i);
  for (const auto& e : ms.entries) {
    std::vector<std::size_t> next;
    std::set_intersection(common.begin(), common.end(), e.ideal.members.begin(),
                          e.ideal.members.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return members_ideal(a, common);
}

bool is_semisimple(const AlgebraHandle& a) {
  Ideal r = radical(a);
  switch (r.form) {
    case IdealForm::Members: return r.members.size() == 1;
    case IdealForm::ChangZero:
    case IdealForm::Zero: return true;
    default: return false;
  }
}

RatVec star(const MaxSpace& max, const Elem& x) {
  if (!max.algebra->contains(x))
    throw AlgebraMismatch(to_string(x) + " is not an element of " + max.algebra->name());
  RatVec v;
  for (const auto& e : max.entries) v.push_back(e.embed(x));
  return v;
}

RatVec star(const AlgebraHandle& a, const Elem& x) { return star(all_maximal_ideals(a), x); }

Quotient quotient(const AlgebraHandle& a, const Ideal& i) {
  if (!same_algebra(*a, *i.algebra)) throw NotAnIdeal("ideal of another algebra");
  if (a->kind() == AlgebraKind::Chang) {
    switch (i.form) {
      case IdealForm::ChangZero: return {a, [](const Elem& x) { return x; }};
      case IdealForm::ChangRad: {
        auto two = TableAlgebra::create({"0", "1"}, {{0, 1}, {1, 1}}, {1, 0});
        return {two, [](const Elem& x) { return Elem(TableIndex{x.chang().coinf ? 1u : 0u}); }};
      }
      case IdealForm::ChangAll: {
        auto triv = TableAlgebra::create({"0"}, {{0}}, {0});
        return {triv, [](const Elem&) { return Elem(TableIndex{0}); }};
      }
      default: throw NotAnIdeal("not an ideal of chang");
    }
  }
  if (!a->is_finite()) throw UnsupportedAlgebra("quotients are not available for " + a->name());
  if (i.form != IdealForm::Members) throw NotAnIdeal("not an ideal of " + a->name());
  {
    std::vector<Elem> m;
    for (auto k : i.members) m.push_back(a->carrier().at(k));
    make_ideal(a, m);
  }
  const auto& c = a->carrier();
  const std::size_t n = c.size();
  std::vector<std::size_t> cls(n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t found = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (i.contains(distance(*a, c[x], c[reps[r]]))) {
        found = r;
        break;
      }
    if (found == reps.size()) reps.push_back(x);
    cls[x] = found;
  }
  const auto& t = a->tables();
  const std::size_t q = reps.size();
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> plus(q, std::vector<std::size_t>(q));
  std::vector<std::size_t> negt(q);
  for (std::size_t r = 0; r < q; ++r) {
    labels.push_back("[" + to_string(c[reps[r]]) + "]");
    negt[r] = cls[t.neg[reps[r]]];
    for (std::size_t s = 0; s < q; ++s) plus[r][s] = cls[t.oplus[reps[r] * n + reps[s]]];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[t.neg[x]] != negt[cls[x]])
      throw InternalInconsistency("negation is not well defined on the quotient");
    for (std::size_t y = 0; y < n; ++y)
      if (cls[t.oplus[x * n + y]] != plus[cls[x]][cls[y]])
        throw InternalInconsistency("oplus is not well defined on the quotient");
  }
  auto alg = TableAlgebra::create(std::move(labels), std::move(plus), std::move(negt));
  return {alg, [a, cls](const Elem& x) { return Elem(TableIndex{cls[a->index_of(x)]}); }};
}

// ---------------------------------------------------------------------------
// States

State State::from_table(AlgebraHandle a, RatVec values) {
  if (values.size() != a->size()) throw DimensionError("state table has the wrong length");
  auto f = [a, values](const Elem& x) { return values[a->index_of(x)]; };
  return State(std::move(a), f, std::nullopt);
}

State State::linear(AlgebraHandle a, RatVec weights) {
  if (weights.size() != coordinate_count(*a)) throw DimensionError("wrong number of weights");
  auto f = [a, weights](const Elem& x) { return dot(weights, coordinates(*a, x)); };
  return State(std::move(a), f, std::move(weights));
}

State State::from_function(AlgebraHandle a, std::function<Rat(const Elem&)> f) {
  return State(std::move(a), std::move(f), std::nullopt);
}

Rat State::operator()(const Elem& x) const {
  if (!alg_->contains(x)) throw AlgebraMismatch(to_string(x) + " is not an element of " + alg_->name());
  return fn_(x);
}

RatVec State::values() const {
  RatVec v;
  for (const auto& x : alg_->carrier()) v.push_back(fn_(x));
  return v;
}

bool same_state(const State& s, const State& t) {
  if (!same_algebra(*s.algebra(), *t.algebra())) return false;
  if (s.algebra()->is_finite()) return s.values() == t.values();
  if (s.weights() && t.weights()) return *s.weights() == *t.weights();
  for (const auto& x : sample_elements(*s.algebra(), 200, 1))
    if (s(x) != t(x)) return false;
  return true;
}

std::optional<std::string> state_violation(const State& s, std::size_t samples, std::uint64_t seed) {
  const Algebra& a = *s.algebra();
  if (s(a.one()) != one_rat()) return "s(1) = " + s(a.one()).str();
  for (const auto& x : sample_elements(a, samples, seed)) {
    Rat v = s(x);
    if (v < zero_rat() || v > one_rat()) return "s(" + to_string(x) + ") = " + v.str() + " is outside [0,1]";
  }
  for (const auto& [x, y] : sample_pairs(a, samples, seed)) {
    if (a.odot(x, y) != a.zero()) continue;
    if (s(a.oplus(x, y)) != s(x) + s(y))
      return "additivity fails at (" + to_string(x) + ", " + to_string(y) + ")";
  }
  return std::nullopt;
}

bool is_state(const State& s) { return !state_violation(s); }

std::vector<State> ext_states(const MaxSpace& max) {
  std::vector<State> out;
  const bool linear = is_unit_power(*max.algebra) || max.algebra->kind() == AlgebraKind::UnitInterval;
  for (std::size_t m = 0; m < max.entries.size(); ++m) {
    if (linear) {
      RatVec w(max.entries.size(), zero_rat());
      w[m] = one_rat();
      out.push_back(State::linear(max.algebra, w));
    } else {
      out.push_back(State::from_function(max.algebra, max.entries[m].embed));
    }
  }
  return out;
}

std::vector<State> ext_states(const AlgebraHandle& a) { return ext_states(all_maximal_ideals(a)); }

RatVec state_decompose(const MaxSpace& max, const State& s) {
  const Algebra& a = *max.algebra;
  std::vector<Elem> points;
  if (a.is_finite()) {
    points = a.carrier();
  } else {
    points = sample_elements(a, 64, 1);
    if (auto* p = as_product(a))
      for (unsigned i = 0; i < p->arity(); ++i) points.push_back(p->unit_vector(i));
  }
  const std::size_t m = max.entries.size();
  RatMat lhs(points.size() + 1, m);
  RatVec rhs;
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t j = 0; j < m; ++j) lhs(r, j) = max.entries[j].embed(points[r]);
    rhs.push_back(s(points[r]));
  }
  for (std::size_t j = 0; j < m; ++j) lhs(points.size(), j) = one_rat();
  rhs.push_back(one_rat());
  auto w = solve_linear(lhs, rhs);
  if (!w) throw InfeasibleDecomposition("no unique weights represent this function");
  for (const auto& x : *w)
    if (x < zero_rat()) throw InfeasibleDecomposition("weights are not a probability measure");
  return *w;
}

State state_from_measure(const MaxSpace& max, const RatVec& weights) {
  if (weights.size() != max.entries.size()) throw DimensionError("one weight per maximal ideal");
  Rat total(0);
  for (const auto& w : weights) {
    if (w < zero_rat()) throw RangeError("negative weight");
    total += w;
  }
  if (total != one_rat()) throw RangeError("weights must sum to 1");
  const bool linear = is_unit_power(*max.algebra) || max.algebra->kind() == AlgebraKind::UnitInterval;
  if (linear) return State::linear(max.algebra, weights);
  auto entries = max.entries;
  return State::from_function(max.algebra, [entries, weights](const Elem& x) {
    Rat v(0);
    for (std::size_t i = 0; i < entries.size(); ++i) v += weights[i] * entries[i].embed(x);
    return v;
  });
}

Rat affine_rep(const Elem& a, const State& s) { return s(a); }

Polytope state_polytope(const AlgebraHandle& a) {
  const auto& t = a->tables();
  const std::size_t n = t.n;
  Polytope p(n);
  auto unit = [n](std::size_t i) {
    RatVec v(n, zero_rat());
    v[i] = one_rat();
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    p.add_inequality(unit(i), one_rat());
    p.add_inequality(Rat(-1) * unit(i), zero_rat());
  }
  p.add_equality(unit(t.zero), zero_rat());
  p.add_equality(unit(t.one), one_rat());
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      if (t.odot[x * n + y] != t.zero || x == t.zero || y == t.zero) continue;
      std::size_t s = t.oplus[x * n + y];
      if (!seen.insert({x, y, s}).second) continue;
      RatVec row = unit(s) - unit(x) - unit(y);
      p.add_equality(row, zero_rat());
    }
  return p;
}

State chang_state() {
  return State::from_function(chang(), [](const Elem& x) { return x.chang().coinf ? one_rat() : zero_rat(); });
}

}  // namespace mvprob
