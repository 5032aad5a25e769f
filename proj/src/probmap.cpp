#include "mvprob/probmap.hpp"

#include <algorithm>
#include <functional>

#include "mvprob/errors.hpp"
#include "mvprob/gamma.hpp"
#include "mvprob/sampling.hpp"
#include "mvprob/spectra.hpp"

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

void require_member(const Algebra& a, const Elem& x) {
  if (!a.contains(x)) throw AlgebraMismatch(to_string(x) + " is not an element of " + a.name());
}

std::vector<std::pair<Elem, Elem>> pairs_for(const ProbMap& p, const SampleOptions& o) {
  if (p.domain()->is_finite()) return sample_pairs(*p.domain(), 0, o.seed);
  if (o.pairs) return *o.pairs;
  return sample_pairs(*p.domain(), o.count, o.seed);
}

std::vector<Elem> elements_for(const ProbMap& p, const SampleOptions& o) {
  if (p.domain()->is_finite()) return p.domain()->carrier();
  if (o.pairs) {
    std::vector<Elem> out;
    for (const auto& [a, b] : *o.pairs) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }
  return sample_elements(*p.domain(), o.count, o.seed);
}

Verdict fail(Verdict v, std::string what, std::vector<Elem> witness) {
  v.holds = false;
  v.failed = std::move(what);
  v.witness = std::move(witness);
  return v;
}

}  // namespace

ProbMap ProbMap::from_table(AlgebraHandle from, AlgebraHandle to, std::vector<Elem> values) {
  if (values.size() != from->size())
    throw DimensionError("table has " + std::to_string(values.size()) + " entries, domain has " +
                         std::to_string(from->size()));
  for (const auto& v : values) require_member(*to, v);
  auto f = [from, values](const Elem& x) { return values[from->index_of(x)]; };
  return ProbMap(from, to, "table", f, std::move(values));
}

ProbMap ProbMap::from_rule(AlgebraHandle from, AlgebraHandle to, std::string rule,
                           std::function<Elem(const Elem&)> f) {
  return ProbMap(std::move(from), std::move(to), std::move(rule), std::move(f), std::nullopt);
}

Elem ProbMap::operator()(const Elem& x) const {
  require_member(*from_, x);
  return fn_(x);
}

std::vector<Elem> ProbMap::values() const {
  if (table_) return *table_;
  std::vector<Elem> out;
  for (const auto& x : from_->carrier()) out.push_back(fn_(x));
  return out;
}

bool same_map(const ProbMap& p, const ProbMap& q) {
  if (!same_algebra(*p.domain(), *q.domain()) || !same_algebra(*p.codomain(), *q.codomain()))
    return false;
  if (p.domain()->is_finite()) return p.values() == q.values();
  for (const auto& x : sample_elements(*p.domain(), 200, 1))
    if (p(x) != q(x)) return false;
  return true;
}

std::string Verdict::describe() const {
  if (holds) return "";
  std::string s = failed + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ", ";
    s += to_string(witness[i]);
  }
  return s + ")";
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::P1: return "P1";
    case Axiom::P2: return "P2";
    case Axiom::P3: return "P3";
    case Axiom::P1prime: return "P1'";
  }
  return "?";
}

Verdict check_axiom(const ProbMap& p, Axiom ax, const SampleOptions& opts) {
  const Algebra& m = *p.domain();
  const Algebra& n = *p.codomain();
  Verdict v;
  switch (ax) {
    case Axiom::P3:
      ++v.checked;
      if (p(m.one()) != n.one()) return fail(v, "P3", {m.one()});
      return v;
    case Axiom::P2:
      for (const auto& a : elements_for(p, opts)) {
        ++v.checked;
        if (p(m.neg(a)) != n.neg(p(a))) return fail(v, "P2", {a});
      }
      return v;
    case Axiom::P1:
    case Axiom::P1prime:
      for (const auto& [a, b] : pairs_for(p, opts)) {
        ++v.checked;
        Elem rest = ax == Axiom::P1 ? m.meet(b, m.neg(a)) : m.ominus(b, m.odot(a, b));
        if (p(m.oplus(a, b)) != n.oplus(p(a), p(rest))) return fail(v, to_string(ax), {a, b});
      }
      return v;
  }
  return v;
}

Verdict check_axioms(const ProbMap& p, const std::vector<Axiom>& which, const SampleOptions& opts) {
  Verdict total;
  for (auto ax : which) {
    Verdict v = check_axiom(p, ax, opts);
    total.checked += v.checked;
    if (!v.holds) {
      v.checked = total.checked;
      return v;
    }
  }
  return total;
}

bool is_prob_map(const ProbMap& p, const SampleOptions& opts) { return check_axioms(p, {Axiom::P1, Axiom::P2, Axiom::P3}, opts).holds; }

Characterizations check_characterizations(const ProbMap& p, CharRoute route, const SampleOptions& opts) {
  const Algebra& m = *p.domain();
  const AlgebraHandle& nh = p.codomain();
  const Algebra& n = *nh;
  if (p(m.zero()) != n.zero() || p(m.one()) != n.one())
    throw NotAProbabilityMap("characterizations assume p(0)=0 and p(1)=1");
  if (route == CharRoute::Auto) route = is_rational_product(n) ? CharRoute::Rational : CharRoute::Group;
  if (route == CharRoute::Rational && !is_rational_product(n))
    throw UnsupportedAlgebra("no rational coordinates on " + n.name());

  // x + y - z == w, in coordinates or in the enveloping group.
  auto sum_eq = [&](const Elem& w, const Elem& x, const Elem& y, const Elem& z) {
    if (route == CharRoute::Rational)
      return coordinates(n, w) == coordinates(n, x) + coordinates(n, y) - coordinates(n, z);
    GroupElem rhs = group_sub(group_add(GroupElem::of(nh, x), GroupElem::of(nh, y)),
                              GroupElem::of(nh, z));
    return group_eq(GroupElem::of(nh, w), rhs);
  };

  Characterizations c;
  c.axioms = is_prob_map(p, opts);
  c.group_identity = c.split_char = c.disjoint_additive = true;
  const Elem zero_n = n.zero();
  for (const auto& [a, b] : pairs_for(p, opts)) {
    const Elem pa = p(a), pb = p(b), psum = p(m.oplus(a, b));
    if (c.group_identity && !sum_eq(psum, pa, pb, p(m.odot(a, b)))) c.group_identity = false;
    if (m.odot(a, b) != m.zero()) continue;
    if (c.split_char && (psum != n.oplus(pa, pb) || n.odot(pa, pb) != zero_n)) c.split_char = false;
    if (c.disjoint_additive && !sum_eq(psum, pa, pb, zero_n)) c.disjoint_additive = false;
  }
  return c;
}

Verdict check_order_bounds(const ProbMap& p, const SampleOptions& opts) {
  const Algebra& m = *p.domain();
  const Algebra& n = *p.codomain();
  Verdict v;
  for (const auto& [a, b] : pairs_for(p, opts)) {
    ++v.checked;
    const Elem pa = p(a), pb = p(b);
    if (m.leq(a, b) && !n.leq(pa, pb)) return fail(v, "monotonicity", {a, b});
    const Elem psum = p(m.oplus(a, b));
    const bool disjoint = m.odot(a, b) == m.zero();
    if (!n.leq(psum, n.oplus(pa, pb)) || (disjoint && psum != n.oplus(pa, pb)))
      return fail(v, "subadditivity", {a, b});
    const Elem pdiff = p(m.ominus(a, b));
    if (!n.leq(n.ominus(pa, pb), pdiff) || (m.leq(b, a) && pdiff != n.ominus(pa, pb)))
      return fail(v, "difference bound", {a, b});
    if (!n.leq(n.odot(pa, pb), p(m.odot(a, b))) || (disjoint && n.odot(pa, pb) != n.zero()))
      return fail(v, "product bound", {a, b});
  }
  return v;
}

Verdict check_mv_hom(const ProbMap& p, const SampleOptions& opts) {
  const Algebra& m = *p.domain();
  const Algebra& n = *p.codomain();
  Verdict v;
  ++v.checked;
  if (p(m.zero()) != n.zero()) return fail(v, "zero", {m.zero()});
  for (const auto& a : elements_for(p, opts)) {
    ++v.checked;
    if (p(m.neg(a)) != n.neg(p(a))) return fail(v, "neg", {a});
  }
  for (const auto& [a, b] : pairs_for(p, opts)) {
    ++v.checked;
    if (p(m.oplus(a, b)) != n.oplus(p(a), p(b))) return fail(v, "oplus", {a, b});
  }
  return v;
}

bool is_mv_hom(const ProbMap& p, const SampleOptions& opts) { return check_mv_hom(p, opts).holds; }

Verdict check_internal_state(const ProbMap& p, const SampleOptions& opts) {
  if (!same_algebra(*p.domain(), *p.codomain()))
    throw AlgebraMismatch("internal states are endomaps");
  const Algebra& m = *p.domain();
  Verdict v;
  ++v.checked;
  if (p(m.zero()) != m.zero()) return fail(v, "(1)", {m.zero()});
  for (const auto& a : elements_for(p, opts)) {
    ++v.checked;
    if (p(m.neg(a)) != m.neg(p(a))) return fail(v, "(2)", {a});
  }
  for (const auto& [a, b] : pairs_for(p, opts)) {
    ++v.checked;
    if (p(m.oplus(a, b)) != m.oplus(p(a), p(m.ominus(b, m.odot(a, b))))) return fail(v, "(3)", {a, b});
    const Elem s = m.oplus(p(a), p(b));
    if (p(s) != s) return fail(v, "(4)", {a, b});
  }
  return v;
}

bool is_internal_state(const ProbMap& p, const SampleOptions& opts) {
  return check_internal_state(p, opts).holds;
}

std::vector<ProbMap> enumerate_prob_maps(const AlgebraHandle& from, const AlgebraHandle& to,
                                         std::size_t budget) {
  const auto& d = from->tables();
  const auto& c = to->tables();
  const std::size_t n = d.n;
  const std::size_t k = c.n;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> val(n, kUnset);
  std::vector<std::vector<std::size_t>> found;
  if ((d.zero == d.one) != (c.zero == c.one) && d.zero == d.one) return {};
  val[d.zero] = c.zero;
  val[d.one] = c.one;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (i != d.zero && i != d.one && i <= d.neg[i]) order.push_back(i);

  // meet(b, neg a) for the P1 condition.
  std::vector<std::size_t> rest(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rest[a * n + b] = d.meet[b * n + d.neg[a]];

  auto consistent = [&] {
    for (std::size_t a = 0; a < n; ++a) {
      if (val[a] == kUnset) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (val[b] == kUnset) continue;
        if (d.leq[a * n + b] && !c.leq[val[a] * k + val[b]]) return false;
        std::size_t s = d.oplus[a * n + b], r = rest[a * n + b];
        if (val[s] != kUnset && val[r] != kUnset && val[s] != c.oplus[val[a] * k + val[r]])
          return false;
      }
    }
    return true;
  };

  std::size_t nodes = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (++nodes > budget) throw BudgetExceeded("search exceeded " + std::to_string(budget) + " nodes");
    if (!consistent()) return;
    if (pos == order.size()) {
      found.push_back(val);
      return;
    }
    const std::size_t i = order[pos];
    for (std::size_t v = 0; v < k; ++v) {
      if (i == d.neg[i] && c.neg[v] != v) continue;
      val[i] = v;
      val[d.neg[i]] = c.neg[v];
      rec(pos + 1);
    }
    val[i] = kUnset;
    val[d.neg[i]] = kUnset;
  };
  rec(0);

  std::vector<std::pair<std::vector<std::string>, ProbMap>> keyed;
  for (const auto& f : found) {
    std::vector<Elem> vals;
    std::vector<std::string> key;
    for (auto v : f) {
      vals.push_back(to->carrier()[v]);
      key.push_back(to_string(vals.back()));
    }
    keyed.emplace_back(std::move(key), ProbMap::from_table(from, to, std::move(vals)));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ProbMap> out;
  for (auto& [key, p] : keyed) out.push_back(std::move(p));
  return out;
}

void for_each_endpoint_fixing(const AlgebraHandle& from, const AlgebraHandle& to,
                              const std::function<void(const ProbMap&)>& f) {
  const auto& d = from->tables();
  const auto& cc = to->carrier();
  const auto& c = to->tables();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < d.n; ++i)
    if (i != d.zero && i != d.one) free.push_back(i);
  std::vector<std::size_t> digit(free.size(), 0);
  while (true) {
    std::vector<Elem> vals(d.n);
    vals[d.zero] = cc[c.zero];
    vals[d.one] = cc[c.one];
    for (std::size_t j = 0; j < free.size(); ++j) vals[free[j]] = cc[digit[j]];
    f(ProbMap::from_table(from, to, std::move(vals)));
    std::size_t j = 0;
    while (j < digit.size() && ++digit[j] == cc.size()) digit[j++] = 0;
    if (j == digit.size()) break;
  }
}

ProbMap identity_map(const AlgebraHandle& a) {
  if (a->is_finite()) return ProbMap::from_table(a, a, a->carrier());
  return ProbMap::from_rule(a, a, "identity", [](const Elem& x) { return x; });
}

ProbMap uniform_fincof() {
  return ProbMap::from_rule(fincof(), chang(), "uniform_fincof", [](const Elem& x) {
    const auto& f = x.fincof();
    return Elem(ChangElem{f.cofinite, f.set.size()});
  });
}

ProbMap constant_hom(const AlgebraHandle& from, const AlgebraHandle& to, std::size_t m) {
  auto ms = all_maximal_ideals(from);
  if (m >= ms.size())
    throw RangeError("maximal ideal index " + std::to_string(m) + " out of range");
  auto h = ms.entries[m].embed;
  std::function<Elem(const Elem&)> f;
  if (is_rational_product(*to)) {
    const unsigned count = coordinate_count(*to);
    f = [h, to, count](const Elem& x) { return from_coordinates(*to, RatVec(count, h(x))); };
  } else if (to->kind() == AlgebraKind::Pwl || to->kind() == AlgebraKind::Free1) {
    f = [h, to](const Elem& x) {
      Elem c = PwlFn::constant(h(x));
      if (!to->contains(c)) throw AlgebraMismatch(to_string(c) + " is not an element of " + to->name());
      return c;
    };
  } else {
    throw UnsupportedAlgebra("constant maps need a function-algebra codomain, got " + to->name());
  }
  if (from->is_finite()) {
    std::vector<Elem> vals;
    for (const auto& x : from->carrier()) vals.push_back(f(x));
    return ProbMap::from_table(from, to, std::move(vals));
  }
  return ProbMap::from_rule(from, to, "constant_hom", f);
}

ProbMap example_pm_map() {
  return ProbMap::from_rule(free1(), free1(), "example_pm",
                            [](const Elem& a) { return Elem(example_pm(a.pwl())); });
}

ProbMap reflect_map() {
  return ProbMap::from_rule(free1(), free1(), "reflect",
                            [](const Elem& a) { return Elem(precompose_reflect(a.pwl())); });
}

bool convex_codomain(const Algebra& a) {
  switch (a.kind()) {
    case AlgebraKind::UnitInterval:
    case AlgebraKind::Pwl:
    case AlgebraKind::Free1: return true;
    case AlgebraKind::Product: return as_product(a)->base()->kind() == AlgebraKind::UnitInterval;
    default: return false;
  }
}

ProbMap convex_combination(const Rat& alpha, const ProbMap& p, const ProbMap& q) {
  if (!same_algebra(*p.domain(), *q.domain()) || !same_algebra(*p.codomain(), *q.codomain()))
    throw AlgebraMismatch("convex combination of maps with different signatures");
  if (alpha < zero_rat() || alpha > one_rat()) throw RangeError("coefficient outside [0,1]");
  const AlgebraHandle& to = p.codomain();
  if (!convex_codomain(*to)) throw UnsupportedAlgebra(to->name() + " is not convex");
  const bool functions = to->kind() == AlgebraKind::Pwl || to->kind() == AlgebraKind::Free1;
  AlgebraHandle target = functions ? pwl_algebra() : to;
  const Rat beta = one_rat() - alpha;
  auto f = [p, q, alpha, beta, functions, target](const Elem& x) -> Elem {
    if (functions) return pwl_scale_shift(alpha, p(x).pwl(), beta, q(x).pwl());
    return from_coordinates(*target,
                            alpha * coordinates(*target, p(x)) + beta * coordinates(*target, q(x)));
  };
  ProbMap r = [&] {
    if (!p.domain()->is_finite()) return ProbMap::from_rule(p.domain(), target, "convex", f);
    std::vector<Elem> vals;
    for (const auto& x : p.domain()->carrier()) vals.push_back(f(x));
    return ProbMap::from_table(p.domain(), target, std::move(vals));
  }();
  if (is_prob_map(p) && is_prob_map(q)) {
    Verdict v = check_axioms(r);
    if (!v.holds) throw InternalInconsistency("convex combination left the probability maps: " + v.describe());
  }
  return r;
}

ProbMap midpoint(const ProbMap& p, const ProbMap& q) { return convex_combination(Rat(1, 2), p, q); }

}  // namespace mvprob
