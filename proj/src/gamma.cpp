#include "mvprob/gamma.hpp"

#include <functional>

#include "mvprob/errors.hpp"
#include "mvprob/probmap.hpp"

namespace mvprob {

namespace {

void require_same(const AlgebraHandle& a, const AlgebraHandle& b) {
  if (!same_algebra(*a, *b)) throw AlgebraMismatch(a->name() + " vs " + b->name());
}

std::vector<Elem> trimmed(const Algebra& a, std::vector<Elem> e) {
  const Elem z = a.zero();
  while (!e.empty() && e.back() == z) e.pop_back();
  return e;
}

}  // namespace

GoodSeq GoodSeq::make(AlgebraHandle a, std::vector<Elem> entries) {
  for (const auto& x : entries)
    if (!a->contains(x)) throw AlgebraMismatch(to_string(x) + " is not an element of " + a->name());
  entries = trimmed(*a, std::move(entries));
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (a->oplus(entries[i], entries[i + 1]) != entries[i])
      throw AxiomViolation("not a good sequence at position " + std::to_string(i));
    if (a->odot(entries[i], entries[i + 1]) != entries[i + 1])
      throw InternalInconsistency("good sequence with a_i * a_{i+1} != a_{i+1}");
  }
  return GoodSeq(std::move(a), std::move(entries));
}

GoodSeq GoodSeq::zero(AlgebraHandle a) { return GoodSeq(std::move(a), {}); }

GoodSeq GoodSeq::singleton(AlgebraHandle a, const Elem& x) {
  return make(std::move(a), {x});
}

GoodSeq GoodSeq::unit(AlgebraHandle a) {
  Elem one = a->one();
  return make(std::move(a), {one});
}

Elem GoodSeq::entry(std::size_t i) const {
  return i < entries_.size() ? entries_[i] : alg_->zero();
}

GoodSeq gs_add_single(const GoodSeq& a, const Elem& b) {
  const Algebra& m = *a.algebra();
  if (!m.contains(b)) throw AlgebraMismatch(to_string(b) + " is not an element of " + m.name());
  const std::size_t n = a.size();
  std::vector<Elem> out;
  out.reserve(n + 1);
  if (n == 0) return GoodSeq::make(a.algebra(), {b});
  out.push_back(m.oplus(a.entry(0), b));
  for (std::size_t i = 1; i < n; ++i) out.push_back(m.oplus(a.entry(i), m.odot(a.entry(i - 1), b)));
  out.push_back(m.odot(a.entry(n - 1), b));
  return GoodSeq::make(a.algebra(), std::move(out));
}

GoodSeq gs_add(const GoodSeq& a, const GoodSeq& b) {
  require_same(a.algebra(), b.algebra());
  GoodSeq acc = a;
  for (const auto& x : b.entries()) acc = gs_add_single(acc, x);
  return acc;
}

namespace {

GoodSeq componentwise(const GoodSeq& a, const GoodSeq& b,
                      Elem (Algebra::*op)(const Elem&, const Elem&) const) {
  require_same(a.algebra(), b.algebra());
  const Algebra& m = *a.algebra();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    out.push_back((m.*op)(a.entry(i), b.entry(i)));
  return GoodSeq::make(a.algebra(), std::move(out));
}

}  // namespace

GoodSeq gs_meet(const GoodSeq& a, const GoodSeq& b) { return componentwise(a, b, &Algebra::meet); }
GoodSeq gs_join(const GoodSeq& a, const GoodSeq& b) { return componentwise(a, b, &Algebra::join); }

bool gs_leq(const GoodSeq& a, const GoodSeq& b) {
  require_same(a.algebra(), b.algebra());
  const Algebra& m = *a.algebra();
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    if (!m.leq(a.entry(i), b.entry(i))) return false;
  return true;
}

std::vector<GoodSeq> good_sequences(const AlgebraHandle& a, std::size_t max_len) {
  const auto& c = a->carrier();
  const Elem z = a->zero();
  std::vector<GoodSeq> out;
  std::vector<Elem> cur;
  std::function<void()> rec = [&] {
    out.push_back(GoodSeq::make(a, cur));
    if (cur.size() == max_len) return;
    for (const auto& x : c) {
      if (x == z) continue;
      if (!cur.empty() && a->oplus(cur.back(), x) != cur.back()) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

GroupElem::GroupElem(GoodSeq pos, GoodSeq neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  require_same(pos_.algebra(), neg_.algebra());
}

GroupElem GroupElem::zero(AlgebraHandle a) { return {GoodSeq::zero(a), GoodSeq::zero(a)}; }
GroupElem GroupElem::unit(AlgebraHandle a) { return {GoodSeq::unit(a), GoodSeq::zero(a)}; }
GroupElem GroupElem::of(AlgebraHandle a, const Elem& x) {
  return {GoodSeq::singleton(a, x), GoodSeq::zero(a)};
}

GroupElem group_add(const GroupElem& x, const GroupElem& y) {
  return {gs_add(x.pos(), y.pos()), gs_add(x.neg(), y.neg())};
}

GroupElem group_negate(const GroupElem& x) { return {x.neg(), x.pos()}; }

GroupElem group_sub(const GroupElem& x, const GroupElem& y) { return group_add(x, group_negate(y)); }

bool group_eq(const GroupElem& x, const GroupElem& y) {
  return gs_add(x.pos(), y.neg()) == gs_add(y.pos(), x.neg());
}

GroupElem group_meet(const GroupElem& x, const GroupElem& y) {
  return {gs_meet(gs_add(x.pos(), y.neg()), gs_add(y.pos(), x.neg())), gs_add(x.neg(), y.neg())};
}

GroupElem group_join(const GroupElem& x, const GroupElem& y) {
  return {gs_join(gs_add(x.pos(), y.neg()), gs_add(y.pos(), x.neg())), gs_add(x.neg(), y.neg())};
}

bool group_leq(const GroupElem& x, const GroupElem& y) { return group_eq(group_meet(x, y), x); }

std::variant<GroupElem, bool> group_ops(const GroupElem& x, const GroupElem& y, GroupOp op) {
  switch (op) {
    case GroupOp::Add: return group_add(x, y);
    case GroupOp::Sub: return group_sub(x, y);
    case GroupOp::Leq: return group_leq(x, y);
    case GroupOp::Eq: return group_eq(x, y);
  }
  throw InternalInconsistency("unknown group operation");
}

std::vector<GroupElem> gamma_interval(const AlgebraHandle& a) {
  if (!a->is_finite()) throw UnsupportedAlgebra(a->name() + " is not finite");
  auto seqs = good_sequences(a, 2);
  const GroupElem zero = GroupElem::zero(a);
  const GroupElem u = GroupElem::unit(a);
  std::vector<GroupElem> out;
  for (const auto& p : seqs)
    for (const auto& n : seqs) {
      GroupElem g(p, n);
      if (!group_leq(zero, g) || !group_leq(g, u)) continue;
      bool seen = false;
      for (const auto& h : out)
        if (group_eq(g, h)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(g);
    }
  return out;
}

GammaRoundTrip gamma_roundtrip(const AlgebraHandle& a) {
  auto g = gamma_interval(a);
  const GroupElem u = GroupElem::unit(a);
  auto find = [&](const GroupElem& x) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (group_eq(g[i], x)) return i;
    throw InternalInconsistency("interval not closed under its operations");
  };
  const std::size_t n = g.size();
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> plus(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> neg(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("g" + std::to_string(i));
    neg[i] = find(group_sub(u, g[i]));
    for (std::size_t j = 0; j < n; ++j) plus[i][j] = find(group_meet(group_add(g[i], g[j]), u));
  }
  GammaRoundTrip r;
  r.classes = n;
  r.rebuilt = TableAlgebra::create(std::move(labels), std::move(plus), std::move(neg));
  r.iso = find_isomorphism(*r.rebuilt, *a);
  return r;
}

GroupHom::GroupHom(AlgebraHandle from, AlgebraHandle to, std::function<Elem(const Elem&)> p)
    : from_(std::move(from)), to_(std::move(to)), p_(std::move(p)) {}

GoodSeq GroupHom::lift(const GoodSeq& s) const {
  require_same(s.algebra(), from_);
  GoodSeq acc = GoodSeq::zero(to_);
  for (const auto& x : s.entries()) acc = gs_add_single(acc, p_(x));
  return acc;
}

GroupElem GroupHom::operator()(const GroupElem& x) const { return {lift(x.pos()), lift(x.neg())}; }

GroupHom lift_prob_map(const ProbMap& p) {
  if (!p.domain()->is_finite()) throw UnsupportedAlgebra("lifting needs a finite domain");
  for (auto ax : {Axiom::P1, Axiom::P2, Axiom::P3}) {
    auto r = check_axiom(p, ax);
    if (!r.holds) throw NotAProbabilityMap(to_string(ax) + " fails" + r.describe());
  }
  return GroupHom(p.domain(), p.codomain(), [p](const Elem& x) { return p(x); });
}

}  // namespace mvprob
