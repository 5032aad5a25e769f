#include "mvprob/algebra.hpp"

#include <algorithm>
#include <functional>

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

bool rat_in_unit(const Elem& x) {
  return x.is<Rat>() && x.rat() >= zero_rat() && x.rat() <= one_rat();
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Elem Algebra::sample(std::mt19937_64& rng) const {
  if (!is_finite()) throw UnsupportedAlgebra("no sampler for " + name());
  const auto& c = carrier();
  return c[uniform_below(rng, c.size())];
}

std::vector<Elem> Algebra::seed_elements() const { return {zero(), one()}; }

std::vector<Elem> Algebra::enumerate() const {
  throw UnsupportedAlgebra(name() + " is not finite");
}

void Algebra::build_finite() const {
  carrier_ = enumerate();
  for (std::size_t i = 0; i < carrier_.size(); ++i) index_.emplace(carrier_[i], i);
  auto idx = [&](const Elem& e) {
    auto it = index_.find(e);
    if (it == index_.end())
      throw InternalInconsistency(name() + ": operation left the carrier at " + to_string(e));
    return it->second;
  };
  FiniteOps& t = ops_;
  const std::size_t n = carrier_.size();
  t.n = n;
  t.oplus.resize(n * n);
  t.neg.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.neg[i] = idx(neg(carrier_[i]));
    for (std::size_t j = 0; j < n; ++j) t.oplus[i * n + j] = idx(oplus(carrier_[i], carrier_[j]));
  }
  t.zero = idx(zero());
  t.one = t.neg[t.zero];
  t.odot.resize(n * n);
  t.join.resize(n * n);
  t.meet.resize(n * n);
  t.leq.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.odot[i * n + j] = t.neg[t.oplus[t.neg[i] * n + t.neg[j]]];
      t.join[i * n + j] = t.oplus[t.neg[t.oplus[t.neg[i] * n + j]] * n + j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.meet[i * n + j] = t.neg[t.join[t.neg[i] * n + t.neg[j]]];
      t.leq[i * n + j] = t.meet[i * n + j] == i;
    }
}

const std::vector<Elem>& Algebra::carrier() const {
  if (!is_finite()) throw UnsupportedAlgebra(name() + " is not finite");
  std::call_once(built_, [this] { build_finite(); });
  return carrier_;
}

std::size_t Algebra::index_of(const Elem& x) const {
  carrier();
  auto it = index_.find(x);
  if (it == index_.end())
    throw AlgebraMismatch(to_string(x) + " is not an element of " + name());
  return it->second;
}

const FiniteOps& Algebra::tables() const {
  carrier();
  return ops_;
}

bool same_algebra(const Algebra& a, const Algebra& b) { return &a == &b || a.equals(b); }

// ---------------------------------------------------------------------------
// Unit interval and chains

bool UnitIntervalAlgebra::contains(const Elem& x) const { return rat_in_unit(x); }

Elem UnitIntervalAlgebra::oplus(const Elem& x, const Elem& y) const {
  return min(x.rat() + y.rat(), one_rat());
}

Elem UnitIntervalAlgebra::neg(const Elem& x) const { return one_rat() - x.rat(); }

Elem UnitIntervalAlgebra::sample(std::mt19937_64& rng) const {
  long den = static_cast<long>(uniform_below(rng, 32)) + 1;
  long num = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(den) + 1));
  return Rat(num, den);
}

std::vector<Elem> UnitIntervalAlgebra::seed_elements() const {
  return {Rat(0), Rat(1), Rat(1, 2), Rat(1, 3), Rat(2, 3)};
}

ChainAlgebra::ChainAlgebra(unsigned k) : k_(k) {
  if (k == 0) throw UnsupportedAlgebra("chain order must be positive");
}

bool ChainAlgebra::contains(const Elem& x) const {
  return rat_in_unit(x) && (x.rat() * Rat(static_cast<long>(k_))).is_integer();
}

Elem ChainAlgebra::oplus(const Elem& x, const Elem& y) const { return min(x.rat() + y.rat(), one_rat()); }

Elem ChainAlgebra::neg(const Elem& x) const { return one_rat() - x.rat(); }

std::vector<Elem> ChainAlgebra::enumerate() const {
  std::vector<Elem> c;
  for (unsigned i = 0; i <= k_; ++i) c.emplace_back(Rat(static_cast<long>(i), static_cast<long>(k_)));
  return c;
}

// ---------------------------------------------------------------------------
// Products

ProductAlgebra::ProductAlgebra(AlgebraHandle base, unsigned arity)
    : base_(std::move(base)), arity_(arity) {
  if (!base_) throw UnsupportedAlgebra("product of a null algebra");
  if (arity_ == 0) throw UnsupportedAlgebra("product arity must be positive");
}

std::string ProductAlgebra::name() const {
  return "prod:" + base_->name() + ":" + std::to_string(arity_);
}

bool ProductAlgebra::contains(const Elem& x) const {
  if (!x.is<ElemTuple>() || x.tuple().size() != arity_) return false;
  return std::all_of(x.tuple().begin(), x.tuple().end(),
                     [&](const Elem& c) { return base_->contains(c); });
}

Elem ProductAlgebra::zero() const { return ElemTuple(arity_, base_->zero()); }

Elem ProductAlgebra::oplus(const Elem& x, const Elem& y) const {
  ElemTuple t(arity_);
  for (unsigned i = 0; i < arity_; ++i) t[i] = base_->oplus(x.tuple()[i], y.tuple()[i]);
  return t;
}

Elem ProductAlgebra::neg(const Elem& x) const {
  ElemTuple t(arity_);
  for (unsigned i = 0; i < arity_; ++i) t[i] = base_->neg(x.tuple()[i]);
  return t;
}

bool ProductAlgebra::equals(const Algebra& other) const {
  auto* p = as_product(other);
  return p && p->arity_ == arity_ && same_algebra(*p->base_, *base_);
}

Elem ProductAlgebra::sample(std::mt19937_64& rng) const {
  ElemTuple t;
  for (unsigned i = 0; i < arity_; ++i) t.push_back(base_->sample(rng));
  return t;
}

std::vector<Elem> ProductAlgebra::seed_elements() const {
  std::vector<Elem> out;
  for (const auto& s : base_->seed_elements()) out.emplace_back(ElemTuple(arity_, s));
  for (unsigned i = 0; i < arity_; ++i) out.push_back(unit_vector(i));
  return out;
}

Elem ProductAlgebra::unit_vector(unsigned i) const {
  ElemTuple t(arity_, base_->zero());
  t.at(i) = base_->one();
  return t;
}

std::vector<Elem> ProductAlgebra::enumerate() const {
  const auto& bc = base_->carrier();
  std::vector<Elem> out;
  std::vector<std::size_t> digit(arity_, 0);
  while (true) {
    ElemTuple t;
    for (auto d : digit) t.push_back(bc[d]);
    out.emplace_back(std::move(t));
    long i = static_cast<long>(arity_) - 1;
    while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == bc.size()) digit[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chang

Elem ChangAlgebra::oplus(const Elem& x, const Elem& y) const {
  const auto& a = x.chang();
  const auto& b = y.chang();
  if (!a.coinf && !b.coinf) return ChangElem::fin(a.n + b.n);
  if (a.coinf && b.coinf) return ChangElem::cofin(0);
  const auto& f = a.coinf ? b : a;
  const auto& c = a.coinf ? a : b;
  return ChangElem::cofin(c.n > f.n ? c.n - f.n : 0);
}

Elem ChangAlgebra::neg(const Elem& x) const {
  auto c = x.chang();
  c.coinf = !c.coinf;
  return c;
}

Elem ChangAlgebra::sample(std::mt19937_64& rng) const {
  bool co = uniform_below(rng, 2) == 1;
  return ChangElem{co, uniform_below(rng, 21)};
}

std::vector<Elem> ChangAlgebra::seed_elements() const {
  return {ChangElem::fin(0), ChangElem::cofin(0), ChangElem::fin(1), ChangElem::cofin(1),
          ChangElem::fin(2)};
}

// ---------------------------------------------------------------------------
// Finite-cofinite sets

namespace {

using USet = std::vector<std::uint64_t>;

USet set_union(const USet& a, const USet& b) {
  USet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
USet set_inter(const USet& a, const USet& b) {
  USet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
USet set_minus(const USet& a, const USet& b) {
  USet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool FinCofAlgebra::contains(const Elem& x) const {
  if (!x.is<FinCofElem>()) return false;
  const auto& s = x.fincof().set;
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

Elem FinCofAlgebra::oplus(const Elem& x, const Elem& y) const {
  const auto& a = x.fincof();
  const auto& b = y.fincof();
  if (!a.cofinite && !b.cofinite) return FinCofElem{false, set_union(a.set, b.set)};
  if (a.cofinite && b.cofinite) return FinCofElem{true, set_inter(a.set, b.set)};
  const auto& fin = a.cofinite ? b : a;
  const auto& cof = a.cofinite ? a : b;
  return FinCofElem{true, set_minus(cof.set, fin.set)};
}

Elem FinCofAlgebra::neg(const Elem& x) const {
  auto f = x.fincof();
  f.cofinite = !f.cofinite;
  return f;
}

Elem FinCofAlgebra::sample(std::mt19937_64& rng) const {
  bool co = uniform_below(rng, 2) == 1;
  USet s;
  auto len = uniform_below(rng, 5);
  for (std::uint64_t i = 0; i < len; ++i) s.push_back(uniform_below(rng, 12));
  return co ? FinCofElem::cofinite_of(s) : FinCofElem::finite(s);
}

std::vector<Elem> FinCofAlgebra::seed_elements() const {
  return {FinCofElem::finite({}), FinCofElem::cofinite_of({}), FinCofElem::finite({0}),
          FinCofElem::finite({1, 2}), FinCofElem::cofinite_of({0}),
          FinCofElem::cofinite_of({3, 5})};
}

// ---------------------------------------------------------------------------
// Piecewise-linear functions

bool PwlAlgebra::contains(const Elem& x) const {
  return x.is<PwlFn>() && (!mcnaughton_only_ || is_mcnaughton(x.pwl()));
}

Elem PwlAlgebra::oplus(const Elem& x, const Elem& y) const {
  return pwl_combine(x.pwl(), y.pwl(), PwlOp::Oplus);
}

Elem PwlAlgebra::neg(const Elem& x) const { return pwl_neg(x.pwl()); }

Elem PwlAlgebra::sample(std::mt19937_64& rng) const {
  PwlFn f = random_mcnaughton(rng, 3);
  if (mcnaughton_only_) return f;
  PwlFn g = random_mcnaughton(rng, 2);
  Rat alpha(static_cast<long>(uniform_below(rng, 9)), 8);
  return pwl_scale_shift(alpha, f, one_rat() - alpha, g);
}

std::vector<Elem> PwlAlgebra::seed_elements() const {
  PwlFn id = PwlFn::identity();
  PwlFn nid = pwl_neg(id);
  std::vector<Elem> out{PwlFn::constant(0), PwlFn::constant(1), id, nid,
                        pwl_combine(id, nid, PwlOp::Join), pwl_combine(id, id, PwlOp::Oplus)};
  if (!mcnaughton_only_) out.emplace_back(PwlFn::constant(Rat(1, 2)));
  return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

void check_table_shape(const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::size_t>>& oplus,
                       const std::vector<std::size_t>& neg) {
  const std::size_t n = labels.size();
  if (n == 0) throw AxiomViolation("table algebra needs a nonempty carrier");
  if (oplus.size() != n || neg.size() != n)
    throw AxiomViolation("table sizes do not match the carrier");
  for (const auto& row : oplus) {
    if (row.size() != n) throw AxiomViolation("oplus table is not square");
    for (auto v : row)
      if (v >= n) throw AxiomViolation("oplus table leaves the carrier");
  }
  for (auto v : neg)
    if (v >= n) throw AxiomViolation("neg table leaves the carrier");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw AxiomViolation("duplicate carrier labels");
}

}  // namespace

std::shared_ptr<const TableAlgebra> TableAlgebra::create(
    std::vector<std::string> labels, std::vector<std::vector<std::size_t>> oplus,
    std::vector<std::size_t> neg) {
  check_table_shape(labels, oplus, neg);
  const std::size_t n = labels.size();
  std::optional<std::size_t> zero;
  for (std::size_t z = 0; z < n && !zero; ++z) {
    bool neutral = true;
    for (std::size_t x = 0; x < n && neutral; ++x) neutral = oplus[x][z] == x;
    if (neutral) zero = z;
  }
  if (!zero) throw AxiomViolation("oplus has no neutral element");
  auto alg = create_unchecked(std::move(labels), std::move(oplus), std::move(neg), *zero);
  if (auto bad = mv_axiom_violation(*alg)) throw AxiomViolation(*bad);
  return alg;
}

std::shared_ptr<const TableAlgebra> TableAlgebra::create_unchecked(
    std::vector<std::string> labels, std::vector<std::vector<std::size_t>> oplus,
    std::vector<std::size_t> neg, std::size_t zero) {
  check_table_shape(labels, oplus, neg);
  if (zero >= labels.size()) throw AxiomViolation("zero index outside the carrier");
  auto alg = std::shared_ptr<TableAlgebra>(new TableAlgebra());
  alg->labels_ = std::move(labels);
  alg->oplus_ = std::move(oplus);
  alg->neg_ = std::move(neg);
  alg->zero_ = zero;
  return alg;
}

std::size_t TableAlgebra::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw AlgebraMismatch("no element labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string TableAlgebra::name() const {
  std::string s = "table[";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ",";
    s += labels_[i];
  }
  return s + "]";
}

bool TableAlgebra::contains(const Elem& x) const {
  return x.is<TableIndex>() && x.table_index() < labels_.size();
}

Elem TableAlgebra::oplus(const Elem& x, const Elem& y) const {
  return TableIndex{oplus_[x.table_index()][y.table_index()]};
}

Elem TableAlgebra::neg(const Elem& x) const { return TableIndex{neg_[x.table_index()]}; }

bool TableAlgebra::equals(const Algebra& other) const {
  auto* t = as_table(other);
  return t && t->labels_ == labels_ && t->oplus_ == oplus_ && t->neg_ == neg_ && t->zero_ == zero_;
}

std::vector<Elem> TableAlgebra::enumerate() const {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < labels_.size(); ++i) c.emplace_back(TableIndex{i});
  return c;
}

// ---------------------------------------------------------------------------
// Factories and views

AlgebraHandle unit_interval() {
  static const AlgebraHandle a = std::make_shared<UnitIntervalAlgebra>();
  return a;
}

AlgebraHandle chain(unsigned k) { return std::make_shared<ChainAlgebra>(k); }

AlgebraHandle product(AlgebraHandle base, unsigned arity) {
  return std::make_shared<ProductAlgebra>(std::move(base), arity);
}

AlgebraHandle chang() {
  static const AlgebraHandle a = std::make_shared<ChangAlgebra>();
  return a;
}

AlgebraHandle fincof() {
  static const AlgebraHandle a = std::make_shared<FinCofAlgebra>();
  return a;
}

AlgebraHandle free1() {
  static const AlgebraHandle a = std::make_shared<PwlAlgebra>(true);
  return a;
}

AlgebraHandle pwl_algebra() {
  static const AlgebraHandle a = std::make_shared<PwlAlgebra>(false);
  return a;
}

const ChainAlgebra* as_chain(const Algebra& a) { return dynamic_cast<const ChainAlgebra*>(&a); }
const ProductAlgebra* as_product(const Algebra& a) { return dynamic_cast<const ProductAlgebra*>(&a); }
const TableAlgebra* as_table(const Algebra& a) { return dynamic_cast<const TableAlgebra*>(&a); }

namespace {

bool is_rational_line(const Algebra& a) {
  return a.kind() == AlgebraKind::UnitInterval || a.kind() == AlgebraKind::Chain;
}

}  // namespace

bool is_rational_product(const Algebra& a) {
  if (is_rational_line(a)) return true;
  auto* p = as_product(a);
  return p && is_rational_line(*p->base());
}

unsigned coordinate_count(const Algebra& a) {
  if (is_rational_line(a)) return 1;
  if (auto* p = as_product(a); p && is_rational_line(*p->base())) return p->arity();
  throw UnsupportedAlgebra(a.name() + " is not a power of a rational chain");
}

RatVec coordinates(const Algebra& a, const Elem& x) {
  if (!a.contains(x)) throw AlgebraMismatch(to_string(x) + " is not an element of " + a.name());
  if (is_rational_line(a)) return {x.rat()};
  coordinate_count(a);
  RatVec v;
  for (const auto& c : x.tuple()) v.push_back(c.rat());
  return v;
}

Elem from_coordinates(const Algebra& a, const RatVec& coords) {
  Elem e;
  if (is_rational_line(a)) {
    if (coords.size() != 1) throw DimensionError("expected a single coordinate");
    e = coords[0];
  } else {
    if (coords.size() != coordinate_count(a)) throw DimensionError("wrong number of coordinates");
    ElemTuple t(coords.begin(), coords.end());
    e = t;
  }
  if (!a.contains(e)) throw AlgebraMismatch(to_string(e) + " is not an element of " + a.name());
  return e;
}

// ---------------------------------------------------------------------------
// Checked operations

namespace {

void require_member(const Algebra& a, const Elem& x) {
  if (!a.contains(x)) throw AlgebraMismatch(to_string(x) + " is not an element of " + a.name());
}

}  // namespace

Elem oplus(const Algebra& a, const Elem& x, const Elem& y) {
  require_member(a, x);
  require_member(a, y);
  return a.oplus(x, y);
}

Elem neg(const Algebra& a, const Elem& x) {
  require_member(a, x);
  return a.neg(x);
}

std::variant<Elem, bool> derived(const Algebra& a, DerivedOp op, const Elem& x, const Elem& y) {
  require_member(a, x);
  require_member(a, y);
  switch (op) {
    case DerivedOp::Odot: return a.odot(x, y);
    case DerivedOp::Ominus: return a.ominus(x, y);
    case DerivedOp::Join: return a.join(x, y);
    case DerivedOp::Meet: return a.meet(x, y);
    case DerivedOp::Leq: return a.leq(x, y);
  }
  throw InternalInconsistency("unknown derived operation");
}

std::optional<std::string> mv_axiom_violation(const Algebra& a) {
  const auto& c = a.carrier();
  const auto& t = a.tables();
  const std::size_t n = t.n;
  auto op = [&](std::size_t i, std::size_t j) { return t.oplus[i * n + j]; };
  auto s = [&](std::size_t i) { return to_string(c[i]); };
  for (std::size_t x = 0; x < n; ++x) {
    if (op(x, t.zero) != x) return "x+0=x fails at x=" + s(x);
    if (t.neg[t.neg[x]] != x) return "~~x=x fails at x=" + s(x);
    if (op(x, t.one) != t.one) return "x+~0=~0 fails at x=" + s(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (op(x, y) != op(y, x)) return "commutativity fails at (" + s(x) + "," + s(y) + ")";
      if (op(t.neg[op(t.neg[x], y)], y) != op(t.neg[op(t.neg[y], x)], x))
        return "~(~x+y)+y=~(~y+x)+x fails at (" + s(x) + "," + s(y) + ")";
      for (std::size_t z = 0; z < n; ++z)
        if (op(x, op(y, z)) != op(op(x, y), z))
          return "associativity fails at (" + s(x) + "," + s(y) + "," + s(z) + ")";
    }
  }
  return std::nullopt;
}

std::string to_string(MvIdentity id) {
  switch (id) {
    case MvIdentity::MV1: return "MV1";
    case MvIdentity::MV2: return "MV2";
    case MvIdentity::MV3: return "MV3";
  }
  return "?";
}

namespace {

bool identity_holds(const Algebra& m, MvIdentity id, const Elem& a, const Elem& b) {
  switch (id) {
    case MvIdentity::MV1:
      return m.meet(b, m.neg(a)) == m.ominus(b, m.odot(a, b));
    case MvIdentity::MV2:
      return m.oplus(a, b) == m.oplus(a, m.meet(b, m.neg(a)));
    case MvIdentity::MV3:
      return m.odot(a, m.meet(b, m.neg(a))) == m.zero();
  }
  return false;
}

}  // namespace

IdentityReport identity_check(const Algebra& a, MvIdentity id, std::size_t sample_budget,
                              std::uint64_t seed) {
  IdentityReport r;
  for (const auto& [x, y] : sample_pairs(a, sample_budget, seed)) {
    ++r.pairs_checked;
    if (!identity_holds(a, id, x, y)) {
      r.holds = false;
      r.witness = std::make_pair(x, y);
      break;
    }
  }
  return r;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Algebra& a, const Algebra& b) {
  const auto& ta = a.tables();
  const auto& tb = b.tables();
  if (ta.n != tb.n) return std::nullopt;
  const std::size_t n = ta.n;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> img(n, kUnset);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      if (img[i] == kUnset) continue;
      std::size_t ni = ta.neg[i];
      if (img[ni] != kUnset && img[ni] != tb.neg[img[i]]) return false;
      for (std::size_t j = 0; j <= upto; ++j) {
        if (img[j] == kUnset) continue;
        std::size_t s = ta.oplus[i * n + j];
        if (img[s] != kUnset && img[s] != tb.oplus[img[i] * n + img[j]]) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return consistent(n - 1);
    if (img[i] != kUnset) return assign(i + 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      img[i] = v;
      used[v] = true;
      if (consistent(i) && assign(i + 1)) return true;
      used[v] = false;
      img[i] = kUnset;
    }
    return false;
  };

  img[ta.zero] = tb.zero;
  used[tb.zero] = true;
  if (ta.one != ta.zero) {
    if (tb.one == tb.zero) return std::nullopt;
    img[ta.one] = tb.one;
    used[tb.one] = true;
  }
  if (!assign(0)) return std::nullopt;
  return img;
}

}  // namespace mvprob
