#include "doctest.h"
#include "mvprob/errors.hpp"
#include "mvprob/gamma.hpp"
#include "mvprob/probmap.hpp"
#include "oracles.hpp"

using namespace mvprob;

namespace {

// The enveloping group of Chain(k) is Z with unit k; a good sequence counts
// as k times the sum of its entries.
long chain_value(const GoodSeq& s) {
  unsigned k = as_chain(*s.algebra())->k();
  Rat total(0);
  for (const auto& e : s.entries()) total += e.rat() * Rat(k);
  return total.numerator().get_si();
}

long chain_value(const GroupElem& g) { return chain_value(g.pos()) - chain_value(g.neg()); }

GoodSeq seq(const AlgebraHandle& a, std::vector<Rat> xs) {
  std::vector<Elem> e(xs.begin(), xs.end());
  return GoodSeq::make(a, e);
}

}  // namespace

TEST_CASE("single-element sums") {
  auto c2 = chain(2);
  CHECK(gs_add_single(seq(c2, {Rat(1, 2)}), Rat(1, 2)) == seq(c2, {Rat(1)}));
  CHECK(gs_add_single(seq(c2, {Rat(1)}), Rat(1, 2)) == seq(c2, {Rat(1), Rat(1, 2)}));
  CHECK(gs_add_single(seq(c2, {Rat(1), Rat(1, 2)}), Rat(0)) == seq(c2, {Rat(1), Rat(1, 2)}));
  CHECK(gs_add(seq(c2, {Rat(1), Rat(1, 2)}), seq(c2, {Rat(1, 2)})) == seq(c2, {Rat(1), Rat(1)}));
  CHECK(seq(c2, {Rat(1), Rat(0), Rat(0)}).size() == 1);
  CHECK(GoodSeq::zero(c2).size() == 0);
  CHECK(seq(c2, {Rat(1)}).entry(5) == Elem(Rat(0)));
  CHECK_THROWS_AS(seq(c2, {Rat(1, 2), Rat(1, 2)}), AxiomViolation);
  CHECK_THROWS_AS(gs_add(seq(c2, {Rat(1)}), seq(chain(3), {Rat(1)})), AlgebraMismatch);
}

TEST_CASE("good sequences form a commutative monoid") {
  for (unsigned k : {2u, 3u}) {
    auto c = chain(k);
    auto all = good_sequences(c, 3);
    for (const auto& s : all) {
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        CHECK(c->oplus(s.entry(i), s.entry(i + 1)) == s.entry(i));
        CHECK(c->odot(s.entry(i), s.entry(i + 1)) == s.entry(i + 1));
      }
      CHECK(gs_add(s, GoodSeq::zero(c)) == s);
    }
    for (const auto& x : all)
      for (const auto& y : all) {
        auto s = gs_add(x, y);
        CHECK(s == gs_add(y, x));
        CHECK(chain_value(s) == chain_value(x) + chain_value(y));
        for (const auto& z : all) CHECK(gs_add(s, z) == gs_add(x, gs_add(y, z)));
      }
  }
}

TEST_CASE("componentwise order is the monoid order") {
  for (const auto& a : {chain(2), product(chain(1), 2)}) {
    auto all = good_sequences(a, 3);
    for (const auto& x : all)
      for (const auto& y : all) CHECK(gs_leq(x, y) == oracle::monoid_leq(x, y, all));
  }
}

TEST_CASE("group arithmetic on chains matches the integers") {
  auto c = chain(3);
  auto all = good_sequences(c, 2);
  std::vector<GroupElem> gs;
  for (const auto& p : all)
    for (const auto& n : all) gs.emplace_back(p, n);
  for (const auto& x : gs)
    for (const auto& y : gs) {
      CHECK(group_eq(x, y) == (chain_value(x) == chain_value(y)));
      CHECK(group_leq(x, y) == (chain_value(x) <= chain_value(y)));
      CHECK(chain_value(group_add(x, y)) == chain_value(x) + chain_value(y));
      CHECK(chain_value(group_sub(x, y)) == chain_value(x) - chain_value(y));
      CHECK(chain_value(group_meet(x, y)) == std::min(chain_value(x), chain_value(y)));
      CHECK(chain_value(group_join(x, y)) == std::max(chain_value(x), chain_value(y)));
      CHECK(std::get<bool>(group_ops(x, y, GroupOp::Eq)) == group_eq(x, y));
    }
}

TEST_CASE("hand-checked group facts") {
  auto c2 = chain(2);
  auto a0 = GroupElem::of(c2, Rat(1, 2));
  CHECK(group_eq(group_sub(a0, a0), GroupElem::zero(c2)));
  GroupElem half(seq(c2, {Rat(1)}), seq(c2, {Rat(1, 2)}));
  CHECK(group_eq(half, a0));
  CHECK(group_leq(GroupElem::zero(c2), GroupElem::unit(c2)));
  CHECK_FALSE(group_leq(GroupElem::unit(c2), GroupElem::zero(c2)));
  CHECK(group_eq(group_negate(group_negate(half)), half));
  // Componentwise on a product.
  auto p = product(chain(1), 2);
  auto e1 = GroupElem::of(p, as_product(*p)->unit_vector(0));
  auto e2 = GroupElem::of(p, as_product(*p)->unit_vector(1));
  CHECK_FALSE(group_leq(e1, e2));
  CHECK_FALSE(group_leq(e2, e1));
  CHECK(group_eq(group_add(e1, e2), GroupElem::unit(p)));
  CHECK(group_eq(group_meet(e1, e2), GroupElem::zero(p)));
}

TEST_CASE("the unit interval of the group recovers the algebra") {
  CHECK(gamma_interval(chain(2)).size() == 3);
  CHECK(gamma_interval(chain(1)).size() == 2);
  CHECK(gamma_interval(product(chain(1), 2)).size() == 4);
  for (const auto& a : {chain(1), chain(2), chain(3), product(chain(1), 2), product(chain(2), 2)}) {
    auto iv = gamma_interval(a);
    CHECK(iv.size() == a->size());
    for (const auto& x : a->carrier()) {
      auto g = GroupElem::of(a, x);
      std::size_t hits = 0;
      for (const auto& h : iv) hits += group_eq(g, h) ? 1 : 0;
      CHECK(hits == 1);
    }
    auto rt = gamma_roundtrip(a);
    CHECK(rt.classes == a->size());
    CHECK(rt.iso.has_value());
  }
  CHECK_THROWS_AS(gamma_interval(chang()), UnsupportedAlgebra);
}

TEST_CASE("probability maps lift to unital positive group homomorphisms") {
  auto c2 = chain(2), c4 = chain(4);
  auto maps = enumerate_prob_maps(c2, c4);
  REQUIRE(maps.size() == 1);
  auto f = lift_prob_map(maps[0]);
  GroupElem x(seq(c2, {Rat(1), Rat(1, 2)}), GoodSeq::zero(c2));
  CHECK(group_eq(f(x), GroupElem(seq(c4, {Rat(1), Rat(1, 2)}), GoodSeq::zero(c4))));
  CHECK(group_eq(f(GroupElem::unit(c2)), GroupElem::unit(c4)));
  auto u = GroupElem::unit(c2);
  CHECK(group_eq(f(group_sub(u, u)), GroupElem::zero(c4)));

  auto id = lift_prob_map(identity_map(c2));
  for (const auto& s : good_sequences(c2, 3)) {
    GroupElem g(s, GoodSeq::zero(c2));
    CHECK(group_eq(id(g), g));
  }

  std::vector<ProbMap> sweep;
  for (const auto& [from, to] : std::vector<std::pair<AlgebraHandle, AlgebraHandle>>{
           {product(chain(1), 2), chain(2)}, {product(chain(1), 2), chain(3)}, {chain(2), chain(2)}})
    for (auto& p : enumerate_prob_maps(from, to)) sweep.push_back(p);
  REQUIRE(sweep.size() > 3);
  for (const auto& p : sweep) {
    auto a = p.domain();
    auto fp = lift_prob_map(p);
    auto all = good_sequences(a, 2);
    for (const auto& s : all)
      for (const auto& t : all) {
        GroupElem x(s, GoodSeq::zero(a)), y(t, GoodSeq::zero(a));
        CHECK(group_eq(fp(group_add(x, y)), group_add(fp(x), fp(y))));
      }
    for (const auto& x : a->carrier())
      for (const auto& y : a->carrier()) {
        // p(a + b) + p(a * b) = p(a) + p(b), computed in the group.
        auto lhs = group_add(fp(GroupElem::of(a, a->oplus(x, y))), fp(GroupElem::of(a, a->odot(x, y))));
        auto rhs = group_add(fp(GroupElem::of(a, x)), fp(GroupElem::of(a, y)));
        CHECK(group_eq(lhs, rhs));
      }
    for (const auto& s : all) {
      GroupElem x(s, GoodSeq::zero(a));
      CHECK(group_leq(GroupElem::zero(p.codomain()), fp(x)));
    }
  }
  auto bad = ProbMap::from_table(c2, c2, {Rat(0), Rat(1), Rat(1)});
  CHECK_THROWS_AS(lift_prob_map(bad), NotAProbabilityMap);
}
