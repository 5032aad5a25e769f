#include <set>

#include "doctest.h"
#include "mvprob/algebra.hpp"
#include "mvprob/errors.hpp"
#include "mvprob/sampling.hpp"
#include "oracles.hpp"

using namespace mvprob;

namespace {

std::shared_ptr<const TableAlgebra> boolean4() {
  // 0, a, b, 1 with a, b complementary atoms.
  return TableAlgebra::create({"0", "a", "b", "1"},
                              {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}, {3, 2, 1, 0});
}

std::vector<AlgebraHandle> finite_builtins() {
  return {chain(1), chain(2), chain(3), chain(4), chain(5), product(chain(1), 2), product(chain(2), 2),
          product(chain(1), 3), boolean4()};
}

}  // namespace

TEST_CASE("unit interval operations") {
  auto u = unit_interval();
  CHECK(oplus(*u, Rat(7, 10), Rat(1, 2)) == Elem(Rat(1)));
  CHECK(neg(*u, Rat(1, 3)) == Elem(Rat(2, 3)));
  CHECK(std::get<Elem>(derived(*u, DerivedOp::Odot, Rat(1, 2), Rat(1, 2))) == Elem(Rat(0)));
  CHECK(std::get<Elem>(derived(*u, DerivedOp::Join, Rat(3, 4), Rat(1, 4))) == Elem(Rat(3, 4)));
  CHECK(std::get<Elem>(derived(*u, DerivedOp::Meet, Rat(3, 4), Rat(1, 4))) == Elem(Rat(1, 4)));
  CHECK(std::get<Elem>(derived(*u, DerivedOp::Ominus, Rat(3, 4), Rat(1, 2))) == Elem(Rat(1, 4)));
  CHECK(std::get<bool>(derived(*u, DerivedOp::Leq, Rat(1, 4), Rat(1, 3))));
  CHECK_THROWS_AS(oplus(*u, Rat(3, 2), Rat(0)), AlgebraMismatch);
  CHECK_THROWS_AS(neg(*u, ChangElem::fin(1)), AlgebraMismatch);
}

TEST_CASE("chains match the truncated-sum formulas") {
  for (unsigned k = 1; k <= 6; ++k) {
    auto c = chain(k);
    CHECK(c->size() == k + 1);
    for (const auto& x : c->carrier())
      for (const auto& y : c->carrier()) {
        CHECK(c->oplus(x, y) == Elem(oracle::luk_oplus(x.rat(), y.rat())));
        CHECK(c->odot(x, y) == Elem(oracle::luk_odot(x.rat(), y.rat())));
        CHECK(c->join(x, y) == Elem(max(x.rat(), y.rat())));
        CHECK(c->meet(x, y) == Elem(min(x.rat(), y.rat())));
        CHECK(c->leq(x, y) == (x.rat() <= y.rat()));
      }
  }
  CHECK_FALSE(chain(4)->contains(Rat(1, 3)));
  CHECK_THROWS_AS(chain(0), UnsupportedAlgebra);
  CHECK_THROWS_AS(chain(4)->index_of(Rat(1, 3)), AlgebraMismatch);
}

TEST_CASE("Chang operations agree with the lexicographic group") {
  auto c = chang();
  std::vector<ChangElem> elems;
  for (std::uint64_t n = 0; n <= 12; ++n) {
    elems.push_back(ChangElem::fin(n));
    elems.push_back(ChangElem::cofin(n));
  }
  for (const auto& x : elems) {
    CHECK(c->neg(x).chang() == oracle::chang_of(oracle::lex_neg(oracle::lex_of(x))));
    for (const auto& y : elems)
      CHECK(c->oplus(x, y).chang() ==
            oracle::chang_of(oracle::lex_oplus(oracle::lex_of(x), oracle::lex_of(y))));
  }
  CHECK(c->oplus(ChangElem::fin(1), ChangElem::fin(1)) == Elem(ChangElem::fin(2)));
  CHECK(c->neg(ChangElem::fin(1)) == Elem(ChangElem::cofin(1)));
  CHECK(c->ominus(ChangElem::fin(2), ChangElem::fin(1)) == Elem(ChangElem::fin(1)));
  CHECK(c->oplus(ChangElem::fin(3), ChangElem::cofin(5)) == Elem(ChangElem::cofin(2)));
  CHECK(c->oplus(ChangElem::fin(7), ChangElem::cofin(5)) == Elem(ChangElem::cofin(0)));
  CHECK_THROWS_AS(c->carrier(), UnsupportedAlgebra);
}

TEST_CASE("FinCof is the Boolean algebra of finite and cofinite sets") {
  auto f = fincof();
  CHECK(f->neg(FinCofElem::finite({1, 2})) == Elem(FinCofElem::cofinite_of({1, 2})));
  auto members = [](const FinCofElem& e, std::uint64_t i) {
    bool in = std::binary_search(e.set.begin(), e.set.end(), i);
    return e.cofinite ? !in : in;
  };
  auto rng = make_rng(5);
  for (int t = 0; t < 400; ++t) {
    auto x = f->sample(rng).fincof();
    auto y = f->sample(rng).fincof();
    auto s = f->oplus(x, y).fincof();
    auto m = f->meet(x, y).fincof();
    for (std::uint64_t i = 0; i < 16; ++i) {
      CHECK(members(s, i) == (members(x, i) || members(y, i)));
      CHECK(members(m, i) == (members(x, i) && members(y, i)));
    }
    CHECK(f->oplus(x, x) == Elem(x));
  }
}

TEST_CASE("products act componentwise") {
  auto p = product(chain(2), 3);
  CHECK(p->size() == 27);
  CHECK(p->name() == "prod:chain:2:3");
  ElemTuple a{Rat(1, 2), Rat(0), Rat(1)}, b{Rat(1, 2), Rat(1, 2), Rat(0)};
  CHECK(p->oplus(a, b) == Elem(ElemTuple{Rat(1), Rat(1, 2), Rat(1)}));
  CHECK(p->neg(a) == Elem(ElemTuple{Rat(1, 2), Rat(1), Rat(0)}));
  CHECK(as_product(*p)->unit_vector(1) == Elem(ElemTuple{Rat(0), Rat(1), Rat(0)}));
  CHECK_FALSE(p->contains(ElemTuple{Rat(1, 2), Rat(0)}));
  CHECK(same_algebra(*p, *product(chain(2), 3)));
  CHECK_FALSE(same_algebra(*p, *product(chain(2), 2)));
}

TEST_CASE("MV axioms hold on every finite built-in") {
  for (const auto& a : finite_builtins()) {
    INFO(a->name());
    CHECK_FALSE(mv_axiom_violation(*a));
    const auto& c = a->carrier();
    for (const auto& x : c) {
      CHECK(a->oplus(x, a->one()) == a->one());
      for (const auto& y : c) {
        // leq is a partial order.
        if (a->leq(x, y) && a->leq(y, x)) CHECK(x == y);
        for (const auto& z : c)
          if (a->leq(x, y) && a->leq(y, z)) CHECK(a->leq(x, z));
      }
    }
  }
}

TEST_CASE("MV axioms and order on sampled infinite algebras") {
  for (const auto& a : {unit_interval(), chang(), fincof(), free1()}) {
    INFO(a->name());
    auto pairs = sample_pairs(*a, 300, 9);
    for (const auto& [x, y] : pairs) {
      CHECK(a->oplus(x, y) == a->oplus(y, x));
      CHECK(a->neg(a->neg(x)) == x);
      CHECK(a->oplus(x, a->one()) == a->one());
      CHECK(a->oplus(x, a->zero()) == x);
      CHECK(a->oplus(a->neg(a->oplus(a->neg(x), y)), y) == a->oplus(a->neg(a->oplus(a->neg(y), x)), x));
    }
    auto elems = sample_elements(*a, 30, 4);
    for (const auto& x : elems)
      for (const auto& y : elems)
        for (const auto& z : elems) CHECK(a->oplus(x, a->oplus(y, z)) == a->oplus(a->oplus(x, y), z));
  }
  auto u = unit_interval();
  for (const auto& [x, y] : sample_pairs(*u, 200, 2)) CHECK((u->leq(x, y) || u->leq(y, x)));
}

TEST_CASE("identity harness: MV1-MV3") {
  for (auto id : {MvIdentity::MV1, MvIdentity::MV2, MvIdentity::MV3}) {
    for (const auto& a : finite_builtins()) {
      auto r = identity_check(*a, id, 0);
      CHECK(r.holds);
      CHECK(r.pairs_checked == a->size() * a->size());
    }
    for (const auto& a : {unit_interval(), chang(), free1(), fincof()}) {
      auto r = identity_check(*a, id, 1000, 3);
      CHECK(r.holds);
      CHECK(r.pairs_checked == 1000);
    }
  }
  CHECK(identity_check(*chain(4), MvIdentity::MV1, 0).pairs_checked == 25);
}

TEST_CASE("identity harness catches a corrupted table") {
  // The three-element chain with h + h changed from 1 to h.
  auto bad = TableAlgebra::create_unchecked({"0", "h", "1"}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {2, 1, 0}, 0);
  CHECK(mv_axiom_violation(*bad));
  auto r = identity_check(*bad, MvIdentity::MV3, 0);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  const auto& [x, y] = *r.witness;
  CHECK(bad->odot(x, bad->meet(y, bad->neg(x))) != bad->zero());
  CHECK_THROWS_AS(TableAlgebra::create({"0", "h", "1"}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {2, 1, 0}),
                  AxiomViolation);
  CHECK_THROWS_AS(TableAlgebra::create({"0", "1"}, {{0, 1}, {1, 5}}, {1, 0}), AxiomViolation);
}

TEST_CASE("tables and isomorphisms") {
  auto b = boolean4();
  CHECK(b->zero() == Elem(TableIndex{0}));
  CHECK(b->label_index("b") == 2);
  CHECK_THROWS_AS(b->label_index("c"), AlgebraMismatch);
  auto iso = find_isomorphism(*b, *product(chain(1), 2));
  REQUIRE(iso);
  CHECK((*iso)[0] == 0);
  CHECK((*iso)[3] == 3);
  CHECK_FALSE(find_isomorphism(*chain(3), *product(chain(1), 2)));
  CHECK(find_isomorphism(*chain(3), *chain(3)));
  CHECK_FALSE(find_isomorphism(*chain(2), *chain(3)));
}

TEST_CASE("sampling is reproducible") {
  for (const auto& a : {unit_interval(), chang(), fincof(), free1(), pwl_algebra()}) {
    auto x = sample_elements(*a, 50, 17);
    auto y = sample_elements(*a, 50, 17);
    CHECK(x == y);
    for (const auto& e : x) CHECK(a->contains(e));
    CHECK(x.front() == a->zero());
  }
}

TEST_CASE("rational coordinates") {
  auto p = product(chain(4), 2);
  CHECK(is_rational_product(*p));
  CHECK_FALSE(is_rational_product(*chang()));
  CHECK(coordinate_count(*p) == 2);
  CHECK(coordinates(*p, ElemTuple{Rat(1, 4), Rat(1)}) == RatVec{Rat(1, 4), Rat(1)});
  CHECK(from_coordinates(*p, {Rat(1, 2), Rat(0)}) == Elem(ElemTuple{Rat(1, 2), Rat(0)}));
  CHECK_THROWS_AS(from_coordinates(*p, {Rat(1, 3), Rat(0)}), AlgebraMismatch);
  CHECK(coordinates(*unit_interval(), Rat(1, 3)) == RatVec{Rat(1, 3)});
}
