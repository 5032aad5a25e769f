#include <set>

#include "doctest.h"
#include "mvprob/errors.hpp"
#include "mvprob/polytope.hpp"
#include "mvprob/sampling.hpp"
#include "mvprob/spectra.hpp"
#include "oracles.hpp"

using namespace mvprob;

namespace {

std::vector<AlgebraHandle> small_finite() {
  return {chain(1), chain(2), chain(3), chain(4), product(chain(1), 2), product(chain(2), 2),
          product(chain(1), 3), product(chain(3), 2)};
}

bool is_max_by_scan(const std::set<std::vector<std::size_t>>& ideals, const std::vector<std::size_t>& m,
                    std::size_t n) {
  if (m.size() == n) return false;
  for (const auto& j : ideals) {
    if (j.size() == n || j == m) continue;
    if (std::includes(j.begin(), j.end(), m.begin(), m.end())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ideals agree with an exhaustive subset scan") {
  for (const auto& a : small_finite()) {
    INFO(a->name());
    auto scan = oracle::ideals_by_scan(*a);
    std::set<std::vector<std::size_t>> got;
    for (const auto& i : all_ideals(a)) got.insert(i.members);
    CHECK(got == scan);

    std::set<std::vector<std::size_t>> max_scan, max_got;
    for (const auto& m : scan)
      if (is_max_by_scan(scan, m, a->size())) max_scan.insert(m);
    auto ms = all_maximal_ideals(a);
    for (const auto& e : ms.entries) max_got.insert(e.ideal.members);
    CHECK(max_got == max_scan);
    CHECK(ms.size() == max_scan.size());
  }
  CHECK(all_maximal_ideals(chain(4)).size() == 1);
  CHECK(all_maximal_ideals(product(chain(1), 2)).size() == 2);
  CHECK(all_ideals(chang()).size() == 3);
  CHECK_THROWS_AS(all_maximal_ideals(fincof()), UnsupportedAlgebra);
}

TEST_CASE("ideal construction") {
  auto a = product(chain(1), 2);
  auto e1 = as_product(*a)->unit_vector(0);
  auto i = ideal_closure(a, {e1});
  CHECK(i.members.size() == 2);
  CHECK(i.contains(e1));
  CHECK_FALSE(i.contains(a->one()));
  CHECK(ideal_closure(a, {a->one()}).members.size() == 4);
  CHECK_THROWS_AS(make_ideal(a, {a->zero(), a->one()}), NotAnIdeal);
  CHECK_THROWS_AS(make_ideal(a, {e1}), NotAnIdeal);
  CHECK(make_ideal(a, {a->zero(), e1}) == i);
  auto c = chang();
  CHECK(ideal_closure(c, {ChangElem::fin(3)}).form == IdealForm::ChangRad);
  CHECK(ideal_closure(c, {ChangElem::cofin(3)}).form == IdealForm::ChangAll);
  CHECK(ideal_closure(c, {}).form == IdealForm::ChangZero);
}

TEST_CASE("radical and semisimplicity") {
  CHECK(radical(chain(4)).members.size() == 1);
  CHECK(is_semisimple(chain(4)));
  CHECK(is_semisimple(product(chain(1), 2)));
  CHECK(is_semisimple(product(chain(2), 3)));
  auto r = radical(chang());
  CHECK(r.form == IdealForm::ChangRad);
  CHECK(r.contains(ChangElem::fin(9)));
  CHECK_FALSE(r.contains(ChangElem::cofin(9)));
  CHECK_FALSE(is_semisimple(chang()));
  CHECK(all_maximal_ideals(chang()).entries[0].ideal == r);
}

TEST_CASE("quotients") {
  for (const auto& a : small_finite()) {
    auto q = quotient(a, ideal_closure(a, {}));
    CHECK(find_isomorphism(*q.algebra, *a));
    for (const auto& e : all_maximal_ideals(a).entries) {
      auto qm = quotient(a, e.ideal);
      CHECK(find_isomorphism(*qm.algebra, *chain(*e.k)));
      for (const auto& x : a->carrier())
        for (const auto& y : a->carrier())
          CHECK(qm.project(a->oplus(x, y)) == qm.algebra->oplus(qm.project(x), qm.project(y)));
    }
  }
  auto b = product(chain(1), 2);
  auto ker = all_maximal_ideals(b).entries[1].ideal;
  CHECK(find_isomorphism(*quotient(b, ker).algebra, *chain(1)));
  auto c = chang();
  auto cr = quotient(c, radical(c));
  CHECK(cr.algebra->size() == 2);
  CHECK(find_isomorphism(*cr.algebra, *chain(1)));
  CHECK(cr.project(ChangElem::fin(4)) == cr.algebra->zero());
  CHECK(cr.project(ChangElem::cofin(4)) == cr.algebra->one());
  CHECK(quotient(c, ideal_closure(c, {ChangElem::cofin(0)})).algebra->size() == 1);
}

TEST_CASE("the star map") {
  CHECK(star(chain(4), Rat(3, 4)) == RatVec{Rat(3, 4)});
  CHECK(star(chang(), ChangElem::fin(5)) == RatVec{Rat(0)});
  CHECK(star(chang(), ChangElem::cofin(2)) == RatVec{Rat(1)});
  for (const auto& a : small_finite()) {
    auto ms = all_maximal_ideals(a);
    CHECK(star(ms, a->one()) == RatVec(ms.size(), Rat(1)));
    std::set<RatVec> images;
    for (const auto& x : a->carrier()) {
      images.insert(star(ms, x));
      for (const auto& y : a->carrier()) {
        auto sx = star(ms, x), sy = star(ms, y), s = star(ms, a->oplus(x, y));
        for (std::size_t i = 0; i < ms.size(); ++i) CHECK(s[i] == oracle::luk_oplus(sx[i], sy[i]));
      }
      auto sn = star(ms, a->neg(x));
      for (std::size_t i = 0; i < ms.size(); ++i) CHECK(sn[i] == Rat(1) - star(ms, x)[i]);
    }
    CHECK((images.size() == a->size()) == is_semisimple(a));
  }
  // Chang: star kills infinitesimals, so it is not injective.
  CHECK(star(chang(), ChangElem::fin(1)) == star(chang(), ChangElem::fin(0)));
  CHECK_FALSE(is_semisimple(chang()));
}

TEST_CASE("a tabulated Boolean algebra is semisimple") {
  auto b = TableAlgebra::create({"0", "a", "b", "1"},
                                {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}, {3, 2, 1, 0});
  CHECK(is_semisimple(b));
  CHECK(all_maximal_ideals(b).size() == 2);
}

TEST_CASE("extremal states") {
  for (const auto& a : small_finite()) {
    auto ms = all_maximal_ideals(a);
    auto ext = ext_states(ms);
    REQUIRE(ext.size() == ms.size());
    for (std::size_t i = 0; i < ext.size(); ++i) {
      CHECK(is_state(ext[i]));
      // Each extremal state is a homomorphism into the rationals.
      for (const auto& x : a->carrier())
        for (const auto& y : a->carrier())
          CHECK(ext[i](a->oplus(x, y)) == oracle::luk_oplus(ext[i](x), ext[i](y)));
      RatVec point(ms.size(), Rat(0));
      point[i] = Rat(1);
      CHECK(state_decompose(ms, ext[i]) == point);
    }
  }
  auto c = chain(3);
  auto st = ext_states(c);
  REQUIRE(st.size() == 1);
  CHECK(st[0].values() == RatVec{Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)});
  CHECK(state_decompose(all_maximal_ideals(c), st[0]) == RatVec{Rat(1)});
}

TEST_CASE("extremal states are the vertices of the state polytope") {
  for (const auto& a : {chain(1), chain(2), chain(3), product(chain(1), 2), product(chain(2), 2),
                        product(chain(1), 3)}) {
    INFO(a->name());
    auto verts = vertex_enumerate(state_polytope(a));
    std::set<RatVec> v(verts.begin(), verts.end()), e;
    for (const auto& s : ext_states(a)) e.insert(s.values());
    CHECK(v == e);
  }
}

TEST_CASE("decomposition of states") {
  auto b = product(chain(1), 2);
  auto ms = all_maximal_ideals(b);
  auto s = State::from_table(b, {Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)});
  CHECK(is_state(s));
  auto w = state_decompose(ms, s);
  // The weight sits on the ideal whose state is 1 on (1,0).
  auto e1 = as_product(*b)->unit_vector(0);
  for (std::size_t i = 0; i < ms.size(); ++i)
    CHECK(w[i] == (ms.entries[i].embed(e1) == Rat(1) ? Rat(2, 3) : Rat(1, 3)));

  auto rng = make_rng(21);
  for (const auto& a : small_finite()) {
    auto m = all_maximal_ideals(a);
    for (int t = 0; t < 20; ++t) {
      RatVec lam;
      Rat total(0);
      for (std::size_t i = 0; i < m.size(); ++i) {
        lam.emplace_back(static_cast<long>(uniform_below(rng, 9)) + 1);
        total += lam.back();
      }
      for (auto& l : lam) l /= total;
      auto st = state_from_measure(m, lam);
      CHECK(is_state(st));
      CHECK(state_decompose(m, st) == lam);
    }
  }
  auto bad = State::from_table(b, {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK_FALSE(is_state(bad));
  CHECK_THROWS_AS(state_decompose(ms, bad), InfeasibleDecomposition);
}

TEST_CASE("non-extremal states need not preserve joins") {
  auto b = product(chain(1), 2);
  auto ms = all_maximal_ideals(b);
  auto s = state_from_measure(ms, {Rat(1, 2), Rat(1, 2)});
  auto e1 = as_product(*b)->unit_vector(0), e2 = as_product(*b)->unit_vector(1);
  CHECK(s(b->join(e1, e2)) == Rat(1));
  CHECK(max(s(e1), s(e2)) == Rat(1, 2));
  for (const auto& e : ext_states(ms)) CHECK(e(b->join(e1, e2)) == max(e(e1), e(e2)));
}

TEST_CASE("affine representation") {
  auto b = product(chain(2), 2);
  auto ms = all_maximal_ideals(b);
  auto ext = ext_states(ms);
  auto rng = make_rng(22);
  for (const auto& x : b->carrier()) {
    for (std::size_t i = 0; i < ext.size(); ++i) CHECK(affine_rep(x, ext[i]) == star(ms, x)[i]);
    CHECK(affine_rep(b->one(), state_from_measure(ms, {Rat(1, 5), Rat(4, 5)})) == Rat(1));
    std::vector<std::pair<RatVec, RatVec>> vv{{{Rat(1), Rat(0)}, {affine_rep(x, ext[0])}},
                                             {{Rat(0), Rat(1)}, {affine_rep(x, ext[1])}}};
    for (int t = 0; t < 5; ++t) {
      Rat l(static_cast<long>(uniform_below(rng, 11)), 10);
      auto s = state_from_measure(ms, {l, Rat(1) - l});
      CHECK(RatVec{affine_rep(x, s)} == affine_extend(vv, {l, Rat(1) - l}));
    }
  }
}

TEST_CASE("Chang's algebra has exactly one state") {
  auto c = chang();
  auto s = chang_state();
  CHECK(is_state(s));
  CHECK(s(ChangElem::fin(7)) == Rat(0));
  CHECK(s(ChangElem::cofin(7)) == Rat(1));
  // A state with s(e) = q > 0 forces s(m e) = m q, which exceeds 1 for m > 1/q.
  for (Rat q : {Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 7)}) {
    auto cand = State::from_function(c, [q](const Elem& x) {
      const auto& ch = x.chang();
      Rat v = Rat(static_cast<long>(ch.n)) * q;
      return ch.coinf ? Rat(1) - v : v;
    });
    CHECK(state_violation(cand, 2000));
  }
  // The quotient by the radical is the two-element chain, which also has one state.
  auto cr = quotient(c, radical(c)).algebra;
  CHECK(vertex_enumerate(state_polytope(cr)).size() == 1);
  CHECK(ext_states(c).size() == 1);
  CHECK(same_state(ext_states(c)[0], s));
}
