#include "doctest.h"
#include "mvprob/errors.hpp"
#include "mvprob/pwl.hpp"
#include "mvprob/sampling.hpp"
#include "mvprob/term.hpp"
#include "oracles.hpp"

using namespace mvprob;

namespace {

TermPtr v(const std::string& n) { return Term::var(n); }
TermPtr bin(TermKind k, TermPtr a, TermPtr b) { return Term::binary(k, std::move(a), std::move(b)); }

std::size_t error_offset(std::string_view s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  return static_cast<std::size_t>(-1);
}

const char* const kIdentities[][2] = {
    {"b /\\ ~a", "b - (a*b)"},
    {"a + b", "a + (b /\\ ~a)"},
    {"a * (b /\\ ~a)", "0"},
};

}  // namespace

TEST_CASE("parsing") {
  CHECK(*parse("~(x + y)") == *Term::neg(bin(TermKind::Oplus, v("x"), v("y"))));
  CHECK(*parse("x \\/ ~x") == *bin(TermKind::Join, v("x"), Term::neg(v("x"))));
  CHECK(*parse("x + y /\\ z") == *bin(TermKind::Meet, bin(TermKind::Oplus, v("x"), v("y")), v("z")));
  CHECK(*parse("x - y * z") == *bin(TermKind::Ominus, v("x"), bin(TermKind::Odot, v("y"), v("z"))));
  CHECK(*parse("x - y - z") == *bin(TermKind::Ominus, bin(TermKind::Ominus, v("x"), v("y")), v("z")));
  CHECK(*parse("a \\/ b /\\ c") == *bin(TermKind::Join, v("a"), bin(TermKind::Meet, v("b"), v("c"))));
  CHECK(*parse("~~x") == *Term::neg(Term::neg(v("x"))));
  CHECK(*parse("~x*y") == *bin(TermKind::Odot, Term::neg(v("x")), v("y")));
  CHECK(*parse("  (x_1)+1 ") == *bin(TermKind::Oplus, v("x_1"), Term::one()));
  CHECK(*parse("0") == *Term::zero());
  CHECK(variables(*parse("x + y * ~x \\/ z1")) == std::set<std::string>{"x", "y", "z1"});
}

TEST_CASE("parse errors report the offending offset") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("x +") == 3);
  CHECK(error_offset("(x + y") == 6);
  CHECK(error_offset("x y") == 2);
  CHECK(error_offset("x & y") == 2);
  CHECK(error_offset("2") == 0);
  CHECK(error_offset("x / y") == 2);
  CHECK(error_offset(")") == 0);
  CHECK_THROWS_AS(parse("x ++ y"), ParseError);
}

TEST_CASE("printing") {
  CHECK(print(*parse("~(x+y)")) == "~(x + y)");
  CHECK(print(*parse("((x + y)) /\\ z")) == "x + y /\\ z");
  CHECK(print(*parse("x + (y /\\ z)")) == "x + (y /\\ z)");
  CHECK(print(*parse("x - (y - z)")) == "x - (y - z)");
  CHECK(print(*parse("(x - y) - z")) == "x - y - z");
  auto rng = make_rng(41);
  for (int t = 0; t < 1000; ++t) {
    auto term = random_term(rng, 8, {"x", "y", "z"});
    auto text = print(*term);
    CHECK(*parse(text) == *term);
    CHECK(print(*parse(text)) == text);
  }
}

TEST_CASE("evaluation") {
  auto u = unit_interval();
  CHECK(eval(*parse("1 - x"), *u, {{"x", Rat(1, 4)}}) == Elem(Rat(3, 4)));
  CHECK(eval(*parse("x * y"), *u, {{"x", Rat(2, 3)}, {"y", Rat(1, 2)}}) == Elem(Rat(1, 6)));
  CHECK(eval(*parse("x \\/ ~x"), *u, {{"x", Rat(1, 3)}}) == Elem(Rat(2, 3)));
  CHECK_THROWS_AS(eval(*parse("x + y"), *u, {{"x", Rat(1, 4)}}), UnboundVariable);
  CHECK_THROWS_AS(eval(*parse("x"), *chain(2), {{"x", Rat(1, 3)}}), AlgebraMismatch);
  auto c = chang();
  CHECK(eval(*parse("e + e + e"), *c, {{"e", ChangElem::fin(1)}}) == Elem(ChangElem::fin(3)));

  auto c4 = chain(4);
  std::size_t pairs = 0;
  for (const auto& a : c4->carrier())
    for (const auto& b : c4->carrier()) {
      ++pairs;
      Env env{{"a", a}, {"b", b}};
      CHECK(eval(*parse("b /\\ ~a"), *c4, env) == eval(*parse("b - (a*b)"), *c4, env));
    }
  CHECK(pairs == 25);
}

TEST_CASE("MV1-MV3 evaluated as terms in every built-in algebra") {
  std::vector<AlgebraHandle> algebras{unit_interval(), chain(1), chain(3), product(chain(2), 2), chang(),
                                      fincof(), free1(), pwl_algebra()};
  for (const auto& alg : algebras) {
    INFO(alg->name());
    for (const auto& id : kIdentities) {
      auto lhs = parse(id[0]), rhs = parse(id[1]);
      for (const auto& [a, b] : sample_pairs(*alg, 300, 5)) {
        Env env{{"a", a}, {"b", b}};
        CHECK(eval(*lhs, *alg, env) == eval(*rhs, *alg, env));
      }
    }
  }
}

TEST_CASE("free interpretation") {
  auto tent = free_interpret(*parse("x \\/ ~x"));
  CHECK(tent.breakpoints() == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
  CHECK(tent(Rat(1, 2)) == Rat(1, 2));
  CHECK(free_interpret(*parse("y")) == PwlFn::identity());
  CHECK(free_interpret(*parse("1 - 1")) == PwlFn::constant(Rat(0)));
  CHECK_THROWS_AS(free_interpret(*parse("x + y")), UnsupportedAlgebra);

  auto rng = make_rng(42);
  auto f1 = free1();
  for (int t = 0; t < 300; ++t) {
    auto term = random_term(rng, 6, {"x"});
    auto f = free_interpret(*term);
    CHECK(is_mcnaughton(f));
    // Agrees with evaluation in the free algebra at the generator.
    CHECK(eval(*term, *f1, {{"x", PwlFn::identity()}}) == Elem(f));
    // Agrees pointwise with evaluation in [0,1].
    for (int i = 0; i <= 6; ++i) {
      Rat x(i, 6);
      CHECK(f(x) == eval(*term, *unit_interval(), {{"x", x}}).rat());
    }
    if (term->kind == TermKind::Neg) CHECK(f == pwl_neg(free_interpret(*term->lhs)));
    if (term->kind == TermKind::Oplus)
      CHECK(f == pwl_combine(free_interpret(*term->lhs), free_interpret(*term->rhs), PwlOp::Oplus));
    if (term->kind == TermKind::Meet)
      CHECK(f == pwl_combine(free_interpret(*term->lhs), free_interpret(*term->rhs), PwlOp::Meet));
  }
}
