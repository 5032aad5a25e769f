#pragma once

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mvprob/algebra.hpp"
#include "mvprob/pwl.hpp"

namespace mvprob {

enum class TermKind { Var, Zero, One, Neg, Oplus, Odot, Ominus, Join, Meet };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind = TermKind::Zero;
  std::string name;  // Var only
  TermPtr lhs;       // Neg uses lhs only
  TermPtr rhs;

  static TermPtr var(std::string name);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr neg(TermPtr t);
  static TermPtr binary(TermKind k, TermPtr a, TermPtr b);
};

/// Structural equality.
bool operator==(const Term& a, const Term& b);

/// Grammar, loosest to tightest: "\/", "/\", "+", "-", "*" (all
/// left-associative), prefix "~", then 0, 1, identifiers and parentheses.
/// Throws ParseError with the byte offset of the problem.
TermPtr parse(std::string_view input);
/// Inverse of parse with the fewest parentheses.
std::string print(const Term& t);

std::set<std::string> variables(const Term& t);

using Env = std::map<std::string, Elem>;
/// Throws UnboundVariable or AlgebraMismatch.
Elem eval(const Term& t, const Algebra& a, const Env& env);

/// The McNaughton function of a term in at most one variable, which is
/// read as the identity on [0,1].
PwlFn free_interpret(const Term& t);

/// Seeded random term of depth at most `depth` over the given variables.
TermPtr random_term(std::mt19937_64& rng, unsigned depth, const std::vector<std::string>& vars);

}  // namespace mvprob
