#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mvprob/algebra.hpp"

namespace mvprob {

/// A function between MV-algebras: a table over a finite domain carrier, or
/// a named rule.
class ProbMap {
public:
  /// Values in domain carrier order; each must lie in the codomain.
  static ProbMap from_table(AlgebraHandle from, AlgebraHandle to, std::vector<Elem> values);
  static ProbMap from_rule(AlgebraHandle from, AlgebraHandle to, std::string rule,
                           std::function<Elem(const Elem&)> f);

  /// Throws AlgebraMismatch outside the domain.
  Elem operator()(const Elem& x) const;
  const AlgebraHandle& domain() const { return from_; }
  const AlgebraHandle& codomain() const { return to_; }
  /// Rule name, or "table".
  const std::string& rule() const { return rule_; }
  bool is_table() const { return table_.has_value(); }
  /// Values over the domain carrier (finite domains only).
  std::vector<Elem> values() const;

private:
  ProbMap(AlgebraHandle from, AlgebraHandle to, std::string rule,
          std::function<Elem(const Elem&)> f, std::optional<std::vector<Elem>> table)
      : from_(std::move(from)), to_(std::move(to)), rule_(std::move(rule)), fn_(std::move(f)),
        table_(std::move(table)) {}
  AlgebraHandle from_;
  AlgebraHandle to_;
  std::string rule_;
  std::function<Elem(const Elem&)> fn_;
  std::optional<std::vector<Elem>> table_;
};

/// Agreement on the whole domain (finite) or on sampled elements.
bool same_map(const ProbMap& p, const ProbMap& q);

/// Outcome of a pointwise check. `failed` names the first violated condition.
struct Verdict {
  bool holds = true;
  std::size_t checked = 0;
  std::string failed;
  std::vector<Elem> witness;
  std::string describe() const;
};

/// Sampling used when the domain is infinite. Finite domains are always
/// checked exhaustively.
struct SampleOptions {
  std::uint64_t seed = 1;
  std::size_t count = 500;
  /// Pairs to check instead of seeded samples.
  std::optional<std::vector<std::pair<Elem, Elem>>> pairs;
};

enum class Axiom { P1, P2, P3, P1prime };
std::string to_string(Axiom a);

Verdict check_axiom(const ProbMap& p, Axiom a, const SampleOptions& opts = {});
Verdict check_axioms(const ProbMap& p, const std::vector<Axiom>& which = {Axiom::P1, Axiom::P2, Axiom::P3},
                     const SampleOptions& opts = {});
bool is_prob_map(const ProbMap& p, const SampleOptions& opts = {});

enum class CharRoute {
  Auto,      // rational coordinates when the codomain allows, group otherwise
  Rational,  // coordinates of a rational-product codomain
  Group,     // formal differences of good sequences
};

struct Characterizations {
  bool axioms = false;
  bool group_identity = false;     // p(a+b) = p(a) + p(b) - p(a*b) in the group
  bool split_char = false;         // a*b=0 gives p(a+b)=p(a)+p(b) and p(a)*p(b)=0
  bool disjoint_additive = false;  // a*b=0 gives p(a+b) = p(a) + p(b) in the group
  bool all_agree() const {
    return axioms == group_identity && axioms == split_char && axioms == disjoint_additive;
  }
};
/// Requires p(0)=0 and p(1)=1, else throws NotAProbabilityMap.
Characterizations check_characterizations(const ProbMap& p, CharRoute route = CharRoute::Auto,
                                          const SampleOptions& opts = {});

/// Monotonicity and the sub/super-additivity inequalities of probability maps.
Verdict check_order_bounds(const ProbMap& p, const SampleOptions& opts = {});
/// Preservation of oplus, neg and 0.
Verdict check_mv_hom(const ProbMap& p, const SampleOptions& opts = {});
bool is_mv_hom(const ProbMap& p, const SampleOptions& opts = {});
/// Conditions (1)-(4) of internal states; p must be an endomap.
Verdict check_internal_state(const ProbMap& p, const SampleOptions& opts = {});
bool is_internal_state(const ProbMap& p, const SampleOptions& opts = {});

/// Every probability map between finite algebras, sorted by the printed
/// table. Throws BudgetExceeded after `budget` search nodes.
std::vector<ProbMap> enumerate_prob_maps(const AlgebraHandle& from, const AlgebraHandle& to,
                                         std::size_t budget = 10'000'000);

/// Calls f on every table with p(0)=0 and p(1)=1.
void for_each_endpoint_fixing(const AlgebraHandle& from, const AlgebraHandle& to,
                              const std::function<void(const ProbMap&)>& f);

ProbMap identity_map(const AlgebraHandle& a);
/// FinCof -> Chang: finite S |-> fin(|S|), cofinite S |-> coinf(|complement|).
ProbMap uniform_fincof();
/// a |-> the constant h(a), where h is the embedding of the m-th maximal
/// ideal of `from`.
ProbMap constant_hom(const AlgebraHandle& from, const AlgebraHandle& to, std::size_t m);
/// Free1 -> Free1: a |-> x a(0) + (1-x) a(1).
ProbMap example_pm_map();
/// Free1 -> Free1: a |-> a(1-x).
ProbMap reflect_map();

/// Whether alpha p + (1-alpha) q can be formed in the codomain.
bool convex_codomain(const Algebra& a);
/// Pointwise alpha p + (1-alpha) q. A Free1 codomain widens to all
/// piecewise-linear functions. The result is checked to be a probability map.
ProbMap convex_combination(const Rat& alpha, const ProbMap& p, const ProbMap& q);
ProbMap midpoint(const ProbMap& p, const ProbMap& q);

}  // namespace mvprob
