#pragma once

#include <optional>
#include <vector>

#include "mvprob/probmap.hpp"
#include "mvprob/spectra.hpp"

namespace mvprob {

/// For each maximal ideal n of the codomain, the state a |-> p(a)*(n) of
/// the domain.
struct DualMap {
  AlgebraHandle domain;
  AlgebraHandle codomain;
  MaxSpace max;
  std::vector<State> states;
};

/// Throws UnsupportedAlgebra for a non-semisimple codomain unless
/// require_semisimple is false.
DualMap dual(const ProbMap& p, bool require_semisimple = true);
/// The map whose dual is d. Throws NotRepresentable when some value vector
/// is not the star of a codomain element.
ProbMap from_dual(const DualMap& d);
bool same_dual(const DualMap& a, const DualMap& b);
/// from_dual(dual(p)) = p and dual(from_dual(dual(p))) = dual(p).
bool dual_roundtrip(const ProbMap& p);

struct DualEquivalences {
  bool extreme = false;
  bool hom = false;
  bool duals_extreme = false;
  bool factors = false;
  /// Codomain maximal ideal -> domain maximal ideal, when p factors.
  std::optional<std::vector<std::size_t>> index_map;
  bool all_agree() const { return extreme == hom && hom == duals_extreme && hom == factors; }
};
DualEquivalences check_dual_equivalences(const ProbMap& p);

}  // namespace mvprob
