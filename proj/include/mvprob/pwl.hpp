#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mvprob/rational.hpp"

namespace mvprob {

struct Linear {
  Rat slope;
  Rat intercept;

  Rat at(const Rat& x) const { return slope * x + intercept; }
  friend bool operator==(const Linear&, const Linear&) = default;
  friend auto operator<=>(const Linear&, const Linear&) = default;
};

/// Continuous piecewise-linear function [0,1] -> [0,1] with rational
/// breakpoints and rational pieces. Always canonical: adjacent pieces differ,
/// so equality of functions is equality of representations.
class PwlFn {
public:
  /// Validates continuity and range, then canonicalizes.
  /// Throws RangeError on malformed input.
  static PwlFn make(std::vector<Rat> breakpoints, std::vector<Linear> pieces);
  static PwlFn constant(const Rat& c);
  static PwlFn linear(const Rat& slope, const Rat& intercept);
  static PwlFn identity() { return linear(1, 0); }

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Linear>& pieces() const { return pieces_; }

  /// Throws RangeError for x outside [0,1].
  Rat operator()(const Rat& x) const;

  std::string str() const;

  friend bool operator==(const PwlFn&, const PwlFn&) = default;
  friend auto operator<=>(const PwlFn&, const PwlFn&) = default;

private:
  PwlFn() = default;
  std::vector<Rat> breaks_;
  std::vector<Linear> pieces_;
};

enum class PwlOp { Oplus, Odot, Join, Meet, Add };

/// Pointwise combination. Oplus is min(f+g,1), Odot is max(f+g-1,0), Add is
/// the untruncated sum and throws RangeError if it leaves [0,1].
PwlFn pwl_combine(const PwlFn& f, const PwlFn& g, PwlOp op);
PwlFn pwl_neg(const PwlFn& f);
/// alpha*f + beta*g; throws RangeError if the result leaves [0,1].
PwlFn pwl_scale_shift(const Rat& alpha, const PwlFn& f, const Rat& beta, const PwlFn& g);

Rat pwl_eval(const PwlFn& f, const Rat& x);
bool pwl_eq(const PwlFn& f, const PwlFn& g);

/// Every piece has integer slope and intercept.
bool is_mcnaughton(const PwlFn& f);

/// x * a(0) + (1 - x) * a(1). Throws RangeError if a is not McNaughton.
PwlFn example_pm(const PwlFn& a);

/// x -> a(1 - x).
PwlFn precompose_reflect(const PwlFn& a);

/// Random McNaughton function built from the identity by `depth` rounds of
/// randomly chosen MV operations.
PwlFn random_mcnaughton(std::mt19937_64& rng, int depth);

}  // namespace mvprob
