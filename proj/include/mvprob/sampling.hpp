#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mvprob/algebra.hpp"

namespace mvprob {

/// Seeded generator. std::mt19937_64 is fully specified, so seeds reproduce
/// across platforms as long as distributions are avoided.
inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform integer in [0, n).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Whole carrier for finite algebras. Otherwise the distinguished elements
/// followed by random ones until `budget` elements are produced.
std::vector<Elem> sample_elements(const Algebra& a, std::size_t budget, std::uint64_t seed);

/// All ordered pairs for finite algebras. Otherwise all pairs of
/// distinguished elements followed by random pairs until `budget` pairs.
std::vector<std::pair<Elem, Elem>> sample_pairs(const Algebra& a, std::size_t budget,
                                                std::uint64_t seed);

}  // namespace mvprob
