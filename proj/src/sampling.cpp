#include "mvprob/sampling.hpp"

namespace mvprob {

std::vector<Elem> sample_elements(const Algebra& a, std::size_t budget, std::uint64_t seed) {
  if (a.is_finite()) return a.carrier();
  std::vector<Elem> out = a.seed_elements();
  auto rng = make_rng(seed);
  while (out.size() < budget) out.push_back(a.sample(rng));
  return out;
}

std::vector<std::pair<Elem, Elem>> sample_pairs(const Algebra& a, std::size_t budget,
                                                std::uint64_t seed) {
  std::vector<std::pair<Elem, Elem>> out;
  if (a.is_finite()) {
    const auto& c = a.carrier();
    out.reserve(c.size() * c.size());
    for (const auto& x : c)
      for (const auto& y : c) out.emplace_back(x, y);
    return out;
  }
  auto seeds = a.seed_elements();
  for (const auto& x : seeds)
    for (const auto& y : seeds) out.emplace_back(x, y);
  auto rng = make_rng(seed);
  while (out.size() < budget) {
    Elem x = a.sample(rng);
    Elem y = a.sample(rng);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

}  // namespace mvprob
