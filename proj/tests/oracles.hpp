// Independent reference implementations used to cross-check the library.
#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <vector>

#include "mvprob/algebra.hpp"
#include "mvprob/gamma.hpp"

namespace mvprob {

inline std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << to_string(e); }
inline std::ostream& operator<<(std::ostream& os, const PwlFn& f) { return os << f.str(); }

}  // namespace mvprob

namespace oracle {

using mvprob::Elem;
using mvprob::Rat;

// Chang's algebra as the interval [0, (1,0)] of Z x Z ordered
// lexicographically: fin(n) is (0, n) and coinf(n) is (1, -n).
struct Lex {
  long hi = 0;
  long lo = 0;
  friend bool operator==(const Lex&, const Lex&) = default;
  friend auto operator<=>(const Lex&, const Lex&) = default;
};

inline Lex lex_of(const mvprob::ChangElem& c) {
  return c.coinf ? Lex{1, -static_cast<long>(c.n)} : Lex{0, static_cast<long>(c.n)};
}

inline mvprob::ChangElem chang_of(const Lex& x) {
  if (x.hi == 0) return mvprob::ChangElem::fin(static_cast<std::uint64_t>(x.lo));
  return mvprob::ChangElem::cofin(static_cast<std::uint64_t>(-x.lo));
}

inline Lex lex_oplus(const Lex& a, const Lex& b) {
  Lex s{a.hi + b.hi, a.lo + b.lo};
  return std::min(s, Lex{1, 0});
}

inline Lex lex_neg(const Lex& a) { return {1 - a.hi, -a.lo}; }

// Lukasiewicz operations on rationals, written out directly.
inline Rat luk_oplus(const Rat& a, const Rat& b) { return std::min(a + b, Rat(1)); }
inline Rat luk_odot(const Rat& a, const Rat& b) { return std::max(a + b - Rat(1), Rat(0)); }

// Every subset of a finite carrier that is an ideal, by direct scan.
inline std::set<std::vector<std::size_t>> ideals_by_scan(const mvprob::Algebra& a) {
  const auto& c = a.carrier();
  const std::size_t n = c.size();
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1; };
    if (!in(a.index_of(a.zero()))) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!in(i)) continue;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (in(j) && !in(a.index_of(a.oplus(c[i], c[j])))) ok = false;
        if (!in(j) && a.leq(c[j], c[i])) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) m.push_back(i);
    out.insert(m);
  }
  return out;
}

// x <= y in the monoid of good sequences: some good z has x + z = y.
inline bool monoid_leq(const mvprob::GoodSeq& x, const mvprob::GoodSeq& y,
                       const std::vector<mvprob::GoodSeq>& candidates) {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const mvprob::GoodSeq& z) { return mvprob::gs_add(x, z) == y; });
}

}  // namespace oracle
