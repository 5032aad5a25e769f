#include "mvprob/element.hpp"

#include <algorithm>

namespace mvprob {

namespace {

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string set_str(const std::vector<std::uint64_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

FinCofElem FinCofElem::finite(std::vector<std::uint64_t> s) { return {false, normalized(std::move(s))}; }

FinCofElem FinCofElem::cofinite_of(std::vector<std::uint64_t> complement) {
  return {true, normalized(std::move(complement))};
}

std::string to_string(const Elem& e) {
  struct Visitor {
    std::string operator()(const Rat& r) const { return r.str(); }
    std::string operator()(const ElemTuple& t) const {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += to_string(t[i]);
      }
      return s + ")";
    }
    std::string operator()(const ChangElem& c) const {
      return (c.coinf ? "coinf(" : "fin(") + std::to_string(c.n) + ")";
    }
    std::string operator()(const FinCofElem& f) const {
      return (f.cofinite ? "cofinite" : "finite") + set_str(f.set);
    }
    std::string operator()(const PwlFn& f) const { return f.str(); }
    std::string operator()(const TableIndex& t) const { return "#" + std::to_string(t.index); }
  };
  return std::visit(Visitor{}, e.value);
}

}  // namespace mvprob
