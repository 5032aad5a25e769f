#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mvprob/pwl.hpp"
#include "mvprob/rational.hpp"

namespace mvprob {

/// Element of Chang's algebra: n*eps (Fin) or 1 - n*eps (Coinf).
struct ChangElem {
  bool coinf = false;
  std::uint64_t n = 0;

  static ChangElem fin(std::uint64_t n) { return {false, n}; }
  static ChangElem cofin(std::uint64_t n) { return {true, n}; }

  friend bool operator==(const ChangElem&, const ChangElem&) = default;
  friend auto operator<=>(const ChangElem&, const ChangElem&) = default;
};

/// Element of the finite-cofinite algebra over the naturals. `set` is the
/// finite side: the set itself, or the complement when cofinite.
struct FinCofElem {
  bool cofinite = false;
  std::vector<std::uint64_t> set;  // sorted, unique

  static FinCofElem finite(std::vector<std::uint64_t> s);
  static FinCofElem cofinite_of(std::vector<std::uint64_t> complement);

  friend bool operator==(const FinCofElem&, const FinCofElem&) = default;
  friend auto operator<=>(const FinCofElem&, const FinCofElem&) = default;
};

/// Position in the carrier of an explicitly tabulated algebra.
struct TableIndex {
  std::size_t index = 0;

  friend bool operator==(const TableIndex&, const TableIndex&) = default;
  friend auto operator<=>(const TableIndex&, const TableIndex&) = default;
};

struct Elem;
using ElemTuple = std::vector<Elem>;

/// A value of some MV-algebra. Which alternative is meaningful depends on the
/// algebra the value belongs to.
struct Elem {
  using Variant = std::variant<Rat, ElemTuple, ChangElem, FinCofElem, PwlFn, TableIndex>;
  Variant value;

  Elem() : value(Rat(0)) {}
  Elem(Rat r) : value(std::move(r)) {}  // NOLINT
  Elem(ElemTuple t) : value(std::move(t)) {}  // NOLINT
  Elem(ChangElem c) : value(c) {}  // NOLINT
  Elem(FinCofElem f) : value(std::move(f)) {}  // NOLINT
  Elem(PwlFn f) : value(std::move(f)) {}  // NOLINT
  Elem(TableIndex t) : value(t) {}  // NOLINT

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(value);
  }

  const Rat& rat() const { return as<Rat>(); }
  const ElemTuple& tuple() const { return as<ElemTuple>(); }
  const ChangElem& chang() const { return as<ChangElem>(); }
  const FinCofElem& fincof() const { return as<FinCofElem>(); }
  const PwlFn& pwl() const { return as<PwlFn>(); }
  std::size_t table_index() const { return as<TableIndex>().index; }

  friend bool operator==(const Elem& a, const Elem& b) { return a.value == b.value; }
  friend bool operator<(const Elem& a, const Elem& b) { return a.value < b.value; }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
};

/// Human-readable rendering, used in witnesses and as a canonical key.
std::string to_string(const Elem& e);

}  // namespace mvprob
