#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mvprob/element.hpp"
#include "mvprob/linalg.hpp"

namespace mvprob {

enum class AlgebraKind { UnitInterval, Chain, Product, Chang, FinCof, Free1, Pwl, Table };

/// Operation tables of a finite algebra, indexed by carrier position.
struct FiniteOps {
  std::size_t n = 0;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<std::size_t> oplus;  // n*n
  std::vector<std::size_t> neg;    // n
  std::vector<std::size_t> odot;   // n*n
  std::vector<std::size_t> join;   // n*n
  std::vector<std::size_t> meet;   // n*n
  std::vector<char> leq;           // n*n

  std::size_t at(const std::vector<std::size_t>& t, std::size_t i, std::size_t j) const {
    return t[i * n + j];
  }
};

/// An MV-algebra given by its primitive operations (oplus, neg, 0). The
/// member operations assume their arguments lie in the carrier; the free
/// functions oplus/neg/derived below check membership first.
class Algebra {
public:
  virtual ~Algebra() = default;

  virtual AlgebraKind kind() const = 0;
  /// Command-line style name, e.g. "chain:4" or "prod:chain:1:2".
  virtual std::string name() const = 0;
  virtual bool contains(const Elem& x) const = 0;
  virtual Elem zero() const = 0;
  virtual Elem oplus(const Elem& x, const Elem& y) const = 0;
  virtual Elem neg(const Elem& x) const = 0;
  virtual bool is_finite() const { return false; }
  virtual bool equals(const Algebra& other) const {
    return kind() == other.kind() && name() == other.name();
  }

  /// Random element for infinite algebras (uniform over the carrier when finite).
  virtual Elem sample(std::mt19937_64& rng) const;
  /// A fixed list of distinguished elements, always starting with 0 and 1.
  virtual std::vector<Elem> seed_elements() const;

  Elem one() const { return neg(zero()); }
  Elem odot(const Elem& x, const Elem& y) const { return neg(oplus(neg(x), neg(y))); }
  Elem ominus(const Elem& x, const Elem& y) const { return odot(x, neg(y)); }
  Elem join(const Elem& x, const Elem& y) const { return oplus(neg(oplus(neg(x), y)), y); }
  Elem meet(const Elem& x, const Elem& y) const { return neg(join(neg(x), neg(y))); }
  bool leq(const Elem& x, const Elem& y) const { return meet(x, y) == x; }

  // Finite algebras only; these throw UnsupportedAlgebra otherwise.
  const std::vector<Elem>& carrier() const;
  std::size_t size() const { return carrier().size(); }
  /// Throws AlgebraMismatch when x is not in the carrier.
  std::size_t index_of(const Elem& x) const;
  const FiniteOps& tables() const;

protected:
  virtual std::vector<Elem> enumerate() const;

private:
  void build_finite() const;

  mutable std::once_flag built_;
  mutable std::vector<Elem> carrier_;
  mutable std::map<Elem, std::size_t> index_;
  mutable FiniteOps ops_;
};

using AlgebraHandle = std::shared_ptr<const Algebra>;

bool same_algebra(const Algebra& a, const Algebra& b);

class UnitIntervalAlgebra final : public Algebra {
public:
  AlgebraKind kind() const override { return AlgebraKind::UnitInterval; }
  std::string name() const override { return "unit"; }
  bool contains(const Elem& x) const override;
  Elem zero() const override { return Rat(0); }
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  Elem sample(std::mt19937_64& rng) const override;
  std::vector<Elem> seed_elements() const override;
};

/// The Lukasiewicz chain {0, 1/k, ..., 1}.
class ChainAlgebra final : public Algebra {
public:
  explicit ChainAlgebra(unsigned k);
  unsigned k() const { return k_; }
  AlgebraKind kind() const override { return AlgebraKind::Chain; }
  std::string name() const override { return "chain:" + std::to_string(k_); }
  bool contains(const Elem& x) const override;
  Elem zero() const override { return Rat(0); }
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  bool is_finite() const override { return true; }

protected:
  std::vector<Elem> enumerate() const override;

private:
  unsigned k_;
};

/// Direct power base^arity with componentwise operations.
class ProductAlgebra final : public Algebra {
public:
  ProductAlgebra(AlgebraHandle base, unsigned arity);
  const AlgebraHandle& base() const { return base_; }
  unsigned arity() const { return arity_; }
  AlgebraKind kind() const override { return AlgebraKind::Product; }
  std::string name() const override;
  bool contains(const Elem& x) const override;
  Elem zero() const override;
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  bool is_finite() const override { return base_->is_finite(); }
  bool equals(const Algebra& other) const override;
  Elem sample(std::mt19937_64& rng) const override;
  std::vector<Elem> seed_elements() const override;
  /// The tuple with 1 in coordinate i and 0 elsewhere.
  Elem unit_vector(unsigned i) const;

protected:
  std::vector<Elem> enumerate() const override;

private:
  AlgebraHandle base_;
  unsigned arity_;
};

/// Chang's algebra {0, e, 2e, ..., 1-2e, 1-e, 1} with e infinitesimal.
class ChangAlgebra final : public Algebra {
public:
  AlgebraKind kind() const override { return AlgebraKind::Chang; }
  std::string name() const override { return "chang"; }
  bool contains(const Elem& x) const override { return x.is<ChangElem>(); }
  Elem zero() const override { return ChangElem::fin(0); }
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  Elem sample(std::mt19937_64& rng) const override;
  std::vector<Elem> seed_elements() const override;
};

/// Finite-cofinite Boolean algebra of subsets of the naturals.
class FinCofAlgebra final : public Algebra {
public:
  AlgebraKind kind() const override { return AlgebraKind::FinCof; }
  std::string name() const override { return "fincof"; }
  bool contains(const Elem& x) const override;
  Elem zero() const override { return FinCofElem::finite({}); }
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  Elem sample(std::mt19937_64& rng) const override;
  std::vector<Elem> seed_elements() const override;
};

/// Rational piecewise-linear functions [0,1] -> [0,1] under pointwise
/// operations. With `mcnaughton_only` the carrier is restricted to McNaughton
/// functions, which is the free one-generated MV-algebra.
class PwlAlgebra final : public Algebra {
public:
  explicit PwlAlgebra(bool mcnaughton_only) : mcnaughton_only_(mcnaughton_only) {}
  bool mcnaughton_only() const { return mcnaughton_only_; }
  AlgebraKind kind() const override {
    return mcnaughton_only_ ? AlgebraKind::Free1 : AlgebraKind::Pwl;
  }
  std::string name() const override { return mcnaughton_only_ ? "free1" : "pwl"; }
  bool contains(const Elem& x) const override;
  Elem zero() const override { return PwlFn::constant(0); }
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  Elem sample(std::mt19937_64& rng) const override;
  std::vector<Elem> seed_elements() const override;

private:
  bool mcnaughton_only_;
};

/// Explicit finite algebra given by a labelled carrier and operation tables.
class TableAlgebra final : public Algebra {
public:
  /// Validates closure and the full MV axiom set; throws AxiomViolation.
  static std::shared_ptr<const TableAlgebra> create(std::vector<std::string> labels,
                                                    std::vector<std::vector<std::size_t>> oplus,
                                                    std::vector<std::size_t> neg);
  /// Checks shapes and closure only. Used to exercise the identity harness
  /// on deliberately broken tables.
  static std::shared_ptr<const TableAlgebra> create_unchecked(
      std::vector<std::string> labels, std::vector<std::vector<std::size_t>> oplus,
      std::vector<std::size_t> neg, std::size_t zero);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& oplus_table() const { return oplus_; }
  const std::vector<std::size_t>& neg_table() const { return neg_; }
  std::size_t label_index(const std::string& label) const;

  AlgebraKind kind() const override { return AlgebraKind::Table; }
  std::string name() const override;
  bool contains(const Elem& x) const override;
  Elem zero() const override { return TableIndex{zero_}; }
  Elem oplus(const Elem& x, const Elem& y) const override;
  Elem neg(const Elem& x) const override;
  bool is_finite() const override { return true; }
  bool equals(const Algebra& other) const override;

protected:
  std::vector<Elem> enumerate() const override;

private:
  TableAlgebra() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> oplus_;
  std::vector<std::size_t> neg_;
  std::size_t zero_ = 0;
};

AlgebraHandle unit_interval();
AlgebraHandle chain(unsigned k);
AlgebraHandle product(AlgebraHandle base, unsigned arity);
AlgebraHandle chang();
AlgebraHandle fincof();
AlgebraHandle free1();
AlgebraHandle pwl_algebra();

// Typed views; return nullptr when the algebra is of another kind.
const ChainAlgebra* as_chain(const Algebra& a);
const ProductAlgebra* as_product(const Algebra& a);
const TableAlgebra* as_table(const Algebra& a);

/// Algebras embedded in some [0,1]^Y with Y finite: the unit interval, chains,
/// and finite powers of those. Their elements have rational coordinates.
bool is_rational_product(const Algebra& a);
/// Number of coordinates of a rational-product algebra.
unsigned coordinate_count(const Algebra& a);
/// Coordinates of an element of a rational-product algebra.
RatVec coordinates(const Algebra& a, const Elem& x);
/// Inverse of coordinates(); throws AlgebraMismatch if the point is outside.
Elem from_coordinates(const Algebra& a, const RatVec& coords);

// Checked primitive and derived operations.
Elem oplus(const Algebra& a, const Elem& x, const Elem& y);
Elem neg(const Algebra& a, const Elem& x);

enum class DerivedOp { Odot, Ominus, Join, Meet, Leq };
std::variant<Elem, bool> derived(const Algebra& a, DerivedOp op, const Elem& x, const Elem& y);

/// First violated MV axiom on a finite algebra, described with its witness.
std::optional<std::string> mv_axiom_violation(const Algebra& a);

enum class MvIdentity { MV1, MV2, MV3 };
std::string to_string(MvIdentity id);

struct IdentityReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Elem, Elem>> witness;  // (a, b)
};

/// Exhaustive on finite algebras; otherwise distinguished elements followed
/// by seeded random pairs up to `sample_budget`.
IdentityReport identity_check(const Algebra& a, MvIdentity id, std::size_t sample_budget,
                              std::uint64_t seed = 1);

/// Bijection carrier(a) -> carrier(b) preserving oplus and neg, if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const Algebra& a, const Algebra& b);

}  // namespace mvprob
