#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mvprob/algebra.hpp"

namespace mvprob {

class ProbMap;

/// Finite sequence (a_1, ..., a_n) with a_i + a_{i+1} = a_i, trailing zeros
/// dropped. These form the positive cone of the enveloping group.
class GoodSeq {
public:
  /// Throws AxiomViolation if the entries are not good.
  static GoodSeq make(AlgebraHandle a, std::vector<Elem> entries);
  static GoodSeq zero(AlgebraHandle a);
  /// (x, 0, 0, ...)
  static GoodSeq singleton(AlgebraHandle a, const Elem& x);
  /// The strong unit (1).
  static GoodSeq unit(AlgebraHandle a);

  const AlgebraHandle& algebra() const { return alg_; }
  const std::vector<Elem>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// i-th entry, zero past the end.
  Elem entry(std::size_t i) const;

  friend bool operator==(const GoodSeq& a, const GoodSeq& b) { return a.entries_ == b.entries_; }

private:
  GoodSeq(AlgebraHandle a, std::vector<Elem> e) : alg_(std::move(a)), entries_(std::move(e)) {}
  AlgebraHandle alg_;
  std::vector<Elem> entries_;
};

GoodSeq gs_add_single(const GoodSeq& a, const Elem& b);
GoodSeq gs_add(const GoodSeq& a, const GoodSeq& b);
/// Componentwise lattice operations and order.
GoodSeq gs_meet(const GoodSeq& a, const GoodSeq& b);
GoodSeq gs_join(const GoodSeq& a, const GoodSeq& b);
bool gs_leq(const GoodSeq& a, const GoodSeq& b);

/// All good sequences of length at most max_len over a finite algebra.
std::vector<GoodSeq> good_sequences(const AlgebraHandle& a, std::size_t max_len);

/// Formal difference pos - neg of good sequences.
class GroupElem {
public:
  GroupElem(GoodSeq pos, GoodSeq neg);
  static GroupElem zero(AlgebraHandle a);
  static GroupElem unit(AlgebraHandle a);
  /// The class of (x) - 0.
  static GroupElem of(AlgebraHandle a, const Elem& x);

  const GoodSeq& pos() const { return pos_; }
  const GoodSeq& neg() const { return neg_; }
  const AlgebraHandle& algebra() const { return pos_.algebra(); }

private:
  GoodSeq pos_;
  GoodSeq neg_;
};

GroupElem group_add(const GroupElem& x, const GroupElem& y);
GroupElem group_sub(const GroupElem& x, const GroupElem& y);
GroupElem group_negate(const GroupElem& x);
bool group_eq(const GroupElem& x, const GroupElem& y);
GroupElem group_meet(const GroupElem& x, const GroupElem& y);
GroupElem group_join(const GroupElem& x, const GroupElem& y);
/// x <= y iff x /\ y equals x.
bool group_leq(const GroupElem& x, const GroupElem& y);

enum class GroupOp { Add, Sub, Leq, Eq };
std::variant<GroupElem, bool> group_ops(const GroupElem& x, const GroupElem& y, GroupOp op);

/// Elements g of the enveloping group with 0 <= g <= u, one per class. Found
/// among differences of good sequences of length at most 2.
std::vector<GroupElem> gamma_interval(const AlgebraHandle& a);

struct GammaRoundTrip {
  std::size_t classes = 0;
  /// gamma_interval with (x+y)/\u and u-x rebuilt as a table algebra.
  std::shared_ptr<const TableAlgebra> rebuilt;
  /// Isomorphism rebuilt -> a, when one exists.
  std::optional<std::vector<std::size_t>> iso;
};
GammaRoundTrip gamma_roundtrip(const AlgebraHandle& a);

/// Extension of a map on elements to the enveloping groups:
/// f(pos - neg) = sum p(pos_i) - sum p(neg_i).
class GroupHom {
public:
  GroupHom(AlgebraHandle from, AlgebraHandle to, std::function<Elem(const Elem&)> p);
  GroupElem operator()(const GroupElem& x) const;
  const AlgebraHandle& domain() const { return from_; }
  const AlgebraHandle& codomain() const { return to_; }

private:
  GoodSeq lift(const GoodSeq& s) const;
  AlgebraHandle from_;
  AlgebraHandle to_;
  std::function<Elem(const Elem&)> p_;
};

/// Group homomorphism induced by a probability map with finite domain.
/// Throws NotAProbabilityMap when p fails the axioms.
GroupHom lift_prob_map(const ProbMap& p);

}  // namespace mvprob
