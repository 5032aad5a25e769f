#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mvprob/algebra.hpp"
#include "mvprob/polytope.hpp"

namespace mvprob {

enum class IdealForm {
  Members,      // explicit subset of a finite carrier
  ChangZero,    // {0}
  ChangRad,     // all fin(n)
  ChangAll,     // everything
  Zero,         // {0} in the unit interval
  CoordKernel,  // {x : x_coord = 0} in a power of the unit interval
};

/// An ideal of a finite algebra (explicit member set) or one of the few
/// ideals handled symbolically for Chang's algebra and unit-interval powers.
struct Ideal {
  AlgebraHandle algebra;
  IdealForm form = IdealForm::Members;
  std::vector<std::size_t> members;  // sorted carrier indices, Members only
  unsigned coord = 0;                // CoordKernel only

  bool contains(const Elem& x) const;
  std::string describe() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.form == b.form && a.members == b.members && a.coord == b.coord;
  }
};

/// Validates downward closure and closure under oplus; throws NotAnIdeal.
Ideal make_ideal(const AlgebraHandle& a, std::vector<Elem> members);
/// Smallest ideal containing gens.
Ideal ideal_closure(const AlgebraHandle& a, const std::vector<Elem>& gens);
/// Every ideal, including {0} and the whole algebra.
std::vector<Ideal> all_ideals(const AlgebraHandle& a);

struct MaxEntry {
  Ideal ideal;
  /// The quotient is the chain with k+1 elements; empty when it is all of [0,1].
  std::optional<unsigned> k;
  /// a |-> h(a/m), the unique embedding of the simple quotient into [0,1].
  std::function<Rat(const Elem&)> embed;
};

struct MaxSpace {
  AlgebraHandle algebra;
  std::vector<MaxEntry> entries;
  std::size_t size() const { return entries.size(); }
};

/// Finite algebras, Chang's algebra, and powers of the unit interval.
MaxSpace all_maximal_ideals(const AlgebraHandle& a);
Ideal radical(const AlgebraHandle& a);
bool is_semisimple(const AlgebraHandle& a);

/// a |-> (a*(m))_m over the maximal ideals in MaxSpace order.
RatVec star(const MaxSpace& max, const Elem& a);
RatVec star(const AlgebraHandle& a, const Elem& x);

struct Quotient {
  AlgebraHandle algebra;
  std::function<Elem(const Elem&)> project;
};
/// A/I via a ~ b iff (a-b)+(b-a) in I. Throws NotAnIdeal or
/// InternalInconsistency if the induced operations are not well defined.
Quotient quotient(const AlgebraHandle& a, const Ideal& i);

/// A [0,1]-valued function on an algebra. Finite algebras use a table in
/// carrier order; linear states on unit-interval powers keep their weights.
class State {
public:
  static State from_table(AlgebraHandle a, RatVec values);
  /// s(x) = sum_i w_i x_i on a rational-product algebra.
  static State linear(AlgebraHandle a, RatVec weights);
  static State from_function(AlgebraHandle a, std::function<Rat(const Elem&)> f);

  Rat operator()(const Elem& x) const;
  const AlgebraHandle& algebra() const { return alg_; }
  const std::optional<RatVec>& weights() const { return weights_; }
  /// Values over the carrier of a finite algebra.
  RatVec values() const;

private:
  State(AlgebraHandle a, std::function<Rat(const Elem&)> f, std::optional<RatVec> w)
      : alg_(std::move(a)), fn_(std::move(f)), weights_(std::move(w)) {}
  AlgebraHandle alg_;
  std::function<Rat(const Elem&)> fn_;
  std::optional<RatVec> weights_;
};

/// Equal values on the whole carrier (finite), equal weights (linear), or
/// equal values on sampled elements otherwise.
bool same_state(const State& s, const State& t);

/// First failure of s(1)=1, range [0,1], or additivity on disjoint pairs.
/// Exhaustive on finite algebras, sampled otherwise.
std::optional<std::string> state_violation(const State& s, std::size_t samples = 200,
                                           std::uint64_t seed = 1);
bool is_state(const State& s);

/// s_m(a) = a*(m), one per maximal ideal.
std::vector<State> ext_states(const MaxSpace& max);
std::vector<State> ext_states(const AlgebraHandle& a);

/// The unique weights (over MaxSpace order) with s = sum lambda_m s_m.
/// Throws InfeasibleDecomposition when none exist.
RatVec state_decompose(const MaxSpace& max, const State& s);
State state_from_measure(const MaxSpace& max, const RatVec& weights);

/// a^(s) = s(a)
Rat affine_rep(const Elem& a, const State& s);

/// Polytope of all states of a finite algebra, in carrier coordinates.
Polytope state_polytope(const AlgebraHandle& a);

/// s(fin(n)) = 0, s(coinf(n)) = 1.
State chang_state();

}  // namespace mvprob
