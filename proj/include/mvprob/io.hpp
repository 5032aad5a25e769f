#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mvprob/algebra.hpp"
#include "mvprob/dual.hpp"
#include "mvprob/probmap.hpp"
#include "mvprob/spectra.hpp"
#include "mvprob/stochastic.hpp"

namespace mvprob::io {

using json = nlohmann::json;

/// chain:k, prod:<base>:n, chang, fincof, free1, unit, pwl, or @file.json.
AlgebraHandle parse_algebra_spec(const std::string& spec);
/// {"kind": "chain", "k": 4}, {"kind": "product", "base": ..., "arity": 2},
/// {"kind": "table", "carrier": [...], "oplus": [[...]], "neg": [...]}, or a
/// mini-syntax string.
AlgebraHandle algebra_from_json(const json& j);
json algebra_to_json(const Algebra& a);

/// Rationals are "p/q" strings; tuples are arrays; Chang elements are
/// {"fin": n} / {"coinf": n}; FinCof elements {"finite": [...]} /
/// {"cofinite": [...]}; functions {"breakpoints": [...], "pieces": [...]};
/// table elements are labels.
Elem elem_from_json(const Algebra& a, const json& j);
json elem_to_json(const Algebra& a, const Elem& x);
/// Command-line literal: JSON, a bare rational or label, or for function
/// algebras a one-variable term.
Elem elem_from_text(const Algebra& a, const std::string& text);

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

ProbMap probmap_from_json(const json& j);
json probmap_to_json(const ProbMap& p);

StochMat stochmat_from_json(const json& j);
json stochmat_to_json(const StochMat& s);

/// Values in carrier order, [{"arg", "value"}] pairs, or {"weights": [...]}.
State state_from_json(const AlgebraHandle& a, const json& j);
json state_to_json(const State& s);

json ideal_to_json(const Ideal& i);
json maxspace_to_json(const MaxSpace& m);
json dual_to_json(const DualMap& d);
json witness_to_json(const Algebra& a, const std::vector<Elem>& w);
json verdict_to_json(const Algebra& a, const Verdict& v);

/// Inline JSON, @path, or a path to an existing file.
json load_json_arg(const std::string& arg);

/// Flattens to "path,value" lines with a header row.
std::string to_csv(const json& j);

}  // namespace mvprob::io
