#include "mvprob/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvprob/errors.hpp"
#include "mvprob/term.hpp"

namespace mvprob::io {

namespace {

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

unsigned parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("bad " + what + " '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

std::size_t index_from_json(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw Error("expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

}  // namespace

AlgebraHandle parse_algebra_spec(const std::string& spec) {
  if (spec.starts_with("@")) return algebra_from_json(read_file(spec.substr(1)));
  if (spec == "unit") return unit_interval();
  if (spec == "chang") return chang();
  if (spec == "fincof") return fincof();
  if (spec == "free1") return free1();
  if (spec == "pwl") return pwl_algebra();
  if (spec.starts_with("chain:")) return chain(parse_count(spec.substr(6), "chain order"));
  if (spec.starts_with("prod:")) {
    auto colon = spec.rfind(':');
    if (colon <= 4) throw Error("bad product spec '" + spec + "'");
    return product(parse_algebra_spec(spec.substr(5, colon - 5)),
                   parse_count(spec.substr(colon + 1), "product arity"));
  }
  throw Error("unknown algebra '" + spec + "'");
}

AlgebraHandle algebra_from_json(const json& j) {
  if (j.is_string()) return parse_algebra_spec(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw Error("algebra descriptor needs a kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "unit") return unit_interval();
  if (kind == "chang") return chang();
  if (kind == "fincof") return fincof();
  if (kind == "free1") return free1();
  if (kind == "pwl") return pwl_algebra();
  if (kind == "chain") return chain(j.at("k").get<unsigned>());
  if (kind == "product") return product(algebra_from_json(j.at("base")), j.at("arity").get<unsigned>());
  if (kind == "table") {
    std::vector<std::string> labels;
    for (const auto& l : j.at("carrier")) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    auto idx = [&](const json& v) -> std::size_t {
      if (v.is_string()) {
        auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
        if (it == labels.end()) throw Error("unknown label " + v.dump());
        return static_cast<std::size_t>(it - labels.begin());
      }
      return index_from_json(v);
    };
    std::vector<std::vector<std::size_t>> plus;
    for (const auto& row : j.at("oplus")) {
      plus.emplace_back();
      for (const auto& v : row) plus.back().push_back(idx(v));
    }
    std::vector<std::size_t> neg;
    for (const auto& v : j.at("neg")) neg.push_back(idx(v));
    return TableAlgebra::create(std::move(labels), std::move(plus), std::move(neg));
  }
  throw Error("unknown algebra kind '" + kind + "'");
}

json algebra_to_json(const Algebra& a) {
  switch (a.kind()) {
    case AlgebraKind::Chain: return {{"kind", "chain"}, {"k", as_chain(a)->k()}};
    case AlgebraKind::Product:
      return {{"kind", "product"},
              {"base", algebra_to_json(*as_product(a)->base())},
              {"arity", as_product(a)->arity()}};
    case AlgebraKind::Table: {
      auto* t = as_table(a);
      return {{"kind", "table"}, {"carrier", t->labels()}, {"oplus", t->oplus_table()}, {"neg", t->neg_table()}};
    }
    default: return {{"kind", a.name()}};
  }
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error("expected a rational, got " + j.dump());
}

json rat_to_json(const Rat& r) { return r.str(); }

Elem elem_from_json(const Algebra& a, const json& j) {
  Elem x;
  switch (a.kind()) {
    case AlgebraKind::UnitInterval:
    case AlgebraKind::Chain: x = rat_from_json(j); break;
    case AlgebraKind::Product: {
      auto* p = as_product(a);
      if (!j.is_array()) throw Error("expected an array for " + a.name());
      ElemTuple t;
      for (const auto& c : j) t.push_back(elem_from_json(*p->base(), c));
      x = t;
      break;
    }
    case AlgebraKind::Chang:
      if (j.contains("fin")) x = ChangElem::fin(j.at("fin").get<std::uint64_t>());
      else if (j.contains("coinf")) x = ChangElem::cofin(j.at("coinf").get<std::uint64_t>());
      else throw Error("expected {\"fin\": n} or {\"coinf\": n}");
      break;
    case AlgebraKind::FinCof:
      if (j.contains("finite")) x = FinCofElem::finite(j.at("finite").get<std::vector<std::uint64_t>>());
      else if (j.contains("cofinite"))
        x = FinCofElem::cofinite_of(j.at("cofinite").get<std::vector<std::uint64_t>>());
      else throw Error("expected {\"finite\": [...]} or {\"cofinite\": [...]}");
      break;
    case AlgebraKind::Free1:
    case AlgebraKind::Pwl: {
      std::vector<Rat> breaks;
      for (const auto& b : j.at("breakpoints")) breaks.push_back(rat_from_json(b));
      std::vector<Linear> pieces;
      for (const auto& p : j.at("pieces"))
        pieces.push_back({rat_from_json(p.at("slope")), rat_from_json(p.at("intercept"))});
      x = PwlFn::make(std::move(breaks), std::move(pieces));
      break;
    }
    case AlgebraKind::Table: {
      auto* t = as_table(a);
      x = TableIndex{j.is_string() ? t->label_index(j.get<std::string>()) : index_from_json(j)};
      break;
    }
  }
  if (!a.contains(x)) throw AlgebraMismatch(to_string(x) + " is not an element of " + a.name());
  return x;
}

json elem_to_json(const Algebra& a, const Elem& x) {
  switch (a.kind()) {
    case AlgebraKind::UnitInterval:
    case AlgebraKind::Chain: return rat_to_json(x.rat());
    case AlgebraKind::Product: {
      json arr = json::array();
      for (const auto& c : x.tuple()) arr.push_back(elem_to_json(*as_product(a)->base(), c));
      return arr;
    }
    case AlgebraKind::Chang: return {{x.chang().coinf ? "coinf" : "fin", x.chang().n}};
    case AlgebraKind::FinCof: return {{x.fincof().cofinite ? "cofinite" : "finite", x.fincof().set}};
    case AlgebraKind::Free1:
    case AlgebraKind::Pwl: {
      json br = json::array();
      for (const auto& b : x.pwl().breakpoints()) br.push_back(rat_to_json(b));
      json pieces = json::array();
      for (const auto& p : x.pwl().pieces())
        pieces.push_back({{"slope", rat_to_json(p.slope)}, {"intercept", rat_to_json(p.intercept)}});
      return {{"breakpoints", br}, {"pieces", pieces}};
    }
    case AlgebraKind::Table: return as_table(a)->labels().at(x.table_index());
  }
  return nullptr;
}

Elem elem_from_text(const Algebra& a, const std::string& text) {
  if (a.kind() == AlgebraKind::Free1 || a.kind() == AlgebraKind::Pwl) {
    if (!text.starts_with("{")) {
      Elem f = free_interpret(*parse(text));
      if (!a.contains(f)) throw AlgebraMismatch(to_string(f) + " is not an element of " + a.name());
      return f;
    }
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) j = text;
  return elem_from_json(a, j);
}

namespace {

AlgebraHandle algebra_field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("map needs \"") + key + "\"");
  return algebra_from_json(j.at(key));
}

}  // namespace

ProbMap probmap_from_json(const json& j) {
  if (!j.is_object()) throw Error("map descriptor must be an object");
  if (j.contains("rule")) {
    const json& r = j.at("rule");
    if (r.is_string()) {
      const auto name = r.get<std::string>();
      if (name == "example_pm") return example_pm_map();
      if (name == "reflect") return reflect_map();
      if (name == "uniform_fincof") return uniform_fincof();
      if (name == "identity") return identity_map(algebra_field(j, "from"));
      throw Error("unknown rule '" + name + "'");
    }
    if (r.contains("constant_hom"))
      return constant_hom(algebra_field(j, "from"), algebra_field(j, "to"),
                          index_from_json(r.at("constant_hom")));
    if (r.contains("stochastic")) return from_stochastic(stochmat_from_json(r.at("stochastic")));
    throw Error("unknown rule " + r.dump());
  }
  auto from = algebra_field(j, "from");
  auto to = algebra_field(j, "to");
  const json& t = j.at("table");
  if (!t.is_array()) throw Error("table must be an array");
  if (!t.empty() && t.front().is_object() && t.front().contains("arg")) {
    std::vector<std::optional<Elem>> vals(from->size());
    for (const auto& row : t) {
      auto i = from->index_of(elem_from_json(*from, row.at("arg")));
      vals[i] = elem_from_json(*to, row.at("value"));
    }
    std::vector<Elem> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!vals[i]) throw Error("table misses " + to_string(from->carrier()[i]));
      out.push_back(*vals[i]);
    }
    return ProbMap::from_table(from, to, std::move(out));
  }
  std::vector<Elem> out;
  for (const auto& v : t) out.push_back(elem_from_json(*to, v));
  return ProbMap::from_table(from, to, std::move(out));
}

json probmap_to_json(const ProbMap& p) {
  json j{{"from", p.domain()->name()}, {"to", p.codomain()->name()}};
  if (p.domain()->is_finite()) {
    json t = json::array();
    const auto vals = p.values();
    const auto& c = p.domain()->carrier();
    for (std::size_t i = 0; i < c.size(); ++i)
      t.push_back({{"arg", elem_to_json(*p.domain(), c[i])}, {"value", elem_to_json(*p.codomain(), vals[i])}});
    j["table"] = t;
  } else if (p.rule() == "stochastic") {
    j["rule"] = {{"stochastic", stochmat_to_json(to_stochastic(p))}};
  } else {
    j["rule"] = p.rule();
  }
  if (p.domain()->kind() == AlgebraKind::Table) j["from"] = algebra_to_json(*p.domain());
  if (p.codomain()->kind() == AlgebraKind::Table) j["to"] = algebra_to_json(*p.codomain());
  return j;
}

StochMat stochmat_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  if (!rows.is_array() || rows.empty()) throw Error("matrix needs a nonempty list of rows");
  const std::size_t n = rows.size();
  if (j.is_object() && j.contains("n") && j.at("n").get<std::size_t>() != n)
    throw DimensionError("n does not match the number of rows");
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw DimensionError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rat_from_json(rows[i][k]);
  }
  return StochMat::make(std::move(m));
}

json stochmat_to_json(const StochMat& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.n(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.n(); ++k) row.push_back(rat_to_json(s.entries()(i, k)));
    rows.push_back(row);
  }
  return {{"n", s.n()}, {"rows", rows}};
}

State state_from_json(const AlgebraHandle& a, const json& j) {
  if (j.is_object() && j.contains("weights")) {
    RatVec w;
    for (const auto& x : j.at("weights")) w.push_back(rat_from_json(x));
    return State::linear(a, std::move(w));
  }
  if (!j.is_array()) throw Error("state must be an array or {\"weights\": [...]}");
  if (!j.empty() && j.front().is_object()) {
    std::vector<std::optional<Rat>> vals(a->size());
    for (const auto& row : j) vals[a->index_of(elem_from_json(*a, row.at("arg")))] = rat_from_json(row.at("value"));
    RatVec out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!vals[i]) throw Error("state misses " + to_string(a->carrier()[i]));
      out.push_back(*vals[i]);
    }
    return State::from_table(a, std::move(out));
  }
  RatVec out;
  for (const auto& v : j) out.push_back(rat_from_json(v));
  return State::from_table(a, std::move(out));
}

json state_to_json(const State& s) {
  if (s.weights()) {
    json w = json::array();
    for (const auto& x : *s.weights()) w.push_back(rat_to_json(x));
    return {{"weights", w}};
  }
  const Algebra& a = *s.algebra();
  if (!a.is_finite()) return {{"kind", "function"}};
  json t = json::array();
  for (const auto& x : a.carrier()) t.push_back({{"arg", elem_to_json(a, x)}, {"value", rat_to_json(s(x))}});
  return t;
}

json ideal_to_json(const Ideal& i) {
  json j{{"ideal", i.describe()}};
  if (i.form == IdealForm::Members) {
    json m = json::array();
    for (auto k : i.members) m.push_back(elem_to_json(*i.algebra, i.algebra->carrier()[k]));
    j["members"] = m;
  }
  return j;
}

json maxspace_to_json(const MaxSpace& m) {
  json arr = json::array();
  for (const auto& e : m.entries) {
    json j = ideal_to_json(e.ideal);
    j["chain"] = e.k ? json(*e.k) : json(nullptr);
    arr.push_back(j);
  }
  return {{"algebra", m.algebra->name()}, {"count", m.size()}, {"maximal_ideals", arr}};
}

json dual_to_json(const DualMap& d) {
  json arr = json::array();
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    json j = ideal_to_json(d.max.entries[i].ideal);
    j["state"] = state_to_json(d.states[i]);
    arr.push_back(j);
  }
  return {{"from", d.domain->name()}, {"to", d.codomain->name()}, {"dual", arr}};
}

json witness_to_json(const Algebra& a, const std::vector<Elem>& w) {
  json arr = json::array();
  for (const auto& x : w) arr.push_back(elem_to_json(a, x));
  return arr;
}

json verdict_to_json(const Algebra& a, const Verdict& v) {
  json j{{"holds", v.holds}, {"checked", v.checked}};
  if (!v.holds) {
    j["failed"] = v.failed;
    j["witness"] = witness_to_json(a, v.witness);
  }
  return j;
}

json load_json_arg(const std::string& arg) {
  if (arg.starts_with("@")) return read_file(arg.substr(1));
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && std::string("{[\"").find(arg[first]) != std::string::npos) {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      throw Error(std::string("bad JSON: ") + e.what());
    }
  }
  if (std::filesystem::exists(arg)) return read_file(arg);
  throw Error("expected inline JSON or a file, got '" + arg + "'");
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << csv_cell(path) << ",\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << csv_cell(path.empty() ? "value" : path) << ","
        << csv_cell(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string to_csv(const json& j) {
  std::ostringstream out;
  out << "path,value\n";
  flatten(j, "", out);
  return out.str();
}

}  // namespace mvprob::io
