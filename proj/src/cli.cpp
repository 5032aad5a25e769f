#include "mvprob/cli.hpp"

#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "mvprob/errors.hpp"
#include "mvprob/gamma.hpp"
#include "mvprob/io.hpp"
#include "mvprob/term.hpp"

namespace mvprob {

namespace {

using io::json;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::size_t budget = 10'000'000;
};

class Runner {
public:
  Runner(std::ostream& out, const Globals& g) : out_(out), g_(g) {}

  int emit(const json& j, int code = 0) {
    if (g_.format == "csv") out_ << io::to_csv(j);
    else out_ << j.dump() << "\n";
    return code;
  }

  SampleOptions sampling() const {
    SampleOptions o;
    o.seed = g_.seed;
    o.count = g_.samples;
    return o;
  }

private:
  std::ostream& out_;
  const Globals& g_;
};

Ideal ideal_from_arg(const AlgebraHandle& a, const std::string& arg) {
  if (arg == "rad") return radical(a);
  if (arg == "zero") return ideal_closure(a, {});
  if (arg == "all") return ideal_closure(a, {a->one()});
  json j = io::load_json_arg(arg);
  if (!j.is_array()) throw Error("ideal must be rad, zero, all, or a list of elements");
  std::vector<Elem> members;
  for (const auto& x : j) members.push_back(io::elem_from_json(*a, x));
  return make_ideal(a, std::move(members));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Probability maps between MV-algebras", "mvprob"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--samples", g.samples, "sample budget for infinite algebras");
  app.add_option("--budget", g.budget, "search-node budget for enumeration");

  Runner run(out, g);
  std::function<int()> action;

  // eval
  std::string algebra, term;
  std::vector<std::string> env;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term in an algebra");
  eval_cmd->add_option("--algebra", algebra)->required();
  eval_cmd->add_option("--term", term)->required();
  eval_cmd->add_option("--env", env, "name=value bindings");
  eval_cmd->callback([&] {
    action = [&] {
      auto a = io::parse_algebra_spec(algebra);
      Env e;
      for (const auto& b : env) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw Error("binding '" + b + "' needs name=value");
        e[b.substr(0, eq)] = io::elem_from_text(*a, b.substr(eq + 1));
      }
      return run.emit(io::elem_to_json(*a, mvprob::eval(*parse(term), *a, e)));
    };
  });

  // check-map
  std::string map_arg;
  auto* check_cmd = app.add_subcommand("check-map", "check the probability-map axioms");
  check_cmd->add_option("--map", map_arg, "map JSON, inline or file")->required();
  check_cmd->callback([&] {
    action = [&] {
      ProbMap p = io::probmap_from_json(io::load_json_arg(map_arg));
      const Algebra& dom = *p.domain();
      auto opts = run.sampling();
      json axioms;
      bool ok = true;
      for (auto ax : {Axiom::P1, Axiom::P2, Axiom::P3, Axiom::P1prime}) {
        Verdict v = check_axiom(p, ax, opts);
        if (ax != Axiom::P1prime) ok = ok && v.holds;
        axioms[to_string(ax)] = io::verdict_to_json(dom, v);
      }
      json j{{"probability_map", ok}, {"axioms", axioms}};
      j["hom"] = io::verdict_to_json(dom, check_mv_hom(p, opts));
      if (ok) j["order_bounds"] = io::verdict_to_json(dom, check_order_bounds(p, opts));
      if (same_algebra(dom, *p.codomain()))
        j["internal_state"] = io::verdict_to_json(dom, check_internal_state(p, opts));
      if (p(dom.zero()) == p.codomain()->zero() && p(dom.one()) == p.codomain()->one()) {
        auto c = check_characterizations(p, CharRoute::Auto, opts);
        j["characterizations"] = {{"axioms", c.axioms},
                                  {"group_identity", c.group_identity},
                                  {"split_char", c.split_char},
                                  {"disjoint_additive", c.disjoint_additive}};
      }
      return run.emit(j, ok ? 0 : 1);
    };
  });

  // enumerate-maps
  std::string from, to;
  auto* enum_cmd = app.add_subcommand("enumerate-maps", "list all probability maps between finite algebras");
  enum_cmd->add_option("--from", from)->required();
  enum_cmd->add_option("--to", to)->required();
  enum_cmd->callback([&] {
    action = [&] {
      auto maps = enumerate_prob_maps(io::parse_algebra_spec(from), io::parse_algebra_spec(to), g.budget);
      json arr = json::array();
      for (const auto& p : maps) arr.push_back(io::probmap_to_json(p).at("table"));
      return run.emit({{"count", maps.size()}, {"maps", arr}});
    };
  });

  // maxspec, radical
  auto* max_cmd = app.add_subcommand("maxspec", "maximal ideals and their simple quotients");
  max_cmd->add_option("--algebra", algebra)->required();
  max_cmd->callback([&] {
    action = [&] { return run.emit(io::maxspace_to_json(all_maximal_ideals(io::parse_algebra_spec(algebra)))); };
  });

  auto* rad_cmd = app.add_subcommand("radical", "intersection of the maximal ideals");
  rad_cmd->add_option("--algebra", algebra)->required();
  rad_cmd->callback([&] {
    action = [&] {
      auto a = io::parse_algebra_spec(algebra);
      return run.emit({{"radical", io::ideal_to_json(radical(a))}, {"semisimple", is_semisimple(a)}});
    };
  });

  // quotient
  std::string ideal_arg;
  auto* quot_cmd = app.add_subcommand("quotient", "quotient by an ideal");
  quot_cmd->add_option("--algebra", algebra)->required();
  quot_cmd->add_option("--ideal", ideal_arg, "rad, zero, all, or a JSON list of members")->required();
  quot_cmd->callback([&] {
    action = [&] {
      auto a = io::parse_algebra_spec(algebra);
      Quotient q = quotient(a, ideal_from_arg(a, ideal_arg));
      json j{{"algebra", io::algebra_to_json(*q.algebra)}};
      if (q.algebra->is_finite()) {
        j["size"] = q.algebra->size();
        auto c = chain(static_cast<unsigned>(std::max<std::size_t>(q.algebra->size(), 2) - 1));
        j["chain"] = q.algebra->size() >= 2 && find_isomorphism(*q.algebra, *c).has_value();
      }
      if (a->is_finite()) {
        json proj = json::array();
        for (const auto& x : a->carrier())
          proj.push_back({{"arg", io::elem_to_json(*a, x)}, {"value", io::elem_to_json(*q.algebra, q.project(x))}});
        j["projection"] = proj;
      }
      return run.emit(j);
    };
  });

  // to-matrix, from-matrix
  auto* tom_cmd = app.add_subcommand("to-matrix", "stochastic matrix of a map between interval powers");
  tom_cmd->add_option("--map", map_arg)->required();
  tom_cmd->callback([&] {
    action = [&] {
      ProbMap p = io::probmap_from_json(io::load_json_arg(map_arg));
      try {
        return run.emit(io::stochmat_to_json(to_stochastic(p, g.samples, g.seed)));
      } catch (const NotRepresentable& e) {
        return run.emit({{"representable", false}, {"reason", e.what()}}, 1);
      } catch (const NotStochastic& e) {
        return run.emit({{"representable", false}, {"reason", e.what()}}, 1);
      }
    };
  });

  std::string matrix_arg, apply_arg;
  auto* fromm_cmd = app.add_subcommand("from-matrix", "map of a stochastic matrix");
  fromm_cmd->add_option("--matrix", matrix_arg)->required();
  fromm_cmd->add_option("--apply", apply_arg, "JSON vector in [0,1]^n");
  fromm_cmd->callback([&] {
    action = [&] {
      StochMat s = io::stochmat_from_json(io::load_json_arg(matrix_arg));
      ProbMap p = from_stochastic(s);
      json j = io::probmap_to_json(p);
      if (!apply_arg.empty()) {
        RatVec a;
        for (const auto& x : io::load_json_arg(apply_arg)) a.push_back(io::rat_from_json(x));
        json r = json::array();
        for (const auto& x : apply_stochastic(s, a)) r.push_back(io::rat_to_json(x));
        j["result"] = r;
      }
      return run.emit(j);
    };
  });

  // extreme
  auto* ext_cmd = app.add_subcommand("extreme", "decide extremality of a map");
  auto* ext_matrix = ext_cmd->add_option("--matrix", matrix_arg);
  auto* ext_map = ext_cmd->add_option("--map", map_arg);
  ext_matrix->excludes(ext_map);
  ext_cmd->callback([&] {
    action = [&] {
      if (matrix_arg.empty() && map_arg.empty()) throw Error("extreme needs --matrix or --map");
      ProbMap p = matrix_arg.empty() ? io::probmap_from_json(io::load_json_arg(map_arg))
                                     : from_stochastic(io::stochmat_from_json(io::load_json_arg(matrix_arg)));
      ExtremeReport r = is_extreme(p);
      json j{{"extreme", r.extreme}, {"hom", r.hom}};
      if (r.vertex) j["vertex"] = *r.vertex;
      if (!r.hom) j["witness"] = io::verdict_to_json(*p.domain(), check_mv_hom(p, run.sampling()));
      return run.emit(j);
    };
  });

  // dual
  bool allow_non_semisimple = false;
  auto* dual_cmd = app.add_subcommand("dual", "dual map over the maximal ideals of the codomain");
  dual_cmd->add_option("--map", map_arg)->required();
  dual_cmd->add_flag("--allow-non-semisimple", allow_non_semisimple);
  dual_cmd->callback([&] {
    action = [&] {
      ProbMap p = io::probmap_from_json(io::load_json_arg(map_arg));
      DualMap d = dual(p, !allow_non_semisimple);
      json j = io::dual_to_json(d);
      if (is_semisimple(p.codomain())) j["roundtrip"] = dual_roundtrip(p);
      return run.emit(j);
    };
  });

  // decompose-state
  std::string state_arg;
  auto* dec_cmd = app.add_subcommand("decompose-state", "barycentric weights of a state over Max");
  dec_cmd->add_option("--algebra", algebra)->required();
  dec_cmd->add_option("--state", state_arg, "values in carrier order, inline or file")->required();
  dec_cmd->callback([&] {
    action = [&] {
      auto a = io::parse_algebra_spec(algebra);
      State s = io::state_from_json(a, io::load_json_arg(state_arg));
      if (auto bad = state_violation(s, g.samples, g.seed))
        return run.emit({{"is_state", false}, {"reason", *bad}}, 1);
      MaxSpace ms = all_maximal_ideals(a);
      RatVec w;
      try {
        w = state_decompose(ms, s);
      } catch (const InfeasibleDecomposition& e) {
        return run.emit({{"is_state", true}, {"decomposable", false}, {"reason", e.what()}}, 1);
      }
      json arr = json::array();
      for (std::size_t i = 0; i < w.size(); ++i) {
        json e = io::ideal_to_json(ms.entries[i].ideal);
        e["weight"] = io::rat_to_json(w[i]);
        arr.push_back(e);
      }
      return run.emit({{"is_state", true}, {"decomposable", true}, {"weights", arr}});
    };
  });

  // gamma-roundtrip
  auto* gam_cmd = app.add_subcommand("gamma-roundtrip", "rebuild a finite algebra from its enveloping group");
  gam_cmd->add_option("--algebra", algebra)->required();
  gam_cmd->callback([&] {
    action = [&] {
      auto a = io::parse_algebra_spec(algebra);
      GammaRoundTrip r = gamma_roundtrip(a);
      json j{{"classes", r.classes}, {"isomorphic", r.iso.has_value()}};
      if (r.iso) {
        json m = json::array();
        for (std::size_t i = 0; i < r.iso->size(); ++i)
          m.push_back({{"class", r.rebuilt->labels()[i]}, {"element", io::elem_to_json(*a, a->carrier()[(*r.iso)[i]])}});
        j["isomorphism"] = m;
      }
      return run.emit(j, r.iso ? 0 : 1);
    };
  });

  // identities
  auto* id_cmd = app.add_subcommand("identities", "check MV1-MV3");
  id_cmd->add_option("--algebra", algebra)->required();
  id_cmd->callback([&] {
    action = [&] {
      auto a = io::parse_algebra_spec(algebra);
      json j;
      bool ok = true;
      for (auto id : {MvIdentity::MV1, MvIdentity::MV2, MvIdentity::MV3}) {
        IdentityReport r = identity_check(*a, id, g.samples, g.seed);
        json e{{"holds", r.holds}, {"pairs_checked", r.pairs_checked}};
        if (r.witness) e["witness"] = io::witness_to_json(*a, {r.witness->first, r.witness->second});
        ok = ok && r.holds;
        j[to_string(id)] = e;
      }
      return run.emit(j, ok ? 0 : 1);
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const BudgetExceeded& e) {
    return run.emit({{"error", "budget exceeded"}, {"message", e.what()}}, 3);
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.message() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mvprob
