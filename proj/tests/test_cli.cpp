#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mvprob/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = mvprob::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--algebra", "chain:4", "--term", "x \\/ ~x", "--env", "x=1/4"});
  CHECK(r.code == 0);
  CHECK(r.j() == json("3/4"));
  CHECK(run({"eval", "--algebra", "unit", "--term", "1 - x", "--env", "x=1/4"}).j() == json("3/4"));
  CHECK(run({"eval", "--algebra", "chain:4", "--term", "x + y", "--env", "x=1/2", "--env", "y=1/4"}).j() ==
        json("3/4"));
  CHECK(run({"eval", "--algebra", "chain:4", "--term", "x +", "--env", "x=1/4"}).code == 2);
  CHECK(run({"eval", "--algebra", "chain:4", "--term", "x + y", "--env", "x=1/4"}).code == 2);
  CHECK(run({"eval", "--algebra", "chain:4", "--term", "x", "--env", "x=1/3"}).code == 2);
  CHECK(run({"eval", "--algebra", "nope", "--term", "x", "--env", "x=0"}).code == 2);
}

TEST_CASE("enumerate-maps") {
  auto r = run({"enumerate-maps", "--from", "chain:2", "--to", "chain:1"});
  CHECK(r.code == 0);
  CHECK(r.j() == json::parse(R"({"count":0,"maps":[]})"));
  auto one = run({"enumerate-maps", "--from", "chain:2", "--to", "chain:4"}).j();
  CHECK(one["count"] == 1);
  auto over = run({"--budget", "5", "enumerate-maps", "--from", "prod:chain:2:2", "--to", "prod:chain:2:2"});
  CHECK(over.code == 3);
  CHECK(over.j().contains("error"));
}

TEST_CASE("extreme") {
  auto r = run({"extreme", "--matrix", R"([["1","0"],["0","1"]])"});
  CHECK(r.code == 0);
  CHECK(r.j() == json::parse(R"({"extreme":true,"hom":true,"vertex":true})"));
  auto n = run({"extreme", "--matrix", R"([["1/2","1/2"],["0","1"]])"}).j();
  CHECK(n["extreme"] == false);
  CHECK(n.contains("witness"));
  CHECK(run({"extreme", "--matrix", R"([["1/2","1/3"],["0","1"]])"}).code == 2);
}

TEST_CASE("check-map") {
  auto ok = run({"check-map", "--map", R"({"from":"chain:2","to":"chain:4","table":["0","1/2","1"]})"});
  CHECK(ok.code == 0);
  CHECK(ok.j()["probability_map"] == true);
  CHECK(ok.j()["characterizations"]["group_identity"] == true);
  auto bad = run({"check-map", "--map", R"({"from":"chain:2","to":"chain:2","table":["0","0","1"]})"});
  CHECK(bad.code == 1);
  auto j = bad.j();
  CHECK(j["probability_map"] == false);
  CHECK(j["axioms"]["P2"]["holds"] == false);
  CHECK(j["axioms"]["P2"].contains("witness"));
  auto uf = run({"--samples", "200", "check-map", "--map", R"({"rule":"uniform_fincof"})"});
  CHECK(uf.code == 0);
  CHECK(uf.j()["hom"]["holds"] == false);
  auto ep = run({"check-map", "--map", R"({"rule":"example_pm"})"}).j();
  CHECK(ep["probability_map"] == true);
  CHECK(ep["hom"]["holds"] == false);
  CHECK(run({"check-map", "--map", "{not json"}).code == 2);
}

TEST_CASE("spectra commands") {
  auto m = run({"maxspec", "--algebra", "prod:chain:1:2"});
  CHECK(m.code == 0);
  CHECK(m.j().dump().find("ideal") != std::string::npos);
  auto rad = run({"radical", "--algebra", "chang"}).j();
  CHECK(rad["semisimple"] == false);
  CHECK(run({"radical", "--algebra", "chain:4"}).j()["semisimple"] == true);
  auto q = run({"quotient", "--algebra", "chang", "--ideal", "rad"});
  CHECK(q.code == 0);
  auto d = run({"decompose-state", "--algebra", "prod:chain:1:2", "--state", R"(["0","1/3","2/3","1"])"});
  CHECK(d.code == 0);
  CHECK(d.out.find("2/3") != std::string::npos);
  auto bad = run({"decompose-state", "--algebra", "prod:chain:1:2", "--state", R"(["0","1/2","1/2","1/2"])"});
  CHECK(bad.code != 0);
  CHECK(run({"gamma-roundtrip", "--algebra", "chain:2"}).j()["classes"] == 3);
  CHECK(run({"identities", "--algebra", "free1"}).code == 0);
}

TEST_CASE("matrices and duals") {
  auto a = run({"from-matrix", "--matrix", R"([["1/2","1/2"],["0","1"]])", "--apply", R"(["1","0"])"});
  CHECK(a.code == 0);
  CHECK(a.out.find("1/2") != std::string::npos);
  auto t = run({"to-matrix", "--map", R"({"rule":{"stochastic":[["0","1"],["1","0"]]}})"});
  CHECK(t.code == 0);
  auto d = run({"dual", "--map", R"({"rule":{"stochastic":[["1/2","1/2"],["0","1"]]}})"});
  CHECK(d.code == 0);
  CHECK(d.j()["roundtrip"] == true);
  auto nc = R"({"from":"prod:chain:1:2","to":"chang","table":[{"arg":["0","0"],"value":{"fin":0}},{"arg":["0","1"],"value":{"coinf":0}},{"arg":["1","0"],"value":{"fin":0}},{"arg":["1","1"],"value":{"coinf":0}}]})";
  auto rejected = run({"dual", "--map", nc});
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("semisimple") != std::string::npos);
  CHECK(run({"dual", "--allow-non-semisimple", "--map", nc}).code == 0);
}

TEST_CASE("csv output, errors and determinism") {
  auto c = run({"--format", "csv", "extreme", "--matrix", R"([["1","0"],["0","1"]])"});
  CHECK(c.code == 0);
  CHECK(c.out.find("extreme,true") != std::string::npos);
  auto c2 = run({"--format=csv", "enumerate-maps", "--from", "chain:2", "--to", "chain:4"});
  CHECK(c2.code == 0);
  CHECK(c2.out.find("count,1") != std::string::npos);
  CHECK(run({"--format", "xml", "radical", "--algebra", "chain:2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  std::vector<std::string> args{"--seed", "7", "--samples", "150", "check-map", "--map", R"({"rule":"uniform_fincof"})"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> ids{"--seed", "3", "identities", "--algebra", "chang"};
  CHECK(run(ids).out == run(ids).out);
}
