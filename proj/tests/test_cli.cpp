#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "pcval/cli.hpp"
#include "pcval/rational_function.hpp"

using namespace pcval;
using pcval::cli::RunResult;

namespace {
RunResult run(const std::string& cmd, const std::vector<std::string>& args) {
  return pcval::cli::run(cmd, args);
}
std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }
}  // namespace

TEST_CASE("pinned command transcripts") {
  RunResult ve = run("ve", {"--seq", "E1", "--fn", "(X)/(t)"});
  CHECK(ve.status == 0);
  CHECK(ve.out == "(0, -1) => NOT in V_E\n");

  RunResult rank = run("rank", {"--seq", "E2"});
  CHECK(rank.status == 0);
  CHECK(first_line(rank.out) == "rank 1 (non-torsion: delta = sqrt(2))");

  std::string path = "cli_squared.json";
  {
    std::ofstream out(path);
    out << "{\"kind\": \"single_term\", \"beta\": \"0\","
           " \"gauge\": {\"kind\": \"dyadic\", \"params\": {\"limit\": \"2\", \"scale\": \"2\"}}}";
  }
  RunResult eq = run("equiv", {"--seq", "E1", "--seq2", "@" + path});
  std::remove(path.c_str());
  CHECK(eq.status == 0);
  CHECK(first_line(eq.out) == "not equivalent (breadths 1 vs 2)");
}

TEST_CASE("structured output carries the same verdict as text") {
  struct Case {
    std::string cmd;
    std::vector<std::string> args;
  };
  std::vector<Case> cases = {
      {"val", {"--fn", "t^(3/4) + 2*t"}},
      {"ve", {"--seq", "E1", "--fn", "(X)/(t)"}},
      {"we", {"--seq", "E2", "--fn", "X"}},
      {"member", {"--seq", "E1", "--fn", "(t)/(X)"}},
      {"rank", {"--seq", "E3"}},
      {"profile", {"--seq", "E2", "--fn", "X^2 - t^2"}},
      {"monomial", {"--fn", "X", "--delta", "sqrt(2)"}},
      {"omega", {"--seq", "E2", "--center", "t", "--gamma", "1"}},
      {"enumerate", {"--fn", "X^2/t^3", "--target", "0"}},
      {"fixtures", {}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.cmd);
    RunResult text = run(c.cmd, c.args);
    std::vector<std::string> jargs = c.args;
    jargs.push_back("--format");
    jargs.push_back("json");
    RunResult js = run(c.cmd, jargs);
    REQUIRE(text.status == 0);
    REQUIRE(js.status == 0);
    nlohmann::json doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("verdict").get<std::string>() == first_line(text.out));
    CHECK(doc.at("command").get<std::string>() == c.cmd);
  }
}

TEST_CASE("structured values keep the group-value shape") {
  RunResult js = run("we", {"--seq", "E2", "--fn", "X", "--format", "json"});
  nlohmann::json doc = nlohmann::json::parse(js.out);
  CHECK(doc.at("value").at("q").get<std::string>() == "0");
  CHECK(doc.at("value").at("m").get<long>() == 1);
  CHECK(doc.at("value").at("delta").get<std::string>() == "sqrt(2)");

  RunResult ve = run("ve", {"--seq", "E1", "--fn", "(X)/(t)", "--format", "json"});
  nlohmann::json vd = nlohmann::json::parse(ve.out);
  REQUIRE(vd.at("value").is_array());
  CHECK(vd.at("value")[0].at("q").get<std::string>() == "0");
  CHECK(vd.at("value")[1].get<long>() == -1);
}

TEST_CASE("exit statuses distinguish failure classes") {
  CHECK(run("val", {"--fn", "t^^2"}).status == 3);
  CHECK(run("we", {"--seq", "E9", "--fn", "X"}).status == 3);
  CHECK(run("nope", {}).status == 3);
  CHECK(run("member", {"--seq", "E3", "--fn", "X", "--ring", "w"}).status == 2);
  CHECK(run("residue-sep", {"--center", "0", "--delta", "1"}).status == 2);
  CHECK(run("val", {"--fn", "t", "--backend", "fp:4"}).status == 2);
  CHECK(run("val", {"--fn", "t", "--max-index", "4"}).status == 2);
  CHECK(run("val", {"--fn", "t", "--backend", "fp:abc"}).status == 3);

  // No certificate at depth: two generators without pseudo-limit data.
  std::string path = "cli_e5_copy.json";
  {
    std::ofstream out(path);
    out << "{\"kind\": \"partial_sum\","
           " \"gauge\": {\"kind\": \"dyadic\", \"params\": {\"limit\": \"1\", \"scale\": \"1\"}}}";
  }
  RunResult eq = run("equiv", {"--seq", "E5", "--seq2", "@" + path});
  std::remove(path.c_str());
  CHECK(eq.status == 4);
  CHECK(first_line(eq.out).rfind("equivalent", 0) == 0);
}

TEST_CASE("backend flag switches the coefficient field") {
  RunResult psi = run("residue-sep", {"--backend", "fp:2", "--center", "0", "--delta", "1"});
  CHECK(psi.status == 0);
  CHECK(first_line(psi.out) == "psi = (t^2)/(X^2 + t*X)");
  RunResult val = run("val", {"--fn", "2 + t", "--backend", "fp:2"});
  CHECK(first_line(val.out) == "val = 1");
}

TEST_CASE("expressions echoed by commands re-parse to equal values") {
  Backend b = Backend::q();
  for (const char* text : {"(X)/(t)", "(X^2 - t^2)/(t^3)", "1/(X - t/(1 - t))"}) {
    RunResult r = run("eval", {"--fn", text, "--at", "t^2"});
    REQUIRE(r.status == 0);
    nlohmann::json doc =
        nlohmann::json::parse(run("eval", {"--fn", text, "--at", "t^2", "--format", "json"}).out);
    RationalFunction back = RationalFunction::parse(doc.at("phi").get<std::string>(), b);
    CHECK(back == RationalFunction::parse(text, b));
    if (!doc.at("pole").get<bool>()) {
      FieldElem v = FieldElem::parse(doc.at("value").get<std::string>(), b);
      CHECK(v == back.eval(FieldElem::parse("t^2", b)));
    }
  }
}

TEST_CASE("session config file supplies defaults") {
  std::string path = "cli_cfg.json";
  {
    std::ofstream out(path);
    out << "{\"format\": \"json\", \"max_index\": 16, \"backend\": \"q\", \"depth\": 24}";
  }
  pcval::cli::SessionConfig cfg = pcval::cli::load_config(path);
  std::remove(path.c_str());
  CHECK(cfg.json);
  CHECK(cfg.max_index == 16);
  CHECK(cfg.depth == 24);
  RunResult r = pcval::cli::run("rank", {"--seq", "E2"}, cfg);
  CHECK(nlohmann::json::parse(r.out).at("verdict").get<std::string>() ==
        "rank 1 (non-torsion: delta = sqrt(2))");
  CHECK_THROWS_AS(pcval::cli::load_config("does_not_exist.json"), parse_error);
}

TEST_CASE("the command catalog stays stable") {
  const auto& names = pcval::cli::command_names();
  CHECK(names.size() == 18);
  CHECK(names.front() == "val");
  CHECK(names.back() == "fixtures");
  RunResult fx = run("fixtures", {});
  for (const char* n : {"E1", "E2", "E3", "E4", "E5"})
    CHECK(fx.out.find(n) != std::string::npos);
}
