#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "sqfree/cli.hpp"
#include "sqfree/error.hpp"
#include "sqfree/harness.hpp"
#include "sqfree/leaf.hpp"

using namespace sqfree;
using test::S;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("sqfree_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

void check_facts(const Fixture& f) {
  for (const auto& fact : f.facts) {
    CHECK_MESSAGE(fact.evaluate(EngineOptions{}) == fact.expected, f.name, ": ", fact.property);
  }
}

}  // namespace

TEST_CASE("fixtures load with their facts") {
  const auto d2 = load_fixture("delta2");
  CHECK(d2.complex.facet_count() == 6);
  CHECK(d2.complex.vertices().size() == 8);
  const auto g2 = load_fixture("g2");
  CHECK(squarefree_power(g2.ideal, 2).generators().size() == 5);
  const auto fak = load_fixture("fakhari(6)");
  CHECK(fak.ideal.generators().size() == 5);
  CHECK(fak.name == "fakhari6");
  for (const auto& name : {"delta1", "delta2", "g1", "g2"}) check_facts(load_fixture(name));
  for (const auto& f : load_fixture("fakhari6").facts) CHECK_FALSE(f.expected.empty());
  for (const auto& name : fixture_names()) CHECK(is_fixture_name(name));
}

TEST_CASE("structural facts of the Fakhari family") {
  for (unsigned n = 5; n <= 9; ++n) {
    const auto f = load_fixture("fakhari" + std::to_string(n));
    for (const auto& fact : f.facts) {
      if (fact.property == "g(2) > g(1)") continue;
      CHECK_MESSAGE(fact.evaluate(EngineOptions{}) == fact.expected, f.name, ": ", fact.property);
    }
  }
  // From n = 8 on the normalized depth rises at k = 2.
  for (unsigned n : {8U, 9U, 10U}) {
    for (const auto& fact : load_fixture("fakhari" + std::to_string(n)).facts) {
      if (fact.property == "g(2) > g(1)") CHECK(fact.evaluate(EngineOptions{}) == "true");
    }
  }
}

TEST_CASE("fixture errors") {
  CHECK_THROWS_AS(load_fixture("nope"), InvalidArgument);
  CHECK_THROWS_AS(load_fixture("fakhari4"), InvalidArgument);
  CHECK_FALSE(is_fixture_name("fakhari"));
  CHECK_FALSE(is_fixture_name("fakhari6x"));
}

TEST_CASE("provenance tags and set formatting") {
  CHECK(provenance_tag(Provenance::kPaper) == "PAPER");
  CHECK(provenance_tag(Provenance::kDerived) == "DERIVED");
  CHECK(provenance_tag(Provenance::kTrivial) == "TRIVIAL");
  const auto d2 = load_fixture("delta2").complex;
  CHECK(format_sets(d2.labels(), {}) == "none");
  CHECK(format_sets(d2.labels(), special_leaves(d2)) == "{x1,y1} {x2,y2} {x4,y4}");
}

TEST_CASE("generator shapes") {
  GeneratorParams p;
  p.seed = 1;
  p.base_facet_count = 1;
  p.max_facet_size = 2;
  const auto edge = random_grafted_forest(p);
  CHECK(edge.complex.facet_count() == 3);
  CHECK(edge.certificate.base_facets.size() == 1);
  CHECK(edge.certificate.grafted_leaves.size() == 2);
  CHECK(edge.complex.format() == "<{x1,x2}, {x1,y1}, {x2,y2}>");
  p.base_facet_count = 0;
  const auto simplex = random_grafted_forest(p);
  CHECK(simplex.complex.facet_count() == 1);
  CHECK(simplex.certificate.base_facets.empty());
}

TEST_CASE("generator determinism and soundness") {
  for (WhiskerMode mode : {WhiskerMode::kAllVertices, WhiskerMode::kBlock}) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
      GeneratorParams p;
      p.seed = seed;
      p.base_facet_count = 1 + seed % 5;
      p.whisker_mode = mode;
      const auto a = random_grafted_forest(p);
      const auto b = random_grafted_forest(p);
      CHECK(a.complex == b.complex);
      CHECK(is_cm_forest(a.complex));
      CHECK(a.complex.vertices().size() <= p.vertex_budget);
      if (mode == WhiskerMode::kAllVertices) CHECK(a.rejections == 0);
    }
  }
  GeneratorParams p;
  p.seed = 3;
  GeneratorParams q = p;
  q.seed = 4;
  CHECK_FALSE(random_grafted_forest(p).complex == random_grafted_forest(q).complex);
}

TEST_CASE("generator errors") {
  GeneratorParams p;
  p.vertex_budget = 0;
  CHECK_THROWS_AS(random_grafted_forest(p), InvalidArgument);
  p.vertex_budget = 65;
  CHECK_THROWS_AS(random_grafted_forest(p), InvalidArgument);
  p.vertex_budget = 3;
  CHECK_THROWS_AS(random_grafted_forest(p), InvalidArgument);
  p = GeneratorParams{};
  p.max_attempts = 0;
  CHECK_THROWS_AS(random_grafted_forest(p), InvalidArgument);
}

TEST_CASE("verification reports") {
  VerifyOptions o;
  const auto d2 = verify_fixture(load_fixture("delta2"), o);
  CHECK(d2.passed());
  CHECK(d2.skipped() == 0);
  std::set<std::string> names;
  for (const auto& c : d2.checks) names.insert(c.name);
  for (const char* want : {"fact", "cm-forest", "grafting-certificate", "matching-number", "special-leaf-exists",
                           "dimension-and-depth", "depth-with-special-leaf", "normalized-depth-nonincreasing",
                           "colon-by-leaf", "contraction", "colon-keeps-cm"}) {
    CHECK_MESSAGE(names.count(want) == 1, want);
  }
  const auto g1 = verify_fixture(load_fixture("g1"), o);
  CHECK(g1.passed());
  CHECK(g1.checks.size() == load_fixture("g1").facts.size());
  VerifyOptions narrow;
  narrow.k_range = std::pair<std::size_t, std::size_t>{2, 2};
  const auto only2 = verify_fixture(load_fixture("delta2"), narrow);
  for (const auto& c : only2.checks) {
    if (c.name == "dimension-and-depth") CHECK(c.instance == "k=2");
  }
}

TEST_CASE("failed checks carry a replay instance") {
  const auto path = test::C({"a b", "b c"});
  const auto r = verify_all("path", path);
  CHECK_FALSE(r.passed());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks.front().replay["complex"] == complex_to_json(path));
  CHECK(r.to_json()["checks"][0]["status"] == "fail");
}

TEST_CASE("budget overruns become skips") {
  VerifyOptions o;
  o.engine.vertex_cap = 4;
  const auto r = verify_fixture(load_fixture("delta2"), o);
  CHECK(r.passed());
  CHECK(r.skipped() > 0);
}

TEST_CASE("reports are deterministic") {
  GeneratorParams p;
  p.seed = 7;
  const auto forest = random_grafted_forest(p);
  const auto a = verify_all("seed 7", forest.complex).to_json().dump();
  const auto b = verify_all("seed 7", forest.complex).to_json().dump();
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
  CHECK(verify_all("seed 7", forest.complex).summary().find("checks,") != std::string::npos);
}

TEST_CASE("command line") {
  const auto d1 = run_cli({"analyze", "delta1"});
  CHECK(d1.code == cli::kOk);
  CHECK(d1.out.find("special leaves: none") != std::string::npos);
  const auto d2 = run_cli({"analyze", "delta2"});
  CHECK(d2.out.find("special leaves: {x1,y1} {x2,y2} {x4,y4}") != std::string::npos);
  CHECK(d2.out.find("leaves not special: {x3,y3}") != std::string::npos);
  CHECK(run_cli({"analyze", "delta2", "--json"}).out.find("\"special_leaves\"") != std::string::npos);

  const auto power = run_cli({"power", "g2", "--k", "2"});
  CHECK(power.code == cli::kOk);
  const Json doc = Json::parse(power.out);
  CHECK(doc["generators"].size() == 5);

  CHECK(run_cli({"verify", "delta2"}).code == cli::kOk);
  CHECK(run_cli({"verify", "g1", "--json"}).code == cli::kOk);
  CHECK(run_cli({"verify", "--seed", "7"}).code == cli::kOk);
  CHECK(run_cli({"verify", "--seed", "9", "--mode", "block", "--k-range", "1..2"}).code == cli::kOk);

  const auto depth = run_cli({"depth", "g2", "--field", "2", "--betti"});
  CHECK(depth.code == cli::kOk);
  CHECK(depth.out.find("restrictions to examine:") == 0);
  CHECK(depth.out.find("depth: 3") != std::string::npos);
  CHECK(run_cli({"depth", "g2", "--k", "2", "--json"}).out.find("\"depth\": 4") != std::string::npos);

  const auto random = run_cli({"random", "--seed", "5"});
  CHECK(random.code == cli::kOk);
  CHECK(is_cm_forest(complex_from_json(Json::parse(random.out))));
  CHECK(random.out == run_cli({"random", "--seed", "5"}).out);
}

TEST_CASE("command line files and exit codes") {
  const auto complex = temp_file("g2.json", R"({"facets": [["x1","x2"],["x2","x3"],["x1","y1"],["x2","y2"],["x3","y3"]]})");
  CHECK(run_cli({"power", complex, "--k", "2"}).out == run_cli({"power", "g2", "--k", "2"}).out);
  CHECK(run_cli({"verify", complex}).code == cli::kOk);
  const auto ideal = temp_file("ideal.json", R"({"generators": [["a","b"],["b","c"]]})");
  CHECK(run_cli({"depth", ideal}).code == cli::kOk);
  CHECK(run_cli({"analyze", ideal}).code == cli::kUsage);
  const auto path = temp_file("path.json", R"({"facets": [["a","b"],["b","c"]]})");
  CHECK(run_cli({"verify", path}).code == cli::kVerificationFailed);
  const auto junk = temp_file("junk.json", "not json");
  CHECK(run_cli({"analyze", junk}).code == cli::kUsage);
  CHECK(run_cli({"analyze", "/nonexistent/file.json"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
  CHECK(run_cli({"power", "g2"}).code == cli::kUsage);
  CHECK(run_cli({"depth", "g2", "--field", "4"}).code == cli::kUsage);
  CHECK(run_cli({"verify"}).code == cli::kUsage);
  CHECK(run_cli({"verify", "delta2", "--seed", "1"}).code == cli::kUsage);
  CHECK(run_cli({"depth", "fakhari30"}).code == cli::kBudget);
  CHECK(run_cli({"--help"}).code == cli::kOk);
  for (const auto& f : {complex, ideal, path, junk}) std::remove(f.c_str());
}
