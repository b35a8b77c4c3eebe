#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <unistd.h>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = confequiv::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("confequiv-cli-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("one-sided configurations of Z2") {
  const auto r = run({"con", "--group", R"({"kind":"cyclic","order":2})", "--gens", "a", "--partition", "singletons"});
  REQUIRE(r.code == 0);
  const auto rep = r.report();
  CHECK(rep["command"] == "con");
  CHECK(rep["results"]["tuples"] == json::parse("[[1,2],[2,1]]"));
  CHECK(rep["results"]["exactness"] == "exact");
}

TEST_CASE("two-sided configurations") {
  const auto r = run({"con2", "--group", "Z2", "--gens", "a", "--partition", "singletons"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["tuples"] == json::parse("[[1,2,2],[2,1,1]]"));
  const auto flag = run({"con", "--two-sided", "--group", "Z2", "--gens", "a", "--partition", "singletons"});
  CHECK(flag.report()["results"] == r.report()["results"]);
}

TEST_CASE("generator identities") {
  const auto r = run({"paper-demo", "--identities", "--m-range", "-6..6"});
  REQUIRE(r.code == 0);
  const auto rep = r.report();
  CHECK(rep["results"]["all_passed"] == true);
  CHECK(rep["results"]["checks"].size() == 13U * 4U);
}

TEST_CASE("Z4 and V4 differ with one generator") {
  const auto r = run({"compare", "--a", "Z4", "--b", "V4", "--max-n", "1", "--max-m", "4"});
  CHECK(r.code == 1);
  const auto rep = r.report();
  CHECK(rep["results"]["verdict"] == "differs within bounds");
  CHECK_FALSE(rep["results"]["witness_a"].is_null());
}

TEST_CASE("isomorphic presentations compare equal") {
  const auto r = run({"compare", "--a", "Z6", "--b", "Z2xZ3", "--max-n", "2", "--max-m", "3"});
  CHECK(r.code == 0);
  CHECK(r.report()["results"]["verdict"] == "equal within bounds");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"con", "--bogus"}).code == 2);
  const auto missing = run({"con", "--gens", "a"});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK(run({"con", "--group", R"({"kind":"cyclic")", "--gens", "a"}).code == 2);
  CHECK(run({"con", "--group", "Z4", "--gens", "q", "--partition", "singletons"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verdict exit codes") {
  // Infeasible free-group instance.
  const auto amen = run({"amen", "--group", R"({"kind":"free","rank":2})", "--partition", "first-letter", "--radius",
                         "4", "--stable-span", "2"});
  CHECK(amen.code == 1);
  CHECK(amen.report()["results"]["verdict"]["status"] == "infeasible");

  const auto feasible = run({"amen", "--group", "S3", "--gens", "(0 1),(0 1 2)", "--partition", "singletons"});
  CHECK(feasible.code == 0);
  CHECK(feasible.report()["results"]["verdict"]["status"] == "feasible");

  const auto bad_claim = run({"verify-decomp", "--group", "Z4", "--claim",
                              R"({"groups":[[{"translator":"e","set":{"elements":["e","a"]}}]]})"});
  CHECK(bad_claim.code == 1);
  CHECK(bad_claim.report()["results"]["verdict"] == "invalid");

  const auto good_claim =
      run({"verify-decomp", "--group", R"({"kind":"free","rank":2})", "--radius", "5", "--claim",
           R"({"groups":[[{"translator":"e","set":{"prefixes":["a"]}},{"translator":"a","set":{"prefixes":["A"]}}],
                         [{"translator":"e","set":{"prefixes":["b"]}},{"translator":"b","set":{"prefixes":["B"]}}]]})"});
  CHECK(good_claim.code == 0);
  CHECK(good_claim.report()["results"]["pieces_bound"] == 4);
}

TEST_CASE("partition algebra subcommands") {
  const auto meet = run({"meet", "--group", "Z4", "--p", R"([["e","a"],["a^2","a^3"]])", "--q",
                         R"([["e","a^2"],["a","a^3"]])"});
  REQUIRE(meet.code == 0);
  CHECK(meet.report()["results"]["blocks"].size() == 4U);

  const auto atoms = run({"atoms", "--group", "Z4", "--sets", R"([["e","a"]])"});
  REQUIRE(atoms.code == 0);
  CHECK(atoms.report()["results"]["blocks"].size() == 2U);

  const std::string pair = R"({"refined":[["e"],["a"],["a^2","a^3"]],"coarse":[["e","a"],["a^2","a^3"]]})";
  CHECK(run({"similar", "--group", "Z4", "--a", pair, "--b", pair}).code == 0);
  const std::string other = R"({"refined":[["e","a"],["a^2"],["a^3"]],"coarse":[["e","a"],["a^2","a^3"]]})";
  CHECK(run({"similar", "--group", "Z4", "--a", pair, "--b", other}).code == 1);
}

TEST_CASE("pullback over every tuple and partition") {
  const auto r = run({"pullback", "--group", "S3", "--target", "Z2", "--map", R"j({"(0 1)":"a","(0 1 2)":"e"})j",
                      "--gens", "all", "--partition", "all"});
  REQUIRE(r.code == 0);
  const auto res = r.report()["results"];
  CHECK(res["cases"] == res["one_sided_equal"]);
  CHECK(res["cases"] == res["two_sided_equal"]);
  CHECK(res["first_failure"].is_null());
}

TEST_CASE("class data") {
  const auto r = run({"classdata", "--group", "Q8"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["results"]["class_number"] == 5);
  CHECK(r.report()["results"]["center"] == json::parse(R"(["1","-1"])"));
}

TEST_CASE("output is deterministic across runs and thread counts") {
  const std::vector<std::vector<std::string>> commands{
      {"catalog", "--group", "D4", "--max-n", "2", "--max-m", "3", "--two-sided"},
      {"amen", "--all", "--group", "Q8", "--max-m", "3"},
      {"paper-demo", "--torsion", "--phi-samples", "200"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd.front());
    std::vector<std::string> one{"--threads", "1"}, eight{"--threads", "8"};
    one.insert(one.end(), cmd.begin(), cmd.end());
    eight.insert(eight.end(), cmd.begin(), cmd.end());
    const auto a = run(cmd), b = run(cmd), c = run(one), d = run(eight);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);
  }
}

TEST_CASE("cache hits reproduce the computed output") {
  const auto dir = scratch("cache");
  const std::vector<std::string> cmd{"--cache-dir", dir.string(), "compare", "--a", "D4", "--b", "Q8",
                                     "--max-n",     "2",          "--max-m", "3"};
  const auto first = run(cmd);
  const auto second = run(cmd);
  CHECK(first.code == 1);
  CHECK(first.err.find("computed") != std::string::npos);
  CHECK(second.err.find("cache hit") != std::string::npos);
  CHECK(first.out == second.out);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("seeded phi samples") {
  const auto a = run({"--seed", "7", "paper-demo", "--phi-samples", "100"});
  const auto b = run({"--seed", "7", "paper-demo", "--phi-samples", "100"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.report()["inputs"]["seed"] == 7);
}
