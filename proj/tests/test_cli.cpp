#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "prmhull/cli.hpp"

using namespace prmhull;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "prmhull");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("params") {
  const Run r = run({"params", "--n", "3", "--k", "3", "--q", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("N=40 K=20 D=9\n", 0) == 0);
  CHECK(run({"params", "--n", "2", "--k", "1", "--q", "3"}).out.rfind("N=13 K=3 D=9\n", 0) == 0);
  CHECK(contains(run({"params", "--n", "1", "--k", "5", "--q", "3"}).out, "full space F_3^4"));
  CHECK(contains(run({"params", "--n", "2", "--k", "0", "--q", "3"}).out, "N=13 K=1 D=13"));

  const auto j = nlohmann::json::parse(run({"--json", "params", "--n", "2", "--k", "2", "--q", "5"}).out);
  CHECK(j["N"] == 31);
  CHECK(j["K"] == 6);
  CHECK(j["D_formula"] == 20);
  CHECK(j["K_sorensen"] == j["K_mr"]);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--n", "1", "--k", "1", "--q", "3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "agree yes"));
  const auto j = nlohmann::json::parse(run({"--json", "classify", "--n", "2", "--k", "4", "--q", "3"}).out);
  for (const char* key : {"n", "k", "q", "N", "K", "D_formula", "predicted", "constructed", "agree", "hull_dim_source"})
    CHECK(j.contains(key));
  CHECK(j["constructed"]["lcd"] == true);
  CHECK(j["predicted"]["hull_dim"] == 0);
  const auto open = nlohmann::json::parse(run({"--json", "classify", "--n", "3", "--k", "4", "--q", "4"}).out);
  CHECK(open["predicted"]["hull_dim"] == "no-closed-form");
  CHECK(open["constructed"]["hull_dim"] == 24);
  const Run csv = run({"--csv", "classify", "--n", "2", "--k", "3", "--q", "5"});
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
}

TEST_CASE("hull") {
  const Run r = run({"hull", "--basis", "--n", "2", "--k", "1", "--q", "5"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "hull_dim 2"));
  CHECK(contains(r.out, "q>2k+1"));
  CHECK(contains(r.out, "1,0,0  in hull"));
  CHECK(contains(r.out, "0,1,0  in hull"));
  CHECK(contains(run({"hull", "--n", "3", "--k", "4", "--q", "4"}).out, "no-closed-form"));
  const auto j = nlohmann::json::parse(run({"--json", "hull", "--basis", "--n", "2", "--k", "2", "--q", "4"}).out);
  CHECK(j["agree"] == true);
  CHECK(j["basis_in_hull"].size() == 4);
}

TEST_CASE("dual-check and wenum") {
  CHECK(run({"dual-check", "--n", "2", "--k", "3", "--q", "4"}).code == kExitOk);
  const Run w = run({"wenum", "--n", "1", "--k", "1", "--q", "3"});
  CHECK(w.code == kExitOk);
  CHECK(w.out == "x^4 + 8xy^3\n");
  const Run csv = run({"--csv", "wenum", "--n", "1", "--k", "1", "--q", "3"});
  CHECK(csv.out == "weight,count\n0,1\n3,8\n");
  const Run check = run({"wenum", "--check-paper", "--n", "1", "--k", "1", "--q", "3"});
  CHECK(check.code == kExitDisagree);
  CHECK(contains(check.out, "FAIL"));
}

TEST_CASE("design") {
  const Run r = run({"design", "--n", "1", "--k", "1", "--q", "3", "--w", "3", "--t", "1"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "1-(4,3,3) design"));
  CHECK(contains(run({"design", "--n", "1", "--k", "1", "--q", "3", "--w", "2"}).out, "NotADesign"));
  CHECK(run({"design", "--n", "1", "--k", "1", "--q", "3"}).code == kExitUsage);
  CHECK(run({"design", "--n", "1", "--k", "1", "--q", "3", "--w", "3", "--t", "0"}).code == kExitUsage);
}

TEST_CASE("sweep") {
  const Run r = run({"sweep", "--ns", "1,2", "--qs", "2,3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "summary: points=9 agree=9 disagree=0"));
  const Run j = run({"--json", "sweep", "--ns", "2", "--qs", "3", "--ks", "1,2"});
  CHECK(nlohmann::json::parse(j.out).size() == 2);
  CHECK(contains(j.err, "summary: points=2"));
  CHECK(run({"sweep", "--qs", "6"}).code == kExitUsage);
  CHECK(run({"sweep", "--ks", ","}).code == kExitUsage);
  CHECK(run({"sweep", "--ns", "x"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
  CHECK(run({"params", "--n", "2", "--k", "1", "--q", "6"}).code == kExitUsage);
  CHECK(run({"params", "--n", "2", "--k", "1"}).code == kExitUsage);
  CHECK(run({"classify", "--n", "2", "--k", "5", "--q", "3"}).code == kExitUsage);
  CHECK(run({"classify", "--n", "2", "--k", "0", "--q", "3"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--json", "--csv", "params", "--n", "1", "--k", "1", "--q", "3"}).code == kExitUsage);
  const Run b = run({"--budget", "1000", "wenum", "--n", "3", "--k", "3", "--q", "3"});
  CHECK(b.code == kExitBudget);
  CHECK(contains(b.err, "budget"));
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("matrix files round trip") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "prmhull_cli_test_matrix.txt").string();
  CHECK(run({"--emit-matrix", path, "classify", "--n", "2", "--k", "2", "--q", "5"}).code == kExitOk);
  const Run h = run({"--read-matrix", path, "hull"});
  CHECK(h.code == kExitOk);
  CHECK(contains(h.out, "hull_dim 6"));
  const Run w = run({"--read-matrix", path, "wenum"});
  CHECK(w.out == run({"wenum", "--n", "2", "--k", "2", "--q", "5"}).out);
  std::remove(path.c_str());
  CHECK(run({"--read-matrix", path, "hull"}).code == kExitUsage);
}

TEST_CASE("output does not depend on the worker count") {
  for (const std::vector<std::string> cmd : {std::vector<std::string>{"--json", "wenum", "--n", "2", "--k", "2", "--q", "5"},
                                             std::vector<std::string>{"design", "--n", "2", "--k", "1", "--q", "4", "--w", "12"},
                                             std::vector<std::string>{"--csv", "sweep", "--ns", "2", "--qs", "4,5"}}) {
    auto one = cmd, three = cmd;
    one.insert(one.begin(), {"--workers", "1"});
    three.insert(three.begin(), {"--workers", "3"});
    CHECK(run(one).out == run(three).out);
  }
}
