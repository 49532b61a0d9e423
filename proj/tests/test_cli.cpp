#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "chargraph/cli.hpp"
#include "chargraph/simple_graph.hpp"
#include "test_support.hpp"

using namespace chargraph;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chargraph");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const Json* find_check(const Json& report, const std::string& name) {
  for (const auto& c : report.at("checks")) {
    if (c.at("name") == name) return &c;
  }
  return nullptr;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("chargraph-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("analyze a nonsolvable degree set as JSON") {
  const Run r = run({"analyze", "--degrees", "1,15,16,17", "--solvable", "false", "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  const Json* mt = find_check(j, "moreto_tiep");
  REQUIRE(mt != nullptr);
  CHECK(mt->at("status") == "pass");
  const Json& graph = j.at("input").at("graph");
  CHECK(graph.at("primes") == Json::array({2, 3, 5, 17}));
  REQUIRE(graph.at("edges").size() == 1);
  CHECK(graph.at("edges")[0].at("edge") == Json::array({3, 5}));
  CHECK(j.at("summary").at("status") == "pass");
}

TEST_CASE("screening the nonsolvable shape fails at the first rule") {
  const Run r = run({"screen", "--graph", "3-5;2;17"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("first failure: palfy") != std::string::npos);

  const Run j = run({"screen", "--graph", "3-5;2;17", "--format", "json"});
  CHECK(j.code == kExitCheckFailed);
  CHECK(Json::parse(j.out).at("summary").at("first_failure") == "palfy");
}

TEST_CASE("analyze a group from generators") {
  const Run r = run({"analyze", "--group", "(1 2),(1 2 3)", "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("input").at("degrees") == Json::array({1, 1, 2}));
  CHECK(j.at("input").at("graph").at("primes") == Json::array({2}));
  CHECK(j.at("input").at("graph").at("edges").empty());
  CHECK(j.at("solvable") == "true");
}

TEST_CASE("degrees and spectrum subcommands") {
  const Run d = run({"degrees", "--group", "(1 2),(1 2 3 4)", "--format", "json"});
  CHECK(d.code == kExitOk);
  const Json dj = Json::parse(d.out);
  CHECK(dj.at("order") == 24);
  CHECK(dj.at("degrees") == Json::array({1, 1, 2, 3, 3}));
  CHECK(dj.at("rho") == Json::array({2, 3}));

  const Run s = run({"spectrum", "--fixture", "cocktail-6", "--format", "json"});
  CHECK(s.code == kExitOk);
  const Json sj = Json::parse(s.out);
  CHECK(sj.at("distinct_count") == 3);
  CHECK(sj.at("integer_eigenvalues") == Json::parse("[[4,1],[0,3],[-2,2]]"));

  const Run t = run({"spectrum", "--graph", "1-2;2-3"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("char_poly: x^3 - 2x") != std::string::npos);
}

TEST_CASE("catalog subcommand") {
  const Run all = run({"catalog", "--format", "json"});
  CHECK(all.code == kExitOk);
  CHECK(Json::parse(all.out).size() == list_fixtures().size());
  const Run one = run({"catalog", "psl2-16"});
  CHECK(one.code == kExitOk);
  CHECK(Json::parse(one.out).at("kind") == "degree-set");
  CHECK(run({"catalog", "missing"}).code == kExitInputError);
}

TEST_CASE("JSON reports round-trip byte for byte") {
  const std::vector<std::vector<std::string>> cases = {
      {"analyze", "--degrees", "1,15,16,17", "--format", "json"},
      {"analyze", "--group", "(1 2)(3 4),(1 2 3)", "--format", "json"},
      {"analyze", "--fixture", "paw", "--format", "json"},
      {"screen", "--fixture", "star", "--format", "json"},
      {"degrees", "--fixture", "sl2-3", "--format", "json"},
      {"spectrum", "--fixture", "star", "--format", "json"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[1]);
    CAPTURE(args[2]);
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("text and DOT output are deterministic") {
  for (const auto& format : {"text", "dot"}) {
    const std::vector<std::string> args = {"analyze", "--fixture", "k8-v-k2", "--format", format};
    CHECK(run(args).out == run(args).out);
  }
  const Run dot = run({"analyze", "--fixture", "paw", "--format", "dot"});
  CHECK(dot.out.rfind("graph Delta {", 0) == 0);
  CHECK(dot.out.find("cut_vertex=true") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"analyze"}).code == kExitInputError);
  CHECK(run({"analyze", "--degrees", "1,2", "--graph", "1-2"}).code == kExitInputError);
  CHECK(run({"analyze", "--degrees", "1,x"}).code == kExitInputError);
  CHECK(run({"analyze", "--group", "(1 2"}).code == kExitInputError);
  CHECK(run({"analyze", "--degrees", "1,2", "--solvable", "auto"}).code == kExitInputError);
  CHECK(run({"analyze", "--degrees", "1,2", "--solvable", "maybe"}).code == kExitInputError);
  CHECK(run({"analyze", "--fixture", "nope"}).code == kExitInputError);
  CHECK(run({"analyze", "--degrees", "1,2", "--format", "yaml"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  const Run e = run({"analyze", "--graph", "1-2-3"});
  CHECK(e.code == kExitInputError);
  CHECK(e.err.rfind("error: ", 0) == 0);
}

TEST_CASE("resource caps exit with 3") {
  CHECK(run({"analyze", "--group", "(1 2),(1 2 3 4 5)", "--max-group-order", "50"}).code == kExitCapExceeded);
  CHECK(run({"degrees", "--group", "(1 2),(1 2 3 4)", "--max-group-order", "10"}).code == kExitCapExceeded);
  std::string big;
  for (int v = 1; v <= 30; ++v) big += (v > 1 ? ";" : "") + std::to_string(v);
  CHECK(run({"analyze", "--graph", big}).code == kExitCapExceeded);
}

TEST_CASE("inputs may be read from files, output written with --out") {
  TempDir dir("files");
  dir.write("degrees.txt", "1,15,16,17");
  dir.write("graph.json", R"({"vertices": [2, 3, 5, 17], "edges": [[3, 5]]})");
  const fs::path report = dir.path / "report.json";

  const Run a = run({"analyze", "--degrees", (dir.path / "degrees.txt").string(), "--solvable", "false",
                     "--format", "json", "--out", report.string()});
  CHECK(a.code == kExitOk);
  CHECK(a.out.empty());
  std::ifstream f(report);
  const Json from_file = Json::parse(f);
  CHECK(from_file == Json::parse(run({"analyze", "--degrees", "1,15,16,17", "--solvable", "false", "--format",
                                      "json"}).out));

  const Run g = run({"screen", "--graph-json", (dir.path / "graph.json").string()});
  CHECK(g.code == kExitCheckFailed);
}

TEST_CASE("batch processes a directory in name order") {
  TempDir dir("batch");
  dir.write("a.json", R"j({"group": "(1 2),(1 2 3)"})j");
  dir.write("b.json", R"({"graph": "1-2;2-3;3-4", "solvable": "true"})");
  dir.write("c.json", R"({"degrees": [1, 15, 16, 17], "solvable": "false"})");
  dir.write("d.json", R"({"degrees": "1,y"})");
  dir.write("e.json", "not json");
  dir.write("skip.txt", "ignored");

  const Run r = run({"batch", dir.path.string(), "--format", "json"});
  const Json j = Json::parse(r.out);
  REQUIRE(j.size() == 5);
  std::vector<std::string> files;
  std::vector<int> codes;
  for (const auto& e : j) {
    files.push_back(e.at("file"));
    codes.push_back(e.at("exit_code"));
  }
  CHECK(files == std::vector<std::string>{"a.json", "b.json", "c.json", "d.json", "e.json"});
  CHECK(codes == std::vector<int>{0, 1, 0, 2, 2});
  CHECK(r.code == kExitInputError);
  CHECK(run({"batch", dir.path.string(), "--format", "json"}).out == r.out);

  const Run text = run({"batch", dir.path.string()});
  CHECK(text.out.find("== a.json (exit 0)") < text.out.find("== b.json (exit 1)"));
  CHECK(run({"batch", (dir.path / "missing").string()}).code == kExitInputError);
}
