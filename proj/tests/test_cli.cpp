#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = prvkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Run run_json(std::vector<std::string> args) {
  args.push_back("--json");
  return run(std::move(args));
}

nlohmann::json last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return nlohmann::json::parse(text.substr(start == std::string::npos ? 0 : start + 1, end + 1));
}

}  // namespace

TEST_CASE("cli: A2 witness") {
  auto r = run_json({"prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s1s2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["nu"] == std::vector<int>{1, 1});
  CHECK(j["result"]["dim"] == 2);
  CHECK(j["result"]["holds"] == true);

  auto m = nlohmann::json::parse(run_json({"refined", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s1s2"}).out);
  CHECK(m["result"]["m"] == 2);
  CHECK(m["result"]["dim"] == 2);
}

TEST_CASE("cli: SL2 example") {
  auto r = run_json({"orbit-dim", "--sl2-example"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["orbit_dim"] == 3);
  CHECK(j["result"]["valuations"][0]["valuation"] == 2);
  CHECK(run({"membership", "--sl2-example"}).code == 0);
  auto p = nlohmann::json::parse(run_json({"pairs", "--type", "A1", "--lambda", "2", "--mu", "2", "--nu", "2"}).out);
  CHECK(p["result"]["prv_triple"] == false);
  auto i = nlohmann::json::parse(
      run_json({"invariants", "--type", "A1", "--weight", "2", "--weight", "2", "--weight", "2"}).out);
  CHECK(i["result"]["dim"] == 1);
}

TEST_CASE("cli: coroot basis") {
  // alpha^vee of SL_2 is 2 in fundamental coordinates
  auto a = run_json({"prv", "--type", "A1", "--basis", "coroot", "--lambda", "1", "--mu", "1", "--w", "s1"});
  auto b = run_json({"prv", "--type", "A1", "--lambda", "2", "--mu", "2", "--w", "s1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: golden exit codes") {
  struct Golden {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Golden> cases = {
      {{"prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s1s2"}, 0},
      {{"refined", "--type", "B2", "--lambda", "2,1", "--mu", "1,2", "--w", "s2s1"}, 0},
      {{"dim-identity", "--type", "G2", "--lambda", "1,1", "--mu", "1,0", "--w", "s1s2", "--valuations"}, 0},
      {{"kostant", "--type", "A2", "--lambda", "1,1", "--mu", "1,0", "--w", "e"}, 0},
      {{"tensor", "--type", "B2", "--lambda", "1,1", "--mu", "0,1", "--oracle"}, 0},
      {{"tensor", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--nu", "1,1"}, 0},
      {{"orbit-dim", "--type", "A2", "--lambda", "1,1", "--mu", "1,0", "--w", "s1"}, 0},
      {{"orbit-dim", "--matrix", "[[t,0],[0,t^-1]]", "--n", "3"}, 0},
      {{"distance", "--from", "base:2", "--to", "torus:1"}, 0},
      {{"membership", "--point", "torus:1", "--point", "base:2", "--target", "1", "--target", "1"}, 0},
      {{"membership", "--point", "torus:1", "--point", "base:2", "--target", "1", "--target", "2"}, 1},
      {{"membership", "--point", "torus:1", "--point", "base:2", "--target", "1"}, 2},
      {{"transfer", "--map", "torus:A2", "--coweight", "1,-1", "--coweight", "-1,1"}, 0},
      {{"transfer", "--map", "sl2-root:B2:1", "--coweight", "1", "--coweight", "1", "--coweight", "1"}, 1},
      {{"search", "--map", "sl2-root:B2:1", "--bound", "2", "--expect-failures"}, 0},
      {{"search", "--map", "sl2-root:B2:1", "--bound", "2"}, 1},
      {{"search", "--map", "torus:A2", "--bound", "1"}, 0},
      {{"saturate", "--map", "sl2-root:B2:1", "--coweight", "1", "--coweight", "1", "--coweight", "1"}, 0},
      {{"saturate", "--map", "sl2-root:B2:1", "--coweight", "1", "--coweight", "1", "--coweight", "1", "--max",
        "1"},
       1},
      {{"sweep", "--suite", "refined", "--types", "A1,A2,B2", "--bound", "2"}, 0},
      {{"sweep", "--suite", "oracle", "--types", "A1", "--bound", "2", "--jobs", "2"}, 0},
      // usage errors
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"prv", "--type", "A2", "--lambda", "1,x", "--mu", "1,1", "--w", "e"}, 2},
      {{"prv", "--type", "A2", "--lambda", "1,1,1", "--mu", "1,1", "--w", "e"}, 2},
      {{"prv", "--type", "A2", "--lambda", "-1,1", "--mu", "1,1", "--w", "e"}, 2},
      {{"prv", "--type", "Q2", "--lambda", "1,1", "--mu", "1,1", "--w", "e"}, 2},
      {{"prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s3"}, 2},
      {{"prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1"}, 2},
      {{"tensor", "--type", "A2", "--form", "weird", "--lambda", "1,1", "--mu", "1,1"}, 2},
      {{"sweep", "--suite", "nope"}, 2},
      {{"sweep", "--types", "A1,Z7"}, 2},
      {{"transfer", "--map", "sl2-root:B2:5", "--coweight", "1"}, 2},
      {{"distance", "--from", "[[t,0],[0,t]]", "--to", "base:2"}, 2},
      {{"orbit-dim"}, 2},
      {{"replay", "--from", "not json"}, 2},
  };
  for (const auto& g : cases) {
    std::string line;
    for (const auto& a : g.args) line += a + " ";
    INFO(line);
    CHECK(run(g.args).code == g.code);
  }
}

TEST_CASE("cli: json output replays to identical output") {
  const std::vector<std::vector<std::string>> cases = {
      {"prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s1s2"},
      {"refined", "--type", "A2", "--form", "adjoint", "--lambda", "1,1", "--mu", "1,1", "--w", "s1"},
      {"dim-identity", "--type", "G2", "--basis", "coroot", "--lambda", "2,1", "--mu", "2,1", "--w", "s2", "--valuations"},
      {"kostant", "--type", "B2", "--lambda", "1,1", "--mu", "1,0", "--w", "s1"},
      {"tensor", "--type", "A2", "--lambda", "1,0", "--mu", "0,1", "--oracle"},
      {"invariants", "--type", "A2", "--weight", "1,0", "--weight", "1,0", "--weight", "1,0"},
      {"pairs", "--type", "B2", "--lambda", "1,0", "--mu", "1,0", "--nu", "0,0"},
      {"orbit-dim", "--sl2-example"},
      {"orbit-dim", "--type", "A2", "--lambda", "1,0", "--mu", "1,1", "--w", "s2s1"},
      {"orbit-dim", "--matrix", "[[t,0],[0,t^-1]]", "--matrix", "[[1,t],[0,1]]", "--n", "3"},
      {"distance", "--from", "torus:1,2", "--to", "[[1,t,0],[0,1,0],[0,0,1]]"},
      {"distance", "--from", "torus:1", "--to", "base:2", "--group", "pgl"},
      {"membership", "--sl2-example"},
      {"transfer", "--map", "sl2-root:B2:2", "--coweight", "1", "--coweight", "1", "--coweight", "2"},
      {"search", "--map", "sl2-root:B2:1", "--bound", "2", "--expect-failures", "--saturate", "4"},
      {"saturate", "--map", "sl2-root:B2:1", "--coweight", "1", "--coweight", "2", "--coweight", "2"},
      {"sweep", "--suite", "torus", "--types", "A2", "--bound", "1"},
  };
  for (const auto& args : cases) {
    std::string line;
    for (const auto& a : args) line += a + " ";
    INFO(line);
    auto first = run_json(args);
    REQUIRE(first.code != 2);
    auto j = last_line(first.out);
    CHECK(j.contains("input"));
    auto again = run_json({"replay", "--from", first.out});
    CHECK(again.code == first.code);
    CHECK(again.out == first.out);
  }
}

TEST_CASE("cli: sweep lines are deterministic and failures carry a replay") {
  auto a = run_json({"sweep", "--suite", "identity", "--types", "A2", "--bound", "1", "--jobs", "1"});
  auto b = run_json({"sweep", "--suite", "identity", "--types", "A2", "--bound", "1", "--jobs", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  int n = 0;
  for (std::string line; std::getline(lines, line);) ++n;
  CHECK(n == 4 * 4 * 6 + 1);
  auto sum = last_line(a.out);
  CHECK(sum["result"]["instances"] == 96);
  CHECK(sum["result"]["violations"] == 0);

  // a failing search result, replayed from the record alone
  auto s = run_json({"search", "--map", "sl2-root:B2:1", "--bound", "1"});
  CHECK(s.code == 1);
  auto again = run_json({"replay", "--from", s.out});
  CHECK(again.code == 1);
  CHECK(again.out == s.out);
}
