#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "plum/cli.hpp"
#include "plum/io.hpp"
#include "plum/plum_graph.hpp"

using namespace plum;
using io::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const json& j) {
  const auto path = std::filesystem::path(PLUM_TEST_TMP) / name;
  io::write_file(path, j);
  return path.string();
}

}  // namespace

TEST_CASE("verify theorem1 for n = 1") {
  const Run r = run({"verify", "theorem1", "--n", "1"});
  CHECK(r.code == cli::pass);
  const json j = r.report();
  CHECK(j["command"] == "verify theorem1 --n 1");
  CHECK(j["status"] == "pass");
  CHECK(j["payload"]["lower"] == 2);
  CHECK(j["payload"]["upper"] == 2);
  CHECK(j.contains("durationMs"));
}

TEST_CASE("invariants of a generated diagram") {
  const Run gen = run({"plum", "gen", "--n", "1"});
  REQUIRE(gen.code == cli::pass);
  const std::string file = temp_file("plum3.json", gen.report()["payload"]);
  const Run r = run({"invariants", "--diagram", file});
  CHECK(r.code == cli::pass);
  const json j = r.report();
  CHECK(j["payload"]["linkingVector"] == json::array({3}));
  CHECK(j["payload"]["verdict"] == "nontrivial");
  CHECK_FALSE(j["payload"]["witnesses"].empty());
}

TEST_CASE("shipped fixtures through the command line") {
  const std::string dir = PLUM_FIXTURES;
  const Run inv = run({"invariants", "--diagram", dir + "/plum3.json"});
  CHECK(inv.code == cli::pass);
  CHECK(inv.report()["payload"]["linkingVector"] == json::array({3}));
  const Run proj = run({"projection", "analyze", "--file", dir + "/cube-proj.json"});
  CHECK(proj.code == cli::pass);
  CHECK(proj.report()["payload"]["resolutions"] == 8);
  CHECK(proj.report()["payload"]["knottedCertified"] == true);
}

TEST_CASE("projection analysis of the cube") {
  const Run gen = run({"plum", "gen", "--n", "1", "--kind", "projection"});
  const std::string file = temp_file("cube-proj.json", gen.report()["payload"]);
  const Run r = run({"projection", "analyze", "--file", file});
  CHECK(r.code == cli::pass);
  const json j = r.report();
  CHECK(j["payload"]["resolutions"] == 8);
  CHECK(j["payload"]["nontrivial"] == 8);
}

TEST_CASE("diagram validation reports violations") {
  const Run gen = run({"plum", "gen", "--n", "2"});
  json d = gen.report()["payload"];
  CHECK(run({"diagram", "validate", "--diagram", temp_file("ok.json", d)}).code == cli::pass);
  d["nodeRotation"]["0"].erase(0);
  const Run bad = run({"diagram", "validate", "--diagram", temp_file("bad.json", d)});
  CHECK(bad.code == cli::fail);
  const json j = bad.report();
  CHECK(j["status"] == "fail");
  CHECK_FALSE(j["violations"].empty());
}

TEST_CASE("l1 solve with the move set and with a file") {
  const Run r = run({"l1", "solve", "--n", "2", "--target", "5,0"});
  CHECK(r.code == cli::pass);
  CHECK(r.report()["payload"]["cost"] == 4);
  const std::string gens = temp_file("gens.json", json::parse("[[2,0],[1,1]]"));
  const Run f = run({"l1", "solve", "--gens", gens, "--target", "3,1"});
  CHECK(f.code == cli::pass);
  CHECK(f.report()["payload"]["cost"] == 2);
  const Run starved = run({"l1", "solve", "--n", "2", "--target", "5,0", "--max-cost", "2"});
  CHECK(starved.code == cli::unresolved);
  CHECK(starved.report()["status"] == "unresolved");
}

TEST_CASE("moveset and subclaims") {
  const Run m = run({"moveset", "--n", "3"});
  CHECK(m.code == cli::pass);
  CHECK(m.report()["payload"]["matchesClosedForm"] == true);
  const Run s = run({"verify", "subclaims", "--n", "3"});
  CHECK(s.code == cli::pass);
  CHECK(s.report()["payload"]["subclaims"].size() == 3);
}

TEST_CASE("bounds from a graph file") {
  const json triangle = json::parse(R"({"vertices":[0,1,2],"edges":[[0,0,1],[1,1,2],[2,2,0]]})");
  const std::string file = temp_file("triangle.json", triangle);
  const Run r = run({"bounds", "--graph", file, "--optimize"});
  CHECK(r.code == cli::pass);
  const json j = r.report()["payload"];
  CHECK(j["A"] == 0.5);
  CHECK(j["B"] == 0.0);
  CHECK(j["bMap"] == json::array({1, 1, 1}));
  const Run e = run({"bounds", "--graph", file, "eval", "--c", "6"});
  CHECK(e.code == cli::pass);
  CHECK(e.report()["payload"]["value"] == 3.0);
  CHECK(e.report()["payload"]["trivializable"] == 3);
}

TEST_CASE("usage errors exit with 2 and print usage") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"nonsense"}, {"moveset"}, {"moveset", "--n", "zero"}, {"verify", "theorem1", "--n", "99"},
           {"bounds", "--tree", "x.json", "--optimize"}}) {
    const Run r = run(args);
    CHECK(r.code == cli::usage);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  auto payload = [](const Run& r) {
    json j = r.report();
    j.erase("durationMs");
    return j.dump();
  };
  CHECK(payload(run({"moveset", "--n", "2"})) == payload(run({"moveset", "--n", "2"})));
  CHECK(payload(run({"plum", "gen", "--n", "2"})) == payload(run({"plum", "gen", "--n", "2"})));
}

TEST_CASE("pretty output is human-readable") {
  const Run r = run({"moveset", "--n", "1", "--pretty"});
  CHECK(r.code == cli::pass);
  CHECK(r.out.find("status:   pass") != std::string::npos);
}
