#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cox/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cox::run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

const char* kB3 = R"({"nodes":["a","b","c"],"edges":[["a","b",3],["b","c",4]]})";
const char* kAffineA1 = R"({"nodes":["a","b"],"edges":[["a","b","inf"]]})";

}  // namespace

TEST_CASE("symbol verbs") {
  auto c = run({"symbol", "classify"}, kB3);
  REQUIRE(c.code == 0);
  auto j = parsed(c);
  CHECK(j["finite"] == true);
  CHECK(j["order"] == 48);
  CHECK(j["components"][0]["type"] == "B3");

  auto e = parsed(run({"symbol", "euler"}, kAffineA1));
  CHECK(e["euler"]["num"] == 0);
  auto s = parsed(run({"symbol", "signature"}, kAffineA1));
  CHECK(s["zero"] == 1);
  CHECK(run({"symbol", "classify"}, "{not json").code == 2);
  CHECK(run({"symbol", "signature", "--inf", "-0.5"}, kAffineA1).code == 2);
}

TEST_CASE("weyl and modtwo verbs") {
  auto info = parsed(run({"weyl", "info", "E", "6"}));
  CHECK(info["h"] == 12);
  CHECK(parsed(run({"weyl", "info", "E6"})) == info);
  CHECK(run({"weyl", "info", "Z", "9"}).code == 2);

  auto w = parsed(run({"modtwo", "weight", "A", "4", "--node", "2"}));
  CHECK(w["u"] == nlohmann::json::array({3, 6, 4, 2}));
  CHECK(w["admissible"] == true);
  CHECK(w["lambda_dim"] == 4);

  auto adm = parsed(run({"modtwo", "admissible", "E", "6"}));
  CHECK(adm["nodes"].size() == 6);
  auto d = parsed(run({"modtwo", "dpsi", "B", "6"}));
  CHECK(d["d"] == 6);
  CHECK(run({"modtwo", "dpsi", "A", "4"}).code == 2);
}

TEST_CASE("involution classes") {
  auto j = parsed(run({"involutions", "classes"}, kB3));
  CHECK(j["classes"].size() == 5);
}

TEST_CASE("torsion-free verbs and exit codes") {
  auto b = parsed(run({"tf", "build", "--psi", "A", "4", "--nodes", "2"}));
  CHECK(b["m"] == 1);
  CHECK(b["gamma"]["nodes"].size() == 5);

  auto c = run({"tf", "certify", "--psi", "E", "6", "--nodes", "1", "--mode", "hat"});
  CHECK(c.code == 0);
  auto cj = parsed(c);
  CHECK(cj["ok"] == true);
  CHECK(cj["index"] == 6635520);
  for (const auto& step : cj["steps"]) CHECK(step["ok"] == true);

  CHECK(run({"tf", "certify", "--psi", "B", "2", "--nodes", "1"}).code == 2);
  CHECK(run({"tf", "certify", "--psi", "A", "4", "--nodes", "2", "--mode", "plain"}).code == 2);
  CHECK(run({"tf", "extend", "--psi", "A", "4", "--nodes", "2"}).code == 2);
  auto x = parsed(run({"tf", "extend", "--psi", "E8", "--nodes", "7"}));
  CHECK(x["variant"] == "generic");
  CHECK(x["p"] == 1);
}

TEST_CASE("geometry verbs") {
  auto v = parsed(run({"geometry", "volume", "4"}));
  CHECK(v["vol"]["num"] == 8);
  CHECK(v["vol"]["den"] == 3);
  CHECK(v["vol"]["pi_power"] == 2);
  CHECK(v["chi"]["num"] == 2);
  auto s = parsed(run({"geometry", "covol", "--route", "siegel", "--dim", "8"}));
  auto g = parsed(run({"geometry", "covol", "--route", "gb", "--dim", "8"}));
  CHECK(s["covol"] == g["covol"]);
  CHECK(parsed(run({"geometry", "vinberg", "6"}))["attachment"] == 1);
  CHECK(run({"geometry", "volume", "5"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"weyl", "info"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic and flags only affect stderr") {
  const std::vector<std::string> cmd{"tf", "certify", "--psi", "A", "4", "--nodes", "2"};
  auto a = run(cmd), b = run(cmd);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  CHECK_FALSE(a.err.empty());
  auto q = run({"--quiet", "tf", "certify", "--psi", "A", "4", "--nodes", "2"});
  auto j = run({"tf", "certify", "--psi", "A", "4", "--nodes", "2", "--json"});
  CHECK(q.out == a.out);
  CHECK(j.out == a.out);
  CHECK(q.err.empty());
  CHECK(j.err.empty());
}
