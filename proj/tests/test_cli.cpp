#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

std::string bin() {
  const char* b = std::getenv("CURVELATTICE_BIN");
  REQUIRE_MESSAGE(b != nullptr, "CURVELATTICE_BIN is not set");
  return b;
}

std::string data(const std::string& name) { return std::string(CURVELATTICE_DATA_DIR) + "/" + name; }

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  std::string cmd = quote(bin());
  for (auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("spectrum of the cusp") {
  auto r = run({"spectrum", "--f", "x^2+y^3", "--weights", "3,2"});
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["spectrum"] == json({{"-1/6", 1}, {"1/6", 1}}));
  CHECK(d["schema"] == "curvelattice/1");
  CHECK(d["deviations"].is_array());
  // Weights are inferred when omitted.
  CHECK(run({"spectrum", "--f", "x^2+y^3"}).doc()["spectrum"] == d["spectrum"]);
}

TEST_CASE("mwrank on the nine-cusp sextic") {
  auto r = run({"mwrank", "--f", "x^2+y^3", "--curve", data("ninecusp.json")});
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["rank"] == 6);
  CHECK(d["applicable"] == true);
}

TEST_CASE("qequiv of A2(2) and A2(3)") {
  auto d = run({"lattice", "qequiv", "--a", data("a2_2.json"), "--b", data("a2_3.json")}).doc();
  CHECK(d["equivalent"] == false);
  CHECK(d["witness_prime"] == 3);
  auto same = run({"lattice", "qequiv", "--a", "[[2,-1],[-1,2]]", "--b", "[[8,-4],[-4,8]]"}).doc();
  CHECK(same["equivalent"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({"spectrum"}).code == 1);
  CHECK(run({"spectrum", "--f", "x^2+y^3", "--field", "Q"}).code == 1);
  CHECK(run({"spectrum", "--f", "x^2+*y"}).code == 1);
  CHECK(run({"lattice", "id", "--gram", data("missing.json")}).code == 1);
  auto na = run({"mwrank", "--f", "x^2+y^3", "--g", "x^3+y^3+z^3"});
  CHECK(na.code == 2);
  CHECK(na.doc()["error"]["kind"] == "NotApplicable");
  CHECK(run({"lattice", "minvec", "--gram", "[[1,2],[2,1]]"}).code == 2);
  CHECK(run({"spectrum", "--f", "x^2*y^2", "--weights", "1,1"}).code == 2);
}

TEST_CASE("reports are reproducible") {
  auto a = run({"table1", "--k", "2", "--seed", "3"});
  auto b = run({"table1", "--k", "2", "--seed", "3", "--threads", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto d = a.doc();
  CHECK(d["gram"] == json({{6, -3}, {-3, 6}}));
  CHECK(d["verified"] == true);
  CHECK(d["deviations"].size() == 1);
  CHECK(run({"table1", "--k", "2", "--seed", "4"}).out != a.out);
}

TEST_CASE("toric pipeline through files") {
  std::string pts = "cli_test_points.json";
  auto f = run({"toric", "find", "--curve", data("ninecusp.json"), "--out", pts});
  REQUIRE(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(pts);
  json d = json::parse(in);
  CHECK(d["count"] == 72);
  CHECK(d["scale"] == "16");
  CHECK(d["deviations"].size() == 1);
  auto g = run({"toric", "gram", "--points", pts}).doc();
  CHECK(g["lattice"]["rank"] == 6);
  CHECK(g["lattice"]["identify"]["tag"] == "E6");
  CHECK(g["lattice"]["identify"]["evidence"]["tuple"] == "(6, 3, 2, 72)");
  std::ofstream(pts) << d["points"][0].dump();
  auto v = run({"toric", "verify", "--point", pts}).doc();
  CHECK(v["ok"] == true);
  CHECK(run({"toric", "orbit", "--point", pts}).doc()["points"].size() == 6);
  std::remove(pts.c_str());
}

TEST_CASE("zariski on fixture sides") {
  json a = json::parse(std::ifstream(data("lindner_fixture.json")));
  a["name"] = "A";
  a["gram"] = {{6, -3}, {-3, 6}};
  auto r = run({"zariski", "--a", a.dump(), "--b", data("lindner_fixture.json")});
  REQUIRE(r.code == 0);
  auto d = r.doc();
  CHECK(d["verdict"] == "certificate");
  CHECK(d["assumptions"].size() == 1);
  CHECK(d["a"]["diagonalization"]["entries"].size() == 2);
  CHECK(d["q_equivalence"]["hasse"].contains("3"));
  auto same = run({"zariski", "--a", data("lindner_fixture.json"), "--b", data("lindner_fixture.json")}).doc();
  CHECK(same["verdict"] == "inconclusive");
  a["cusps"] = 29;
  auto bad = run({"zariski", "--a", a.dump(), "--b", data("lindner_fixture.json")});
  CHECK(bad.code == 2);
  CHECK(bad.doc()["error"]["kind"] == "PrereqFailed");
}

TEST_CASE("weier check") {
  auto d = run({"weier", "check", "--B", "t^6 + 1", "--k", "1"}).doc();
  CHECK(d["minimal"] == true);
  CHECK(d["fibers"]["irreducible"] == true);
  auto red = run({"weier", "check", "--A", "-3*t^2", "--B", "2*t^3", "--k", "1"});
  CHECK(red.code == 2);  // 4A^3 + 27B^2 = 0
  auto i2 = run({"weier", "check", "--A", "-3", "--B", "2 + t^2", "--k", "1"}).doc();
  CHECK(i2["fibers"]["irreducible"] == false);
}
