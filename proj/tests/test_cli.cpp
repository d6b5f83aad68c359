#include <sys/wait.h>

#include <cstdio>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "jonq/text.hpp"

using namespace jonq;
using namespace jt;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + std::string(JONQ_BIN) + " " + args;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cases(const char* name) { return std::string(JONQ_CASES) + "/" + name; }

std::string line_after(const std::string& out, const std::string& key) {
  auto at = out.find(key);
  REQUIRE(at != std::string::npos);
  auto start = at + key.size();
  return out.substr(start, out.find('\n', start) - start);
}

std::string strip_runtime(const std::string& s) { return std::regex_replace(s, std::regex("\"runtime_ms\": ?[0-9]+"), ""); }

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run("validate " + cases("e1.case")).code == 0);
  auto bad = run("validate " + cases("common_factor.case"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("gcd(f,g) ≠ 1") != std::string::npos);
  CHECK(run("validate " + cases("malformed.case") + " 2>/dev/null").code == 1);
  CHECK(run("validate /nonexistent.case 2>/dev/null").code == 1);
  CHECK(run("frobnicate 2>/dev/null").code == 1);
}

TEST_CASE("invert E2") {
  auto r = run("invert " + cases("e2.case"));
  REQUIRE(r.code == 0);
  CHECK(line_after(r.out, "factor: ") == "x1*x2*x4");
  CHECK(line_after(r.out, "factor degree: ") == "3");
}

TEST_CASE("resolve E1") {
  auto r = run("resolve " + cases("e1.case"));
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("1 | 3 | 2\n", 0) == 0);
  CHECK(line_after(r.out, "shifts: ") == "0 | 2,2,2 | 3,3");
  CHECK(line_after(r.out, "groebner: ") == "agrees");
}

TEST_CASE("printed polynomials parse back") {
  auto r = run("downgrade " + cases("e3.case"));
  REQUIRE(r.code == 0);
  auto s = ring<Q>("x1,x2,x3,y1,y2,y3");
  auto x = ring<Q>("x1,x2,x3");
  std::regex form("F([0-9]) = (.*)    \\[bidegree");
  std::smatch m;
  auto text = r.out;
  int forms = 0;
  while (std::regex_search(text, m, form)) {
    auto p = parse_polynomial(m[2].str(), s);
    CHECK(to_string(p) == m[2].str());
    ++forms;
    text = m.suffix();
  }
  CHECK(forms == 2);
  auto q1 = line_after(r.out, "q1 = ");
  CHECK(to_string(parse_polynomial(q1, x)) == q1);

  auto inv = run("invert " + cases("e3.case"));
  REQUIRE(inv.code == 0);
  auto y = ring<Q>("y1,y2,y3");
  for (const char* key : {"f' = ", "g' = "}) {
    auto t = line_after(inv.out, key);
    CHECK(to_string(parse_polynomial(t, y)) == t);
  }
}

TEST_CASE("rees report") {
  auto r = run("rees --json " + cases("e3.case"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"]["n"] == 2);
  CHECK(j["case"]["d"] == 3);
  CHECK(j["case"]["seed"] == 5);
  CHECK(j["theorem"] == "pass");
  CHECK(j["colon"] == "pass");
  CHECK(j["cone_hilbert"] == "pass");
  CHECK(j["projdim"] == 2);
  CHECK(j["cm"] == true);
  CHECK(j.contains("runtime_ms"));

  auto only = nlohmann::json::parse(run("rees --json --checks=theorem " + cases("e1.case")).out);
  CHECK(only.contains("theorem"));
  CHECK_FALSE(only.contains("projdim"));
  CHECK(run("rees --checks=bogus " + cases("e1.case") + " 2>/dev/null").code == 1);
}

TEST_CASE("reports are deterministic") {
  auto a = run("rees --json " + cases("e3.case"));
  auto b = run("rees --json " + cases("e3.case"));
  CHECK(strip_runtime(a.out) == strip_runtime(b.out));
  const std::string sweep = "explore --n-range 2..3 --d-range 2..3 --trials 2 --seed 3 2>/dev/null";
  auto par = run(sweep);
  auto ser = run(sweep + " --serial");
  CHECK(par.code == 0);
  CHECK(strip_runtime(par.out) == strip_runtime(ser.out));
}

TEST_CASE("explore example") {
  auto r = run("explore --n-range 2..2 --d-range 2..3 --trials 1 --seed 7 2>/dev/null");
  REQUIRE(r.code == 0);
  std::vector<nlohmann::json> lines;
  std::size_t pos = 0, nl;
  while ((nl = r.out.find('\n', pos)) != std::string::npos) {
    lines.push_back(nlohmann::json::parse(r.out.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  REQUIRE(lines.size() == 2);
  for (const auto& j : lines) {
    CHECK(j["cm"] == true);
    CHECK(j["case"]["seed"].is_number_unsigned());
    CHECK(j["case"]["field"] == "GF(32003)");
  }
  CHECK(lines[0]["case"]["d"] == 2);
  CHECK(lines[1]["case"]["d"] == 3);
}

TEST_CASE("modulus from the environment") {
  auto r = run("explore --n-range 2..2 --d-range 2..2 --trials 1 2>/dev/null", "env -u JONQ_MODULUS ");
  auto e = run("explore --n-range 2..2 --d-range 2..2 --trials 1 2>/dev/null", "JONQ_MODULUS=101 ");
  CHECK(nlohmann::json::parse(r.out)["case"]["field"] == "GF(32003)");
  CHECK(e.out.find("\"field\":\"GF(101)\"") != std::string::npos);
  auto flag = run("--modulus 103 explore --n-range 2..2 --d-range 2..2 --trials 1 2>/dev/null");
  CHECK(flag.out.find("\"field\":\"GF(103)\"") != std::string::npos);
}
