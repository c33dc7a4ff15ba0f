#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "segre/error.hpp"
#include "segre/runner.hpp"
#include "segre/serialize.hpp"
#include "segre/spec.hpp"

using namespace segre;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> X2{"x1", "x2"};

struct Proc {
  int rc = -1;
  std::string out, err;
};

fs::path tmpdir() {
  fs::path d(SEGRE_TEST_TMP);
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = tmpdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

Proc kit(const std::string& args) {
  fs::path o = tmpdir() / "stdout.txt", e = tmpdir() / "stderr.txt";
  std::string cmd = std::string("\"") + SEGRE_KIT_PATH + "\" " + args + " >" + o.string() + " 2>" + e.string();
  int status = std::system(cmd.c_str());
  Proc p;
  p.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  p.out = read_file(o.string());
  p.err = read_file(e.string());
  return p;
}

const char* kHund = R"({
  "name": "hund",
  "variables": ["x1", "x2"],
  "matrix": [["x1", "0"], ["0", "x2"]],
  "points": [["0", "0"]],
  "tasks": ["Mg", "segre", "verify"],
  "expect": {"segre": [{"point": ["0", "0"], "numbers": [0, 2, 1]}]}
})";

}  // namespace

TEST_CASE("run: passing spec exits 0 with a report") {
  auto p = kit("run " + write("hund.json", kHund));
  REQUIRE(p.rc == 0);
  auto j = json::parse(p.out);
  CHECK(j["version"] == version_string());
  CHECK(j["results"]["segre"][0]["numbers"] == json::array({0, 2, 1}));
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("run: --out writes the report to a file") {
  fs::path out = tmpdir() / "report.json";
  fs::remove(out);
  auto p = kit("run " + write("hund.json", kHund) + " --out " + out.string());
  CHECK(p.rc == 0);
  CHECK(p.out.empty());
  CHECK(json::parse(read_file(out.string()))["results"]["structure"] == "DIAGONAL_MONOMIAL");
}

TEST_CASE("run: a wrong expectation exits 1 with a diff") {
  std::string spec = kHund;
  spec.replace(spec.find("[0, 2, 1]"), 9, "[0, 2, 2]");
  auto p = kit("run " + write("wrong.json", spec));
  CHECK(p.rc == 1);
  CHECK(p.err.find("expected") != std::string::npos);
  CHECK(p.err.find("got") != std::string::npos);
}

TEST_CASE("golden: a corrupted fixture exits 1 with a readable diff") {
  fs::path dir = tmpdir() / "corrupt";
  fs::create_directories(dir);
  std::string spec = kHund;
  spec.replace(spec.find("[0, 2, 1]"), 9, "[0, 3, 1]");
  std::ofstream(dir / "broken.json") << spec;
  auto p = kit("golden --skip-numeric --fixtures " + dir.string());
  CHECK(p.rc == 1);
  CHECK(p.err.find("FAIL broken") != std::string::npos);
  CHECK(p.err.find("expected: [0,3,1]") != std::string::npos);
  CHECK(p.err.find("got:      [0,2,1]") != std::string::npos);
}

TEST_CASE("golden: the shipped corpus passes without numerics") {
  auto p = kit("golden --skip-numeric");
  CHECK(p.rc == 0);
  CHECK(p.err.find(" 0 failed") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with line and column") {
  auto p = kit("run " + write("badpoly.json", "{\n  \"variables\": [\"x1\"],\n  \"matrix\": [[\"x1 + y\"]]\n}\n"));
  CHECK(p.rc == 2);
  CHECK(p.err.find("PARSE_ERROR") != std::string::npos);
  CHECK(p.err.find("line 3") != std::string::npos);
  auto q = kit("run " + write("badjson.json", "{\n  \"variables\": [\"x1\"\n}\n"));
  CHECK(q.rc == 2);
  CHECK(q.err.find("line 3") != std::string::npos);
  auto r = kit("run " + write("badkey.json", "{\n  \"variables\": [\"x1\"],\n  \"matrix\": [[\"x1\"]],\n  \"colour\": 1\n}\n"));
  CHECK(r.rc == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(kit("frobnicate").rc == 2);
  CHECK(kit("run").rc == 2);
}

TEST_CASE("unsupported inputs exit 3") {
  auto p = kit("run " + write("general.json",
                              R"({"variables": ["x1", "x2"], "matrix": [["x1", "x2+1"], ["x2", "x1"]], "tasks": ["Mg"]})"));
  CHECK(p.rc == 3);
  CHECK(p.err.find("UNSUPPORTED_INPUT") != std::string::npos);
  CHECK(p.err.find("GENERAL") != std::string::npos);
  // an unresolved degree blocks the Segre numbers
  auto q = kit("run " + write("partial.json", R"({"variables": ["x1", "x2", "x3"],
    "matrix": [["x1*x3", "0", "0"], ["0", "x2*x3", "0"], ["0", "0", "x3^2"]],
    "points": [["0", "0", "0"]], "tasks": ["segre"]})"));
  CHECK(q.rc == 3);
  CHECK(q.err.find("UNSUPPORTED_TERM") != std::string::npos);
}

TEST_CASE("uncertified numerics exit 4") {
  auto p = kit("run " + write("undecided.json", R"({"variables": ["x"], "matrix": [["x^3"]],
    "engine": "numeric", "points": [["0"]], "tasks": ["segre"]})") +
               " --extrapolation none --epsilon-schedule 0.3,0.2,0.1 --samples 20000");
  CHECK(p.rc == 4);
  CHECK(p.err.find("UNDECIDED") != std::string::npos);
}

TEST_CASE("mass subcommand is seed-deterministic") {
  std::string spec = write("x3.json", R"({"variables": ["x"], "matrix": [["x^3"]], "engine": "numeric"})");
  auto a = kit("mass " + spec + " --samples 20000 --seed 5");
  auto b = kit("mass " + spec + " --samples 20000 --seed 5");
  REQUIRE(a.rc == 0);
  CHECK(a.out == b.out);
  auto c = kit("mass " + spec + " --samples 20000 --seed 6");
  CHECK(json::parse(c.out)["seed"] == 6);
}

TEST_CASE("report JSON round-trips through the printer") {
  auto p = kit("run " + write("hund.json", kHund));
  auto j = json::parse(p.out);
  CHECK(json::parse(j.dump()) == j);
  CHECK(json::parse(j.dump(2)) == j);
}

TEST_CASE("typed round-trips") {
  auto spec = parse_spec(kHund);
  auto res = compute_Mg(spec.matrix);
  for (const auto& c : res.M) CHECK(cycle_from_json(cycle_to_json(c, X2), X2) == c);
  for (const auto& c : res.ring_M) CHECK(cycle_from_json(cycle_to_json(c, X2), X2) == c);
  auto rep = segre_numbers(res, {Scalar(0), Scalar(0)});
  auto back = segre_report_from_json(segre_report_to_json(rep, X2), X2);
  CHECK(back.point == rep.point);
  CHECK(back.numbers == rep.numbers);
  CHECK(back.provenance == rep.provenance);
  REQUIRE(back.distinguished.size() == rep.distinguished.size());
  for (size_t i = 0; i < rep.distinguished.size(); ++i) {
    CHECK(back.distinguished[i].variety == rep.distinguished[i].variety);
    CHECK(back.distinguished[i].coefficient == rep.distinguished[i].coefficient);
  }
  MassEstimate m;
  m.value = 2.9991234567890123;
  m.stderr_ = 1.5e-4;
  m.per_epsilon = {{0.1, 2.7}, {0.01, 2.97}};
  m.extrapolated = true;
  auto mb = mass_estimate_from_json(json::parse(mass_estimate_to_json(m).dump()));
  CHECK(mb.value == m.value);
  CHECK(mb.stderr_ == m.stderr_);
  CHECK(mb.per_epsilon == m.per_epsilon);
  CHECK(mb.extrapolated);
  Scalar s(Rational(-3, 7), Rational(5, 2));
  CHECK(scalar_from_json(scalar_to_json(s)) == s);
  // moving and fiber terms survive as well
  auto row = compute_Mg(parse_matrix({{"x1", "x2"}}, X2));
  for (const auto& c : row.M) CHECK(cycle_from_json(cycle_to_json(c, X2), X2) == c);
  for (const auto& c : row.ring_M) CHECK(cycle_from_json(cycle_to_json(c, X2), X2) == c);
}

TEST_CASE("in-process exit codes match the error classes") {
  CHECK(exit_code_for(ErrorCode::Parse) == 2);
  CHECK(exit_code_for(ErrorCode::UnsupportedInput) == 3);
  CHECK(exit_code_for(ErrorCode::UnsupportedTerm) == 3);
  CHECK(exit_code_for(ErrorCode::Undecided) == 4);
  RunFlags f;
  f.skip_numeric = true;
  auto r = run_spec(parse_spec(kHund), f);
  CHECK(r.exit_code == 0);
}
