#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qac/catalog.hpp"
#include "qac/cmx.hpp"

using namespace qac;

namespace {

Instance named(const std::string& name) {
  for (auto& in : builtin())
    if (in.name == name) return in;
  REQUIRE(false);
  return {};
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cmx(const std::string& args) {
  const char* bin = std::getenv("CMX_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path fixture_dir() {
  auto dir = std::filesystem::temp_directory_path() / "cmx-cli-fixtures";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  auto path = fixture_dir() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

}  // namespace

TEST_CASE("emit / parse roundtrip is byte-identical on every builtin") {
  for (const auto& in : builtin()) {
    std::string s1 = emit(to_document(in.cm));
    CmxDocument d = parse(s1);
    CHECK(emit(d) == s1);
    CrossedModule cm = to_crossed_module(d);
    INFO(in.name);
    CHECK(cm.boundary == in.cm.boundary);
    CHECK(cm.gact == in.cm.gact);
    CHECK(cm.F.grp.tab == in.cm.F.grp.tab);
    CHECK(cm.G.act == in.cm.G.act);
    CHECK(validate(cm).ok() == validate(in.cm).ok());
  }
}

TEST_CASE("comments and extra whitespace are tolerated") {
  std::string s =
      "cmx 1  # header\n# full comment line\n[gamma]\norder 1\ntable\n0\n"
      "[group F]\norder 1\ntable\n0\n[group G]\norder 2\ntable\n0 1\n1 0\n"
      "[boundary]\n0\n[action G F]\n0\n0\n[action gamma F]\n0\n[action gamma G]\n0 1\n";
  CmxDocument d = parse(s);
  CHECK(d.g_order == 2);
  CHECK(validate(to_crossed_module(d)).ok());
}

TEST_CASE("parse errors carry line and column positions") {
  auto expect_err = [](const std::string& text, int line) {
    try {
      parse(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column >= 1);
      CHECK(!e.expectation.empty());
    }
  };
  expect_err("cmx 2\n", 1);                                // unsupported version
  expect_err("cmx 1\n[gamma]\norder 1\ntable\n0 0\n", 5);  // row too long
  // boundary row too short: reported at the row's own line
  expect_err(
      "cmx 1\n[gamma]\norder 1\ntable\n0\n"
      "[group F]\norder 2\ntable\n0 1\n1 0\n[group G]\norder 2\ntable\n0 1\n1 0\n"
      "[boundary]\n0\n[action G F]\n0 1\n0 1\n[action gamma F]\n0 1\n[action gamma G]\n0 1\n",
      17);
}

TEST_CASE("exit code 0: passing verdicts") {
  std::string f = write_fixture("z4z2.cmx", emit(to_document(named("z4-z2-trivial").cm)));
  CHECK(run_cmx("validate " + f).exit_code == 0);
  CHECK(run_cmx("theorem42 " + f).exit_code == 0);
  CHECK(run_cmx("twistcheck " + f).exit_code == 0);
  CHECK(run_cmx("catalog list").exit_code == 0);
}

TEST_CASE("the pinned cardinality: H1_ab of (Z/4 -> Z/2) is 2") {
  std::string f = write_fixture("z4z2.cmx", emit(to_document(named("z4-z2-trivial").cm)));
  RunResult r = run_cmx("cohomology " + f + " --object ab --degree 1 --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "CARD\tH1_ab\t2\n");
}

TEST_CASE("tsv output is KEY<TAB>VALUE lines throughout") {
  std::string f = write_fixture("z4z2.cmx", emit(to_document(named("z4-z2-trivial").cm)));
  for (const std::string& sub : {"validate", "theorem42", "twistcheck"}) {
    RunResult r = run_cmx(sub + " " + f + " --format tsv");
    INFO(sub);
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      INFO(line);
      auto tab = line.find('\t');
      REQUIRE(tab != std::string::npos);
      std::string key = line.substr(0, tab);
      CHECK(!key.empty());
      CHECK(key.find(' ') == std::string::npos);
      ++count;
    }
    CHECK(count > 0);
  }
  // theorem42 emits the joint verdicts and the image criterion
  RunResult t = run_cmx("theorem42 " + f + " --format tsv");
  CHECK(t.out.find("EXACT_AT\t") != std::string::npos);
  CHECK(t.out.find("AB1_IMAGE_CRITERION\ttrue") != std::string::npos);
  CHECK(t.out.find("CARD\tH1_G\t") != std::string::npos);
  CHECK(t.out.find("CHECK\ttheorem42\ttrue") != std::string::npos);
}

TEST_CASE("exit code 1: a failed mathematical verdict") {
  std::string f = write_fixture("z3c3.cmx", emit(to_document(named("0-z3-c3").cm)));
  RunResult r = run_cmx("twistcheck " + f + " --corrupt-rp --format tsv");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("CHECK\tprop311_rP\tfalse") != std::string::npos);
}

TEST_CASE("exit code 2: parse and validation errors") {
  std::string bad = write_fixture("bad.cmx", "cmx 2\n");
  CHECK(run_cmx("validate " + bad).exit_code == 2);
  // syntactically fine, mathematically invalid: non-automorphism Gamma-action
  CmxDocument d = to_document(named("z4-z2-inversion").cm);
  d.act_gamma_f[1] = {0, 2, 1, 3};
  std::string invalid = write_fixture("invalid.cmx", emit(d));
  RunResult r = run_cmx("validate " + invalid + " --format tsv");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("VALID\tfalse") != std::string::npos);
  CHECK(r.out.find("WITNESS\t") != std::string::npos);
  CHECK(run_cmx("theorem42 " + invalid).exit_code == 2);
  CHECK(run_cmx("cohomology " + invalid + " --object ab --degree 1").exit_code == 2);
  // missing file
  CHECK(run_cmx("validate /nonexistent/no.cmx").exit_code == 2);
}

TEST_CASE("exit code 3: budget exhaustion, flag overrides environment") {
  std::string f = write_fixture("z4z2.cmx", emit(to_document(named("z4-z2-trivial").cm)));
  CHECK(run_cmx("theorem42 " + f + " --budget 1").exit_code == 3);
  CHECK(run_cmx("cohomology " + f + " --object ab --degree 2 --budget 1").exit_code == 3);
  // environment variable alone
  const char* bin = std::getenv("CMX_BIN");
  REQUIRE(bin != nullptr);
  std::string env_cmd = "CMX_BUDGET=1 " + std::string(bin) + " theorem42 " + f +
                        " >/dev/null 2>&1";
  int st = std::system(env_cmd.c_str());
  CHECK(WEXITSTATUS(st) == 3);
  // the flag wins over the environment
  std::string both_cmd = "CMX_BUDGET=1 " + std::string(bin) + " theorem42 " + f +
                         " --budget 100000000 >/dev/null 2>&1";
  st = std::system(both_cmd.c_str());
  CHECK(WEXITSTATUS(st) == 0);
}

TEST_CASE("catalog list names every builtin in tsv form") {
  RunResult r = run_cmx("catalog list --format tsv");
  CHECK(r.exit_code == 0);
  for (const auto& in : builtin())
    CHECK(r.out.find("INSTANCE\t" + in.name + "\t") != std::string::npos);
}

TEST_CASE("discover over the command line") {
  RunResult r = run_cmx("discover --max-f 2 --max-g 2 --max-gamma 2 --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("INSTANCE\t") != std::string::npos);
}
