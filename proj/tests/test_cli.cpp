#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("MALCEV_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string corpus_dir() {
  const char* p = std::getenv("MALCEV_CORPUS");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/malcev_clitest_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("check reports the canonical example and exits zero") {
  RunResult r = run("check " + corpus_dir() + "/m4.alg");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("EQ2") != std::string::npos);
  CHECK(r.out.find("lie: false") != std::string::npos);
  CHECK(r.out.find("malcev: true") != std::string::npos);
  CHECK(r.out.find('\033') == std::string::npos);  // no color on a pipe
}

TEST_CASE("jacobiator prints the expected combination") {
  RunResult r = run("jacobiator " + corpus_dir() + "/m4.alg e1 e2 e3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3*e4") != std::string::npos);
}

TEST_CASE("parse errors exit with the usage code") {
  std::string bad = tmp_file("bad.alg", "field rational\ndim 2\nbasis a\n");
  CHECK(run("check " + bad).exit_code == 2);
  CHECK(run("check /nonexistent/file.alg").exit_code == 2);
  CHECK(run("no-such-subcommand").exit_code == 2);
}

TEST_CASE("failing checks exit with code one") {
  std::string bad = tmp_file("nonmalcev.datum",
                             "field rational\ndim 1\nbasis a\n"
                             "space V { basis v1 v2 v3 }\n"
                             "bv [v1,v2] = v3\nbv [v1,v3] = v1\n");
  RunResult r = run("unified " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("the resource guard exits with code three") {
  std::string big = tmp_file("big.alg", "field gf 7\ndim 3\nbasis a b c\n");
  CHECK(run("classify " + big + " --dimV 1").exit_code == 3);
}

TEST_CASE("json reports are byte-identical across runs") {
  std::string m4 = corpus_dir() + "/m4.alg";
  RunResult a = run("check " + m4 + " --format json");
  RunResult b = run("check " + m4 + " --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult c = run("solve-flag " + m4 + " --lambda e2=1 --field 5 --seed 11 --format json");
  RunResult d = run("solve-flag " + m4 + " --lambda e2=1 --field 5 --seed 11 --format json");
  CHECK(c.exit_code == 1);  // the functional fails its scalar condition
  CHECK(c.out == d.out);
  CHECK(c.out.find("\"family\": \"D1\"") != std::string::npos);
}

TEST_CASE("extract emits the datum document") {
  RunResult r = run("extract " + corpus_dir() + "/m4.alg --sub e1,e2,e4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tl e2 e3 = e4") != std::string::npos);
  CHECK(r.out.find("tr e1 e3 = e3") != std::string::npos);
}

TEST_CASE("unified with diagnostics surfaces the typo triage") {
  std::string datum = tmp_file("extracted.datum",
                               "field rational\ndim 3\nbasis e1 e2 e4\n"
                               "[e1,e2] = e2\n[e1,e4] = -e4\n"
                               "space V { basis u }\n"
                               "tl e2 u = e4\ntr e1 u = u\n");
  RunResult direct = run("unified " + datum);
  CHECK(direct.exit_code == 0);
  RunResult diag = run("unified " + datum + " --diagnose");
  CHECK(diag.exit_code == 1);  // the first condition in the list deviates
  CHECK(diag.out.find("triage") != std::string::npos);
}

TEST_CASE("failing conditions serialize with the stable schema") {
  std::string datum = tmp_file("extr2.datum",
                               "field rational\ndim 3\nbasis e1 e2 e4\n"
                               "[e1,e2] = e2\n[e1,e4] = -e4\n"
                               "space V { basis u }\n"
                               "tl e2 u = e4\ntr e1 u = u\n");
  RunResult r = run("unified " + datum + " --diagnose --format json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"condition_id\": \"U1\"") != std::string::npos);
  CHECK(r.out.find("\"passed\": false") != std::string::npos);
  CHECK(r.out.find("\"as_printed\": false") != std::string::npos);
  CHECK(r.out.find("\"witnesses\"") != std::string::npos);
}

TEST_CASE("parallel classification is deterministic") {
  std::string alg = tmp_file("solv2b.alg", "field gf 5\ndim 2\nbasis e1 e2\n[e1,e2] = e2\n");
  RunResult off = run("classify " + alg + " --dimV 1 --format json --parallel off");
  RunResult on = run("classify " + alg + " --dimV 1 --format json --parallel on");
  CHECK(off.exit_code == 0);
  CHECK(off.out == on.out);
}

TEST_CASE("classify agrees across routes on the desk-scale instance") {
  std::string alg = tmp_file("solv2.alg", "field gf 5\ndim 2\nbasis e1 e2\n[e1,e2] = e2\n");
  RunResult r = run("classify " + alg + " --dimV 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"total_data\": 225") != std::string::npos);
  CHECK(r.out.find("\"classes_equiv\": 7") != std::string::npos);
  CHECK(r.out.find("\"classes_cohom\": 13") != std::string::npos);
}
