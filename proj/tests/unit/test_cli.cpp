#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kFixtures = PROXYALIGN_FIXTURES;
const std::string kCli = PROXYALIGN_CLI;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const std::string& env = "") {
  const auto err_path = fs::temp_directory_path() / "proxyalign_cli_stderr.txt";
  const std::string cmd = env + " " + kCli + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream e(err_path);
  std::ostringstream s;
  s << e.rdbuf();
  r.err = s.str();
  return r;
}

std::string approx_args(const std::string& size = "50") {
  return "approximate --log " + kFixtures + "/l1.xes --model " + kFixtures +
         "/m1.lang --strategy kcenter --size-percent " + size + " --seed 7";
}

}  // namespace

TEST_CASE("approximate prints a JSON report") {
  const auto r = run(approx_args() + " --report json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["proxy"]["strategy"] == "kcenter");
  CHECK(doc["proxy"]["k"] == 2);
  CHECK(doc["aggregates"]["aligner_invocations"] == 2);
  CHECK(doc["variants"].size() == 4);
  CHECK(doc.contains("timings_us"));
  CHECK(r.err.find("seed=7") != std::string::npos);
}

TEST_CASE("no-timings output is byte-identical across runs and job counts") {
  const auto a = run(approx_args() + " --no-timings --jobs 1");
  const auto b = run(approx_args() + " --no-timings --jobs 3");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("timings") == std::string::npos);
}

TEST_CASE("exact on the net fixture") {
  const auto r = run("exact --log " + kFixtures + "/l1.csv --model " + kFixtures + "/m1.pnml --final-marking " +
                     kFixtures + "/m1_final.json");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("trace,multiplicity,cost\n") == 0);
  CHECK(r.out.find("\"a,c,c,b,d,e\",1,2\n") != std::string::npos);
  CHECK(r.out.find("\"b,d,e\",1,2\n") != std::string::npos);
}

TEST_CASE("exit codes and diagnostics") {
  const auto unknown = run("exact --log x --model y --frobnicate");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("error[E-USAGE]") != std::string::npos);
  CHECK(unknown.err.find("Usage") != std::string::npos);

  CHECK(run("").code == 2);
  CHECK(run("approximate --log a --model b --strategy best").code == 2);

  const auto missing = run("exact --log " + kFixtures + "/nope.xes --model " + kFixtures + "/m1.lang");
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error[E-IO]") != std::string::npos);

  const auto no_marking = run("exact --log " + kFixtures + "/l1.xes --model " + kFixtures + "/m1.pnml");
  CHECK(no_marking.code == 1);
  CHECK(no_marking.err.find("error[E-MODEL]") != std::string::npos);

  const auto bad_size = run(approx_args("0"));
  CHECK(bad_size.code == 1);
  CHECK(bad_size.err.find("error[E-ARG]") != std::string::npos);
}

TEST_CASE("environment overrides the default seed") {
  const auto r = run("proxy-gen --log " + kFixtures + "/l1.xes --strategy random --size-percent 50",
                     "PROXYALIGN_SEED=42");
  REQUIRE(r.code == 0);
  CHECK(r.err.find("seed=42") != std::string::npos);
}

TEST_CASE("proxy-out feeds proxy-in") {
  const auto path = (fs::temp_directory_path() / "proxyalign_omega.txt").string();
  const auto a = run(approx_args() + " --no-timings --proxy-out " + path);
  REQUIRE(a.code == 0);
  const auto b = run("approximate --log " + kFixtures + "/l1.xes --model " + kFixtures +
                     "/m1.lang --no-timings --proxy-in " + path);
  REQUIRE(b.code == 0);
  const auto ja = nlohmann::json::parse(a.out);
  const auto jb = nlohmann::json::parse(b.out);
  CHECK(ja["variants"] == jb["variants"]);
  CHECK(jb["proxy"]["strategy"] == "external");
}

TEST_CASE("generate and evaluate") {
  const auto dir = fs::temp_directory_path() / "proxyalign_cli_eval";
  fs::create_directories(dir);
  {
    std::ofstream spec(dir / "spec.json");
    spec << R"({"alphabet_size": 5, "model_trace_count": 6, "log_variant_count": 25, "seed": 3})";
    std::ofstream grid(dir / "grid.json");
    grid << R"({"sizes": [10, 20], "repeats": 2})";
  }
  const auto d = dir.string();
  const auto g = run("generate --spec " + d + "/spec.json --model-out " + d + "/m.lang --log-out " + d + "/l.txt");
  REQUIRE(g.code == 0);
  const auto exact = run("exact --log " + d + "/l.txt --model " + d + "/m.lang");
  CHECK(exact.code == 0);
  const auto e = run("evaluate --spec " + d + "/spec.json --grid " + d + "/grid.json --no-timings --long-out " + d +
                     "/long.csv --correlations-out " + d + "/corr.csv");
  REQUIRE(e.code == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 1 + 4 * 2 * 2);
  CHECK(fs::exists(dir / "long.csv"));
  CHECK(fs::exists(dir / "corr.csv"));
  const auto again = run("evaluate --spec " + d + "/spec.json --grid " + d + "/grid.json --no-timings");
  CHECK(again.out == e.out);
}
