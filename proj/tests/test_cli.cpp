// End-to-end tests that drive the installed command line binary. The path to
// the executable is baked in by the build as OMLAB_BIN.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "omlab/catalog.hpp"
#include "omlab/json_io.hpp"
#include "omlab/sweep.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + OMLAB_BIN " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, got);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  res.exit_code = WEXITSTATUS(status);
  return res;
}

// first number following `key` in the captured output
double value_after(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find(key);
  REQUIRE_MESSAGE(pos != std::string::npos, "missing '" << key << "' in:\n" << text);
  return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

std::string line_with(const std::string& text, const std::string& needle) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    if (line.find(needle) != std::string::npos) return line;
    start = end + 1;
  }
  FAIL("no line containing '" << needle << "' in:\n" << text);
  return {};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("omlab_cli_" + std::to_string(static_cast<long>(getpid())));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const std::string p = (path / name).string();
    omlab::write_file(p, content);
    return p;
  }
};

const char* kNilMatrix =
    R"({"rows":2,"cols":2,"data":[[[0,0],[1,0]],[[0,0],[0,0]]]})";

// block input whose (t11, t12) pair falsifies the probe: row vectors (1,1)
// and (1,-1) have orthogonal absolute values
const char* kProbeBlock = R"({
  "t11": {"rows":2,"cols":2,"data":[[[1,0],[1,0]],[[0,0],[0,0]]]},
  "t12": {"rows":2,"cols":2,"data":[[[1,0],[-1,0]],[[0,0],[0,0]]]},
  "t21": {"rows":2,"cols":2,"data":[[[0,0],[0,0]],[[0,0],[0,0]]]},
  "t22": {"rows":2,"cols":2,"data":[[[0,0],[0,0]],[[0,0],[0,0]]]}
})";

const char* kFull4x4 = R"({"rows":4,"cols":4,"data":[
  [[1,0],[0,1],[0,0],[2,0]],
  [[0,-1],[1,0],[1,0],[0,0]],
  [[0,0],[1,0],[1,0],[0,0]],
  [[2,0],[0,0],[0,0],[1,0]]]})";

}  // namespace

TEST_CASE("radius reports closed form agreement on real 2x2 input") {
  TempDir tmp;
  const std::string in = tmp.file("nil.json", kNilMatrix);
  const RunResult r = run("radius --input " + in);
  CHECK(r.exit_code == 0);
  CHECK(value_after(r.output, "omega") == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(value_after(r.output, "norm ") == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(value_after(r.output, "closed_form") == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(value_after(r.output, "|difference|") <= 1e-8);
  CHECK(line_with(r.output, "hermitian").find("hermitian no") != std::string::npos);
}

TEST_CASE("radius assembles block input") {
  TempDir tmp;
  const std::string in = tmp.file("probe.json", kProbeBlock);
  const RunResult r = run("radius --input " + in);
  CHECK(r.exit_code == 0);
  // assembled matrix is the rank-one row (1, 1, 1, -1)
  CHECK(value_after(r.output, "norm ") == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(value_after(r.output, "omega") == doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("check passes on sound checks and tolerates the probe violation") {
  TempDir tmp;
  const std::string in = tmp.file("probe.json", kProbeBlock);

  const RunResult all = run("check --input " + in);
  CHECK(all.exit_code == 0);
  CHECK(line_with(all.output, "probe_false_triangle_abs").find("no (probe)") !=
        std::string::npos);
  CHECK(line_with(all.output, "norm_radius_equiv").find("yes") != std::string::npos);
  CHECK(line_with(all.output, "eq8").find("(not applicable)") != std::string::npos);

  const RunResult one = run("check --input " + in + " --ineq probe_false_triangle_abs");
  CHECK(one.exit_code == 0);
  CHECK(value_after(one.output, "probe_false_triangle_abs") ==
        doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("a non-probe violation exits 2") {
  TempDir tmp;
  const std::string in = tmp.file("probe.json", kProbeBlock);
  // a negative tolerance demands positive margin, which this input cannot meet
  const RunResult r = run("check --input " + in + " --ineq norm_radius_equiv --tol -1");
  CHECK(r.exit_code == 2);
  CHECK(line_with(r.output, "norm_radius_equiv").find("no") != std::string::npos);
}

TEST_CASE("OMLAB_TOL feeds the tolerance and the flag overrides it") {
  TempDir tmp;
  const std::string in = tmp.file("probe.json", kProbeBlock);
  const std::string args = "check --input " + in + " --ineq norm_radius_equiv";
  CHECK(run(args, "OMLAB_TOL=-1 ").exit_code == 2);
  CHECK(run(args + " --tol 1e-8", "OMLAB_TOL=-1 ").exit_code == 0);
  CHECK(run(args).exit_code == 0);
}

TEST_CASE("--block partitions a full matrix, otherwise it stays unstructured") {
  TempDir tmp;
  const std::string in = tmp.file("full.json", kFull4x4);

  const RunResult plain = run("check --input " + in);
  CHECK(plain.exit_code == 0);
  CHECK(line_with(plain.output, "circulant_eq").find("(not applicable)") !=
        std::string::npos);
  CHECK(line_with(plain.output, "norm_radius_equiv").find("yes") != std::string::npos);

  const RunResult split = run("check --input " + in + " --block");
  CHECK(split.exit_code == 0);
  CHECK(line_with(split.output, "circulant_eq").find("yes") != std::string::npos);
  CHECK(line_with(split.output, "shebr_upper").find("yes") != std::string::npos);
}

TEST_CASE("check writes json and csv reports") {
  TempDir tmp;
  const std::string in = tmp.file("probe.json", kProbeBlock);
  const std::string json_out = (tmp.path / "report.json").string();
  const std::string csv_out = (tmp.path / "report.csv").string();

  CHECK(run("check --input " + in + " --out " + json_out).exit_code == 0);
  const std::string json = omlab::read_file(json_out);
  CHECK(json.rfind("{\"kind\":\"check\"", 0) == 0);
  CHECK(json.find("\"id\":\"probe_false_triangle_abs\"") != std::string::npos);

  CHECK(run("check --input " + in + " --out " + csv_out).exit_code == 0);
  const std::string csv = omlab::read_file(csv_out);
  CHECK(csv.rfind("id,paper_location,applicable,lhs,rhs,slack,holds\n", 0) == 0);
}

TEST_CASE("sweep exits clean, emits deterministic reports, and its witnesses replay") {
  TempDir tmp;
  const std::string out1 = (tmp.path / "sweep1.json").string();
  const std::string out2 = (tmp.path / "sweep2.json").string();
  const std::string args = "sweep --class ginibre --n 1 --trials 120 --seed 7 --out ";

  const RunResult r1 = run(args + out1);
  CHECK(r1.exit_code == 0);  // probe violations are expected, not failures
  CHECK(line_with(r1.output, "(probe)").find("probe_false_triangle_abs") !=
        std::string::npos);
  const RunResult r2 = run(args + out2);
  CHECK(r2.exit_code == 0);
  CHECK(r1.output == r2.output);

  const std::string rep1 = omlab::read_file(out1);
  CHECK(rep1 == omlab::read_file(out2));

  const auto witnesses = omlab::witness_from_report_json(rep1, "probe_false_triangle_abs");
  REQUIRE(witnesses.size() == 2);
  omlab::CheckContext ctx(witnesses[0], witnesses[1]);
  const omlab::CheckResult replay =
      evaluate_check(omlab::find_check("probe_false_triangle_abs"), ctx);
  CHECK(replay.slack < 0.0);
  CHECK(!replay.holds);

  const std::string csv_out = (tmp.path / "sweep.csv").string();
  CHECK(run("sweep --class hermitian --n 2 --trials 10 --seed 1 --out " + csv_out)
            .exit_code == 0);
  CHECK(omlab::read_file(csv_out).rfind(
            "id,paper_location,applicable_count,violations,min_slack,mean_slack\n", 0) == 0);
}

TEST_CASE("sharpness reports a witness that replays to the printed slack") {
  TempDir tmp;
  const std::string out = (tmp.path / "sharp.json").string();
  const RunResult r = run(
      "sharpness --ineq thm06 --class ginibre --n 1 --seed 17 --restarts 3 --iters 60 --out " +
      out);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("check thm06") != std::string::npos);
  const double printed = value_after(r.output, "slack ");

  const auto witnesses = omlab::witness_from_report_json(omlab::read_file(out), "thm06");
  REQUIRE(witnesses.size() == 1);
  omlab::CheckContext ctx(omlab::partition(witnesses[0]));
  const omlab::CheckResult replay = evaluate_check(omlab::find_check("thm06"), ctx);
  CHECK(replay.slack == doctest::Approx(printed).epsilon(1e-12));
}

TEST_CASE("input errors exit 1 with a diagnostic") {
  TempDir tmp;
  const RunResult missing = run("check --input " + (tmp.path / "absent.json").string());
  CHECK(missing.exit_code == 1);
  CHECK(missing.output.find("error: cannot open file") != std::string::npos);

  const std::string odd = tmp.file("odd.json",
                                   R"({"rows":1,"cols":1,"data":[[[1,0]]]})");
  const RunResult oddr = run("check --input " + odd + " --block");
  CHECK(oddr.exit_code == 1);

  const std::string bad = tmp.file("bad.json", "{\"rows\": 2");
  CHECK(run("check --input " + bad).exit_code == 1);

  const std::string nil = tmp.file("nil.json", kNilMatrix);
  const RunResult unknown_check = run("check --input " + nil + " --ineq nope");
  CHECK(unknown_check.exit_code == 1);
  CHECK(unknown_check.output.find("nope") != std::string::npos);

  CHECK(run("sweep --class wishart --trials 1").exit_code == 1);
  CHECK(run("check").exit_code == 1);           // --input is required
  CHECK(run("frobnicate").exit_code == 1);      // unknown subcommand
  CHECK(run("--help").exit_code == 0);
}
