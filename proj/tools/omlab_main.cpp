// omlab: evaluate the inequality catalog on a given operator matrix, run
// seeded sweep campaigns, search for sharpness witnesses, and compute the
// numerical radius. Exit codes: 0 ok, 1 input error, 2 mathematical
// violation of a non-probe check.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omlab/block.hpp"
#include "omlab/catalog.hpp"
#include "omlab/errors.hpp"
#include "omlab/json_io.hpp"
#include "omlab/radius.hpp"
#include "omlab/sampling.hpp"
#include "omlab/sweep.hpp"

namespace {

using namespace omlab;

struct Options {
  std::string input;
  std::string out;
  bool block = false;
  std::string ineq = "all";
  double tol = tols::check;
  std::string klass = "ginibre";
  std::size_t n = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t restarts = 50;
  std::size_t iters = 2000;
};

const char* yn(bool b) { return b ? "yes" : "no"; }

// .csv extension selects the CSV mirror, anything else gets JSON.
bool wants_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

SampleSpec spec_of(const Options& o) {
  auto klass = sample_class_from_string(o.klass);
  if (!klass) throw Error("unknown sample class '" + o.klass + "'");
  SampleSpec spec;
  spec.klass = *klass;
  spec.block_dim = o.n;
  spec.seed = o.seed;
  return spec;
}

int run_check(const Options& o) {
  LoadedInput in = load_input_file(o.input);
  std::optional<CheckContext> ctx;
  if (in.block) {
    ctx.emplace(std::move(*in.block), o.tol);
  } else if (o.block) {
    ctx.emplace(partition(*in.matrix), o.tol);
  } else {
    ctx.emplace(std::move(*in.matrix), o.tol);
  }

  std::vector<std::string> ids;
  if (o.ineq != "all") ids.push_back(o.ineq);
  const std::vector<CheckRow> rows = run_catalog(*ctx, ids);

  std::printf("%-26s %16s %16s %13s  %s\n", "id", "lhs", "rhs", "slack", "holds");
  bool violated = false;
  for (const CheckRow& row : rows) {
    if (!row.result) {
      std::printf("%-26s (not applicable)\n", row.check->id.c_str());
      continue;
    }
    const CheckResult& r = *row.result;
    const bool probe = row.check->expected_falsifiable;
    std::printf("%-26s %16.8g %16.8g %13.4g  %s%s\n", row.check->id.c_str(), r.lhs, r.rhs,
                r.slack, yn(r.holds), probe ? " (probe)" : "");
    if (!probe && !r.holds) violated = true;
  }
  if (!o.out.empty()) {
    write_file(o.out, wants_csv(o.out) ? check_report_csv(rows)
                                       : check_report_json(rows, o.tol, ctx->params()));
  }
  return violated ? 2 : 0;
}

int run_sweep_cmd(const Options& o) {
  const SweepReport report = run_sweep(spec_of(o), o.trials, o.tol);

  std::printf("class %s  n %zu  trials %zu  seed %llu\n", o.klass.c_str(), o.n, o.trials,
              static_cast<unsigned long long>(o.seed));
  std::printf("%-26s %11s %10s %13s %13s\n", "id", "applicable", "violations", "min_slack",
              "mean_slack");
  auto row = [](const CheckAggregate& agg, const char* tag) {
    if (agg.applicable == 0) {
      std::printf("%-26s %11zu%s\n", agg.check->id.c_str(), agg.applicable, tag);
      return;
    }
    std::printf("%-26s %11zu %10zu %13.4g %13.4g%s\n", agg.check->id.c_str(), agg.applicable,
                agg.violations, agg.min_slack, agg.mean_slack, tag);
  };
  for (const CheckAggregate& agg : report.checks) row(agg, "");
  row(report.probe, " (probe)");

  if (!o.out.empty()) {
    write_file(o.out, wants_csv(o.out) ? sweep_report_csv(report) : sweep_report_json(report));
  }
  return report.violation_total() > 0 ? 2 : 0;
}

int run_sharpness(const Options& o) {
  const SampleSpec spec = spec_of(o);
  const SharpnessResult res = sharpness_search(o.ineq, spec, o.restarts, o.iters, o.tol);

  std::printf("check %s  restart %zu\n", o.ineq.c_str(), res.restart);
  std::printf("lhs %.17g  rhs %.17g  slack %.17g  holds %s\n", res.result.lhs, res.result.rhs,
              res.result.slack, yn(res.result.holds));
  if (!o.out.empty()) {
    write_file(o.out, sharpness_report_json(o.ineq, spec, o.restarts, o.iters, o.tol,
                                            CheckParams{}, res));
  }
  return 0;  // informational: a sharp (near-zero) slack is not a violation
}

int run_radius(const Options& o) {
  LoadedInput in = load_input_file(o.input);
  const ComplexMatrix m = in.matrix ? std::move(*in.matrix) : assemble(*in.block);
  if (!m.is_square()) throw DimensionError("radius: input matrix must be square");

  const double omega = numerical_radius(m);
  std::printf("omega    %.17g\n", omega);
  std::printf("norm     %.17g\n", operator_norm(m));
  std::printf("norm_re  %.17g\n", operator_norm(hermitian_part(m)));
  std::printf("norm_im  %.17g\n", operator_norm(skew_part_over_i(m)));
  const OperatorClass cls = classify(m);
  std::printf("hermitian %s  positive %s  accretive %s  dissipative %s  accretive_dissipative %s\n",
              yn(cls.hermitian), yn(cls.positive), yn(cls.accretive), yn(cls.dissipative),
              yn(cls.accretive_dissipative));

  bool real_2x2 = m.rows() == 2;
  for (const cplx& z : m.entries()) real_2x2 = real_2x2 && z.imag() == 0.0;
  if (real_2x2) {
    const double closed = radius_2x2_real(m(0, 0).real(), m(0, 1).real(), m(1, 0).real(),
                                          m(1, 1).real());
    std::printf("closed_form %.17g  |difference| %.3g\n", closed, std::abs(omega - closed));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator matrix inequality laboratory"};
  app.require_subcommand(1);
  Options o;

  auto add_tol = [&o](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol, "check tolerance (relative)")->envname("OMLAB_TOL");
  };
  auto add_sample = [&o](CLI::App* cmd) {
    cmd->add_option("--class", o.klass, "sample class")->default_str("ginibre");
    cmd->add_option("--n", o.n, "block dimension");
    cmd->add_option("--seed", o.seed, "base seed");
  };

  CLI::App* check = app.add_subcommand("check", "evaluate the catalog on one input");
  check->add_option("--input", o.input, "matrix or block JSON file")->required();
  check->add_flag("--block", o.block, "partition a full even-dimension matrix into blocks");
  check->add_option("--ineq", o.ineq, "check id, or 'all'");
  add_tol(check);
  check->add_option("--out", o.out, "report path (.csv for CSV, else JSON)");

  CLI::App* sweep = app.add_subcommand("sweep", "run seeded sample campaigns");
  add_sample(sweep);
  sweep->add_option("--trials", o.trials, "number of samples");
  add_tol(sweep);
  sweep->add_option("--out", o.out, "report path (.csv for CSV, else JSON)");

  CLI::App* sharp = app.add_subcommand("sharpness", "hill-descent search for minimal slack");
  sharp->add_option("--ineq", o.ineq, "check id")->required();
  add_sample(sharp);
  sharp->add_option("--restarts", o.restarts, "independent restarts");
  sharp->add_option("--iters", o.iters, "descent iterations per restart");
  add_tol(sharp);
  sharp->add_option("--out", o.out, "witness report path (JSON)");

  CLI::App* radius = app.add_subcommand("radius", "numerical radius and norms of one input");
  radius->add_option("--input", o.input, "matrix or block JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit clean, bad flags are input errors
  }

  try {
    if (check->parsed()) return run_check(o);
    if (sweep->parsed()) return run_sweep_cmd(o);
    if (sharp->parsed()) return run_sharpness(o);
    return run_radius(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
