#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "omlab/catalog.hpp"
#include "omlab/sampling.hpp"

namespace omlab {

// One row of a single-input catalog run (cmd check).
struct CheckRow {
  const InequalityCheck* check = nullptr;
  bool applicable = false;
  std::optional<CheckResult> result;
};

// Evaluates the registry (or the subset named by ids) against one context.
// Unknown ids throw UnknownCheck; empty ids means the whole registry.
std::vector<CheckRow> run_catalog(CheckContext& ctx, const std::vector<std::string>& ids = {});

// Per-check aggregate over a sweep.
struct CheckAggregate {
  const InequalityCheck* check = nullptr;
  std::size_t applicable = 0;
  std::size_t violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double mean_slack = 0.0;                        // defined when applicable > 0
  std::vector<ComplexMatrix> worst_witness;       // 1 matrix, or 2 in pair mode
};

struct SweepReport {
  SampleSpec spec;
  std::size_t trials = 0;
  double tol = tols::check;
  CheckParams params;
  std::vector<CheckAggregate> checks;  // registry order, probe excluded
  CheckAggregate probe;                // expected-falsifiable probe, reported apart
  std::size_t violation_total() const;
};

// Runs `trials` seeded samples of spec's class and dimension and evaluates
// every applicable check on each. Trial k uses seed derive_seed(spec.seed, k),
// so the report is a pure function of (spec, trials, tol, params). With
// block_dim == 1 the probe swaps to pair mode: two independent full 2x2
// samples instead of the scalar blocks, which satisfy the triangle
// inequality identically.
SweepReport run_sweep(const SampleSpec& spec, std::size_t trials, double tol = tols::check,
                      CheckParams params = {});

}  // namespace omlab
