#include "omlab/sweep.hpp"

#include <cmath>
#include <utility>

#include "omlab/block.hpp"
#include "omlab/errors.hpp"
#include "omlab/rng.hpp"

namespace omlab {

namespace {

// Equality checks rank witnesses by |slack|; inequalities by signed slack.
double margin_of(const InequalityCheck& c, const CheckResult& r) {
  return c.kind == CheckKind::equality ? -std::abs(r.slack) : r.slack;
}

}  // namespace

std::vector<CheckRow> run_catalog(CheckContext& ctx, const std::vector<std::string>& ids) {
  std::vector<const InequalityCheck*> selected;
  if (ids.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) selected.push_back(&find_check(id));
  }

  std::vector<CheckRow> rows;
  rows.reserve(selected.size());
  for (const InequalityCheck* c : selected) {
    CheckRow row;
    row.check = c;
    row.applicable = c->applicable(ctx);
    if (row.applicable) row.result = c->evaluate(ctx);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t SweepReport::violation_total() const {
  std::size_t total = 0;
  for (const auto& agg : checks) total += agg.violations;
  return total;
}

SweepReport run_sweep(const SampleSpec& spec, std::size_t trials, double tol,
                      CheckParams params) {
  SweepReport report;
  report.spec = spec;
  report.trials = trials;
  report.tol = tol;
  report.params = params;

  struct Slot {
    CheckAggregate agg;
    double sum = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::optional<std::size_t> worst_trial;
  };

  std::vector<Slot> slots;
  Slot probe_slot;
  const InequalityCheck* probe = nullptr;
  for (const auto& c : registry()) {
    if (c.expected_falsifiable) {
      probe = &c;
      probe_slot.agg.check = &c;
    } else {
      Slot s;
      s.agg.check = &c;
      slots.push_back(std::move(s));
    }
  }

  const bool pair_mode = spec.block_dim == 1;

  const auto make_trial_sample = [&](std::size_t k) {
    SampleSpec s = spec;
    s.seed = derive_seed(spec.seed, k);
    return sample(s);
  };
  const auto make_probe_partner = [&](std::size_t k) {
    SampleSpec s = spec;
    s.seed = derive_seed(spec.seed, k, 1);
    return sample(s);
  };

  const auto accumulate = [&](Slot& slot, const InequalityCheck& c, const CheckResult& r,
                              std::size_t trial) {
    slot.agg.applicable += 1;
    slot.sum += r.slack;
    slot.agg.min_slack = std::min(slot.agg.min_slack, r.slack);
    if (!r.holds) slot.agg.violations += 1;
    const double margin = margin_of(c, r);
    if (margin < slot.worst_margin) {
      slot.worst_margin = margin;
      slot.worst_trial = trial;
    }
  };

  for (std::size_t k = 0; k < trials; ++k) {
    const ComplexMatrix m = make_trial_sample(k);
    CheckContext ctx(partition(m), tol, params);
    for (Slot& slot : slots) {
      const InequalityCheck& c = *slot.agg.check;
      if (!c.applicable(ctx)) continue;
      accumulate(slot, c, c.evaluate(ctx), k);
    }
    if (probe != nullptr) {
      if (pair_mode) {
        CheckContext pctx(m, make_probe_partner(k), tol, params);
        accumulate(probe_slot, *probe, probe->evaluate(pctx), k);
      } else if (probe->applicable(ctx)) {
        accumulate(probe_slot, *probe, probe->evaluate(ctx), k);
      }
    }
  }

  const auto finalize = [&](Slot& slot, bool is_probe) {
    if (slot.agg.applicable > 0) {
      slot.agg.mean_slack = slot.sum / static_cast<double>(slot.agg.applicable);
    }
    if (slot.worst_trial) {
      const ComplexMatrix m = make_trial_sample(*slot.worst_trial);
      if (is_probe && pair_mode) {
        slot.agg.worst_witness = {m, make_probe_partner(*slot.worst_trial)};
      } else {
        slot.agg.worst_witness = {m};
      }
    }
  };

  for (Slot& slot : slots) {
    finalize(slot, false);
    report.checks.push_back(std::move(slot.agg));
  }
  finalize(probe_slot, true);
  report.probe = std::move(probe_slot.agg);
  return report;
}

}  // namespace omlab
