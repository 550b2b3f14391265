#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "remnet/config.hpp"
#include "remnet/netsim.hpp"
#include "remnet/rem.hpp"

namespace remnet {

// One evaluation run under one (metric, localization) arm.
struct RunResult {
    int run = 0;
    MetricKind metric = MetricKind::Hausdorff;
    std::string localization;
    std::string arm; // "<metric>_<localization>"
    std::size_t matched_entry = 0;
    Action chosen;
    EvalOutcome outcome;
    EvalOutcome baseline; // all PBSs active
    EvalOutcome oracle;   // best of the exhaustive per-run action scan
    bool qos_violation = false;
};

struct ArmSummary {
    std::string arm;
    int runs = 0;
    double mean_ee = 0.0;
    double mean_baseline_ee = 0.0;
    double mean_oracle_ee = 0.0;
    double gain_vs_baseline = 0.0; // ratio of arm mean to baseline mean
    int qos_violations = 0;
    std::vector<double> ee_cdf; // per-run EE samples, sorted ascending
};

struct SummaryStats {
    std::vector<ArmSummary> arms;
};

// Builds the map: fixes one UE subgroup, replays its motion pattern, tags
// one entry per snapshot epoch, and fills every entry's action table with
// rewards measured by the simulator. The all-on configuration is always
// evaluated first per entry, both to anchor the reward rule and so that
// later reduction is well-defined under any exploration policy. Throws if
// even the all-on configuration serves nobody.
Rem run_learning_phase(const ExperimentConfig& config);

// Replays the same motion pattern with fresh random subgroups. Each run
// matches its reported positions against the map once per metric and
// localization arm, applies the selected action, and also scores the all-on
// baseline and the exhaustive oracle on the identical episode. Subgroups,
// start epochs and noise draws are shared across arms.
std::vector<RunResult> run_evaluation_phase(const ExperimentConfig& config, const Rem& rem);

// Per-arm means, gain ratios (mean EE over baseline mean EE) and sorted EE
// samples. Throws on empty input.
SummaryStats summarize(const std::vector<RunResult>& results);

void write_results_csv(std::ostream& out, std::span<const RunResult> results);
void write_summary_csv(std::ostream& out, const SummaryStats& summary);

struct FullExperimentOutput {
    Rem rem;
    std::vector<RunResult> results;
    SummaryStats summary;
};

FullExperimentOutput run_full_experiment(const ExperimentConfig& config);

} // namespace remnet
