#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "leaguesim/classify.hpp"
#include "leaguesim/profile.hpp"
#include "leaguesim/simulate.hpp"
#include "leaguesim/uncertainty.hpp"

namespace leaguesim {

// Process exit codes for run_report.
enum RunStatus : int {
    kRunOk = 0,
    kRunInputNotFound = 2,
    kRunParseFatal = 3,
    kRunTooFewGroups = 4,
    kRunOutputUnwritable = 5,
};

struct RunConfig {
    std::string input_path;
    std::string out_dir;
    WeightScheme weights = WeightScheme::funding();
    std::uint64_t iterations = 10000;
    std::uint64_t seed = 1;
    SimModel model = SimModel::true_score;
    TiePolicy tie_policy = TiePolicy::midrank;
    double level = 0.95;
    BaselineMode baseline_mode = BaselineMode::fte_weighted;
    unsigned workers = 1;
};

const char* model_name(SimModel model);
const char* tie_policy_name(TiePolicy policy);
const char* baseline_name(BaselineMode mode);

/// Run the full pipeline: ingest, score, simulate ranks, classify, and
/// write results.csv, profiles.svg, ranks.svg, scores.svg and summary.txt
/// into out_dir. Returns a RunStatus exit code; diagnostics go to `diag`
/// when given. Output bytes depend only on the input file and the config
/// fields other than `workers`. RNG streams are indexed by input row
/// order; rows are reported in league-table order (descending mean score,
/// ties by institution name).
int run_report(const RunConfig& config, std::ostream* diag = nullptr);

}  // namespace leaguesim
