#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "leaguesim/profile.hpp"
#include "leaguesim/ranking.hpp"
#include "leaguesim/uncertainty.hpp"

namespace leaguesim {

enum class SimModel {
    single_output,  // one star-level draw per group per iteration
    true_score,     // normal draw around each group's estimated score
};

struct SimulationConfig {
    std::uint64_t iterations = 10000;
    std::uint64_t seed = 1;
    TiePolicy tie_policy = TiePolicy::midrank;
    SimModel model = SimModel::single_output;
    double level = 0.95;
    // Iterations are sharded across this many workers. The per-(seed,
    // group, iteration) RNG contract makes results identical for any
    // worker count.
    unsigned workers = 1;
};

/// Empirical (or exact) distribution of one group's rank. The histogram
/// maps rank values (half-integers under midrank) to counts for Monte
/// Carlo runs, or to probabilities for the exact oracle.
struct RankDistribution {
    std::string group_id;
    std::map<double, double> histogram;
    double median = 0.0;
    double interval_low = 0.0;
    double interval_high = 0.0;

    double total_weight() const;
    double mean_rank() const;
    /// Histogram rescaled to sum to 1.
    std::map<double, double> normalized() const;
};

/// The star level drawn by stream `group_index` at iteration `iteration`:
/// inverse-CDF lookup of a counter-based uniform against the profile's
/// cumulative proportions. Pure function of (seed, group_index, iteration).
StarLevel single_output_draw(const QualityProfile& profile, std::uint64_t seed,
                             std::uint64_t group_index, std::uint64_t iteration);

/// The score drawn by stream `group_index` at iteration `iteration`:
/// estimate + std_error * Phi^-1(u), with the same counter-based uniform
/// contract as single_output_draw.
double true_score_draw(double estimate, double std_error, std::uint64_t seed,
                       std::uint64_t group_index, std::uint64_t iteration);

/// Bootstrap of a single future output per group: draw one star level per
/// group per iteration, rank by star value (4 best), summarize per group.
/// Requires >= 2 groups and config.model == single_output.
std::vector<RankDistribution> simulate_single_output_ranks(
    const std::vector<GroupSubmission>& groups, const SimulationConfig& config);

/// Rank distribution of "true" scores: each iteration draws every group's
/// score from Normal(estimate, std_error) and ranks the draws.
/// Requires >= 2 estimates and config.model == true_score.
std::vector<RankDistribution> simulate_true_score_ranks(
    const std::vector<ScoreEstimate>& estimates, const std::vector<std::string>& group_ids,
    const SimulationConfig& config);

/// Convenience overload computing the estimates from group profiles.
std::vector<RankDistribution> simulate_true_score_ranks(
    const std::vector<GroupSubmission>& groups, const WeightScheme& weights,
    const SimulationConfig& config);

/// Exact rank distribution for the single-output model by enumerating the
/// full joint outcome space (5^N outcomes, N capped at 8). Histograms hold
/// probabilities summing to 1; summaries use level 0.95.
std::vector<RankDistribution> exact_single_output_rank_distribution(
    const std::vector<GroupSubmission>& groups, TiePolicy tie_policy);

}  // namespace leaguesim
