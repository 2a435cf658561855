#include "leaguesim/uncertainty.hpp"

#include <cmath>
#include <stdexcept>

#include "leaguesim/normal.hpp"

namespace leaguesim {

double effective_sample_size(double fte_staff) {
    if (!std::isfinite(fte_staff) || fte_staff <= 0.0) {
        throw std::invalid_argument("effective_sample_size: fte_staff must be positive");
    }
    return 6.0 * fte_staff;
}

double standard_error(const QualityProfile& profile, const WeightScheme& weights,
                      double fte_staff) {
    return std::sqrt(score_variance(profile, weights) / effective_sample_size(fte_staff));
}

ScoreEstimate confidence_interval(double estimate, double std_error, double level,
                                  double effective_n) {
    if (std_error < 0.0 || !std::isfinite(std_error)) {
        throw std::invalid_argument("confidence_interval: std_error must be >= 0");
    }
    const double z = two_sided_z(level);  // rejects level outside (0,1)
    ScoreEstimate result;
    result.estimate = estimate;
    result.std_error = std_error;
    result.effective_n = effective_n;
    result.level = level;
    result.interval_low = estimate - z * std_error;
    result.interval_high = estimate + z * std_error;
    return result;
}

ScoreEstimate group_score_estimate(const GroupSubmission& group,
                                   const WeightScheme& weights, double level) {
    const double estimate = weighted_score(group.profile, weights);
    const double se = standard_error(group.profile, weights, group.fte_staff);
    return confidence_interval(estimate, se, level, effective_sample_size(group.fte_staff));
}

OverlapSummary count_overall_mean_overlaps(const std::vector<GroupSubmission>& groups,
                                           const WeightScheme& weights, double level,
                                           BaselineMode baseline_mode) {
    if (groups.empty()) {
        throw std::invalid_argument("count_overall_mean_overlaps: no groups");
    }

    OverlapSummary summary;
    if (baseline_mode == BaselineMode::fte_weighted) {
        summary.overall_mean = weighted_score(pooled_profile(groups), weights);
    } else {
        double sum = 0.0;
        for (const auto& group : groups) {
            sum += weighted_score(group.profile, weights);
        }
        summary.overall_mean = sum / static_cast<double>(groups.size());
    }

    summary.overlaps.reserve(groups.size());
    for (const auto& group : groups) {
        const ScoreEstimate est = group_score_estimate(group, weights, level);
        const bool overlaps =
            est.interval_low <= summary.overall_mean && summary.overall_mean <= est.interval_high;
        summary.overlaps.push_back(overlaps);
        if (overlaps) {
            ++summary.count;
        }
    }
    return summary;
}

}  // namespace leaguesim
