#pragma once

#include <vector>

#include "leaguesim/profile.hpp"

namespace leaguesim {

/// Point estimate of a weighted score with its normal-approximation
/// uncertainty. interval_low <= estimate <= interval_high always holds;
/// a zero standard error collapses the interval onto the estimate.
struct ScoreEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    double effective_n = 1.0;  // effective number of outputs behind the estimate
    double interval_low = 0.0;
    double interval_high = 0.0;
    double level = 0.95;
};

enum class BaselineMode {
    fte_weighted,  // score of the FTE-pooled profile
    unweighted,    // plain average of the group scores
};

/// Overlap diagnostic for a set of groups: which 95% (or other level)
/// intervals contain the overall mean. Closed-interval comparison.
struct OverlapSummary {
    double overall_mean = 0.0;
    std::vector<bool> overlaps;  // parallel to the input group order
    int count = 0;
};

/// Information content of a submission: 6 outputs per FTE staff member
/// (4 publications each, counting for 70% of the profile).
double effective_sample_size(double fte_staff);

/// sqrt(score_variance / (6 * fte_staff)).
double standard_error(const QualityProfile& profile, const WeightScheme& weights,
                      double fte_staff);

/// Central normal interval estimate +/- z(level) * std_error.
/// effective_n is carried through for reporting; defaults to 1.
ScoreEstimate confidence_interval(double estimate, double std_error, double level,
                                  double effective_n = 1.0);

/// Full estimate for one group's weighted score.
ScoreEstimate group_score_estimate(const GroupSubmission& group,
                                   const WeightScheme& weights, double level);

/// How many groups' intervals contain the overall mean, under the chosen
/// baseline definition.
OverlapSummary count_overall_mean_overlaps(const std::vector<GroupSubmission>& groups,
                                           const WeightScheme& weights, double level,
                                           BaselineMode baseline_mode);

}  // namespace leaguesim
