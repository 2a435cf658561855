#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace leaguesim {

// The five RAE quality levels, ordered by descending star value.
enum class StarLevel : int {
    four_star = 0,   // "world-leading"
    three_star = 1,  // "internationally excellent"
    two_star = 2,    // "internationally recognized"
    one_star = 3,    // "nationally recognized"
    unclassified = 4,
};

inline constexpr std::size_t kStarLevelCount = 5;

constexpr int star_value(StarLevel level) {
    return 4 - static_cast<int>(level);
}

/// Proportions of a submission's outputs at each star level, indexed by
/// StarLevel (index 0 = 4*). Proportions must lie in [0,1] and sum to 1
/// within 1e-9; construction throws std::invalid_argument otherwise.
class QualityProfile {
  public:
    static constexpr double kSumTolerance = 1e-9;

    explicit QualityProfile(const std::array<double, kStarLevelCount>& proportions);

    double operator[](StarLevel level) const {
        return proportions_[static_cast<std::size_t>(level)];
    }
    double at_index(std::size_t i) const { return proportions_[i]; }
    const std::array<double, kStarLevelCount>& proportions() const { return proportions_; }

    // Advisory check: published profiles come in 5% blocks. Never a hard error.
    bool is_five_percent_blocks(double tol = 1e-9) const;

    friend bool operator==(const QualityProfile&, const QualityProfile&) = default;

  private:
    std::array<double, kStarLevelCount> proportions_;
};

/// Star level -> numeric weight. No ordering constraint; arbitrary schemes
/// are permitted, weights only need to be finite.
struct WeightScheme {
    std::array<double, kStarLevelCount> weights;
    std::string name;

    WeightScheme(const std::array<double, kStarLevelCount>& w, std::string scheme_name);

    double operator[](StarLevel level) const {
        return weights[static_cast<std::size_t>(level)];
    }

    // Funding weights announced after RAE 2008: 4*,3*,2*,1* proportional
    // to 7,3,1,0; unclassified also 0.
    static WeightScheme funding();
    // Average number of stars: 4,3,2,1,0.
    static WeightScheme mean();
};

/// One institution's entry in a unit of assessment.
struct GroupSubmission {
    std::string institution;
    std::string unit;
    double fte_staff;  // full-time-equivalent staff, > 0, fractional allowed
    QualityProfile profile;

    GroupSubmission(std::string institution_name, std::string unit_name,
                    double fte, QualityProfile quality);

    friend bool operator==(const GroupSubmission&, const GroupSubmission&) = default;
};

/// Sum_i w_i * p_i. With the funding scheme this is 7*p4 + 3*p3 + p2.
double weighted_score(const QualityProfile& profile, const WeightScheme& weights);

/// Average number of stars, i.e. weighted_score with the mean scheme. Range [0,4].
double mean_score(const QualityProfile& profile);

/// Variance of the score of one output drawn from the profile:
/// Sum_i p_i*w_i^2 - (Sum_i p_i*w_i)^2. Population formula, no n/(n-1)
/// correction. Always >= 0 (clamped against FP cancellation).
double score_variance(const QualityProfile& profile, const WeightScheme& weights);

/// FTE-weighted average of the member profiles. Throws on an empty list.
QualityProfile pooled_profile(const std::vector<GroupSubmission>& groups);

}  // namespace leaguesim
