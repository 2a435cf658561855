#include "leaguesim/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace leaguesim {

namespace {

double checked_sum(const std::array<double, kStarLevelCount>& p) {
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("profile proportion is not finite");
        }
        if (v < 0.0 || v > 1.0) {
            throw std::invalid_argument("profile proportion outside [0,1]");
        }
        sum += v;
    }
    return sum;
}

}  // namespace

QualityProfile::QualityProfile(const std::array<double, kStarLevelCount>& proportions)
    : proportions_(proportions) {
    const double sum = checked_sum(proportions_);
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("profile proportions do not sum to 1");
    }
}

bool QualityProfile::is_five_percent_blocks(double tol) const {
    for (double v : proportions_) {
        const double blocks = v / 0.05;
        if (std::fabs(blocks - std::round(blocks)) > tol / 0.05) {
            return false;
        }
    }
    return true;
}

WeightScheme::WeightScheme(const std::array<double, kStarLevelCount>& w, std::string scheme_name)
    : weights(w), name(std::move(scheme_name)) {
    for (double v : weights) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("weight is not finite");
        }
    }
}

WeightScheme WeightScheme::funding() {
    return WeightScheme({7.0, 3.0, 1.0, 0.0, 0.0}, "funding");
}

WeightScheme WeightScheme::mean() {
    return WeightScheme({4.0, 3.0, 2.0, 1.0, 0.0}, "mean");
}

GroupSubmission::GroupSubmission(std::string institution_name, std::string unit_name,
                                 double fte, QualityProfile quality)
    : institution(std::move(institution_name)),
      unit(std::move(unit_name)),
      fte_staff(fte),
      profile(std::move(quality)) {
    if (!std::isfinite(fte_staff) || fte_staff <= 0.0) {
        throw std::invalid_argument("fte_staff must be positive");
    }
}

double weighted_score(const QualityProfile& profile, const WeightScheme& weights) {
    double score = 0.0;
    for (std::size_t i = 0; i < kStarLevelCount; ++i) {
        score += weights.weights[i] * profile.at_index(i);
    }
    return score;
}

double mean_score(const QualityProfile& profile) {
    return weighted_score(profile, WeightScheme::mean());
}

double score_variance(const QualityProfile& profile, const WeightScheme& weights) {
    double first = 0.0;   // E[w]
    double second = 0.0;  // E[w^2]
    for (std::size_t i = 0; i < kStarLevelCount; ++i) {
        const double w = weights.weights[i];
        const double p = profile.at_index(i);
        first += p * w;
        second += p * w * w;
    }
    const double variance = second - first * first;
    return variance < 0.0 ? 0.0 : variance;  // cancellation can leave -1e-17
}

QualityProfile pooled_profile(const std::vector<GroupSubmission>& groups) {
    if (groups.empty()) {
        throw std::invalid_argument("pooled_profile: no groups");
    }
    std::array<double, kStarLevelCount> pooled{};
    double total_fte = 0.0;
    for (const auto& group : groups) {
        for (std::size_t i = 0; i < kStarLevelCount; ++i) {
            pooled[i] += group.fte_staff * group.profile.at_index(i);
        }
        total_fte += group.fte_staff;
    }
    for (double& v : pooled) {
        v /= total_fte;
        // rounding dust only; real violations still fail the sum check
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
    }
    return QualityProfile(pooled);
}

}  // namespace leaguesim
