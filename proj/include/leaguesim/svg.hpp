#pragma once

#include <string>
#include <vector>

#include "leaguesim/profile.hpp"
#include "leaguesim/simulate.hpp"
#include "leaguesim/uncertainty.hpp"

namespace leaguesim {

// Static, self-contained SVG charts. Callers pass groups already in
// league-table order (descending mean score); that order is drawn top to
// bottom.

/// Stacked horizontal bars of each profile with the FTE count annotated
/// at the end of the bar.
std::string profiles_chart_svg(const std::vector<GroupSubmission>& league_order);

/// Dot-and-whisker chart of rank medians and intervals, best rank on the
/// left.
std::string ranks_chart_svg(const std::vector<RankDistribution>& league_order, double level);

/// Dot-and-whisker chart of score estimates and intervals with a vertical
/// reference line at the overall mean.
std::string scores_chart_svg(const std::vector<std::string>& labels,
                             const std::vector<ScoreEstimate>& estimates, double overall_mean,
                             double level, const std::string& score_name);

}  // namespace leaguesim
