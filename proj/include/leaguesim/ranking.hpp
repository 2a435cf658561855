#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace leaguesim {

enum class TiePolicy {
    midrank,  // tied values get the average of the rank positions they span
    minrank,  // tied values get the smallest spanned rank position
};

/// Ranks with 1 = highest score (best). Under midrank the result sums to
/// N(N+1)/2 exactly. Throws on an empty input.
std::vector<double> rank_with_ties(std::span<const double> scores, TiePolicy policy);

/// Allocation-free variant for hot loops: order_buf is scratch, out must
/// have scores.size() elements.
void rank_with_ties_into(std::span<const double> scores, TiePolicy policy,
                         std::vector<std::size_t>& order_buf, std::span<double> out);

}  // namespace leaguesim
