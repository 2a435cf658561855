#pragma once

#include <string>
#include <vector>

#include "leaguesim/simulate.hpp"

namespace leaguesim {

enum class Band {
    top,        // rank interval lies wholly in the top half
    bottom,     // rank interval lies wholly in the bottom half
    uncertain,  // interval straddles the midline
};

const char* band_name(Band band);

struct BandAssignment {
    std::string group_id;
    Band band = Band::uncertain;
    double rank_interval_low = 0.0;
    double rank_interval_high = 0.0;
};

struct BandCounts {
    int top = 0;
    int bottom = 0;
    int uncertain = 0;
    int certain() const { return top + bottom; }
};

/// Three-way allocation by rank interval. Top: interval_high <= N/2.
/// Bottom: interval_low > N/2 for even N; for odd N the middle rank
/// (N+1)/2 belongs to neither half, so Bottom requires
/// interval_low > (N+1)/2. Half-integer endpoints compare with the same
/// rules, no rounding.
std::vector<BandAssignment> classify_by_rank_interval(
    const std::vector<RankDistribution>& rank_dists, std::size_t n_groups);

BandCounts count_bands(const std::vector<BandAssignment>& assignments);

}  // namespace leaguesim
