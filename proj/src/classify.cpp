#include "leaguesim/classify.hpp"

#include <stdexcept>

namespace leaguesim {

const char* band_name(Band band) {
    switch (band) {
        case Band::top:
            return "Top";
        case Band::bottom:
            return "Bottom";
        case Band::uncertain:
            return "Uncertain";
    }
    return "Uncertain";
}

std::vector<BandAssignment> classify_by_rank_interval(
    const std::vector<RankDistribution>& rank_dists, std::size_t n_groups) {
    if (n_groups < 2) {
        throw std::invalid_argument("classification needs at least 2 groups");
    }
    if (rank_dists.size() != n_groups) {
        throw std::invalid_argument("rank distribution count does not match n_groups");
    }

    const double half = static_cast<double>(n_groups) / 2.0;
    // for odd N the middle rank belongs to neither half
    const double bottom_gate =
        (n_groups % 2 == 0) ? half : static_cast<double>(n_groups + 1) / 2.0;

    std::vector<BandAssignment> assignments;
    assignments.reserve(n_groups);
    for (const auto& dist : rank_dists) {
        BandAssignment a;
        a.group_id = dist.group_id;
        a.rank_interval_low = dist.interval_low;
        a.rank_interval_high = dist.interval_high;
        if (dist.interval_high <= half) {
            a.band = Band::top;
        } else if (dist.interval_low > bottom_gate) {
            a.band = Band::bottom;
        } else {
            a.band = Band::uncertain;
        }
        assignments.push_back(std::move(a));
    }
    return assignments;
}

BandCounts count_bands(const std::vector<BandAssignment>& assignments) {
    BandCounts counts;
    for (const auto& a : assignments) {
        switch (a.band) {
            case Band::top:
                ++counts.top;
                break;
            case Band::bottom:
                ++counts.bottom;
                break;
            case Band::uncertain:
                ++counts.uncertain;
                break;
        }
    }
    return counts;
}

}  // namespace leaguesim
