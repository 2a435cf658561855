#include "leaguesim/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leaguesim {

void rank_with_ties_into(std::span<const double> scores, TiePolicy policy,
                         std::vector<std::size_t>& order_buf, std::span<double> out) {
    const std::size_t n = scores.size();
    if (n == 0) {
        throw std::invalid_argument("rank_with_ties: empty score list");
    }

    order_buf.resize(n);
    std::iota(order_buf.begin(), order_buf.end(), std::size_t{0});
    std::sort(order_buf.begin(), order_buf.end(),
              [&scores](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order_buf[j + 1]] == scores[order_buf[i]]) {
            ++j;
        }
        // positions i..j (0-based) are tied; ranks are 1-based
        const double rank = (policy == TiePolicy::midrank)
                                ? (static_cast<double>(i + j) / 2.0 + 1.0)
                                : static_cast<double>(i + 1);
        for (std::size_t k = i; k <= j; ++k) {
            out[order_buf[k]] = rank;
        }
        i = j + 1;
    }
}

std::vector<double> rank_with_ties(std::span<const double> scores, TiePolicy policy) {
    std::vector<double> ranks(scores.size());
    std::vector<std::size_t> order;
    rank_with_ties_into(scores, policy, order, ranks);
    return ranks;
}

}  // namespace leaguesim
