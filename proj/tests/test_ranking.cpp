#include "leaguesim/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <vector>

#include "doctest.h"

using namespace leaguesim;

TEST_CASE("distinct scores rank by descending value") {
    const std::vector<double> scores{5, 2, 9};
    CHECK(rank_with_ties(scores, TiePolicy::midrank) == std::vector<double>{2, 3, 1});
    CHECK(rank_with_ties(scores, TiePolicy::minrank) == std::vector<double>{2, 3, 1});
}

TEST_CASE("ties split by policy") {
    const std::vector<double> scores{3, 1, 3};
    CHECK(rank_with_ties(scores, TiePolicy::midrank) == std::vector<double>{1.5, 3, 1.5});
    CHECK(rank_with_ties(scores, TiePolicy::minrank) == std::vector<double>{1, 3, 1});
}

TEST_CASE("full tie averages all positions") {
    const std::vector<double> scores{4, 4, 4};
    CHECK(rank_with_ties(scores, TiePolicy::midrank) == std::vector<double>{2, 2, 2});
    CHECK(rank_with_ties(scores, TiePolicy::minrank) == std::vector<double>{1, 1, 1});
}

TEST_CASE("empty input throws") {
    CHECK_THROWS_AS(rank_with_ties(std::vector<double>{}, TiePolicy::midrank),
                    std::invalid_argument);
}

TEST_CASE("property: midrank sums to N(N+1)/2 and minranks are spanned minima") {
    std::mt19937_64 gen(4001);
    std::uniform_int_distribution<int> size_dist(1, 40);
    std::uniform_int_distribution<int> value_dist(0, 4);  // force plenty of ties
    for (int trial = 0; trial < 400; ++trial) {
        const int n = size_dist(gen);
        std::vector<double> scores(static_cast<std::size_t>(n));
        for (double& s : scores) {
            s = value_dist(gen);
        }
        const auto mid = rank_with_ties(scores, TiePolicy::midrank);
        double sum = 0.0;
        for (double r : mid) {
            sum += r;
            CHECK(r >= 1.0);
            CHECK(r <= static_cast<double>(n));
        }
        CHECK(sum == static_cast<double>(n) * (n + 1) / 2.0);

        const auto min = rank_with_ties(scores, TiePolicy::minrank);
        for (std::size_t i = 0; i < scores.size(); ++i) {
            CHECK(min[i] == std::floor(min[i]));  // integral
            CHECK(min[i] <= mid[i]);
            // minrank = 1 + number of strictly better scores
            int better = 0;
            for (double other : scores) {
                if (other > scores[i]) {
                    ++better;
                }
            }
            CHECK(min[i] == static_cast<double>(better + 1));
        }
    }
}

TEST_CASE("property: distinct scores give a permutation of 1..N") {
    std::mt19937_64 gen(4002);
    std::uniform_real_distribution<double> value(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> scores(12);
        for (double& s : scores) {
            s = value(gen);
        }
        const auto ranks = rank_with_ties(scores, TiePolicy::midrank);
        std::vector<double> sorted_ranks(ranks);
        std::sort(sorted_ranks.begin(), sorted_ranks.end());
        for (std::size_t i = 0; i < sorted_ranks.size(); ++i) {
            CHECK(sorted_ranks[i] == static_cast<double>(i + 1));
        }
        // rank 1 goes to the maximum
        const auto best =
            std::distance(scores.begin(), std::max_element(scores.begin(), scores.end()));
        CHECK(ranks[static_cast<std::size_t>(best)] == 1.0);
    }
}
