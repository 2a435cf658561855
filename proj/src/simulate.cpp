#include "leaguesim/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "leaguesim/normal.hpp"
#include "leaguesim/rng.hpp"

namespace leaguesim {

namespace {

// Ranks are half-integers in [1, N]; doubling them gives exact integers in
// [2, 2N], stored at index doubled-2 of a (2N-1)-slot histogram.
double rank_from_slot(std::size_t idx) {
    return static_cast<double>(idx + 2) / 2.0;
}

// Index per the inverse-CDF convention x_ceil(q*m). The small slack stops
// exact integers like 0.025*10000 from rounding up through FP noise.
std::uint64_t quantile_index(double q, std::uint64_t m) {
    const double raw = std::ceil(q * static_cast<double>(m) - 1e-9);
    if (raw < 1.0) {
        return 1;
    }
    if (raw > static_cast<double>(m)) {
        return m;
    }
    return static_cast<std::uint64_t>(raw);
}

RankDistribution summarize_counts(std::string id, const std::uint64_t* slots,
                                  std::size_t n_slots, std::uint64_t iterations,
                                  double level) {
    RankDistribution dist;
    dist.group_id = std::move(id);
    const std::uint64_t k_low = quantile_index((1.0 - level) / 2.0, iterations);
    const std::uint64_t k_med = quantile_index(0.5, iterations);
    const std::uint64_t k_high = quantile_index(1.0 - (1.0 - level) / 2.0, iterations);
    std::uint64_t cum = 0;
    bool low_set = false;
    bool med_set = false;
    bool high_set = false;
    for (std::size_t idx = 0; idx < n_slots; ++idx) {
        if (slots[idx] == 0) {
            continue;
        }
        const double rank = rank_from_slot(idx);
        dist.histogram.emplace(rank, static_cast<double>(slots[idx]));
        cum += slots[idx];
        if (!low_set && cum >= k_low) {
            dist.interval_low = rank;
            low_set = true;
        }
        if (!med_set && cum >= k_med) {
            dist.median = rank;
            med_set = true;
        }
        if (!high_set && cum >= k_high) {
            dist.interval_high = rank;
            high_set = true;
        }
    }
    return dist;
}

RankDistribution summarize_probabilities(std::string id, const double* slots,
                                         std::size_t n_slots, double level) {
    RankDistribution dist;
    dist.group_id = std::move(id);
    const double q_low = (1.0 - level) / 2.0;
    const double q_high = 1.0 - q_low;
    double cum = 0.0;
    bool low_set = false;
    bool med_set = false;
    bool high_set = false;
    for (std::size_t idx = 0; idx < n_slots; ++idx) {
        if (slots[idx] == 0.0) {
            continue;
        }
        const double rank = rank_from_slot(idx);
        dist.histogram.emplace(rank, slots[idx]);
        cum += slots[idx];
        if (!low_set && cum >= q_low - 1e-12) {
            dist.interval_low = rank;
            low_set = true;
        }
        if (!med_set && cum >= 0.5 - 1e-12) {
            dist.median = rank;
            med_set = true;
        }
        if (!high_set && cum >= q_high - 1e-12) {
            dist.interval_high = rank;
            high_set = true;
        }
    }
    return dist;
}

void validate_common(std::size_t n_groups, const SimulationConfig& config, SimModel expected) {
    if (n_groups < 2) {
        throw std::invalid_argument("simulation needs at least 2 groups");
    }
    if (config.iterations < 1) {
        throw std::invalid_argument("iterations must be >= 1");
    }
    if (config.model != expected) {
        throw std::invalid_argument("config.model does not match the requested simulation");
    }
    if (!(config.level > 0.0 && config.level < 1.0)) {
        throw std::invalid_argument("level must be in (0,1)");
    }
}

struct CumulativeProfile {
    std::array<double, kStarLevelCount> cum;
};

CumulativeProfile cumulative(const QualityProfile& profile) {
    CumulativeProfile c{};
    double sum = 0.0;
    for (std::size_t i = 0; i < kStarLevelCount; ++i) {
        sum += profile.at_index(i);
        c.cum[i] = sum;
    }
    c.cum[kStarLevelCount - 1] = 1.0;  // u < 1 always lands
    return c;
}

// Index 0 = four_star. Categories with zero proportion are unreachable
// because u is strictly positive and their cumulative step is empty.
int star_slot(const CumulativeProfile& c, double u) {
    for (std::size_t i = 0; i + 1 < kStarLevelCount; ++i) {
        if (u < c.cum[i]) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(kStarLevelCount - 1);
}

bool should_check_rank_sum(std::uint64_t iteration) {
#ifdef NDEBUG
    return (iteration & 1023u) == 0;
#else
    (void)iteration;
    return true;
#endif
}

[[noreturn]] void rank_sum_failure() {
    throw std::logic_error("midrank sum invariant violated");
}

// Shards [0, iterations) over workers; each worker owns a flat
// n_groups x n_slots count matrix, merged afterwards (associative).
template <typename ShardFn>
std::vector<std::uint64_t> run_sharded(std::uint64_t iterations, unsigned workers,
                                       std::size_t matrix_size, ShardFn&& shard) {
    std::uint64_t n_workers = workers == 0 ? 1 : workers;
    n_workers = std::min<std::uint64_t>(n_workers, iterations);

    std::vector<std::vector<std::uint64_t>> locals(
        n_workers, std::vector<std::uint64_t>(matrix_size, 0));

    if (n_workers == 1) {
        shard(std::uint64_t{0}, iterations, locals[0]);
    } else {
        const std::uint64_t base = iterations / n_workers;
        const std::uint64_t rem = iterations % n_workers;
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(n_workers);
        std::uint64_t start = 0;
        for (std::uint64_t w = 0; w < n_workers; ++w) {
            const std::uint64_t len = base + (w < rem ? 1 : 0);
            const std::uint64_t t0 = start;
            const std::uint64_t t1 = start + len;
            start = t1;
            threads.emplace_back([&, w, t0, t1]() {
                try {
                    shard(t0, t1, locals[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) {
            t.join();
        }
        for (const auto& err : errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }
        for (std::uint64_t w = 1; w < n_workers; ++w) {
            for (std::size_t i = 0; i < matrix_size; ++i) {
                locals[0][i] += locals[w][i];
            }
        }
    }
    return std::move(locals[0]);
}

}  // namespace

double RankDistribution::total_weight() const {
    double total = 0.0;
    for (const auto& [rank, weight] : histogram) {
        total += weight;
    }
    return total;
}

double RankDistribution::mean_rank() const {
    double total = 0.0;
    double weighted = 0.0;
    for (const auto& [rank, weight] : histogram) {
        total += weight;
        weighted += rank * weight;
    }
    return weighted / total;
}

std::map<double, double> RankDistribution::normalized() const {
    const double total = total_weight();
    std::map<double, double> result;
    for (const auto& [rank, weight] : histogram) {
        result.emplace(rank, weight / total);
    }
    return result;
}

StarLevel single_output_draw(const QualityProfile& profile, std::uint64_t seed,
                             std::uint64_t group_index, std::uint64_t iteration) {
    const CumulativeProfile c = cumulative(profile);
    return static_cast<StarLevel>(star_slot(c, rng::uniform01(seed, group_index, iteration)));
}

double true_score_draw(double estimate, double std_error, std::uint64_t seed,
                       std::uint64_t group_index, std::uint64_t iteration) {
    return estimate + std_error * normal_quantile(rng::uniform01(seed, group_index, iteration));
}

std::vector<RankDistribution> simulate_single_output_ranks(
    const std::vector<GroupSubmission>& groups, const SimulationConfig& config) {
    validate_common(groups.size(), config, SimModel::single_output);

    const std::size_t n = groups.size();
    const std::size_t n_slots = 2 * n - 1;
    std::vector<CumulativeProfile> cums;
    cums.reserve(n);
    for (const auto& group : groups) {
        cums.push_back(cumulative(group.profile));
    }

    const bool midrank = config.tie_policy == TiePolicy::midrank;
    const std::uint64_t seed = config.seed;

    auto shard = [&](std::uint64_t t0, std::uint64_t t1, std::vector<std::uint64_t>& local) {
        std::vector<int> stars(n);
        for (std::uint64_t t = t0; t < t1; ++t) {
            std::array<std::uint32_t, kStarLevelCount> cat_count{};
            for (std::size_t g = 0; g < n; ++g) {
                const int s = star_slot(cums[g], rng::uniform01(seed, g, t));
                stars[g] = s;
                ++cat_count[static_cast<std::size_t>(s)];
            }
            std::array<std::uint32_t, kStarLevelCount> before{};
            for (std::size_t c = 1; c < kStarLevelCount; ++c) {
                before[c] = before[c - 1] + cat_count[c - 1];
            }
            for (std::size_t g = 0; g < n; ++g) {
                const auto c = static_cast<std::size_t>(stars[g]);
                // doubled midrank = 2*before + count + 1; doubled minrank = 2*(before+1)
                const std::size_t idx = midrank
                                            ? 2 * before[c] + cat_count[c] - 1
                                            : 2 * before[c];
                ++local[g * n_slots + idx];
            }
            if (midrank && should_check_rank_sum(t)) {
                std::uint64_t doubled_sum = 0;
                for (std::size_t c = 0; c < kStarLevelCount; ++c) {
                    doubled_sum += static_cast<std::uint64_t>(cat_count[c]) *
                                   (2ull * before[c] + cat_count[c] + 1ull);
                }
                if (doubled_sum != static_cast<std::uint64_t>(n) * (n + 1)) {
                    rank_sum_failure();
                }
            }
        }
    };

    const auto counts = run_sharded(config.iterations, config.workers, n * n_slots, shard);

    std::vector<RankDistribution> result;
    result.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        result.push_back(summarize_counts(groups[g].institution, counts.data() + g * n_slots,
                                          n_slots, config.iterations, config.level));
    }
    return result;
}

std::vector<RankDistribution> simulate_true_score_ranks(
    const std::vector<ScoreEstimate>& estimates, const std::vector<std::string>& group_ids,
    const SimulationConfig& config) {
    validate_common(estimates.size(), config, SimModel::true_score);
    if (group_ids.size() != estimates.size()) {
        throw std::invalid_argument("group_ids must match estimates");
    }
    for (const auto& est : estimates) {
        if (!std::isfinite(est.estimate) || !std::isfinite(est.std_error) ||
            est.std_error < 0.0) {
            throw std::invalid_argument("estimates must be finite with std_error >= 0");
        }
    }

    const std::size_t n = estimates.size();
    const std::size_t n_slots = 2 * n - 1;
    const bool midrank = config.tie_policy == TiePolicy::midrank;
    const std::uint64_t seed = config.seed;

    auto shard = [&](std::uint64_t t0, std::uint64_t t1, std::vector<std::uint64_t>& local) {
        std::vector<double> scores(n);
        std::vector<double> ranks(n);
        std::vector<std::size_t> order;
        for (std::uint64_t t = t0; t < t1; ++t) {
            for (std::size_t g = 0; g < n; ++g) {
                scores[g] = true_score_draw(estimates[g].estimate, estimates[g].std_error,
                                            seed, g, t);
            }
            rank_with_ties_into(scores, config.tie_policy, order, ranks);
            std::uint64_t doubled_sum = 0;
            for (std::size_t g = 0; g < n; ++g) {
                const auto doubled = static_cast<std::uint64_t>(std::llround(2.0 * ranks[g]));
                doubled_sum += doubled;
                ++local[g * n_slots + (doubled - 2)];
            }
            if (midrank && should_check_rank_sum(t) &&
                doubled_sum != static_cast<std::uint64_t>(n) * (n + 1)) {
                rank_sum_failure();
            }
        }
    };

    const auto counts = run_sharded(config.iterations, config.workers, n * n_slots, shard);

    std::vector<RankDistribution> result;
    result.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        result.push_back(summarize_counts(group_ids[g], counts.data() + g * n_slots, n_slots,
                                          config.iterations, config.level));
    }
    return result;
}

std::vector<RankDistribution> simulate_true_score_ranks(
    const std::vector<GroupSubmission>& groups, const WeightScheme& weights,
    const SimulationConfig& config) {
    std::vector<ScoreEstimate> estimates;
    std::vector<std::string> ids;
    estimates.reserve(groups.size());
    ids.reserve(groups.size());
    for (const auto& group : groups) {
        estimates.push_back(group_score_estimate(group, weights, config.level));
        ids.push_back(group.institution);
    }
    return simulate_true_score_ranks(estimates, ids, config);
}

namespace {

// DFS over the joint star assignment, pruning zero-probability branches.
// Probability mass lands in the same doubled-rank slots the Monte Carlo
// engine uses, so the two sides are directly comparable.
struct ExactEnumerator {
    const std::vector<GroupSubmission>& groups;
    bool midrank;
    std::size_t n;
    std::size_t n_slots;
    std::vector<int> chosen;
    std::array<std::uint32_t, kStarLevelCount> cat_count{};
    std::vector<double> prob_slots;  // n x n_slots

    ExactEnumerator(const std::vector<GroupSubmission>& gs, TiePolicy policy)
        : groups(gs),
          midrank(policy == TiePolicy::midrank),
          n(gs.size()),
          n_slots(2 * gs.size() - 1),
          chosen(gs.size(), 0),
          prob_slots(gs.size() * (2 * gs.size() - 1), 0.0) {}

    void descend(std::size_t g, double prob) {
        if (g == n) {
            accumulate(prob);
            return;
        }
        for (std::size_t s = 0; s < kStarLevelCount; ++s) {
            const double p = groups[g].profile.at_index(s);
            if (p <= 0.0) {
                continue;
            }
            chosen[g] = static_cast<int>(s);
            ++cat_count[s];
            descend(g + 1, prob * p);
            --cat_count[s];
        }
    }

    void accumulate(double prob) {
        std::array<std::uint32_t, kStarLevelCount> before{};
        for (std::size_t c = 1; c < kStarLevelCount; ++c) {
            before[c] = before[c - 1] + cat_count[c - 1];
        }
        for (std::size_t g = 0; g < n; ++g) {
            const auto c = static_cast<std::size_t>(chosen[g]);
            const std::size_t idx = midrank ? 2 * before[c] + cat_count[c] - 1
                                            : 2 * before[c];
            prob_slots[g * n_slots + idx] += prob;
        }
    }
};

}  // namespace

std::vector<RankDistribution> exact_single_output_rank_distribution(
    const std::vector<GroupSubmission>& groups, TiePolicy tie_policy) {
    if (groups.size() < 2 || groups.size() > 8) {
        throw std::invalid_argument("exact enumeration supports 2 to 8 groups");
    }

    ExactEnumerator enumerator(groups, tie_policy);
    enumerator.descend(0, 1.0);

    std::vector<RankDistribution> result;
    result.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        result.push_back(summarize_probabilities(
            groups[g].institution, enumerator.prob_slots.data() + g * enumerator.n_slots,
            enumerator.n_slots, 0.95));
    }
    return result;
}

}  // namespace leaguesim
