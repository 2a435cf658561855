#include "leaguesim/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <vector>

#include "leaguesim/format.hpp"
#include "leaguesim/ingest.hpp"
#include "leaguesim/svg.hpp"

namespace leaguesim {

namespace {

namespace fs = std::filesystem;

void log(std::ostream* diag, const std::string& message) {
    if (diag != nullptr) {
        *diag << message << '\n';
    }
}

bool write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    return static_cast<bool>(out);
}

// League-table order: descending mean score, ties by institution name.
std::vector<std::size_t> league_order(const std::vector<GroupSubmission>& groups) {
    std::vector<std::size_t> order(groups.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> means;
    means.reserve(groups.size());
    for (const auto& group : groups) {
        means.push_back(mean_score(group.profile));
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (means[a] != means[b]) {
            return means[a] > means[b];
        }
        return groups[a].institution < groups[b].institution;
    });
    return order;
}

std::string results_csv(const std::vector<GroupSubmission>& groups,
                        const std::vector<std::size_t>& order,
                        const std::vector<ScoreEstimate>& estimates,
                        const std::vector<RankDistribution>& rank_dists,
                        const std::vector<BandAssignment>& bands,
                        const OverlapSummary& overlap) {
    std::string out =
        "institution,unit,fte,mean_score,funding_score,score,std_error,ci_low,ci_high,"
        "rank_median,rank_low,rank_high,band,overlaps_overall_mean\n";
    const WeightScheme funding = WeightScheme::funding();
    for (std::size_t idx : order) {
        const auto& group = groups[idx];
        const auto& est = estimates[idx];
        const auto& dist = rank_dists[idx];
        out += csv_field(group.institution);
        out.push_back(',');
        out += csv_field(group.unit);
        out.push_back(',');
        out += format_sig(group.fte_staff);
        out.push_back(',');
        out += format_sig(mean_score(group.profile));
        out.push_back(',');
        out += format_sig(weighted_score(group.profile, funding));
        out.push_back(',');
        out += format_sig(est.estimate);
        out.push_back(',');
        out += format_sig(est.std_error);
        out.push_back(',');
        out += format_sig(est.interval_low);
        out.push_back(',');
        out += format_sig(est.interval_high);
        out.push_back(',');
        out += format_sig(dist.median);
        out.push_back(',');
        out += format_sig(dist.interval_low);
        out.push_back(',');
        out += format_sig(dist.interval_high);
        out.push_back(',');
        out += band_name(bands[idx].band);
        out.push_back(',');
        out += overlap.overlaps[idx] ? "true" : "false";
        out.push_back('\n');
    }
    return out;
}

std::string summary_text(const RunConfig& config, std::size_t n_groups,
                         const OverlapSummary& overlap, const BandCounts& bands) {
    std::string out;
    out += "groups: " + std::to_string(n_groups) + "\n";
    out += "weights: " + config.weights.name + "\n";
    out += "model: " + std::string(model_name(config.model)) + "\n";
    out += "tie policy: " + std::string(tie_policy_name(config.tie_policy)) + "\n";
    out += "iterations: " + std::to_string(config.iterations) + "\n";
    out += "seed: " + std::to_string(config.seed) + "\n";
    out += "level: " + format_sig(config.level) + "\n";
    out += "baseline: " + std::string(baseline_name(config.baseline_mode)) + "\n";
    out += "overall mean score: " + format_sig(overlap.overall_mean) + "\n";
    out += "intervals overlapping overall mean: " + std::to_string(overlap.count) + " of " +
           std::to_string(n_groups) + "\n";
    out += "rank bands: top " + std::to_string(bands.top) + ", bottom " +
           std::to_string(bands.bottom) + ", uncertain " + std::to_string(bands.uncertain) +
           "\n";
    out += "groups confined to one half (top+bottom): " + std::to_string(bands.certain()) +
           "\n";
    return out;
}

}  // namespace

const char* model_name(SimModel model) {
    return model == SimModel::single_output ? "single-output" : "true-score";
}

const char* tie_policy_name(TiePolicy policy) {
    return policy == TiePolicy::midrank ? "midrank" : "minrank";
}

const char* baseline_name(BaselineMode mode) {
    return mode == BaselineMode::fte_weighted ? "fte-weighted" : "unweighted";
}

int run_report(const RunConfig& config, std::ostream* diag) {
    std::ifstream input(config.input_path, std::ios::binary);
    if (!input) {
        log(diag, "error: cannot open input file: " + config.input_path);
        return kRunInputNotFound;
    }

    ParseResult parsed;
    try {
        parsed = parse_league_table(input);
    } catch (const ParseError& e) {
        log(diag, "error: " + std::string(e.what()));
        return kRunParseFatal;
    }
    for (const auto& note : parsed.report.rejections) {
        log(diag, "rejected row " + std::to_string(note.row) + ": " + note.message);
    }
    for (const auto& note : parsed.report.warnings) {
        log(diag, "warning row " + std::to_string(note.row) + ": " + note.message);
    }
    for (const auto& note : validate_groups(parsed.groups).warnings) {
        log(diag, "advisory, record " + std::to_string(note.row) + ": " + note.message);
    }

    const auto& groups = parsed.groups;
    if (groups.size() < 2) {
        log(diag, "error: need at least 2 groups, got " + std::to_string(groups.size()));
        return kRunTooFewGroups;
    }

    std::vector<ScoreEstimate> estimates;
    estimates.reserve(groups.size());
    for (const auto& group : groups) {
        estimates.push_back(group_score_estimate(group, config.weights, config.level));
    }
    const OverlapSummary overlap =
        count_overall_mean_overlaps(groups, config.weights, config.level, config.baseline_mode);

    SimulationConfig sim;
    sim.iterations = config.iterations;
    sim.seed = config.seed;
    sim.tie_policy = config.tie_policy;
    sim.model = config.model;
    sim.level = config.level;
    sim.workers = config.workers;

    std::vector<RankDistribution> rank_dists;
    if (config.model == SimModel::single_output) {
        rank_dists = simulate_single_output_ranks(groups, sim);
    } else {
        std::vector<std::string> ids;
        ids.reserve(groups.size());
        for (const auto& group : groups) {
            ids.push_back(group.institution);
        }
        rank_dists = simulate_true_score_ranks(estimates, ids, sim);
    }

    const auto bands = classify_by_rank_interval(rank_dists, groups.size());
    const auto band_counts = count_bands(bands);
    const auto order = league_order(groups);

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) {
        log(diag, "error: cannot create output directory: " + config.out_dir);
        return kRunOutputUnwritable;
    }

    std::vector<GroupSubmission> ordered_groups;
    std::vector<RankDistribution> ordered_dists;
    std::vector<ScoreEstimate> ordered_estimates;
    std::vector<std::string> ordered_labels;
    for (std::size_t idx : order) {
        ordered_groups.push_back(groups[idx]);
        ordered_dists.push_back(rank_dists[idx]);
        ordered_estimates.push_back(estimates[idx]);
        ordered_labels.push_back(groups[idx].institution);
    }

    const fs::path out_dir(config.out_dir);
    const bool ok =
        write_file(out_dir / "results.csv",
                   results_csv(groups, order, estimates, rank_dists, bands, overlap)) &&
        write_file(out_dir / "profiles.svg", profiles_chart_svg(ordered_groups)) &&
        write_file(out_dir / "ranks.svg", ranks_chart_svg(ordered_dists, config.level)) &&
        write_file(out_dir / "scores.svg",
                   scores_chart_svg(ordered_labels, ordered_estimates, overlap.overall_mean,
                                    config.level, config.weights.name)) &&
        write_file(out_dir / "summary.txt",
                   summary_text(config, groups.size(), overlap, band_counts));
    if (!ok) {
        log(diag, "error: cannot write output files in " + config.out_dir);
        return kRunOutputUnwritable;
    }
    return kRunOk;
}

}  // namespace leaguesim
