// Command-line front end: ingest a league table, score it, simulate rank
// distributions, classify, and write the result table plus charts.

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leaguesim/report.hpp"

namespace {

bool parse_weights(const std::string& text, leaguesim::WeightScheme& scheme,
                   std::string& error) {
    if (text == "funding") {
        scheme = leaguesim::WeightScheme::funding();
        return true;
    }
    if (text == "mean") {
        scheme = leaguesim::WeightScheme::mean();
        return true;
    }
    std::array<double, leaguesim::kStarLevelCount> weights{};
    std::stringstream stream(text);
    std::string token;
    std::size_t i = 0;
    while (std::getline(stream, token, ',')) {
        if (i >= weights.size()) {
            error = "expected exactly 5 weights";
            return false;
        }
        try {
            std::size_t used = 0;
            weights[i] = std::stod(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            error = "cannot parse weight '" + token + "'";
            return false;
        }
        ++i;
    }
    if (i != weights.size()) {
        error = "expected exactly 5 weights";
        return false;
    }
    try {
        scheme = leaguesim::WeightScheme(weights, "custom");
    } catch (const std::exception& e) {
        error = e.what();
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quantifies rank uncertainty in league tables built from categorical "
        "quality profiles (RAE 2008 style)."};

    leaguesim::RunConfig config;
    std::string weights_text = "funding";

    app.add_option("--input", config.input_path, "Input league table (canonical CSV)")
        ->required();
    app.add_option("--out-dir", config.out_dir, "Directory for result files")->required();
    app.add_option("--weights", weights_text,
                   "Weight scheme: funding | mean | w4,w3,w2,w1,w0")
        ->capture_default_str();
    app.add_option("--iterations", config.iterations, "Simulation iterations")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
        ->capture_default_str();
    app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    app.add_option("--model", config.model, "Rank simulation model")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, leaguesim::SimModel>{
                {"single-output", leaguesim::SimModel::single_output},
                {"true-score", leaguesim::SimModel::true_score}},
            CLI::ignore_case))
        ->default_str("true-score");
    app.add_option("--tie-policy", config.tie_policy, "Tie handling for ranks")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, leaguesim::TiePolicy>{
                {"midrank", leaguesim::TiePolicy::midrank},
                {"minrank", leaguesim::TiePolicy::minrank}},
            CLI::ignore_case))
        ->default_str("midrank");
    app.add_option("--level", config.level, "Interval level in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9))
        ->capture_default_str();
    app.add_option("--baseline", config.baseline_mode, "Overall-mean baseline")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, leaguesim::BaselineMode>{
                {"fte-weighted", leaguesim::BaselineMode::fte_weighted},
                {"unweighted", leaguesim::BaselineMode::unweighted}},
            CLI::ignore_case))
        ->default_str("fte-weighted");
    app.add_option("--workers", config.workers,
                   "Worker threads for the simulation (results do not depend on this)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    std::string weights_error;
    if (!parse_weights(weights_text, config.weights, weights_error)) {
        std::cerr << "error: invalid --weights: " << weights_error << '\n';
        return 1;
    }

    return leaguesim::run_report(config, &std::cerr);
}
