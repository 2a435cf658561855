#include "leaguesim/svg.hpp"

#include <algorithm>
#include <cmath>

#include "leaguesim/format.hpp"

namespace leaguesim {

namespace {

constexpr double kLabelWidth = 250.0;
constexpr double kPlotWidth = 420.0;
constexpr double kRowHeight = 18.0;
constexpr double kTopMargin = 58.0;
constexpr double kBottomMargin = 42.0;

// 4* darkest to unclassified lightest
const char* const kStarColors[kStarLevelCount] = {"#08519c", "#3182bd", "#6baed6",
                                                  "#bdd7e7", "#eff3ff"};
const char* const kStarLabels[kStarLevelCount] = {"4*", "3*", "2*", "1*", "unclassified"};

std::string esc(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string num(double v) { return format_sig(v, 6); }

struct SvgBuilder {
    std::string body;

    void rect(double x, double y, double w, double h, const std::string& fill) {
        body += "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width, bool dashed = false) {
        body += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                num(width) + "\"";
        if (dashed) {
            body += " stroke-dasharray=\"4 3\"";
        }
        body += "/>\n";
    }

    void circle(double cx, double cy, double r, const std::string& fill) {
        body += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
                "\" fill=\"" + fill + "\"/>\n";
    }

    void text(double x, double y, const std::string& content, const char* anchor = "start",
              int size = 11, const char* fill = "#222222") {
        body += "  <text x=\"" + num(x) + "\" y=\"" + num(y) +
                "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) +
                "\" text-anchor=\"" + anchor + "\" fill=\"" + fill + "\">" + esc(content) +
                "</text>\n";
    }

    std::string finish(double width, double height) const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
               "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
               num(height) + "\">\n";
        out += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
               "\" fill=\"#ffffff\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

double chart_height(std::size_t n_rows) {
    return kTopMargin + kRowHeight * static_cast<double>(n_rows) + kBottomMargin;
}

std::string level_label(double level) { return format_sig(level * 100.0, 4) + "%"; }

}  // namespace

std::string profiles_chart_svg(const std::vector<GroupSubmission>& league_order) {
    const std::size_t n = league_order.size();
    const double width = kLabelWidth + kPlotWidth + 90.0;
    const double height = chart_height(n);
    SvgBuilder svg;

    svg.text(10, 20, "Quality profiles by mean score", "start", 14);
    double legend_x = 10;
    for (std::size_t s = 0; s < kStarLevelCount; ++s) {
        svg.rect(legend_x, 30, 12, 12, kStarColors[s]);
        svg.text(legend_x + 16, 40, kStarLabels[s]);
        legend_x += 28.0 + 7.0 * static_cast<double>(std::string(kStarLabels[s]).size());
    }

    const double axis_y = kTopMargin + kRowHeight * static_cast<double>(n) + 6.0;
    for (int pct = 0; pct <= 100; pct += 25) {
        const double x = kLabelWidth + kPlotWidth * pct / 100.0;
        svg.line(x, kTopMargin - 4, x, axis_y - 6, "#dddddd", 1);
        svg.text(x, axis_y + 12, std::to_string(pct) + "%", "middle", 10, "#555555");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& group = league_order[i];
        const double y = kTopMargin + kRowHeight * static_cast<double>(i);
        svg.text(kLabelWidth - 6, y + 12.5, group.institution, "end");
        double x = kLabelWidth;
        for (std::size_t s = 0; s < kStarLevelCount; ++s) {
            const double w = kPlotWidth * group.profile.at_index(s);
            if (w > 0.0) {
                svg.rect(x, y + 2, w, kRowHeight - 4, kStarColors[s]);
                x += w;
            }
        }
        svg.text(kLabelWidth + kPlotWidth + 6, y + 12.5, format_sig(group.fte_staff, 6),
                 "start", 10, "#555555");
    }
    svg.text(kLabelWidth + kPlotWidth + 6, kTopMargin - 8, "FTE", "start", 10, "#555555");

    return svg.finish(width, height);
}

std::string ranks_chart_svg(const std::vector<RankDistribution>& league_order, double level) {
    const std::size_t n = league_order.size();
    const double width = kLabelWidth + kPlotWidth + 40.0;
    const double height = chart_height(n);
    SvgBuilder svg;

    svg.text(10, 20, "Simulated rank: median and " + level_label(level) + " interval",
             "start", 14);

    const double axis_y = kTopMargin + kRowHeight * static_cast<double>(n) + 6.0;
    auto x_of = [n](double rank) {
        if (n < 2) {
            return kLabelWidth;
        }
        return kLabelWidth + kPlotWidth * (rank - 1.0) / (static_cast<double>(n) - 1.0);
    };

    const int tick_step = n > 12 ? static_cast<int>((n + 9) / 10) : 1;
    for (std::size_t r = 1; r <= n; r += static_cast<std::size_t>(tick_step)) {
        const double x = x_of(static_cast<double>(r));
        svg.line(x, kTopMargin - 4, x, axis_y - 6, "#dddddd", 1);
        svg.text(x, axis_y + 12, std::to_string(r), "middle", 10, "#555555");
    }
    svg.text(kLabelWidth + kPlotWidth / 2.0, axis_y + 28, "rank (1 = best)", "middle", 11,
             "#555555");

    for (std::size_t i = 0; i < n; ++i) {
        const auto& dist = league_order[i];
        const double y = kTopMargin + kRowHeight * static_cast<double>(i) + kRowHeight / 2.0;
        svg.text(kLabelWidth - 6, y + 3.5, dist.group_id, "end");
        svg.line(x_of(dist.interval_low), y, x_of(dist.interval_high), y, "#666666", 2);
        svg.line(x_of(dist.interval_low), y - 4, x_of(dist.interval_low), y + 4, "#666666", 1.5);
        svg.line(x_of(dist.interval_high), y - 4, x_of(dist.interval_high), y + 4, "#666666",
                 1.5);
        svg.circle(x_of(dist.median), y, 3.2, "#c0392b");
    }

    return svg.finish(width, height);
}

std::string scores_chart_svg(const std::vector<std::string>& labels,
                             const std::vector<ScoreEstimate>& estimates, double overall_mean,
                             double level, const std::string& score_name) {
    const std::size_t n = labels.size();
    const double width = kLabelWidth + kPlotWidth + 40.0;
    const double height = chart_height(n);
    SvgBuilder svg;

    double lo = overall_mean;
    double hi = overall_mean;
    for (const auto& est : estimates) {
        lo = std::min(lo, est.interval_low);
        hi = std::max(hi, est.interval_high);
    }
    double pad = (hi - lo) * 0.05;
    if (pad <= 0.0) {
        pad = 0.5;
    }
    lo -= pad;
    hi += pad;

    svg.text(10, 20,
             "Estimated " + score_name + " score: " + level_label(level) + " intervals",
             "start", 14);

    const double axis_y = kTopMargin + kRowHeight * static_cast<double>(n) + 6.0;
    auto x_of = [lo, hi](double v) { return kLabelWidth + kPlotWidth * (v - lo) / (hi - lo); };

    for (int t = 0; t <= 5; ++t) {
        const double v = lo + (hi - lo) * t / 5.0;
        const double x = x_of(v);
        svg.line(x, kTopMargin - 4, x, axis_y - 6, "#dddddd", 1);
        svg.text(x, axis_y + 12, format_sig(v, 3), "middle", 10, "#555555");
    }

    svg.line(x_of(overall_mean), kTopMargin - 10, x_of(overall_mean), axis_y - 6, "#c0392b",
             1.5, true);
    svg.text(x_of(overall_mean), kTopMargin - 14, "overall mean", "middle", 10, "#c0392b");

    for (std::size_t i = 0; i < n; ++i) {
        const auto& est = estimates[i];
        const double y = kTopMargin + kRowHeight * static_cast<double>(i) + kRowHeight / 2.0;
        svg.text(kLabelWidth - 6, y + 3.5, labels[i], "end");
        svg.line(x_of(est.interval_low), y, x_of(est.interval_high), y, "#666666", 2);
        svg.line(x_of(est.interval_low), y - 4, x_of(est.interval_low), y + 4, "#666666", 1.5);
        svg.line(x_of(est.interval_high), y - 4, x_of(est.interval_high), y + 4, "#666666",
                 1.5);
        svg.circle(x_of(est.estimate), y, 3.2, "#2c3e50");
    }

    return svg.finish(width, height);
}

}  // namespace leaguesim
