#include "leaguesim/ingest.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <set>
#include <utility>

namespace leaguesim {

namespace {

std::optional<std::vector<std::string>> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
        ++i;
    }
    if (in_quotes) {
        return std::nullopt;  // unbalanced quote
    }
    fields.push_back(std::move(current));
    return fields;
}

std::optional<double> parse_number(const std::string& field) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::string strip_line_ending(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

bool needs_quoting(const std::string& field) {
    if (!field.empty() && (field.front() == ' ' || field.back() == ' ')) {
        return true;
    }
    return field.find_first_of(",\"\n") != std::string::npos;
}

void append_csv_field(std::string& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out += field;
        return;
    }
    out.push_back('"');
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
}

std::string shortest_repr(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

bool reparses_to(const std::string& text, double proportion) {
    const auto parsed = parse_number(text);
    return parsed && *parsed / 100.0 == proportion;
}

// Decimal percentage string that divides back to exactly `proportion`.
// The shortest form of proportion*100 almost always works; the ulp walk
// and the long-double fallback cover double-rounding corner cases.
std::string format_percentage(double proportion) {
    const double pct = proportion * 100.0;
    std::string candidate = shortest_repr(pct);
    if (reparses_to(candidate, proportion)) {
        return candidate;
    }
    double up = pct;
    double down = pct;
    for (int step = 0; step < 3; ++step) {
        up = std::nextafter(up, std::numeric_limits<double>::infinity());
        down = std::nextafter(down, -std::numeric_limits<double>::infinity());
        for (double v : {up, down}) {
            candidate = shortest_repr(v);
            if (reparses_to(candidate, proportion)) {
                return candidate;
            }
        }
    }
    const long double exact = static_cast<long double>(proportion) * 100.0L;
    for (int precision = 17; precision <= 25; ++precision) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*Lg", precision, exact);
        candidate = buf;
        if (reparses_to(candidate, proportion)) {
            return candidate;
        }
    }
    return shortest_repr(pct);
}

}  // namespace

ParseResult parse_league_table(std::istream& input) {
    ParseResult result;

    std::string line;
    if (!std::getline(input, line)) {
        throw ParseError("missing header line");
    }
    line = strip_line_ending(line);
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);  // UTF-8 BOM
    }
    if (line != kLeagueTableHeader) {
        throw ParseError("unexpected header, want: " + std::string(kLeagueTableHeader));
    }

    std::set<std::pair<std::string, std::string>> seen_keys;
    int line_number = 1;
    while (std::getline(input, line)) {
        ++line_number;
        line = strip_line_ending(line);
        if (line.empty()) {
            continue;
        }

        auto reject = [&](const std::string& reason) {
            ++result.report.rejected;
            result.report.rejections.push_back({line_number, reason});
        };

        const auto fields = split_csv_line(line);
        if (!fields) {
            reject("unbalanced quote");
            continue;
        }
        if (fields->size() != 8) {
            reject("expected 8 fields, got " + std::to_string(fields->size()));
            continue;
        }

        const std::string& institution = (*fields)[0];
        const std::string& unit = (*fields)[1];
        if (institution.empty()) {
            reject("empty institution");
            continue;
        }
        const auto key = std::make_pair(institution, unit);
        if (!seen_keys.insert(key).second) {
            // duplicates would double-count a submission
            throw ParseError("duplicate (institution, unit) pair at line " +
                             std::to_string(line_number) + ": " + institution +
                             (unit.empty() ? "" : (", " + unit)));
        }

        const auto fte = parse_number((*fields)[2]);
        if (!fte) {
            reject("invalid fte");
            continue;
        }
        if (*fte <= 0.0) {
            reject("fte must be positive");
            continue;
        }

        std::array<double, kStarLevelCount> percentages{};
        bool fields_ok = true;
        for (std::size_t i = 0; i < kStarLevelCount; ++i) {
            const auto value = parse_number((*fields)[3 + i]);
            if (!value) {
                reject("invalid percentage in field " + std::to_string(4 + i));
                fields_ok = false;
                break;
            }
            if (*value < 0.0 || *value > 100.0) {
                reject("percentage outside [0,100] in field " + std::to_string(4 + i));
                fields_ok = false;
                break;
            }
            percentages[i] = *value;
        }
        if (!fields_ok) {
            continue;
        }

        double sum = 0.0;
        for (double v : percentages) {
            sum += v;
        }
        if (sum < 99.5 || sum > 100.5) {
            reject("profile sum out of tolerance");
            continue;
        }
        const bool renormalized = std::fabs(sum - 100.0) > 1e-9;

        std::array<double, kStarLevelCount> proportions{};
        for (std::size_t i = 0; i < kStarLevelCount; ++i) {
            if (renormalized) {
                // snap onto the v/100-representable grid (a <= 1 ulp nudge)
                // so serialization can reproduce the record bit-exactly
                const double pct_canonical = (percentages[i] / sum) * 100.0;
                proportions[i] = pct_canonical / 100.0;
            } else {
                proportions[i] = percentages[i] / 100.0;
            }
        }

        try {
            result.groups.emplace_back(institution, unit, *fte, QualityProfile(proportions));
        } catch (const std::invalid_argument& e) {
            reject(e.what());
            continue;
        }
        ++result.report.accepted;
        if (renormalized) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6g", sum);
            result.report.warnings.push_back(
                {line_number, std::string("percentages sum to ") + buf + ", renormalized"});
        }
    }
    return result;
}

std::string csv_field(const std::string& raw) {
    std::string out;
    append_csv_field(out, raw);
    return out;
}

std::string serialize_league_table(const std::vector<GroupSubmission>& groups) {
    std::string out = kLeagueTableHeader;
    out.push_back('\n');
    for (const auto& group : groups) {
        append_csv_field(out, group.institution);
        out.push_back(',');
        append_csv_field(out, group.unit);
        out.push_back(',');
        out += shortest_repr(group.fte_staff);
        for (std::size_t i = 0; i < kStarLevelCount; ++i) {
            out.push_back(',');
            out += format_percentage(group.profile.at_index(i));
        }
        out.push_back('\n');
    }
    return out;
}

IngestReport validate_groups(const std::vector<GroupSubmission>& groups) {
    IngestReport report;
    report.accepted = static_cast<int>(groups.size());
    int row = 0;
    for (const auto& group : groups) {
        ++row;
        if (!group.profile.is_five_percent_blocks()) {
            report.warnings.push_back({row, "proportions not in 5% blocks"});
        }
        if (group.fte_staff < 1.0) {
            report.warnings.push_back({row, "FTE below 1"});
        }
    }
    return report;
}

}  // namespace leaguesim
