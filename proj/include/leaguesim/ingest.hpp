#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "leaguesim/profile.hpp"

namespace leaguesim {

/// Unrecoverable input problems: missing or malformed header, duplicate
/// (institution, unit) pair. Per-row data problems never throw; they are
/// recorded as rejections.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RowNote {
    int row = 0;  // file line number (header is line 1)
    std::string message;
};

struct IngestReport {
    int accepted = 0;
    int rejected = 0;
    std::vector<RowNote> warnings;
    std::vector<RowNote> rejections;
};

struct ParseResult {
    std::vector<GroupSubmission> groups;
    IngestReport report;
};

// Canonical league-table format (UTF-8, one row per submission):
//   institution,unit,fte,pct4,pct3,pct2,pct1,pct0
// Percentages are decimals 0-100. Fields may be double-quoted, with ""
// escaping an embedded quote; embedded newlines are not supported.
inline constexpr const char* kLeagueTableHeader =
    "institution,unit,fte,pct4,pct3,pct2,pct1,pct0";

/// Parse the canonical format. Rows whose percentages sum to within
/// [99.5, 100.5] but not exactly 100 are accepted after renormalization
/// with a warning; rows outside that window (or otherwise invalid) are
/// rejected with a reason. Throws ParseError on header or duplicate-key
/// problems.
ParseResult parse_league_table(std::istream& input);

/// Serialize back to the canonical format. Percentage formatting is chosen
/// so that re-parsing yields bit-identical proportions for records whose
/// proportions sum to 1 at full FP precision (in particular anything this
/// parser produced).
std::string serialize_league_table(const std::vector<GroupSubmission>& groups);

/// Advisory checks only (5%-block granularity, FTE < 1); "row" in the
/// returned notes is the 1-based position in the input list.
IngestReport validate_groups(const std::vector<GroupSubmission>& groups);

/// Quote a field for the canonical CSV dialect when it needs it.
std::string csv_field(const std::string& raw);

}  // namespace leaguesim
