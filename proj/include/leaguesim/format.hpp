#pragma once

#include <charconv>
#include <string>

namespace leaguesim {

/// Locale-free compact formatting (like %g) so emitted files are
/// byte-identical across platforms and runs.
inline std::string format_sig(double value, int digits = 6) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    return std::string(buf, ptr);
}

}  // namespace leaguesim
