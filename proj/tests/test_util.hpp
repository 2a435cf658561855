#pragma once

#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "leaguesim/profile.hpp"

namespace testutil {

// TV distance between two normalized histograms.
inline double total_variation(const std::map<double, double>& a,
                              const std::map<double, double>& b) {
    double distance = 0.0;
    for (const auto& [key, pa] : a) {
        const auto it = b.find(key);
        distance += std::fabs(pa - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [key, pb] : b) {
        if (a.find(key) == a.end()) {
            distance += pb;
        }
    }
    return distance / 2.0;
}

// Random profile on the 5% grid: 20 blocks spread over the 5 categories.
inline leaguesim::QualityProfile random_block_profile(std::mt19937_64& gen) {
    std::array<int, leaguesim::kStarLevelCount> blocks{};
    std::uniform_int_distribution<int> category(0, 4);
    for (int i = 0; i < 20; ++i) {
        ++blocks[static_cast<std::size_t>(category(gen))];
    }
    std::array<double, leaguesim::kStarLevelCount> p{};
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = blocks[i] / 20.0;
    }
    return leaguesim::QualityProfile(p);
}

// Random profile off the grid (normalized uniforms).
inline leaguesim::QualityProfile random_profile(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> uniform(0.01, 1.0);
    std::array<double, leaguesim::kStarLevelCount> p{};
    double sum = 0.0;
    for (double& v : p) {
        v = uniform(gen);
        sum += v;
    }
    for (double& v : p) {
        v /= sum;
    }
    return leaguesim::QualityProfile(p);
}

inline leaguesim::GroupSubmission make_group(
    std::string name, const std::array<double, leaguesim::kStarLevelCount>& p,
    double fte = 10.0) {
    return leaguesim::GroupSubmission(std::move(name), "UOA22", fte,
                                      leaguesim::QualityProfile(p));
}

// Minimal XML well-formedness scan: balanced tags, quoted attributes,
// known entities. Enough to catch malformed chart output.
inline bool xml_well_formed(const std::string& text, std::string* error = nullptr) {
    auto fail = [&](std::size_t at, const std::string& what) {
        if (error != nullptr) {
            *error = what + " at offset " + std::to_string(at);
        }
        return false;
    };
    auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
               c == ':' || c == '.';
    };

    std::vector<std::string> stack;
    bool seen_root = false;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '<') {
            if (text.compare(i, 4, "<!--") == 0) {
                const auto end = text.find("-->", i + 4);
                if (end == std::string::npos) {
                    return fail(i, "unterminated comment");
                }
                i = end + 3;
                continue;
            }
            if (text.compare(i, 2, "<?") == 0) {
                const auto end = text.find("?>", i + 2);
                if (end == std::string::npos) {
                    return fail(i, "unterminated processing instruction");
                }
                i = end + 2;
                continue;
            }
            if (text.compare(i, 2, "</") == 0) {
                std::size_t j = i + 2;
                std::string name;
                while (j < text.size() && is_name_char(text[j])) {
                    name.push_back(text[j++]);
                }
                while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) {
                    ++j;
                }
                if (name.empty() || j >= text.size() || text[j] != '>') {
                    return fail(i, "malformed end tag");
                }
                if (stack.empty() || stack.back() != name) {
                    return fail(i, "mismatched end tag </" + name + ">");
                }
                stack.pop_back();
                i = j + 1;
                continue;
            }

            std::size_t j = i + 1;
            std::string name;
            while (j < text.size() && is_name_char(text[j])) {
                name.push_back(text[j++]);
            }
            if (name.empty()) {
                return fail(i, "empty tag name");
            }
            bool closed = false;
            bool self_closing = false;
            while (!closed) {
                while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) {
                    ++j;
                }
                if (j >= text.size()) {
                    return fail(i, "unterminated tag <" + name);
                }
                if (text[j] == '/') {
                    if (j + 1 >= text.size() || text[j + 1] != '>') {
                        return fail(j, "stray / in tag");
                    }
                    j += 2;
                    closed = true;
                    self_closing = true;
                } else if (text[j] == '>') {
                    ++j;
                    closed = true;
                } else {
                    if (!is_name_char(text[j])) {
                        return fail(j, "bad attribute name");
                    }
                    while (j < text.size() && is_name_char(text[j])) {
                        ++j;
                    }
                    while (j < text.size() &&
                           std::isspace(static_cast<unsigned char>(text[j]))) {
                        ++j;
                    }
                    if (j >= text.size() || text[j] != '=') {
                        return fail(j, "attribute without value");
                    }
                    ++j;
                    while (j < text.size() &&
                           std::isspace(static_cast<unsigned char>(text[j]))) {
                        ++j;
                    }
                    if (j >= text.size() || (text[j] != '"' && text[j] != '\'')) {
                        return fail(j, "attribute value not quoted");
                    }
                    const char quote = text[j++];
                    while (j < text.size() && text[j] != quote) {
                        if (text[j] == '<') {
                            return fail(j, "raw < in attribute value");
                        }
                        ++j;
                    }
                    if (j >= text.size()) {
                        return fail(j, "unterminated attribute value");
                    }
                    ++j;
                }
            }
            seen_root = true;
            if (!self_closing) {
                stack.push_back(name);
            }
            i = j;
        } else if (c == '&') {
            const auto end = text.find(';', i);
            if (end == std::string::npos || end - i > 10) {
                return fail(i, "malformed entity");
            }
            const std::string entity = text.substr(i + 1, end - i - 1);
            const bool numeric = entity.size() > 1 && entity[0] == '#';
            if (!numeric && entity != "amp" && entity != "lt" && entity != "gt" &&
                entity != "quot" && entity != "apos") {
                return fail(i, "unknown entity &" + entity + ";");
            }
            i = end + 1;
        } else {
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(c))) {
                return fail(i, "text outside root element");
            }
            ++i;
        }
    }
    if (!stack.empty()) {
        return fail(text.size(), "unclosed element <" + stack.back() + ">");
    }
    if (!seen_root) {
        return fail(0, "no root element");
    }
    return true;
}

// Unique scratch directory removed on destruction.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("leaguesim_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

  private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace testutil
