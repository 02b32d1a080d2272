#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpn/errors.hpp"
#include "wpn/url.hpp"

namespace wpn {

/// Both refinement metrics are distances in [0,1]; low means similar.
/// combined = min(levenshtein, dice), so a pair passes the threshold if
/// either metric finds strong similarity.
struct MetricScore {
    double levenshtein = 1.0;
    double dice = 1.0;
    double combined = 1.0;
};

/// Plain edit distance, two-row dynamic programming.
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    const std::size_t n = b.size();
    std::vector<std::size_t> row(n + 1);
    for (std::size_t j = 0; j <= n; ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[n];
}

/// Banded edit distance with early abandon: returns the exact distance when
/// it is <= max_dist, nullopt otherwise.
inline std::optional<std::size_t> edit_distance_bounded(std::string_view a, std::string_view b,
                                                        std::size_t max_dist) {
    if (a.size() < b.size()) std::swap(a, b);
    if (a.size() - b.size() > max_dist) return std::nullopt;
    const std::size_t n = b.size();
    constexpr std::size_t kInf = static_cast<std::size_t>(-1) / 2;
    std::vector<std::size_t> row(n + 1, kInf);
    for (std::size_t j = 0; j <= std::min(n, max_dist); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        // Cells outside |i-j| <= max_dist cannot end <= max_dist.
        const std::size_t lo = (i > max_dist) ? i - max_dist : 1;
        const std::size_t hi = std::min(n, i + max_dist);
        std::size_t diag = row[lo - 1];
        row[lo - 1] = (lo == 1) ? i : kInf;
        std::size_t best = row[lo - 1];
        for (std::size_t j = lo; j <= hi; ++j) {
            const std::size_t up = row[j];
            std::size_t val = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            if (up != kInf && up + 1 < val) val = up + 1;
            if (row[j - 1] != kInf && row[j - 1] + 1 < val) val = row[j - 1] + 1;
            row[j] = val;
            diag = up;
            best = std::min(best, val);
        }
        if (hi < n) row[hi + 1] = kInf;
        if (best > max_dist) return std::nullopt;
    }
    return row[n] <= max_dist ? std::optional<std::size_t>(row[n]) : std::nullopt;
}

/// Edit distance normalized by the longer string.
inline double levenshtein_distance(std::string_view a, std::string_view b) {
    if (a.empty() || b.empty()) raise(ErrorCode::EmptyString, "levenshtein requires non-empty strings");
    return static_cast<double>(edit_distance(a, b)) / static_cast<double>(std::max(a.size(), b.size()));
}

/// 1 - 2|A∩B| / (|A|+|B|) over sorted deduplicated token lists.
inline double dice_distance(std::span<const std::string> a, std::span<const std::string> b) {
    if (a.empty() || b.empty()) raise(ErrorCode::EmptySet, "dice requires non-empty token sets");
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const int cmp = a[i].compare(b[j]);
        if (cmp == 0) {
            ++inter;
            ++i;
            ++j;
        } else if (cmp < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return 1.0 - 2.0 * static_cast<double>(inter) / static_cast<double>(a.size() + b.size());
}

/// Levenshtein over the registrable strings, Dice over the token sets.
inline MetricScore combined_score(const TokenizedUrl& a, const TokenizedUrl& b) {
    MetricScore s;
    s.levenshtein = levenshtein_distance(a.registrable, b.registrable);
    s.dice = dice_distance(token_set(a.tokens), token_set(b.tokens));
    s.combined = std::min(s.levenshtein, s.dice);
    return s;
}

/// Character histogram over [a-z0-9] plus an "other" slot; gives a cheap
/// lower bound on edit distance.
struct CharCounts {
    std::array<std::uint8_t, 37> counts{};
    std::uint32_t length = 0;

    static CharCounts of(std::string_view s) {
        CharCounts c;
        c.length = static_cast<std::uint32_t>(s.size());
        for (char ch : s) {
            std::size_t slot;
            if (ch >= 'a' && ch <= 'z') {
                slot = static_cast<std::size_t>(ch - 'a');
            } else if (ch >= '0' && ch <= '9') {
                slot = 26 + static_cast<std::size_t>(ch - '0');
            } else {
                slot = 36;
            }
            if (c.counts[slot] < 255) ++c.counts[slot];
        }
        return c;
    }
};

/// max(length gap, half the histogram L1 gap) <= edit distance.
inline std::size_t edit_distance_lower_bound(const CharCounts& a, const CharCounts& b) {
    std::size_t l1 = 0;
    for (std::size_t i = 0; i < a.counts.size(); ++i) {
        l1 += static_cast<std::size_t>(a.counts[i] > b.counts[i] ? a.counts[i] - b.counts[i]
                                                                 : b.counts[i] - a.counts[i]);
    }
    const std::size_t len_gap = a.length > b.length ? a.length - b.length : b.length - a.length;
    return std::max(len_gap, (l1 + 1) / 2);
}

} // namespace wpn
