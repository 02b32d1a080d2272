#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wpn/errors.hpp"
#include "wpn/lsh.hpp"
#include "wpn/metrics.hpp"
#include "wpn/url.hpp"

namespace wpn {

struct ClusterId {
    std::uint32_t table = 0;
    Signature sig = 0;
    std::uint64_t display = 0; // table * 2^k + sig

    friend bool operator==(const ClusterId&, const ClusterId&) = default;
};

struct Cluster {
    ClusterId id;
    std::vector<std::uint32_t> members; // record ids, ascending
};

enum class Basis : std::uint8_t { MatchedLegit, MatchedPhish };

inline const char* basis_name(Basis basis) {
    return basis == Basis::MatchedLegit ? "legit" : "phish";
}

/// One unlabeled URL judged phishing, with the known item that matched it.
struct Detection {
    std::uint32_t url = 0;     // record id with label Unlabeled
    ClusterId cluster;
    std::uint32_t matched = 0; // record id with a known label
    MetricScore score;
    std::vector<std::string> common_tokens;
    Basis basis = Basis::MatchedLegit;
};

struct RefineStats {
    std::uint64_t pairs_compared = 0; // distinct (unlabeled, known) metric evaluations
};

/// Per-record data the refinement stage works from.
struct RefineContext {
    std::span<const TokenizedUrl> urls;
    std::span<const Label> labels;
    std::vector<std::vector<std::string>> token_sets; // sorted unique
    std::vector<CharCounts> char_counts;

    static RefineContext build(std::span<const TokenizedUrl> urls, std::span<const Label> labels) {
        RefineContext ctx;
        ctx.urls = urls;
        ctx.labels = labels;
        ctx.token_sets.reserve(urls.size());
        ctx.char_counts.reserve(urls.size());
        for (const auto& u : urls) {
            ctx.token_sets.push_back(token_set(u.tokens));
            ctx.char_counts.push_back(CharCounts::of(u.registrable));
        }
        return ctx;
    }
};

/// A cluster is conclusive when it mixes unlabeled records with known ones.
inline bool is_conclusive(const Cluster& cluster, std::span<const Label> labels) {
    bool has_unlabeled = false, has_known = false;
    for (const auto id : cluster.members) {
        (labels[id] == Label::Unlabeled ? has_unlabeled : has_known) = true;
        if (has_unlabeled && has_known) return true;
    }
    return false;
}

inline std::vector<Cluster> conclusive_only(std::vector<Cluster> clusters, std::span<const Label> labels) {
    std::erase_if(clusters, [&](const Cluster& c) { return !is_conclusive(c, labels); });
    return clusters;
}

/// Keep exactly the buckets holding at least one unlabeled and at least one
/// known record; everything else is inconclusive.
inline std::vector<Cluster> shortlist(const BucketMap& map, std::span<const Label> labels) {
    std::vector<Cluster> clusters;
    for (std::uint32_t t = 0; t < map.tables.size(); ++t) {
        const auto& table = map.tables[t];
        for (const auto& bucket : table.buckets) {
            Cluster c;
            c.id = {t, bucket.sig, (static_cast<std::uint64_t>(t) << table.k) + bucket.sig};
            c.members = bucket.members;
            if (is_conclusive(c, labels)) clusters.push_back(std::move(c));
        }
    }
    return clusters;
}

namespace detail {

struct PairScore {
    double levenshtein = 1.0; // exact iff lev_exact
    double dice = 1.0;
    double combined = 1.0;    // exact iff within
    bool within = false;
    bool lev_exact = false;
};

/// Memo across clusters/tables so a pair is evaluated once per run.
using PairCache = std::unordered_map<std::uint64_t, PairScore>;

inline PairScore score_pair(const RefineContext& ctx, std::uint32_t u, std::uint32_t m, double tau) {
    PairScore ps;
    ps.dice = dice_distance(ctx.token_sets[u], ctx.token_sets[m]);

    const auto& ra = ctx.urls[u].registrable;
    const auto& rb = ctx.urls[m].registrable;
    const auto max_len = std::max(ra.size(), rb.size());
    if (ra == rb) {
        ps.levenshtein = 0.0;
        ps.lev_exact = true;
        ps.combined = 0.0;
        ps.within = true;
        return ps;
    }

    if (ps.dice == 0.0) {
        // Equal token sets already give combined = 0; Levenshtein cannot
        // improve on that.
        ps.combined = 0.0;
        ps.within = true;
        return ps;
    }

    // The exact Levenshtein value only matters while it can still change the
    // outcome: below dice (it sets combined) or below tau (it passes the
    // pair). Outside that band an abandoned computation is enough.
    std::size_t band;
    if (ps.dice <= tau) {
        // need dist/max_len < dice  =>  dist <= ceil(dice*max_len) - 1
        band = static_cast<std::size_t>(std::ceil(ps.dice * static_cast<double>(max_len))) - 1;
    } else {
        band = static_cast<std::size_t>(tau * static_cast<double>(max_len)); // dist <= floor(tau*len)
    }

    bool lev_found = false;
    if (edit_distance_lower_bound(ctx.char_counts[u], ctx.char_counts[m]) <= band) {
        if (const auto dist = edit_distance_bounded(ra, rb, band)) {
            ps.levenshtein = static_cast<double>(*dist) / static_cast<double>(max_len);
            ps.lev_exact = true;
            lev_found = true;
        }
    }

    if (ps.dice <= tau) {
        ps.combined = lev_found ? std::min(ps.levenshtein, ps.dice) : ps.dice;
        ps.within = true;
        if (!lev_found) ps.levenshtein = 1.0; // placeholder, recomputed on emission
    } else if (lev_found) {
        ps.combined = ps.levenshtein;
        ps.within = ps.combined <= tau;
    }
    return ps;
}

} // namespace detail

/// Tokens of either side that occur in both registrable strings. This is a
/// superset of the plain token-set intersection: a token like "amazon"
/// embedded in "creditamazon" still counts as shared campaign evidence.
inline std::vector<std::string> common_keywords(const TokenizedUrl& a, const TokenizedUrl& b) {
    std::vector<std::string> keywords;
    for (const auto* side : {&a.tokens, &b.tokens}) {
        for (const auto& tok : *side) {
            if (a.registrable.find(tok) != std::string::npos &&
                b.registrable.find(tok) != std::string::npos) {
                keywords.push_back(tok);
            }
        }
    }
    std::sort(keywords.begin(), keywords.end());
    keywords.erase(std::unique(keywords.begin(), keywords.end()), keywords.end());
    return keywords;
}

/// For each unlabeled member, find the known member with the minimal
/// combined score (ties: lexicographically smallest registrable) and emit a
/// Detection when that minimum is within tau. Comparisons stay inside the
/// cluster.
inline std::vector<Detection> refine_cluster(const Cluster& cluster, const RefineContext& ctx, double tau,
                                             detail::PairCache& cache, RefineStats& stats) {
    std::vector<Detection> detections;
    for (const auto u : cluster.members) {
        if (ctx.labels[u] != Label::Unlabeled) continue;
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_m = 0;
        detail::PairScore best_ps;
        bool found = false;
        for (const auto m : cluster.members) {
            if (ctx.labels[m] == Label::Unlabeled) continue;
            const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | m;
            auto it = cache.find(key);
            if (it == cache.end()) {
                ++stats.pairs_compared;
                it = cache.emplace(key, detail::score_pair(ctx, u, m, tau)).first;
            }
            const auto& ps = it->second;
            if (!ps.within) continue;
            const bool better =
                ps.combined < best ||
                (ps.combined == best && found &&
                 ctx.urls[m].registrable < ctx.urls[best_m].registrable);
            if (!found || better) {
                best = ps.combined;
                best_m = m;
                best_ps = ps;
                found = true;
            }
        }
        if (!found || best > tau) continue;

        Detection det;
        det.url = u;
        det.cluster = cluster.id;
        det.matched = best_m;
        det.score.dice = best_ps.dice;
        det.score.levenshtein =
            best_ps.lev_exact ? best_ps.levenshtein
                              : levenshtein_distance(ctx.urls[u].registrable, ctx.urls[best_m].registrable);
        det.score.combined = std::min(det.score.levenshtein, det.score.dice);
        det.common_tokens = common_keywords(ctx.urls[u], ctx.urls[best_m]);
        det.basis = ctx.labels[best_m] == Label::KnownLegit ? Basis::MatchedLegit : Basis::MatchedPhish;
        detections.push_back(std::move(det));
    }
    return detections;
}

/// Refine every cluster against one shared pair cache.
inline std::vector<Detection> refine_all(std::span<const Cluster> clusters, const RefineContext& ctx,
                                         double tau, RefineStats& stats) {
    detail::PairCache cache;
    std::vector<Detection> all;
    for (const auto& cluster : clusters) {
        auto found = refine_cluster(cluster, ctx, tau, cache, stats);
        all.insert(all.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return all;
}

/// Keep the best detection per unlabeled record (needed when several tables
/// rediscover the same URL) and order the result by (score, url id).
inline std::vector<Detection> dedup(std::vector<Detection> detections) {
    std::unordered_map<std::uint32_t, std::size_t> best;
    std::vector<Detection> kept;
    for (auto& det : detections) {
        const auto it = best.find(det.url);
        if (it == best.end()) {
            best.emplace(det.url, kept.size());
            kept.push_back(std::move(det));
        } else if (det.score.combined < kept[it->second].score.combined) {
            kept[it->second] = std::move(det);
        }
    }
    std::stable_sort(kept.begin(), kept.end(), [](const Detection& a, const Detection& b) {
        return a.score.combined != b.score.combined ? a.score.combined < b.score.combined : a.url < b.url;
    });
    return kept;
}

} // namespace wpn
