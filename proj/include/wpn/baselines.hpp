#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "wpn/errors.hpp"
#include "wpn/refine.hpp"
#include "wpn/rng.hpp"
#include "wpn/vocab.hpp"

namespace wpn {

enum class BaselineAlgorithm : std::uint8_t { KMeans, Hac };

struct BaselineAssignment {
    BaselineAlgorithm algorithm = BaselineAlgorithm::KMeans;
    std::vector<std::uint32_t> assignment;  // record id -> cluster id
    std::vector<double> objective_trace;    // k-means: objective after each iteration
    std::vector<double> merge_distances;    // hac: linkage distance per merge
    std::string params;
};

namespace detail {

/// Unit-normalized sparse point: every active index carries 1/sqrt(|active|).
inline double unit_weight(const SparseVector& v) {
    return v.active.empty() ? 0.0 : 1.0 / std::sqrt(static_cast<double>(v.active.size()));
}

inline double dot_dense(const SparseVector& v, std::span<const double> dense) {
    double sum = 0.0;
    for (const auto j : v.active) sum += dense[j];
    return sum * unit_weight(v);
}

} // namespace detail

/// Spherical Lloyd iterations: cosine-similarity assignment against unit
/// centroids, centroids re-estimated as normalized means of the unit
/// members. Seeded k-means++ initialization; fully deterministic.
inline BaselineAssignment kmeans(std::span<const SparseVector> batch, std::uint32_t k_clusters,
                                 std::uint64_t seed, std::uint32_t max_iters = 50) {
    if (k_clusters < 2) raise(ErrorCode::InvalidParam, "k-means needs k_clusters >= 2");
    if (batch.size() < k_clusters) raise(ErrorCode::InvalidParam, "batch smaller than k_clusters");
    if (max_iters < 1) raise(ErrorCode::InvalidParam, "max_iters must be >= 1");
    const std::size_t n = batch.size();
    const std::uint32_t d = batch.front().dims;
    const std::uint32_t kc = k_clusters;

    std::vector<double> centroids(static_cast<std::size_t>(kc) * d, 0.0);
    const auto centroid = [&](std::uint32_t c) {
        return std::span<double>(centroids.data() + static_cast<std::size_t>(c) * d, d);
    };
    const auto set_centroid_to_point = [&](std::uint32_t c, const SparseVector& p) {
        auto row = centroid(c);
        std::fill(row.begin(), row.end(), 0.0);
        const double w = detail::unit_weight(p);
        for (const auto j : p.active) row[j] = w;
    };

    // k-means++: next seed drawn with probability proportional to squared
    // cosine distance from the nearest chosen centroid.
    Rng rng(derive_seed(seed, 0x6b6dull));
    std::vector<double> dmin(n);
    set_centroid_to_point(0, batch[static_cast<std::size_t>(rng.next_below(n))]);
    for (std::size_t i = 0; i < n; ++i) dmin[i] = 1.0 - detail::dot_dense(batch[i], centroid(0));
    for (std::uint32_t c = 1; c < kc; ++c) {
        double total = 0.0;
        for (const double dist : dmin) total += dist * dist;
        std::size_t pick = 0;
        if (total > 0.0) {
            const double target = rng.next_unit() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += dmin[i] * dmin[i];
                if (acc >= target) {
                    pick = i;
                    break;
                }
                pick = i;
            }
        } else {
            pick = static_cast<std::size_t>(rng.next_below(n));
        }
        set_centroid_to_point(c, batch[pick]);
        for (std::size_t i = 0; i < n; ++i) {
            dmin[i] = std::min(dmin[i], 1.0 - detail::dot_dense(batch[i], centroid(c)));
        }
    }

    BaselineAssignment result;
    result.algorithm = BaselineAlgorithm::KMeans;
    result.assignment.assign(n, 0);
    result.params = "k_clusters=" + std::to_string(kc) + " seed=" + std::to_string(seed) +
                    " max_iters=" + std::to_string(max_iters);

    std::vector<double> norms(kc, 0.0);
    for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
        bool changed = iter == 0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = -std::numeric_limits<double>::infinity();
            std::uint32_t best_c = 0;
            for (std::uint32_t c = 0; c < kc; ++c) {
                const double sim = detail::dot_dense(batch[i], centroid(c));
                if (sim > best) {
                    best = sim;
                    best_c = c;
                }
            }
            if (result.assignment[i] != best_c) {
                result.assignment[i] = best_c;
                changed = true;
            }
        }
        if (!changed) break;

        std::vector<double> acc(static_cast<std::size_t>(kc) * d, 0.0);
        std::vector<std::size_t> counts(kc, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = result.assignment[i];
            const double w = detail::unit_weight(batch[i]);
            double* row = acc.data() + static_cast<std::size_t>(c) * d;
            for (const auto j : batch[i].active) row[j] += w;
            ++counts[c];
        }
        for (std::uint32_t c = 0; c < kc; ++c) {
            double norm = 0.0;
            const double* row = acc.data() + static_cast<std::size_t>(c) * d;
            for (std::uint32_t j = 0; j < d; ++j) norm += row[j] * row[j];
            norms[c] = std::sqrt(norm);
            if (counts[c] == 0 || norms[c] == 0.0) continue; // keep previous centroid
            auto dst = centroid(c);
            for (std::uint32_t j = 0; j < d; ++j) dst[j] = row[j] / norms[c];
        }

        double objective = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            objective += 1.0 - detail::dot_dense(batch[i], centroid(result.assignment[i]));
        }
        result.objective_trace.push_back(objective);
    }
    return result;
}

/// Average-linkage agglomeration under cosine distance, merging while the
/// smallest pairwise cluster distance stays within cut_distance. Quadratic
/// by design; guarded to evaluation-scale batches.
inline BaselineAssignment hac(std::span<const SparseVector> batch, double cut_distance) {
    if (batch.empty()) raise(ErrorCode::InvalidParam, "hac needs a non-empty batch");
    if (!(cut_distance > 0.0 && cut_distance <= 1.0)) {
        raise(ErrorCode::InvalidParam, "cut_distance must be in (0,1]");
    }
    const std::size_t n = batch.size();
    if (n > 16384) raise(ErrorCode::InvalidParam, "hac batch too large for the quadratic baseline");

    BaselineAssignment result;
    result.algorithm = BaselineAlgorithm::Hac;
    result.params = "cut_distance=" + std::to_string(cut_distance);
    result.assignment.assign(n, 0);
    if (n == 1) return result;

    std::vector<double> dist(n * n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = 1.0 - cosine_similarity(batch[i], batch[j]);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }

    std::vector<bool> active(n, true);
    std::vector<double> size(n, 1.0);
    std::vector<std::vector<std::uint32_t>> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = {static_cast<std::uint32_t>(i)};

    // Cached nearest neighbour per active row; rebuilt lazily after merges.
    std::vector<std::size_t> nearest(n, 0);
    std::vector<double> nearest_dist(n, std::numeric_limits<double>::infinity());
    const auto rescan = [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = i;
        const double* row = dist.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && active[j] && row[j] < best) {
                best = row[j];
                best_j = j;
            }
        }
        nearest[i] = best_j;
        nearest_dist[i] = best;
    };
    for (std::size_t i = 0; i < n; ++i) rescan(i);

    std::size_t remaining = n;
    while (remaining > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t a = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (active[i] && nearest_dist[i] < best) {
                best = nearest_dist[i];
                a = i;
            }
        }
        if (!(best <= cut_distance)) break;
        std::size_t b = nearest[a];
        if (b < a) std::swap(a, b); // merge the larger index into the smaller
        result.merge_distances.push_back(best);

        const double sa = size[a], sb = size[b];
        for (std::size_t h = 0; h < n; ++h) {
            if (!active[h] || h == a || h == b) continue;
            const double updated = (sa * dist[a * n + h] + sb * dist[b * n + h]) / (sa + sb);
            dist[a * n + h] = updated;
            dist[h * n + a] = updated;
        }
        active[b] = false;
        size[a] += size[b];
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        members[b].clear();

        rescan(a);
        for (std::size_t h = 0; h < n; ++h) {
            if (!active[h] || h == a) continue;
            if (nearest[h] == a || nearest[h] == b) {
                rescan(h);
            } else if (dist[h * n + a] < nearest_dist[h]) {
                nearest[h] = a;
                nearest_dist[h] = dist[h * n + a];
            }
        }
        --remaining;
    }

    std::uint32_t next_id = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        std::sort(members[i].begin(), members[i].end());
        for (const auto rec : members[i]) result.assignment[rec] = next_id;
        ++next_id;
    }
    return result;
}

/// Adapter so baseline clusterings flow through the same shortlist/refine
/// stages as the hash clusters.
inline std::vector<Cluster> clusters_from_assignment(const BaselineAssignment& assignment) {
    std::uint32_t max_id = 0;
    for (const auto c : assignment.assignment) max_id = std::max(max_id, c);
    std::vector<Cluster> clusters(static_cast<std::size_t>(max_id) + 1);
    for (std::uint32_t c = 0; c <= max_id; ++c) {
        clusters[c].id = {0, c, c};
    }
    for (std::uint32_t i = 0; i < assignment.assignment.size(); ++i) {
        clusters[assignment.assignment[i]].members.push_back(i);
    }
    std::erase_if(clusters, [](const Cluster& c) { return c.members.empty(); });
    return clusters;
}

} // namespace wpn
