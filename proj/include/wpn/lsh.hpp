#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "wpn/errors.hpp"
#include "wpn/rng.hpp"
#include "wpn/vocab.hpp"

namespace wpn {

/// k-bit bucket address; bit i is the sign of projection i.
using Signature = std::uint64_t;

/// k random hyperplanes in d dimensions. Component j of vector i is a
/// standard normal draw from a stream seeded by (seed, i), so the matrix
/// is reproducible for a fixed (k, d, seed) on any platform.
class ProjectionSet {
public:
    static constexpr std::uint32_t kMaxK = 62; // signature must fit one word

    static ProjectionSet make(std::uint32_t k, std::uint32_t d, std::uint64_t seed) {
        if (k < 1 || d < 1) raise(ErrorCode::InvalidParam, "projection set needs k >= 1 and d >= 1");
        if (k > kMaxK) raise(ErrorCode::InvalidParam, "k exceeds signature width (62)");
        ProjectionSet p;
        p.k_ = k;
        p.d_ = d;
        p.seed_ = seed;
        // Stored token-major (weights[j*k + i]) so a sparse dot touches one
        // contiguous block per active index.
        p.weights_.resize(static_cast<std::size_t>(k) * d);
        for (std::uint32_t i = 0; i < k; ++i) {
            Rng rng(derive_seed(seed, i));
            for (std::uint32_t j = 0; j < d; ++j) {
                p.weights_[static_cast<std::size_t>(j) * k + i] = rng.next_gaussian();
            }
        }
        return p;
    }

    std::uint32_t k() const { return k_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t seed() const { return seed_; }

    double component(std::uint32_t vector_index, std::uint32_t dim) const {
        return weights_[static_cast<std::size_t>(dim) * k_ + vector_index];
    }

    std::span<const double> column(std::uint32_t dim) const {
        return {weights_.data() + static_cast<std::size_t>(dim) * k_, k_};
    }

private:
    std::uint32_t k_ = 0;
    std::uint32_t d_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<double> weights_;
};

inline ProjectionSet make_projections(std::uint32_t k, std::uint32_t d, std::uint64_t seed) {
    return ProjectionSet::make(k, d, seed);
}

/// Sign pattern of the k sparse dot products. A dot of exactly zero (e.g.
/// the empty vector) maps to bit 0.
inline Signature signature(const SparseVector& x, const ProjectionSet& p) {
    if (x.dims != p.d()) {
        raise(ErrorCode::DimensionMismatch, "vector dims do not match projection dims");
    }
    double acc[ProjectionSet::kMaxK] = {};
    const std::uint32_t k = p.k();
    for (const std::uint32_t j : x.active) {
        const auto col = p.column(j);
        for (std::uint32_t i = 0; i < k; ++i) acc[i] += col[i];
    }
    Signature sig = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (acc[i] > 0.0) sig |= (Signature{1} << i);
    }
    return sig;
}

struct Bucket {
    Signature sig = 0;
    std::vector<std::uint32_t> members; // indices into the batch
};

/// One hash table: every batch member lands in exactly one bucket.
struct BucketTable {
    std::uint32_t k = 0;
    std::vector<Bucket> buckets; // sorted by signature
};

/// L independent tables over the same batch.
struct BucketMap {
    std::vector<BucketTable> tables;
};

/// Assign each vector to its signature bucket. No pairwise comparisons:
/// O(N * k * avg active size) plus a sort for deterministic grouping.
inline BucketTable bucketize(std::span<const SparseVector> batch, const ProjectionSet& p) {
    std::vector<Signature> sigs(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) sigs[i] = signature(batch[i], p);

    std::vector<std::uint32_t> order(batch.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return sigs[a] != sigs[b] ? sigs[a] < sigs[b] : a < b;
    });

    BucketTable table;
    table.k = p.k();
    for (std::size_t i = 0; i < order.size();) {
        Bucket bucket;
        bucket.sig = sigs[order[i]];
        std::size_t j = i;
        while (j < order.size() && sigs[order[j]] == bucket.sig) {
            bucket.members.push_back(order[j]);
            ++j;
        }
        table.buckets.push_back(std::move(bucket));
        i = j;
    }
    return table;
}

/// Build L tables; table t draws its projections from derive_seed(seed, t).
inline BucketMap bucketize_tables(std::span<const SparseVector> batch, std::uint32_t k, std::uint32_t d,
                                  std::uint32_t num_tables, std::uint64_t seed) {
    if (num_tables < 1) raise(ErrorCode::InvalidParam, "need at least one table");
    BucketMap map;
    map.tables.reserve(num_tables);
    for (std::uint32_t t = 0; t < num_tables; ++t) {
        const auto p = make_projections(k, d, derive_seed(seed, 0x7461626cull + t));
        map.tables.push_back(bucketize(batch, p));
    }
    return map;
}

} // namespace wpn
