#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wpn/errors.hpp"
#include "wpn/url.hpp"

namespace wpn {

/// Bijection token <-> dense index. Indices are assigned in lexicographic
/// token order so the result is independent of batch order.
class Vocabulary {
public:
    static Vocabulary build(std::span<const TokenizedUrl> batch) {
        if (batch.empty()) raise(ErrorCode::EmptyBatch, "cannot build a vocabulary from an empty batch");
        std::set<std::string> distinct;
        for (const auto& url : batch) {
            distinct.insert(url.tokens.begin(), url.tokens.end());
        }
        Vocabulary vocab;
        vocab.tokens_.assign(distinct.begin(), distinct.end());
        vocab.index_.reserve(vocab.tokens_.size());
        for (std::uint32_t i = 0; i < vocab.tokens_.size(); ++i) {
            vocab.index_.emplace(vocab.tokens_[i], i);
        }
        return vocab;
    }

    std::uint32_t dims() const { return static_cast<std::uint32_t>(tokens_.size()); }

    std::uint32_t index_of(const std::string& token) const {
        const auto it = index_.find(token);
        if (it == index_.end()) raise(ErrorCode::UnknownToken, "token not in vocabulary: " + token);
        return it->second;
    }

    const std::string& token_at(std::uint32_t index) const { return tokens_[index]; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

inline Vocabulary build_vocabulary(std::span<const TokenizedUrl> batch) {
    return Vocabulary::build(batch);
}

/// Binary occurrence vector: sorted distinct vocabulary indices, implicit
/// value 1.
struct SparseVector {
    std::uint32_t dims = 0;
    std::vector<std::uint32_t> active;
};

inline SparseVector vectorize(const TokenizedUrl& url, const Vocabulary& vocab) {
    SparseVector v;
    v.dims = vocab.dims();
    v.active.reserve(url.tokens.size());
    for (const auto& token : url.tokens) {
        v.active.push_back(vocab.index_of(token));
    }
    std::sort(v.active.begin(), v.active.end());
    v.active.erase(std::unique(v.active.begin(), v.active.end()), v.active.end());
    return v;
}

/// cos(a, b) for binary vectors: |a∩b| / sqrt(|a||b|).
inline double cosine_similarity(const SparseVector& a, const SparseVector& b) {
    if (a.active.empty() || b.active.empty()) return 0.0;
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.active.size() && j < b.active.size()) {
        if (a.active[i] == b.active[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a.active[i] < b.active[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(inter) /
           std::sqrt(static_cast<double>(a.active.size()) * static_cast<double>(b.active.size()));
}

} // namespace wpn
