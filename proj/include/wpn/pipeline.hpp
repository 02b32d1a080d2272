#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "wpn/errors.hpp"
#include "wpn/lsh.hpp"
#include "wpn/refine.hpp"
#include "wpn/suffixes.hpp"
#include "wpn/vocab.hpp"

namespace wpn {

struct PipelineConfig {
    std::optional<std::uint32_t> k; // nullopt = auto
    std::uint32_t tables = 1;
    std::uint64_t seed = 42;
    double tau = 0.5;
    std::string suffix_list_path; // empty = bundled snapshot
    bool drop_stopwords = false;

    void validate() const {
        if (!(tau > 0.0 && tau < 1.0)) raise(ErrorCode::InvalidParam, "threshold must be in (0,1)");
        if (tables < 1) raise(ErrorCode::InvalidParam, "table count must be >= 1");
        if (k && (*k < 4 || *k > ProjectionSet::kMaxK)) {
            raise(ErrorCode::InvalidParam, "explicit k must be in [4,62]");
        }
        if (k && tables > 1 && (*k + static_cast<std::uint32_t>(std::bit_width(std::uint64_t{tables - 1})) > 63)) {
            raise(ErrorCode::InvalidParam, "k and table count together overflow cluster ids");
        }
    }
};

/// Tokens removable via PipelineConfig::drop_stopwords.
inline const std::vector<std::string>& stopword_tokens() {
    static const std::vector<std::string> words = {"www"};
    return words;
}

/// ceil(log2 N) + 2, clamped to [4,24]: targets a few records per bucket.
inline std::uint32_t auto_k(std::size_t n) {
    std::uint32_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    return std::clamp(bits + 2, 4u, 24u);
}

struct StageTimings {
    double prep_ms = 0.0;
    double cluster_ms = 0.0;
    double refine_ms = 0.0;
    double total_ms = 0.0;
};

struct RunCounts {
    std::size_t input = 0;     // unlabeled URLs given
    std::size_t whitelist = 0; // known-legit URLs given
    std::size_t blacklist = 0; // known-phish URLs given
    std::size_t dropped = 0;   // records rejected during pre-processing
    std::size_t clusters_total = 0;
    std::size_t clusters_conclusive = 0;
    std::uint64_t pairs_compared = 0;
};

struct RunReport {
    std::vector<UrlRecord> records; // kept records, unlabeled first
    std::vector<TokenizedUrl> tokenized;
    std::vector<Detection> detections;
    RunCounts counts;
    StageTimings timings;
    PipelineConfig config;
    std::uint32_t resolved_k = 0;

    const UrlRecord& record_of(const Detection& det) const { return records[det.url]; }
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline void prep_list(std::span<const std::string> urls, Label label, const SuffixList& suffixes,
                      bool drop_stopwords, std::vector<UrlRecord>& records,
                      std::vector<TokenizedUrl>& tokenized, std::size_t& dropped) {
    for (const auto& raw : urls) {
        try {
            auto prepared = prepare_url(raw, records.size(), suffixes);
            if (drop_stopwords) {
                auto& toks = prepared.tokens;
                const auto& stop = stopword_tokens();
                auto kept = toks;
                kept.erase(std::remove_if(kept.begin(), kept.end(),
                                          [&](const std::string& t) {
                                              return std::find(stop.begin(), stop.end(), t) != stop.end();
                                          }),
                           kept.end());
                if (!kept.empty()) toks = std::move(kept); // never leave a record tokenless
            }
            records.push_back({raw, label});
            tokenized.push_back(std::move(prepared));
        } catch (const Error&) {
            ++dropped;
        }
    }
}

} // namespace detail

/// Full three-stage run: pre-processing, hash clustering, dual-metric
/// refinement. Deterministic for fixed inputs and config.
inline RunReport run(std::span<const std::string> unlabeled, std::span<const std::string> whitelist,
                     std::span<const std::string> blacklist, const PipelineConfig& cfg) {
    cfg.validate();
    const auto t_total = std::chrono::steady_clock::now();

    RunReport report;
    report.config = cfg;
    report.counts.input = unlabeled.size();
    report.counts.whitelist = whitelist.size();
    report.counts.blacklist = blacklist.size();

    const SuffixList own_list = cfg.suffix_list_path.empty() ? SuffixList{} : SuffixList::from_file(cfg.suffix_list_path);
    const SuffixList& suffixes = cfg.suffix_list_path.empty() ? SuffixList::bundled() : own_list;

    auto t0 = std::chrono::steady_clock::now();
    detail::prep_list(unlabeled, Label::Unlabeled, suffixes, cfg.drop_stopwords, report.records,
                      report.tokenized, report.counts.dropped);
    detail::prep_list(whitelist, Label::KnownLegit, suffixes, cfg.drop_stopwords, report.records,
                      report.tokenized, report.counts.dropped);
    detail::prep_list(blacklist, Label::KnownPhish, suffixes, cfg.drop_stopwords, report.records,
                      report.tokenized, report.counts.dropped);

    std::vector<Label> labels;
    labels.reserve(report.records.size());
    for (const auto& rec : report.records) labels.push_back(rec.label);

    if (report.records.empty()) {
        report.timings.prep_ms = detail::ms_since(t0);
        report.timings.total_ms = detail::ms_since(t_total);
        report.resolved_k = cfg.k.value_or(auto_k(1));
        return report;
    }

    const auto vocab = build_vocabulary(report.tokenized);
    std::vector<SparseVector> vectors;
    vectors.reserve(report.tokenized.size());
    for (const auto& url : report.tokenized) vectors.push_back(vectorize(url, vocab));
    report.timings.prep_ms = detail::ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    report.resolved_k = cfg.k.value_or(auto_k(report.records.size()));
    const auto buckets = bucketize_tables(vectors, report.resolved_k, vocab.dims(), cfg.tables, cfg.seed);
    for (const auto& table : buckets.tables) report.counts.clusters_total += table.buckets.size();
    report.timings.cluster_ms = detail::ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto clusters = shortlist(buckets, labels);
    report.counts.clusters_conclusive = clusters.size();

    const auto ctx = RefineContext::build(report.tokenized, labels);
    RefineStats stats;
    report.detections = dedup(refine_all(clusters, ctx, cfg.tau, stats));
    report.counts.pairs_compared = stats.pairs_compared;
    report.timings.refine_ms = detail::ms_since(t0);
    report.timings.total_ms = detail::ms_since(t_total);
    return report;
}

/// Parse a one-URL-per-line file; '#' comment lines and blanks ignored.
inline std::vector<std::string> load_url_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::IoError, "cannot open url list: " + path);
    std::vector<std::string> urls;
    std::string line;
    while (std::getline(in, line)) {
        const auto trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        urls.emplace_back(trimmed);
    }
    return urls;
}

struct FeedbackResult {
    std::size_t before = 0;
    std::size_t after = 0;
};

namespace detail {

/// Advisory lock covering the read-append window on the store file.
class StoreLock {
public:
    explicit StoreLock(const std::string& path) {
        fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ >= 0) ::flock(fd_, LOCK_EX);
    }
    ~StoreLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    StoreLock(const StoreLock&) = delete;
    StoreLock& operator=(const StoreLock&) = delete;
    bool held() const { return fd_ >= 0; }

private:
    int fd_ = -1;
};

} // namespace detail

/// Append verified detections to the blacklist store, deduplicating by
/// normalized full hostname. The store keeps hostnames (suffix intact) so
/// later runs re-derive tokens under whatever suffix list they load.
inline FeedbackResult feedback(const RunReport& report, std::span<const std::string> verified,
                               const std::string& store_path) {
    std::set<std::string> detected;
    for (const auto& det : report.detections) detected.insert(report.records[det.url].raw);
    for (const auto& url : verified) {
        if (!detected.count(url)) {
            raise(ErrorCode::UnknownDetectionId, "not a detection from this report: " + url);
        }
    }

    detail::StoreLock lock(store_path);
    if (!lock.held()) raise(ErrorCode::StoreWriteFailure, "cannot open store: " + store_path);

    std::set<std::string> existing;
    {
        std::ifstream in(store_path);
        std::string line;
        while (in && std::getline(in, line)) {
            const auto trimmed = detail::trim(line);
            if (!trimmed.empty() && trimmed.front() != '#') existing.emplace(trimmed);
        }
    }

    FeedbackResult result;
    result.before = existing.size();
    std::vector<std::string> fresh;
    for (const auto& url : verified) {
        auto host = normalize(url);
        if (existing.insert(host).second) fresh.push_back(std::move(host));
    }
    std::sort(fresh.begin(), fresh.end());

    if (!fresh.empty()) {
        std::ofstream out(store_path, std::ios::app);
        if (!out) raise(ErrorCode::StoreWriteFailure, "cannot open store for append: " + store_path);
        for (const auto& host : fresh) out << host << '\n';
        if (!out) raise(ErrorCode::StoreWriteFailure, "write failed: " + store_path);
    }
    result.after = existing.size();
    return result;
}

namespace detail {

inline std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string format_score(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

} // namespace detail

inline void write_detections_csv(const RunReport& report, std::ostream& out) {
    out << "url,cluster,matched,basis,levenshtein,dice,combined,common_tokens\n";
    for (const auto& det : report.detections) {
        std::string joined;
        for (const auto& tok : det.common_tokens) {
            if (!joined.empty()) joined += '|';
            joined += tok;
        }
        out << detail::csv_field(report.records[det.url].raw) << ',' << det.cluster.display << ','
            << detail::csv_field(report.records[det.matched].raw) << ',' << basis_name(det.basis) << ','
            << detail::format_score(det.score.levenshtein) << ',' << detail::format_score(det.score.dice)
            << ',' << detail::format_score(det.score.combined) << ',' << detail::csv_field(joined) << '\n';
    }
}

inline void write_detections_csv(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::IoError, "cannot write detections: " + path);
    write_detections_csv(report, out);
}

/// key=value summary: counts, resolved config, timings. Timing keys are the
/// only non-deterministic lines.
inline void write_summary(const RunReport& report, std::ostream& out) {
    out << "input=" << report.counts.input << '\n'
        << "whitelist=" << report.counts.whitelist << '\n'
        << "blacklist=" << report.counts.blacklist << '\n'
        << "dropped=" << report.counts.dropped << '\n'
        << "clusters_total=" << report.counts.clusters_total << '\n'
        << "clusters_conclusive=" << report.counts.clusters_conclusive << '\n'
        << "detections=" << report.detections.size() << '\n'
        << "pairs_compared=" << report.counts.pairs_compared << '\n'
        << "k=" << report.resolved_k << '\n'
        << "k_mode=" << (report.config.k ? "explicit" : "auto") << '\n'
        << "tables=" << report.config.tables << '\n'
        << "seed=" << report.config.seed << '\n'
        << "threshold=" << detail::format_score(report.config.tau) << '\n'
        << "drop_stopwords=" << (report.config.drop_stopwords ? 1 : 0) << '\n'
        << "suffix_source="
        << (report.config.suffix_list_path.empty() ? std::string("bundled") : report.config.suffix_list_path)
        << '\n'
        << "prep_ms=" << detail::format_score(report.timings.prep_ms) << '\n'
        << "cluster_ms=" << detail::format_score(report.timings.cluster_ms) << '\n'
        << "refine_ms=" << detail::format_score(report.timings.refine_ms) << '\n'
        << "total_ms=" << detail::format_score(report.timings.total_ms) << '\n';
}

inline void write_summary(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::IoError, "cannot write summary: " + path);
    write_summary(report, out);
}

} // namespace wpn
