#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "wpn/baselines.hpp"
#include "wpn/pipeline.hpp"
#include "wpn/rng.hpp"

namespace wpn {

enum class Algorithm : std::uint8_t { Wpn, KMeans, Hac };

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Wpn: return "wpn";
        case Algorithm::KMeans: return "kmeans";
        case Algorithm::Hac: return "hac";
    }
    return "?";
}

enum class Provenance : std::uint8_t { FileBacked, Synthetic };

/// Ground-truth evaluation inputs. The pipeline only ever sees `unlabeled`
/// (the blacklist with labels withheld) and `whitelist`.
struct EvalDataset {
    std::vector<std::string> whitelist;
    std::vector<std::string> blacklist;
    std::vector<std::string> unlabeled;
    Provenance provenance = Provenance::Synthetic;
    std::size_t duplicates_dropped = 0;
};

struct AlgoResult {
    std::string algorithm;
    std::size_t detected = 0;
    std::size_t total = 0;
    double detection_rate = 0.0;       // percent
    double wall_ms = 0.0;              // clustering + refinement only
    std::uint64_t pairs_compared = 0;  // refinement metric evaluations
};

struct EvalResult {
    std::vector<AlgoResult> rows;
};

inline constexpr std::uint64_t kUnlabeledShuffleSeed = 0x5eedd5ee;

namespace detail {

inline std::vector<std::string> dedup_lines(std::vector<std::string> lines, std::size_t& dropped) {
    std::unordered_set<std::string> seen;
    std::vector<std::string> kept;
    kept.reserve(lines.size());
    for (auto& line : lines) {
        if (seen.insert(line).second) {
            kept.push_back(std::move(line));
        } else {
            ++dropped;
        }
    }
    return kept;
}

} // namespace detail

inline EvalDataset load_dataset(const std::string& whitelist_path, const std::string& blacklist_path) {
    EvalDataset ds;
    ds.provenance = Provenance::FileBacked;
    ds.whitelist = detail::dedup_lines(load_url_list(whitelist_path), ds.duplicates_dropped);
    ds.blacklist = detail::dedup_lines(load_url_list(blacklist_path), ds.duplicates_dropped);
    if (ds.whitelist.empty()) raise(ErrorCode::EmptyFile, "no urls in " + whitelist_path);
    if (ds.blacklist.empty()) raise(ErrorCode::EmptyFile, "no urls in " + blacklist_path);
    ds.unlabeled = ds.blacklist;
    Rng rng(kUnlabeledShuffleSeed);
    rng.shuffle(ds.unlabeled);
    return ds;
}

// ---------------------------------------------------------------------------
// Deterministic URL generation: brand corpus, benign host builder, and the
// mutation rules used both by `generate_adversarial` and the bundled
// benchmark fixtures.
// ---------------------------------------------------------------------------

namespace fixture {

inline const std::vector<std::string>& attach_keywords() {
    static const std::vector<std::string> words = {
        "support", "secure", "login", "verify", "account", "accounts", "mail",  "pay",
        "shop",    "service", "help", "billing", "online",  "web",      "my",   "portal",
        "id",      "auth",    "store", "signin", "update",  "alert",    "cloud", "news",
    };
    return words;
}

inline const std::vector<std::string>& benign_tlds() {
    static const std::vector<std::string> tlds = {"com", "net", "org", "io", "co",
                                                  "de",  "fr",  "eu",  "info", "biz"};
    return tlds;
}

inline const std::vector<std::string>& registrar_hosts() {
    static const std::vector<std::string> hosts = {"gegahost", "webhostapp", "sitehost", "hostland",
                                                   "parkzone"};
    return hosts;
}

inline const std::vector<std::string>& filler_words() {
    static const std::vector<std::string> words = {"nation", "looks", "pool", "boom", "joy",
                                                   "zone",   "land",  "club", "spot", "hub"};
    return words;
}

/// FNV-1a, so per-token derivations do not depend on std::hash.
inline std::uint64_t token_hash(std::string_view token) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : token) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Brand corpus: a fixed set of widely-phished names extended with
/// synthesized two-syllable brands.
inline std::vector<std::string> brand_corpus(std::size_t count, std::uint64_t seed) {
    static const std::vector<std::string> base = {
        "amazon",   "paypal",  "google",  "apple",    "netflix",  "steam",    "microsoft", "ebay",
        "facebook", "twitter", "instagram", "linkedin", "dropbox", "spotify", "adobe",     "oracle",
        "samsung",  "walmart", "target",  "costco",   "chase",    "citibank", "barclays",  "santander",
        "revolut",  "monzo",   "klarna",  "shopify",  "etsy",     "airbnb",   "booking",   "expedia",
        "uber",     "lyft",    "zoom",    "slack",    "github",   "gitlab",   "coinbase",  "binance",
    };
    static const std::vector<std::string> heads = {"ama", "pay", "goo", "net", "ste", "mic", "zen",
                                                   "flux", "nor", "vel", "kor", "tra", "bri", "sol",
                                                   "mar", "del", "fin", "ger", "hol", "yan", "duo"};
    static const std::vector<std::string> tails = {"zon",  "pal",  "dex",  "flix", "eam",  "soft",
                                                   "tech", "base", "core", "mark", "link", "mart",
                                                   "bank", "cast", "port", "folio", "gate", "wave",
                                                   "nest", "mint", "grid"};
    std::set<std::string> brands(base.begin(), base.end());
    Rng rng(derive_seed(seed, 0x6272616e64ull));
    while (brands.size() < count) {
        std::string b = rng.choice(heads) + rng.choice(tails);
        if (rng.next_unit() < 0.3) b += rng.choice(std::vector<std::string>{"ly", "io", "it", "on", "eo"});
        brands.insert(std::move(b));
    }
    std::vector<std::string> out(brands.begin(), brands.end());
    out.resize(std::min(out.size(), count));
    return out;
}

/// The service subdomains a brand plausibly operates. Derived from the
/// brand token alone so whitelist construction and URL generation agree
/// without sharing state.
inline std::vector<std::string> brand_services(std::string_view brand, std::size_t count = 6) {
    const auto& pool = attach_keywords();
    std::vector<std::string> shuffled = pool;
    Rng rng(token_hash(brand));
    rng.shuffle(shuffled);
    shuffled.resize(std::min(count, shuffled.size()));
    return shuffled;
}

/// Benign-style hosts: root, www and service subdomains per brand.
inline std::vector<std::string> build_whitelist(std::span<const std::string> brands,
                                                std::size_t per_brand, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x77686974ull));
    std::vector<std::string> entries;
    for (const auto& brand : brands) {
        const auto& tlds = benign_tlds();
        entries.push_back(brand + "." + rng.choice(tlds));
        if (per_brand >= 2) entries.push_back("www." + brand + "." + rng.choice(tlds));
        const auto services = brand_services(brand);
        for (std::size_t s = 0; s + 2 < per_brand && s < services.size(); ++s) {
            entries.push_back(services[s] + "." + brand + "." + rng.choice(tlds));
        }
    }
    return entries;
}

enum class Rule : std::uint8_t {
    Reorder,        // recombine a brand with one of its own service words
    AttachService,  // extra keyword on top of a service pair
    AttachRoot,     // keyword the brand does not use
    DigitKeyword,   // digit-for-letter substitution in the keyword
    DigitBrand,     // digit-for-letter substitution in the brand
    RegistrarMulti, // brand-word.registrarhost.net
    RegistrarConcat // brandword.registrarhost.net (no separator)
};

struct RuleMix {
    double reorder, attach_service, attach_root, digit_keyword, digit_brand, registrar_multi,
        registrar_concat;
};

/// Mix used by generate_adversarial and the AI-resilience fixture.
inline constexpr RuleMix kAdversarialMix = {0.22, 0.30, 0.14, 0.14, 0.10, 0.08, 0.02};
/// Mix used by the detection-rate benchmark fixture.
inline constexpr RuleMix kBenchmarkMix = {0.28, 0.32, 0.14, 0.14, 0.06, 0.04, 0.02};

inline Rule pick_rule(const RuleMix& mix, Rng& rng) {
    const double u = rng.next_unit();
    double acc = mix.reorder;
    if (u < acc) return Rule::Reorder;
    if (u < (acc += mix.attach_service)) return Rule::AttachService;
    if (u < (acc += mix.attach_root)) return Rule::AttachRoot;
    if (u < (acc += mix.digit_keyword)) return Rule::DigitKeyword;
    if (u < (acc += mix.digit_brand)) return Rule::DigitBrand;
    if (u < (acc += mix.registrar_multi)) return Rule::RegistrarMulti;
    return Rule::RegistrarConcat;
}

inline std::string leetify(std::string token, Rng& rng) {
    static const std::pair<char, char> swaps[] = {{'o', '0'}, {'i', '1'}, {'l', '1'},
                                                  {'e', '3'}, {'a', '4'}, {'s', '5'}};
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i < token.size(); ++i) {
        for (const auto& [from, to] : swaps) {
            if (token[i] == from) {
                spots.push_back(i);
                break;
            }
        }
    }
    if (spots.empty()) return token + "1";
    const auto at = spots[static_cast<std::size_t>(rng.next_below(spots.size()))];
    for (const auto& [from, to] : swaps) {
        if (token[at] == from) {
            token[at] = to;
            break;
        }
    }
    return token;
}

inline std::string join_pair(const std::string& a, const std::string& b, Rng& rng) {
    switch (rng.next_below(3)) {
        case 0: return a + "-" + b;
        case 1: return b + "-" + a;
        default: return a + "." + b;
    }
}

inline std::string mimic_url(const std::string& brand, Rule rule, Rng& rng) {
    const auto services = brand_services(brand);
    const auto& pool = attach_keywords();
    const auto& tlds = benign_tlds();
    const std::string tld = rng.choice(tlds);
    switch (rule) {
        case Rule::Reorder:
            return join_pair(rng.choice(services), brand, rng) + "." + tld;
        case Rule::AttachService: {
            const auto& svc = rng.choice(services);
            std::string extra = rng.choice(pool);
            while (extra == svc) extra = rng.choice(pool);
            switch (rng.next_below(3)) {
                case 0: return extra + "-" + svc + "-" + brand + "." + tld;
                case 1: return svc + "-" + brand + "-" + extra + "." + tld;
                default: return extra + "." + svc + "-" + brand + "." + tld;
            }
        }
        case Rule::AttachRoot: {
            std::string word = rng.choice(pool);
            while (std::find(services.begin(), services.end(), word) != services.end()) {
                word = rng.choice(pool);
            }
            return brand + "-" + word + "." + tld;
        }
        case Rule::DigitKeyword:
            return leetify(rng.choice(services), rng) + "-" + brand + "." + tld;
        case Rule::DigitBrand:
            return rng.choice(services) + "-" + leetify(brand, rng) + "." + tld;
        case Rule::RegistrarMulti:
            return brand + "-" + rng.choice(filler_words()) + "." + rng.choice(registrar_hosts()) + ".net";
        case Rule::RegistrarConcat:
            return brand + rng.choice(filler_words()) + "." + rng.choice(registrar_hosts()) + ".net";
    }
    return brand + "." + tld;
}

inline std::vector<std::string> generate(std::span<const std::string> targets, std::size_t count,
                                         std::uint64_t seed, const RuleMix& mix) {
    if (targets.empty()) raise(ErrorCode::InvalidParam, "need at least one target token");
    if (count < 1) raise(ErrorCode::InvalidParam, "count must be >= 1");
    Rng rng(derive_seed(seed, 0x67656eull));
    std::unordered_set<std::string> seen;
    std::vector<std::string> urls;
    urls.reserve(count);
    while (urls.size() < count) {
        const auto& brand = targets[static_cast<std::size_t>(rng.next_below(targets.size()))];
        auto url = mimic_url(brand, pick_rule(mix, rng), rng);
        if (seen.insert(url).second) urls.push_back(std::move(url));
    }
    return urls;
}

} // namespace fixture

/// Rule-based adversarial URL generator: seeded composition of keyword
/// attachment, hyphen/dot insertion, token reordering, digit substitution
/// and registrar-style host suffixes over the target tokens.
inline std::vector<std::string> generate_adversarial(std::span<const std::string> targets,
                                                     std::size_t count, std::uint64_t seed) {
    return fixture::generate(targets, count, seed, fixture::kAdversarialMix);
}

/// Bundled deterministic analog of the detection-rate benchmark: brand
/// whitelist plus brand-mimicking blacklist, 1000 + 1000 by default.
inline EvalDataset make_benchmark_fixture(std::size_t n_white = 1000, std::size_t n_black = 1000,
                                          std::uint64_t seed = 7) {
    const std::size_t per_brand = 8;
    const auto brands = fixture::brand_corpus(std::max<std::size_t>(1, n_white / per_brand), seed);
    EvalDataset ds;
    ds.provenance = Provenance::Synthetic;
    ds.whitelist = fixture::build_whitelist(brands, per_brand, seed);
    ds.whitelist.resize(std::min(ds.whitelist.size(), n_white));
    ds.blacklist = fixture::generate(brands, n_black, seed, fixture::kBenchmarkMix);
    ds.unlabeled = ds.blacklist;
    Rng rng(kUnlabeledShuffleSeed);
    rng.shuffle(ds.unlabeled);
    return ds;
}

/// Bundled analog of the AI-generated phishing experiment: 800 benign hosts
/// and 714 adversarial URLs over the same brands.
inline EvalDataset make_adversarial_fixture(std::size_t n_white = 800, std::size_t n_black = 714,
                                            std::uint64_t seed = 11) {
    const std::size_t per_brand = 8;
    const auto brands = fixture::brand_corpus(std::max<std::size_t>(1, n_white / per_brand), seed);
    EvalDataset ds;
    ds.provenance = Provenance::Synthetic;
    ds.whitelist = fixture::build_whitelist(brands, per_brand, seed);
    ds.whitelist.resize(std::min(ds.whitelist.size(), n_white));
    ds.blacklist = generate_adversarial(brands, n_black, seed);
    ds.unlabeled = ds.blacklist;
    Rng rng(kUnlabeledShuffleSeed);
    rng.shuffle(ds.unlabeled);
    return ds;
}

/// Synthetic hostnames with an open-ended vocabulary, for scaling runs.
inline std::vector<std::string> make_scaling_urls(std::size_t count, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x5ca1eull));
    const auto& tlds = fixture::benign_tlds();
    const std::size_t pool = std::max<std::size_t>(64, count / 2);
    std::vector<std::string> urls;
    urls.reserve(count);
    const auto word = [&](std::uint64_t id) {
        static const char* syl[] = {"ba", "ce", "di", "fo", "gu", "ha", "ji", "ko", "lu", "me",
                                    "ni", "po", "qa", "ru", "se", "ti", "vo", "wu", "xe", "zo"};
        std::string w;
        std::uint64_t x = mix64(id);
        for (int s = 0; s < 3; ++s) {
            w += syl[x % 20];
            x /= 20;
        }
        return w + std::to_string(id % 97);
    };
    for (std::size_t i = 0; i < count; ++i) {
        const auto a = rng.next_below(pool);
        const auto b = rng.next_below(pool);
        std::string url = word(a) + "-" + word(b);
        if (rng.next_unit() < 0.3) url += "." + word(rng.next_below(pool));
        urls.push_back(url + "." + rng.choice(tlds));
    }
    return urls;
}

/// Pinned evaluation configs for the bundled fixtures. Multi-table hashing
/// trades memory for recall; the per-fixture k keeps accidental bucket
/// collisions (and with them refinement work) low.
inline PipelineConfig benchmark_fixture_config() {
    PipelineConfig cfg;
    cfg.k = 10;
    cfg.tables = 48;
    cfg.seed = 1303;
    cfg.tau = 0.5;
    return cfg;
}

inline PipelineConfig adversarial_fixture_config() {
    PipelineConfig cfg;
    cfg.k = 9;
    cfg.tables = 48;
    cfg.seed = 1303;
    cfg.tau = 0.5;
    return cfg;
}

inline constexpr double kHacCutDistance = 0.5;

/// Run the requested algorithms over identical inputs. Pre-processing is
/// shared and untimed; wall_ms covers clustering plus refinement.
inline EvalResult evaluate(const EvalDataset& ds, std::span<const Algorithm> algorithms,
                           const PipelineConfig& cfg) {
    cfg.validate();

    // Shared pre-processing. The pipeline sees the blacklist only as
    // unlabeled records; ground truth stays here in the harness.
    std::vector<UrlRecord> records;
    std::vector<TokenizedUrl> tokenized;
    std::size_t dropped = 0;
    const SuffixList& suffixes = SuffixList::bundled();
    detail::prep_list(ds.unlabeled, Label::Unlabeled, suffixes, cfg.drop_stopwords, records, tokenized,
                      dropped);
    detail::prep_list(ds.whitelist, Label::KnownLegit, suffixes, cfg.drop_stopwords, records, tokenized,
                      dropped);
    std::vector<Label> labels;
    labels.reserve(records.size());
    for (const auto& rec : records) labels.push_back(rec.label);

    const auto vocab = build_vocabulary(tokenized);
    std::vector<SparseVector> vectors;
    vectors.reserve(tokenized.size());
    for (const auto& url : tokenized) vectors.push_back(vectorize(url, vocab));
    const auto ctx = RefineContext::build(tokenized, labels);

    std::unordered_set<std::string> truth(ds.blacklist.begin(), ds.blacklist.end());
    const std::uint32_t resolved_k = cfg.k.value_or(auto_k(records.size()));

    EvalResult result;
    for (const auto algo : algorithms) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Cluster> clusters;
        switch (algo) {
            case Algorithm::Wpn: {
                const auto map = bucketize_tables(vectors, resolved_k, vocab.dims(), cfg.tables, cfg.seed);
                clusters = shortlist(map, labels);
                break;
            }
            case Algorithm::KMeans: {
                const auto kc = static_cast<std::uint32_t>(std::max<std::size_t>(2, records.size() / 8));
                const auto assignment = kmeans(vectors, kc, cfg.seed);
                clusters = conclusive_only(clusters_from_assignment(assignment), labels);
                break;
            }
            case Algorithm::Hac: {
                const auto assignment = hac(vectors, kHacCutDistance);
                clusters = conclusive_only(clusters_from_assignment(assignment), labels);
                break;
            }
        }
        RefineStats stats;
        const auto detections = dedup(refine_all(clusters, ctx, cfg.tau, stats));
        const double wall_ms = detail::ms_since(t0);

        std::unordered_set<std::string> captured;
        for (const auto& det : detections) {
            const auto& raw = records[det.url].raw;
            if (truth.count(raw)) captured.insert(raw);
        }
        AlgoResult row;
        row.algorithm = algorithm_name(algo);
        row.detected = captured.size();
        row.total = ds.blacklist.size();
        row.detection_rate = 100.0 * static_cast<double>(row.detected) / static_cast<double>(row.total);
        row.wall_ms = wall_ms;
        row.pairs_compared = stats.pairs_compared;
        result.rows.push_back(std::move(row));
    }
    return result;
}

inline void write_eval_csv(const EvalResult& result, std::ostream& out) {
    out << "algorithm,detected,total,detection_rate,wall_ms\n";
    for (const auto& row : result.rows) {
        out << row.algorithm << ',' << row.detected << ',' << row.total << ','
            << detail::format_score(row.detection_rate) << ',' << detail::format_score(row.wall_ms)
            << '\n';
    }
}

/// Long format (algorithm, metric, value) for bar-chart tooling.
inline void write_eval_long_csv(const EvalResult& result, std::ostream& out) {
    out << "algorithm,metric,value\n";
    for (const auto& row : result.rows) {
        out << row.algorithm << ",detection_rate," << detail::format_score(row.detection_rate) << '\n';
    }
    for (const auto& row : result.rows) {
        out << row.algorithm << ",wall_ms," << detail::format_score(row.wall_ms) << '\n';
    }
}

inline void write_eval_csv(const EvalResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::IoError, "cannot write eval results: " + path);
    write_eval_csv(result, out);
}

inline void write_eval_long_csv(const EvalResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::IoError, "cannot write eval results: " + path);
    write_eval_long_csv(result, out);
}

} // namespace wpn
