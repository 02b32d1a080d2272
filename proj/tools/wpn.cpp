#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpn/eval.hpp"
#include "wpn/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStrictDetections = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct ConfigFlags {
    std::string k = "auto";
    std::uint32_t tables = 1;
    double threshold = 0.5;
    std::uint64_t seed = 42;
    std::string suffixes;

    void attach(CLI::App& cmd) {
        cmd.add_option("--k", k, "projection count (integer in [4,62], or 'auto')");
        cmd.add_option("--tables", tables, "number of independent hash tables");
        cmd.add_option("--threshold", threshold, "refinement threshold in (0,1)");
        cmd.add_option("--seed", seed, "reproducibility seed");
        cmd.add_option("--suffixes", suffixes, "public suffix list file (default: bundled snapshot)");
    }

    wpn::PipelineConfig to_config() const {
        wpn::PipelineConfig cfg;
        if (k != "auto") {
            try {
                std::size_t used = 0;
                const auto value = std::stoul(k, &used);
                if (used != k.size()) throw std::invalid_argument(k);
                cfg.k = static_cast<std::uint32_t>(value);
            } catch (const std::exception&) {
                wpn::raise(wpn::ErrorCode::InvalidParam, "--k must be an integer or 'auto'");
            }
        }
        cfg.tables = tables;
        cfg.tau = threshold;
        cfg.seed = seed;
        cfg.suffix_list_path = suffixes;
        return cfg;
    }
};

std::vector<std::string> split_csv(const std::string& list) {
    std::vector<std::string> parts;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

int cmd_scan(const std::string& input, const std::string& whitelist, const std::string& blacklist,
             const ConfigFlags& flags, const std::string& out, const std::string& summary, bool strict) {
    const auto cfg = flags.to_config();
    cfg.validate();
    const auto unlabeled = wpn::load_url_list(input);
    const auto legit = wpn::load_url_list(whitelist);
    const auto phish = blacklist.empty() ? std::vector<std::string>{} : wpn::load_url_list(blacklist);

    const auto report = wpn::run(unlabeled, legit, phish, cfg);
    wpn::write_detections_csv(report, out);
    if (!summary.empty()) wpn::write_summary(report, summary);

    std::cout << "scanned " << report.counts.input << " urls against " << report.counts.whitelist
              << " known legit and " << report.counts.blacklist << " known phishing entries\n"
              << "detections: " << report.detections.size() << " (threshold "
              << wpn::detail::format_score(cfg.tau) << ", k=" << report.resolved_k << ", tables="
              << cfg.tables << ")\n";
    if (report.counts.dropped > 0) {
        std::cout << "dropped " << report.counts.dropped << " records during pre-processing\n";
    }
    return (strict && !report.detections.empty()) ? kExitStrictDetections : kExitOk;
}

/// First column of each data row in a detections CSV.
std::vector<std::string> report_urls(const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in) wpn::raise(wpn::ErrorCode::IoError, "cannot open report: " + report_path);
    std::vector<std::string> urls;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::string url;
        if (!line.empty() && line.front() == '"') {
            std::size_t i = 1;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        url += '"';
                        i += 2;
                        continue;
                    }
                    break;
                }
                url += line[i++];
            }
        } else {
            url = line.substr(0, line.find(','));
        }
        urls.push_back(std::move(url));
    }
    return urls;
}

int cmd_feedback(const std::string& report_path, const std::string& verify_path,
                 const std::string& store_path) {
    const auto detected = report_urls(report_path);
    const auto verified = wpn::load_url_list(verify_path);

    // Rebuild just enough of a report for the feedback contract: the
    // detection set is what the CSV asserts.
    wpn::RunReport report;
    for (const auto& url : detected) {
        wpn::Detection det;
        det.url = static_cast<std::uint32_t>(report.records.size());
        report.records.push_back({url, wpn::Label::Unlabeled});
        report.detections.push_back(det);
    }
    const auto result = wpn::feedback(report, verified, store_path);
    std::cout << "store " << store_path << ": " << result.before << " -> " << result.after
              << " entries (+" << (result.after - result.before) << ")\n";
    return kExitOk;
}

int cmd_generate(const std::string& targets_csv, std::size_t count, std::uint64_t seed,
                 const std::string& out) {
    const auto targets = split_csv(targets_csv);
    const auto urls = wpn::generate_adversarial(targets, count, seed);
    std::ofstream os(out);
    if (!os) wpn::raise(wpn::ErrorCode::IoError, "cannot write: " + out);
    for (const auto& url : urls) os << url << '\n';
    std::cout << "wrote " << urls.size() << " urls to " << out << '\n';
    return kExitOk;
}

int cmd_evaluate(const std::string& whitelist, const std::string& blacklist,
                 const std::string& algorithms_csv, const ConfigFlags& flags, const std::string& out) {
    const auto cfg = flags.to_config();
    cfg.validate();
    std::vector<wpn::Algorithm> algorithms;
    for (const auto& name : split_csv(algorithms_csv)) {
        if (name == "wpn") {
            algorithms.push_back(wpn::Algorithm::Wpn);
        } else if (name == "kmeans") {
            algorithms.push_back(wpn::Algorithm::KMeans);
        } else if (name == "hac") {
            algorithms.push_back(wpn::Algorithm::Hac);
        } else {
            std::cerr << "error: unsupported algorithm: " << name << '\n';
            return kExitRuntime;
        }
    }
    if (algorithms.empty()) {
        std::cerr << "error: no algorithms requested\n";
        return kExitRuntime;
    }

    const auto ds = wpn::load_dataset(whitelist, blacklist);
    const auto result = wpn::evaluate(ds, algorithms, cfg);
    wpn::write_eval_csv(result, out);
    const auto long_path = out + ".long.csv";
    wpn::write_eval_long_csv(result, long_path);

    std::printf("%-8s %10s %8s %14s %10s\n", "algo", "detected", "total", "rate(%)", "wall(ms)");
    for (const auto& row : result.rows) {
        std::printf("%-8s %10zu %8zu %14.1f %10.1f\n", row.algorithm.c_str(), row.detected, row.total,
                    row.detection_rate, row.wall_ms);
    }
    std::cout << "results: " << out << " and " << long_path << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wpn - unsupervised phishing-campaign detection over URL strings"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "cluster unlabeled urls with known lists and emit detections");
    std::string scan_input, scan_white, scan_black, scan_out, scan_summary;
    bool scan_strict = false;
    ConfigFlags scan_flags;
    scan->add_option("--input", scan_input, "unlabeled urls, one per line")->required();
    scan->add_option("--whitelist", scan_white, "known legitimate domains")->required();
    scan->add_option("--blacklist", scan_black, "known phishing urls (optional)");
    scan->add_option("--out", scan_out, "detections csv path")->required();
    scan->add_option("--summary", scan_summary, "summary key=value file");
    scan->add_flag("--strict", scan_strict, "exit 1 when detections are non-empty");
    scan_flags.attach(*scan);

    // feedback
    auto* fb = app.add_subcommand("feedback", "append verified detections to the blacklist store");
    std::string fb_report, fb_verify, fb_store;
    fb->add_option("--report", fb_report, "detections csv from a scan")->required();
    fb->add_option("--verify", fb_verify, "verified detection urls, one per line")->required();
    fb->add_option("--store", fb_store, "blacklist store file")->required();

    // generate
    auto* gen = app.add_subcommand("generate", "emit rule-based adversarial urls for given targets");
    std::string gen_targets, gen_out;
    std::size_t gen_count = 0;
    std::uint64_t gen_seed = 42;
    gen->add_option("--targets", gen_targets, "comma-separated brand tokens")->required();
    gen->add_option("--count", gen_count, "number of urls")->required();
    gen->add_option("--seed", gen_seed, "reproducibility seed");
    gen->add_option("--out", gen_out, "output file")->required();

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "compare detection rate and timing across algorithms");
    std::string ev_white, ev_black, ev_algos = "wpn,kmeans,hac", ev_out;
    ConfigFlags ev_flags;
    ev->add_option("--whitelist", ev_white, "benign urls, one per line")->required();
    ev->add_option("--blacklist", ev_black, "ground-truth phishing urls")->required();
    ev->add_option("--algorithms", ev_algos, "subset of wpn,kmeans,hac");
    ev->add_option("--out", ev_out, "results csv path")->required();
    ev_flags.attach(*ev);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (scan->parsed()) {
            return cmd_scan(scan_input, scan_white, scan_black, scan_flags, scan_out, scan_summary,
                            scan_strict);
        }
        if (fb->parsed()) return cmd_feedback(fb_report, fb_verify, fb_store);
        if (gen->parsed()) return cmd_generate(gen_targets, gen_count, gen_seed, gen_out);
        if (ev->parsed()) return cmd_evaluate(ev_white, ev_black, ev_algos, ev_flags, ev_out);
    } catch (const wpn::Error& e) {
        // Bad parameter values are usage errors; anything else is runtime.
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == wpn::ErrorCode::InvalidParam ? kExitUsage : kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
