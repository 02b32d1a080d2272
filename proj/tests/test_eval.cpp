#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "wpn/eval.hpp"

using namespace wpn;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("wpn_eval_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    for (const auto& line : lines) out << line << '\n';
}

} // namespace

TEST_CASE("load_dataset shapes and errors") {
    TempDir dir;
    write_lines(dir.file("white.txt"), {"a.com", "b.com", "b.com"});
    write_lines(dir.file("black.txt"), {"x.com", "y.com", "z.com"});
    const auto ds = load_dataset(dir.file("white.txt"), dir.file("black.txt"));
    CHECK(ds.whitelist.size() == 2); // duplicate collapsed
    CHECK(ds.duplicates_dropped == 1);
    CHECK(ds.blacklist.size() == 3);
    CHECK(ds.provenance == Provenance::FileBacked);
    // unlabeled is the blacklist, shuffled deterministically
    CHECK(std::set<std::string>(ds.unlabeled.begin(), ds.unlabeled.end()) ==
          std::set<std::string>(ds.blacklist.begin(), ds.blacklist.end()));
    const auto again = load_dataset(dir.file("white.txt"), dir.file("black.txt"));
    CHECK(again.unlabeled == ds.unlabeled);

    write_lines(dir.file("empty.txt"), {"# nothing"});
    CHECK_THROWS_MATCHES(load_dataset(dir.file("empty.txt"), dir.file("black.txt")), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::EmptyFile;
                         }));
}

TEST_CASE("generate_adversarial is deterministic and brand-anchored") {
    const std::vector<std::string> targets = {"steam"};
    const auto urls = generate_adversarial(targets, 50, 9);
    CHECK(urls.size() == 50);
    const auto again = generate_adversarial(targets, 50, 9);
    CHECK(urls == again);

    for (const auto& url : urls) {
        CAPTURE(url);
        // the brand survives verbatim or with one digit-for-letter swap
        const bool anchored = url.find("steam") != std::string::npos ||
                              url.find("5team") != std::string::npos ||
                              url.find("st3am") != std::string::npos ||
                              url.find("ste4m") != std::string::npos;
        CHECK(anchored);
        CHECK(url.find('.') != std::string::npos);
    }

    const std::vector<std::string> multi = {"steam", "amazon", "chase"};
    const auto urls714 = generate_adversarial(multi, 714, 4);
    CHECK(urls714.size() == 714);
    CHECK(std::set<std::string>(urls714.begin(), urls714.end()).size() == 714);

    CHECK_THROWS_AS(generate_adversarial(targets, 0, 9), Error);
    CHECK_THROWS_AS(generate_adversarial({}, 5, 9), Error);
}

TEST_CASE("bundled fixtures have the pinned shapes") {
    const auto bench = make_benchmark_fixture();
    CHECK(bench.whitelist.size() == 1000);
    CHECK(bench.blacklist.size() == 1000);
    CHECK(bench.unlabeled.size() == 1000);
    CHECK(bench.provenance == Provenance::Synthetic);
    const auto bench2 = make_benchmark_fixture();
    CHECK(bench.whitelist == bench2.whitelist);
    CHECK(bench.blacklist == bench2.blacklist);

    const auto adv = make_adversarial_fixture();
    CHECK(adv.whitelist.size() == 800);
    CHECK(adv.blacklist.size() == 714);
}

TEST_CASE("evaluate catches planted mimics and ignores unrelated noise") {
    EvalDataset ds;
    ds.whitelist = {"amazonlogistics.eu", "creditamazon.ge", "steampowered.com", "bank-of-trust.org"};
    ds.blacklist = {"supportservice-amazon.de", "kunde.supported-amazon.net"};
    ds.unlabeled = ds.blacklist;

    PipelineConfig cfg;
    cfg.k = 4;
    cfg.tables = 24;
    cfg.seed = 99;
    cfg.tau = 0.65;

    const std::vector<Algorithm> algos = {Algorithm::Wpn};
    const auto result = evaluate(ds, algos, cfg);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].algorithm == "wpn");
    CHECK(result.rows[0].total == 2);
    CHECK(result.rows[0].detected == 2);
    CHECK(result.rows[0].detection_rate == 100.0);
}

TEST_CASE("evaluate reports near-zero rates without mimicry") {
    // disjoint token soups: dice 1.0 everywhere, high levenshtein
    EvalDataset ds;
    for (int i = 0; i < 30; ++i) {
        ds.whitelist.push_back("whitelabelentry" + std::to_string(i * 7919) + "-site.com");
        ds.blacklist.push_back("blackrandomhost" + std::to_string(i * 104729) + "-page.net");
    }
    ds.unlabeled = ds.blacklist;

    PipelineConfig cfg;
    cfg.k = 5;
    cfg.tables = 8;
    cfg.seed = 4;
    const std::vector<Algorithm> algos = {Algorithm::Wpn, Algorithm::KMeans, Algorithm::Hac};
    const auto result = evaluate(ds, algos, cfg);
    for (const auto& row : result.rows) {
        CAPTURE(row.algorithm);
        CHECK(row.detection_rate <= 5.0);
    }
}

TEST_CASE("evaluate runs all three algorithms over one small fixture") {
    const auto ds = make_adversarial_fixture(80, 70, 3);
    const auto cfg = adversarial_fixture_config();
    const std::vector<Algorithm> algos = {Algorithm::Wpn, Algorithm::KMeans, Algorithm::Hac};
    const auto result = evaluate(ds, algos, cfg);
    REQUIRE(result.rows.size() == 3);
    for (const auto& row : result.rows) {
        CHECK(row.total == 70);
        CHECK(row.detected <= 70);
        CHECK(row.wall_ms >= 0.0);
    }
    // identical rates on a rerun (timings aside): the comparison is seeded
    const auto again = evaluate(ds, algos, cfg);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        CHECK(result.rows[i].detected == again.rows[i].detected);
    }
}

TEST_CASE("scaling urls are deterministic and vocabulary keeps growing") {
    const auto small = make_scaling_urls(2000, 5);
    CHECK(small.size() == 2000);
    CHECK(small == make_scaling_urls(2000, 5));

    const auto large = make_scaling_urls(8000, 5);
    std::set<std::string> small_set(small.begin(), small.end());
    std::set<std::string> large_set(large.begin(), large.end());
    CHECK(large_set.size() > small_set.size() * 2);
}

TEST_CASE("eval csv writers") {
    EvalResult result;
    result.rows.push_back({"wpn", 93, 100, 93.0, 12.5});
    result.rows.push_back({"hac", 80, 100, 80.0, 250.0});
    std::ostringstream wide, narrow;
    write_eval_csv(result, wide);
    write_eval_long_csv(result, narrow);
    CHECK(wide.str().find("algorithm,detected,total,detection_rate,wall_ms\n") == 0);
    CHECK(wide.str().find("wpn,93,100,93.000000,") != std::string::npos);
    CHECK(narrow.str().find("algorithm,metric,value\n") == 0);
    CHECK(narrow.str().find("wpn,detection_rate,93.000000") != std::string::npos);
    CHECK(narrow.str().find("hac,wall_ms,") != std::string::npos);
}
