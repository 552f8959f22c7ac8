// Drives the installed CLI binary end to end: exit codes, artifact layout,
// determinism of reruns, and the keyword -> event pipeline on a small fixture.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "eventvq/artifacts.hpp"
#include "eventvq/io_util.hpp"
#include "test_util.hpp"

using namespace eventvq;

namespace {

int run_cli(const std::string& args, const std::filesystem::path& log) {
    std::string cmd = std::string("\"") + EVENTVQ_BIN + "\" " + args + " >" + log.string() +
                      " 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

struct Cli {
    testutil::TempDir dir;
    std::filesystem::path work;
    std::filesystem::path log;

    explicit Cli(const std::string& tag) : dir(tag), work(dir.path / "work"), log(dir.path / "log.txt") {}

    int run(const std::string& args) { return run_cli("--workdir " + work.string() + " " + args, log); }

    std::string log_text() const {
        std::ifstream in(log);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

std::string headline(std::int64_t ts, const std::string& text) {
    return "{\"timestamp\":" + std::to_string(ts) + ",\"account\":\"news\",\"text\":\"" + text +
           "\"}\n";
}

std::string message(const std::string& id, std::int64_t ts, const std::string& text) {
    return "{\"id\":\"" + id + "\",\"timestamp\":" + std::to_string(ts) + ",\"text\":\"" + text +
           "\",\"author\":\"u" + id + "\"}\n";
}

}  // namespace

TEST_CASE("usage and missing-input exit codes") {
    Cli cli("cli_codes");
    CHECK(run_cli("no-such-subcommand", cli.log) == 64);
    CHECK(run_cli("", cli.log) == 64);
    CHECK(cli.run("cluster-tiers --n-tiers 1") == 64);
    CHECK(cli.run("synth --head-drop-fraction 1.5") == 64);
    CHECK(cli.run("vectorize") == 2);   // no codebook yet
    CHECK(cli.log_text().find("missing required artifact") != std::string::npos);
    CHECK(cli.run("stats") == 2);       // no events yet
    CHECK(cli.run("evaluate") == 2);    // no model yet
    CHECK(run_cli("--help", cli.log) == 0);
}

TEST_CASE("synthetic chain runs end to end and reruns byte-identically") {
    Cli cli("cli_chain");
    const std::string synth_args =
        "--synth-events 60 --synth-msg-median 60 --synth-msg-sigma 0.4 --seed 11";
    REQUIRE(cli.run("synth " + synth_args) == 0);
    REQUIRE(cli.run("stats") == 0);
    REQUIRE(cli.run("learn-codebook --k-codewords 10") == 0);
    REQUIRE(cli.run("vectorize --k-codewords 10") == 0);
    REQUIRE(cli.run("cluster-tiers --n-tiers 2") == 0);
    REQUIRE(cli.run("export-figures") == 0);
    REQUIRE(cli.run("extract-features") == 0);
    REQUIRE(cli.run("compare") == 0);
    REQUIRE(cli.run("train --rounds 3") == 0);
    REQUIRE(cli.run("evaluate") == 0);

    for (const char* artifact :
         {"messages.jsonl", "labels.csv", "events.csv", "stats.txt", "codebook.txt",
          "event_vectors.csv", "tiers.csv", "features_early.csv", "features_full.csv",
          "comparison.csv", "report.csv", "model.txt", "eval_report.csv",
          "figures/heatmap.csv", "figures/tier_hist.csv", "figures/cdf.csv",
          "figures/log1mcdf.csv"}) {
        INFO(artifact);
        CHECK(std::filesystem::exists(cli.work / artifact));
    }

    auto vectors_before = read_file(cli.work / "event_vectors.csv");
    auto report_before = read_file(cli.work / "report.csv");
    auto eval_before = read_file(cli.work / "eval_report.csv");
    REQUIRE(cli.run("vectorize --k-codewords 10") == 0);
    REQUIRE(cli.run("train --rounds 3") == 0);
    REQUIRE(cli.run("evaluate") == 0);
    CHECK(read_file(cli.work / "event_vectors.csv") == vectors_before);
    CHECK(read_file(cli.work / "report.csv") == report_before);
    CHECK(read_file(cli.work / "eval_report.csv") == eval_before);
}

TEST_CASE("config file values apply and command-line flags win") {
    Cli cli("cli_config");
    REQUIRE(cli.run("synth --synth-events 30 --synth-msg-median 40 --seed 3") == 0);
    auto cfg = cli.dir.file("pipeline.cfg", "k-codewords=6\nseed=3\n");
    REQUIRE(cli.run("learn-codebook --config " + cfg.string()) == 0);
    auto cb = read_file(cli.work / "codebook.txt");
    CHECK(cb.rfind("6 3", 0) == 0);  // k from config, seed from config

    // flag overrides the config's k
    REQUIRE(cli.run("learn-codebook --config " + cfg.string() + " --k-codewords 4") == 0);
    CHECK(read_file(cli.work / "codebook.txt").rfind("4 3", 0) == 0);

    // invalid flag value still loses to validation even when the config is fine
    CHECK(cli.run("learn-codebook --config " + cfg.string() + " --k-codewords 1") == 64);
}

TEST_CASE("keyword mining pipeline builds events and learns articulation words") {
    Cli cli("cli_keywords");
    const std::int64_t day = 1386201600;  // 2013-12-05T00:00:00Z

    std::string headlines;
    // hour 0: two events plus one lone "live" headline so "live" spans every hour
    headlines += headline(day + 60, "Nelson Mandela dies");
    headlines += headline(day + 120, "Nelson Mandela tribute");
    headlines += headline(day + 180, "Nelson Mandela mourning");
    headlines += headline(day + 240, "Harvard evacuated bomb threat");
    headlines += headline(day + 300, "Harvard evacuated buildings alert");
    headlines += headline(day + 360, "Harvard evacuated police scene");
    headlines += headline(day + 420, "Live morning briefing news");
    // hour 1: xinjiang coverage keyed by "live"
    headlines += headline(day + 3660, "Xinjiang live blasts");
    headlines += headline(day + 3720, "Xinjiang live police");
    headlines += headline(day + 3780, "Xinjiang live report");
    // hour 2: harvard again, keyed by "live"
    headlines += headline(day + 7260, "Harvard live coverage");
    headlines += headline(day + 7320, "Harvard live updates");
    headlines += headline(day + 7380, "Harvard live briefing");
    auto hpath = cli.dir.file("headlines.jsonl", headlines);

    std::string messages;
    for (int i = 0; i < 6; ++i)
        messages += message("ma" + std::to_string(i), day + 500 + i,
                            "RIP Nelson Mandela a true leader");
    for (int i = 0; i < 5; ++i)
        messages += message("hv" + std::to_string(i), day + 600 + i,
                            "Harvard evacuated after reports");
    for (int i = 0; i < 4; ++i)
        messages += message("xj" + std::to_string(i), day + 700 + i,
                            "Xinjiang live coverage of the incident");
    for (int i = 0; i < 3; ++i)
        messages += message("hl" + std::to_string(i), day + 800 + i, "Harvard live stream here");
    auto mpath = cli.dir.file("messages_raw.jsonl", messages);

    REQUIRE(cli.run("ingest --input-messages " + mpath.string()) == 0);
    REQUIRE(cli.run("detect-keywords --input-headlines " + hpath.string()) == 0);

    auto pairs = load_pairs_csv(cli.work / "keyword_pairs.csv");
    REQUIRE(pairs.size() == 4);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& p : pairs) got.insert({p.first, p.second});
    CHECK(got.count({"mandela", "nelson"}));
    CHECK(got.count({"evacu", "harvard"}));
    CHECK(got.count({"live", "xinjiang"}));
    CHECK(got.count({"harvard", "live"}));

    REQUIRE(cli.run("build-events --input-headlines " + hpath.string()) == 0);
    auto events = load_events(cli.work);
    REQUIRE(events.size() == 2);
    CHECK(events[0].keywords == std::set<std::string>{"evacu", "harvard"});
    CHECK(events[0].messages.size() == 5);
    CHECK(events[0].event_id == "2013-12-05-evacu");
    CHECK(events[1].keywords == std::set<std::string>{"mandela", "nelson"});
    CHECK(events[1].messages.size() == 6);

    auto stopwords = load_stopwords(cli.work / "stopwords.txt");
    CHECK(stopwords.count("live") == 1);

    // "live" is ignored from subsequent runs, so its pairs disappear
    REQUIRE(cli.run("detect-keywords --input-headlines " + hpath.string()) == 0);
    auto pairs_again = load_pairs_csv(cli.work / "keyword_pairs.csv");
    CHECK(pairs_again.size() == 2);
    for (const auto& p : pairs_again) {
        CHECK(p.first != "live");
        CHECK(p.second != "live");
    }

    REQUIRE(cli.run("validate-events") == 0);
    auto lines = read_lines(cli.work / "validation.csv");
    REQUIRE(lines.size() >= 8);  // header + 7 metrics for the single day
    CHECK(lines[0] == "day,metric,true_value,baseline_mean");
    CHECK(lines[1].rfind("2013-12-05,", 0) == 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = split_csv_line(lines[i]);
        REQUIRE(f.size() == 4);
        double true_value = std::stod(f[2]), baseline = std::stod(f[3]);
        INFO(f[1]);
        if (f[1] == "I1" || f[1] == "I2" || f[1] == "H1" || f[1] == "H2")
            CHECK(true_value >= baseline - 1e-9);
        else if (f[1] == "G1" || f[1] == "G1p")
            CHECK(true_value <= baseline + 1e-9);
    }

    REQUIRE(cli.run("validate-events --exclude-self-pairs") == 0);
    CHECK(read_lines(cli.work / "validation.csv").size() == lines.size());
}

TEST_CASE("a locked workdir refuses a second writer") {
    Cli cli("cli_lock");
    std::filesystem::create_directories(cli.work);
    WorkdirLock held(cli.work);
    CHECK(cli.run("synth --synth-events 5 --synth-msg-median 25") == 70);
    CHECK(cli.log_text().find("locked") != std::string::npos);
}

TEST_CASE("unknown config keys are a usage error") {
    Cli cli("cli_badcfg");
    auto cfg = cli.dir.file("bad.cfg", "no-such-option=1\n");
    CHECK(cli.run("synth --config " + cfg.string()) == 64);
}

TEST_CASE("ingest reports cleaning counts") {
    Cli cli("cli_ingest");
    std::string raw;
    raw += message("a", 100, "hello");
    raw += message("b", 90, "world");
    raw += message("a", 100, "duplicate id");
    raw += "{\"id\":\"broken\"}\n";
    auto mpath = cli.dir.file("raw.jsonl", raw);
    REQUIRE(cli.run("ingest --input-messages " + mpath.string()) == 0);
    auto txt = read_file(cli.work / "cleaning_report.txt");
    CHECK(txt.find("loaded 3") != std::string::npos);
    CHECK(txt.find("skipped 1") != std::string::npos);
    CHECK(txt.find("duplicates 1") != std::string::npos);
    auto cleaned = load_messages(cli.work / "messages.jsonl");
    REQUIRE(cleaned.size() == 2);
    CHECK(cleaned[0].id == "b");  // sorted by timestamp
}
