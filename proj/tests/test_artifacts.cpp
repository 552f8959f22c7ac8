#include <doctest.h>

#include "eventvq/artifacts.hpp"
#include "eventvq/io_util.hpp"
#include "eventvq/synth.hpp"
#include "test_util.hpp"

using namespace eventvq;

TEST_CASE("csv escaping round trips awkward fields") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    auto fields = split_csv_line("plain,\"a,b\",\"say \"\"hi\"\"\"");
    REQUIRE(fields.size() == 3);
    CHECK(fields[0] == "plain");
    CHECK(fields[1] == "a,b");
    CHECK(fields[2] == "say \"hi\"");
}

TEST_CASE("events round trip through the workdir layout") {
    testutil::TempDir tmp("artifacts_events");
    GeneratorSpec spec;
    spec.n_events = 6;
    spec.msg_count_median = 30;
    spec.msg_count_sigma = 0.2;
    spec.seed = 8;
    SynthCorpus corpus = generate(spec);

    write_events(tmp.path, corpus.events);
    auto back = load_events(tmp.path);
    REQUIRE(back.size() == corpus.events.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].event_id == corpus.events[i].event_id);
        CHECK(back[i].keywords == corpus.events[i].keywords);
        CHECK(back[i].collected_date == corpus.events[i].collected_date);
        REQUIRE(back[i].messages.size() == corpus.events[i].messages.size());
        for (std::size_t j = 0; j < back[i].messages.size(); ++j)
            CHECK(message_to_json_line(back[i].messages[j]) ==
                  message_to_json_line(corpus.events[i].messages[j]));
    }
}

TEST_CASE("pairs, stopwords, vectors, tiers, labels round trip") {
    testutil::TempDir tmp("artifacts_misc");

    std::vector<KeywordPair> pairs = {make_pair_canonical("plane", "missing", 385000),
                                      make_pair_canonical("obama", "syria", 385001)};
    write_pairs_csv(tmp.path / "pairs.csv", pairs);
    auto pairs_back = load_pairs_csv(tmp.path / "pairs.csv");
    REQUIRE(pairs_back.size() == 2);
    CHECK(pairs_back[0].first == "missing");
    CHECK(pairs_back[0].second == "plane");
    CHECK(pairs_back[0].batch_hour == 385000);

    std::set<std::string> words = {"live", "says", "watch"};
    write_stopwords(tmp.path / "stop.txt", words);
    CHECK(load_stopwords(tmp.path / "stop.txt") == words);

    std::vector<EventVector> vectors = {{"e1", {0.25, 0.75}}, {"e2", {1.0 / 3.0, 2.0 / 3.0}}};
    write_vectors_csv(tmp.path / "vec.csv", vectors);
    auto vec_back = load_vectors_csv(tmp.path / "vec.csv");
    REQUIRE(vec_back.size() == 2);
    CHECK(vec_back[1].weights == vectors[1].weights);  // %.17g round trip

    ActivityTier t0;
    t0.rank = 0;
    t0.label = "high";
    t0.member_ids = {"e1"};
    ActivityTier t1;
    t1.rank = 1;
    t1.label = "low";
    t1.member_ids = {"e2"};
    write_tiers_csv(tmp.path / "tiers.csv", {t0, t1});
    auto tiers_back = load_tiers_csv(tmp.path / "tiers.csv");
    CHECK(tiers_back.at("e1") == std::pair<std::string, int>{"high", 0});
    CHECK(tiers_back.at("e2") == std::pair<std::string, int>{"low", 1});

    std::map<std::string, std::string> labels = {{"e1", "high"}, {"e2", "low"}};
    write_labels_csv(tmp.path / "labels.csv", labels);
    CHECK(load_labels_csv(tmp.path / "labels.csv") == labels);
}

TEST_CASE("feature csv round trips values exactly") {
    testutil::TempDir tmp("artifacts_features");
    GeneratorSpec spec;
    spec.n_events = 4;
    spec.msg_count_median = 40;
    spec.msg_count_sigma = 0.2;
    spec.seed = 3;
    SynthCorpus corpus = generate(spec);
    std::vector<FeatureVector> features;
    for (const auto& e : corpus.events)
        features.push_back(extract_features(e, FeatureWindow::full_window()));

    write_features_csv(tmp.path / "f.csv", features);
    auto back = load_features_csv(tmp.path / "f.csv");
    REQUIRE(back.size() == features.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].event_id == features[i].event_id);
        REQUIRE(back[i].values.size() == features[i].values.size());
        for (std::size_t j = 0; j < back[i].values.size(); ++j) {
            CHECK(back[i].values[j].first == features[i].values[j].first);
            CHECK(back[i].values[j].second == features[i].values[j].second);
        }
    }
}

TEST_CASE("write_file_atomic leaves no temp file behind") {
    testutil::TempDir tmp("artifacts_atomic");
    write_file_atomic(tmp.path / "out.txt", "payload");
    CHECK(read_file(tmp.path / "out.txt") == "payload");
    CHECK(!std::filesystem::exists(tmp.path / "out.txt.tmp"));
    write_file_atomic(tmp.path / "out.txt", "replaced");
    CHECK(read_file(tmp.path / "out.txt") == "replaced");
}
