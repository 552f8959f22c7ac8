#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "eventvq/keywords.hpp"
#include "eventvq/rng.hpp"
#include "eventvq/stemmer.hpp"

using namespace eventvq;

TEST_CASE("preprocess_headline lowercases, strips, stems, dedupes") {
    std::set<std::string> stop = {"at"};
    // expectation frozen from the shipped Porter stemmer ("dies" -> "di")
    CHECK(preprocess_headline("Nelson Mandela dies at 95", stop) ==
          std::vector<std::string>{"nelson", "mandela", "di", "95"});
    CHECK(preprocess_headline("", stop).empty());
    CHECK(preprocess_headline("THE the The", {"the"}).empty());
    CHECK(preprocess_headline("Run, running, RUNS!", {}) == std::vector<std::string>{"run"});
}

TEST_CASE("porter stemmer reference words") {
    std::map<std::string, std::string> cases = {
        {"caresses", "caress"}, {"ponies", "poni"},    {"ties", "ti"},
        {"caress", "caress"},   {"cats", "cat"},       {"feed", "feed"},
        {"agreed", "agre"},     {"plastered", "plaster"}, {"motoring", "motor"},
        {"sing", "sing"},       {"conflated", "conflat"}, {"hopping", "hop"},
        {"falling", "fall"},    {"hissing", "hiss"},    {"filing", "file"},
        {"happy", "happi"},     {"relational", "relat"}, {"adoption", "adopt"},
        {"controlling", "control"}, {"probate", "probat"}, {"rate", "rate"},
        {"cease", "ceas"},      {"evacuated", "evacu"},
    };
    for (const auto& [word, stem] : cases) CHECK(porter_stem(word) == stem);
}

TEST_CASE("detect_keywords hand traces") {
    SUBCASE("two headlines sharing a pair") {
        auto sets = detect_keywords({{"nelson", "mandela", "dies"}, {"nelson", "mandela", "dead"}},
                                    10, 2);
        REQUIRE(sets.size() == 1);
        CHECK(sets[0].words == std::set<std::string>{"nelson", "mandela"});
        CHECK(sets[0].total_score == 2);
    }
    SUBCASE("disjoint headlines produce nothing") {
        CHECK(detect_keywords({{"a", "b"}, {"c", "d"}}, 10, 2).empty());
    }
    SUBCASE("merge count ranks itemsets") {
        std::vector<std::vector<std::string>> headlines = {
            {"plane", "missing", "malaysia"},
            {"plane", "missing", "jet"},
            {"plane", "missing", "search"},
            {"obama", "syria", "talks"},
            {"obama", "syria", "vote"},
        };
        auto sets = detect_keywords(headlines, 10, 2);
        REQUIRE(sets.size() == 2);
        CHECK(sets[0].words == std::set<std::string>{"missing", "plane"});
        CHECK(sets[1].words == std::set<std::string>{"obama", "syria"});
        CHECK(sets[0].total_score > sets[1].total_score);
    }
    SUBCASE("fewer than 2 headlines") {
        CHECK(detect_keywords({{"a", "b", "c"}}, 10, 2).empty());
        CHECK(detect_keywords({}, 10, 2).empty());
    }
    CHECK_THROWS_AS(detect_keywords({{"a", "b"}}, 10, 1), std::invalid_argument);
}

TEST_CASE("detect_keywords deterministic under input shuffles") {
    std::vector<std::vector<std::string>> headlines = {
        {"plane", "missing", "malaysia"}, {"plane", "missing", "jet"},
        {"plane", "missing", "search"},   {"obama", "syria", "talks"},
        {"obama", "syria", "vote"},       {"harvard", "bomb", "threat"},
        {"harvard", "bomb", "evacuated"}, {"nelson", "mandela", "dies"},
        {"nelson", "mandela", "tribute"},
    };
    auto reference = detect_keywords(headlines, 10, 2);
    auto ref_pairs = top_keyword_pairs(reference, 6);
    Rng rng(99);
    for (int shuffle = 0; shuffle < 50; ++shuffle) {
        rng.shuffle(headlines);
        auto sets = detect_keywords(headlines, 10, 2);
        REQUIRE(sets.size() == reference.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            CHECK(sets[i].words == reference[i].words);
            CHECK(sets[i].total_score == reference[i].total_score);
        }
        auto pairs = top_keyword_pairs(sets, 6);
        REQUIRE(pairs.size() == ref_pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            CHECK(pairs[i].first == ref_pairs[i].first);
            CHECK(pairs[i].second == ref_pairs[i].second);
        }
    }
}

TEST_CASE("every emitted pair co-occurs in at least one headline pair intersection") {
    Rng rng(123);
    const char* vocab[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::vector<std::string>> headlines;
        std::size_t n = 3 + rng.uniform_int(6);
        for (std::size_t i = 0; i < n; ++i) {
            std::set<std::string> h;
            std::size_t len = 2 + rng.uniform_int(4);
            while (h.size() < len) h.insert(vocab[rng.uniform_int(8)]);
            headlines.emplace_back(h.begin(), h.end());
        }
        auto pairs = top_keyword_pairs(detect_keywords(headlines, 10, 2), 6);
        for (const auto& p : pairs) {
            bool found = false;
            for (std::size_t a = 0; a < headlines.size() && !found; ++a)
                for (std::size_t b = a + 1; b < headlines.size() && !found; ++b) {
                    auto has = [](const std::vector<std::string>& h, const std::string& w) {
                        return std::find(h.begin(), h.end(), w) != h.end();
                    };
                    found = has(headlines[a], p.first) && has(headlines[b], p.first) &&
                            has(headlines[a], p.second) && has(headlines[b], p.second);
                }
            CHECK(found);
        }
    }
}

TEST_CASE("top_keyword_pairs selection") {
    ItemSet is;
    is.words = {"nelson", "mandela", "dies"};
    is.word_scores = {{"nelson", 5}, {"mandela", 5}, {"dies", 1}};
    auto pairs = top_keyword_pairs({is}, 6);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == "mandela");
    CHECK(pairs[0].second == "nelson");

    CHECK(top_keyword_pairs({}, 6).empty());

    std::vector<ItemSet> eight;
    for (int i = 0; i < 8; ++i) {
        ItemSet s;
        s.words = {"w" + std::to_string(i), "x" + std::to_string(i)};
        s.word_scores = {{"w" + std::to_string(i), 2}, {"x" + std::to_string(i), 1}};
        eight.push_back(std::move(s));
    }
    CHECK(top_keyword_pairs(eight, 6).size() == 6);

    ItemSet tiny;
    tiny.words = {"solo"};
    tiny.word_scores = {{"solo", 3}};
    CHECK(top_keyword_pairs({tiny}, 6).empty());
}

TEST_CASE("maxtf-idf worked examples") {
    std::vector<std::vector<std::string>> corpus = {{"live", "fire"}, {"live", "vote"}};
    CHECK(maxtf_idf("live", corpus[0], corpus) == 0.0);
    CHECK(maxtf_idf("live", corpus[1], corpus) == 0.0);
    CHECK(maxtf_idf("fire", corpus[0], corpus) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

    // doc max frequency 3, term's corpus-wide max also 3
    std::vector<std::vector<std::string>> c2 = {{"a", "a", "a", "b"}, {"b"}};
    double expected = (0.5 + 3.5 / 3.0) * std::log(2.0 / 1.0);
    CHECK(maxtf_idf("a", c2[0], c2) == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(maxtf_idf("absent", corpus[0], corpus), std::invalid_argument);
    CHECK_THROWS_AS(maxtf("x", {}, corpus), std::invalid_argument);
}

TEST_CASE("maxtf lower bound invariant") {
    Rng rng(7);
    const char* vocab[] = {"p", "q", "r", "s"};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::vector<std::string>> corpus;
        std::size_t docs = 1 + rng.uniform_int(4);
        for (std::size_t d = 0; d < docs; ++d) {
            std::vector<std::string> doc;
            std::size_t len = 1 + rng.uniform_int(6);
            for (std::size_t i = 0; i < len; ++i) doc.push_back(vocab[rng.uniform_int(4)]);
            corpus.push_back(std::move(doc));
        }
        const auto& doc = corpus[rng.uniform_int(corpus.size())];
        std::map<std::string, int> freq;
        for (const auto& w : doc) ++freq[w];
        int max_f = 0;
        for (const auto& [w, c] : freq) max_f = std::max(max_f, c);
        std::string term = vocab[rng.uniform_int(4)];
        double v = maxtf(term, doc, corpus);
        CHECK(v >= 0.5 + 0.5 / max_f);
        CHECK(v > 0.5);
    }
}

TEST_CASE("rank_articulation_words") {
    SUBCASE("word in every document ranks first with score 1") {
        std::vector<std::vector<std::string>> corpus = {
            {"live", "fire"}, {"live", "vote"}, {"live", "games", "fire"}};
        auto ranked = rank_articulation_words(corpus);
        REQUIRE(!ranked.empty());
        CHECK(ranked[0].word == "live");
        CHECK(ranked[0].score == doctest::Approx(1.0));
    }
    SUBCASE("single-word vocabulary scores 1") {
        auto ranked = rank_articulation_words({{"solo"}, {"solo", "solo"}});
        REQUIRE(ranked.size() == 1);
        CHECK(ranked[0].score == doctest::Approx(1.0));
    }
    SUBCASE("output is a permutation of the vocabulary") {
        std::vector<std::vector<std::string>> corpus = {
            {"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}};
        auto ranked = rank_articulation_words(corpus);
        std::set<std::string> got, want = {"a", "b", "c", "d", "e"};
        for (const auto& sw : ranked) got.insert(sw.word);
        CHECK(got == want);
        CHECK(ranked.size() == want.size());
    }
    SUBCASE("5-doc corpus matches an independent brute-force scorer") {
        std::vector<std::vector<std::string>> corpus = {
            {"says", "obama", "syria"},
            {"says", "live", "harvard", "bomb"},
            {"live", "mandela", "dies", "says"},
            {"plane", "missing", "live"},
            {"obama", "plane", "says", "says"},
        };
        // independent scorer: raw counting, formula inline
        std::set<std::string> vocab;
        for (const auto& d : corpus) vocab.insert(d.begin(), d.end());
        std::map<std::string, double> raw;
        for (const auto& t : vocab) {
            int gmax = 0, df = 0;
            for (const auto& d : corpus) {
                int f = static_cast<int>(std::count(d.begin(), d.end(), t));
                gmax = std::max(gmax, f);
                if (f > 0) ++df;
            }
            double best = -1;
            for (const auto& d : corpus) {
                if (std::find(d.begin(), d.end(), t) == d.end()) continue;
                std::map<std::string, int> freq;
                for (const auto& w : d) ++freq[w];
                int dmax = 0;
                for (const auto& [w, c] : freq) dmax = std::max(dmax, c);
                double mtf = 0.5 + (0.5 + gmax) / dmax;
                double idf_v = std::log(static_cast<double>(corpus.size()) / df);
                best = std::max(best, mtf * idf_v);
            }
            raw[t] = best;
        }
        double lo = 1e300, hi = -1e300;
        for (const auto& [w, v] : raw) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        std::vector<std::pair<double, std::string>> expect;
        for (const auto& [w, v] : raw)
            expect.emplace_back(1.0 - (v - lo) / (hi - lo), w);
        std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });

        auto ranked = rank_articulation_words(corpus);
        REQUIRE(ranked.size() == expect.size());
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            CHECK(ranked[i].word == expect[i].second);
            CHECK(ranked[i].score == doctest::Approx(expect[i].first).epsilon(1e-12));
        }
    }
}
