#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eventvq/corpus.hpp"

namespace eventvq {

// A group of co-occurring headline words with per-word merge scores.
struct ItemSet {
    std::set<std::string> words;
    std::map<std::string, int> word_scores;
    int total_score = 0;
};

// Canonical ordering: first < second.
struct KeywordPair {
    std::string first;
    std::string second;
    std::int64_t batch_hour = 0;  // hours since epoch

    friend auto operator<=>(const KeywordPair&, const KeywordPair&) = default;
};

KeywordPair make_pair_canonical(std::string a, std::string b, std::int64_t batch_hour = 0);

const std::set<std::string>& default_stopwords();

// lowercase, punctuation stripped, stoplist words removed, tokens stemmed,
// within-headline duplicates removed (first occurrence kept).
std::vector<std::string> preprocess_headline(std::string_view text,
                                             const std::set<std::string>& stoplist);

std::vector<Headline> load_headlines(const std::filesystem::path& path,
                                     const std::set<std::string>& stoplist,
                                     CleaningReport* report = nullptr);

// Itemset discovery over one batch of headlines: every headline pair with
// word overlap >= eta contributes its intersection, merged into the existing
// itemset of maximal overlap when that overlap >= eta, else started fresh.
// Duplicate headlines collapse; pair iteration order is the sorted headline
// order, which makes the result independent of input order.
// Returns itemsets sorted by descending total_score, truncated to k.
std::vector<ItemSet> detect_keywords(const std::vector<std::vector<std::string>>& headlines,
                                     int k, int eta);

// The two highest-scoring words (score desc, then lexicographic) of each of
// the first n_sets itemsets; itemsets with fewer than 2 words are skipped.
std::vector<KeywordPair> top_keyword_pairs(const std::vector<ItemSet>& itemsets,
                                           int n_sets = 6, std::int64_t batch_hour = 0);

// maxtf(t,d,D) = 0.5 + (0.5 + max_{d' in D} f(t,d')) / max_{w in d} f(w,d).
// The numerator uses the corpus-wide max frequency of t, independent of d,
// exactly as defined.
double maxtf(const std::string& term, const std::vector<std::string>& doc,
             const std::vector<std::vector<std::string>>& corpus);

// idf(t,D) = ln(N / |{d in D : t in d}|); throws if the term is in no document.
double idf(const std::string& term, const std::vector<std::vector<std::string>>& corpus);

double maxtf_idf(const std::string& term, const std::vector<std::string>& doc,
                 const std::vector<std::vector<std::string>>& corpus);

struct ScoredWord {
    std::string word;
    double score = 0;  // 1 - min-max-normalized maxtf-idf
};

// Vocabulary ranked by descending 1 - normalized maxtf-idf. Each word's raw
// score is its maximum maxtf_idf over the documents containing it; a
// degenerate normalization range maps every word to score 1.
std::vector<ScoredWord> rank_articulation_words(const std::vector<std::vector<std::string>>& corpus);

// Token sets grouped into wall-clock-hour batches.
std::map<std::int64_t, std::vector<std::vector<std::string>>> batch_by_hour(
    const std::vector<Headline>& headlines);

}  // namespace eventvq
