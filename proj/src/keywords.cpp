#include "eventvq/keywords.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "eventvq/stemmer.hpp"
#include "eventvq/text.hpp"

namespace eventvq {

KeywordPair make_pair_canonical(std::string a, std::string b, std::int64_t batch_hour) {
    if (a == b) throw std::invalid_argument("keyword pair words must differ");
    if (b < a) std::swap(a, b);
    return KeywordPair{std::move(a), std::move(b), batch_hour};
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
        "a", "about", "above", "after", "again", "against", "all", "am", "an", "and",
        "any", "are", "aren't", "as", "at", "be", "because", "been", "before", "being",
        "below", "between", "both", "but", "by", "can", "cannot", "could", "couldn't",
        "did", "didn't", "do", "does", "doesn't", "doing", "don't", "down", "during",
        "each", "few", "for", "from", "further", "had", "hadn't", "has", "hasn't",
        "have", "haven't", "having", "he", "her", "here", "hers", "herself", "him",
        "himself", "his", "how", "i", "if", "in", "into", "is", "isn't", "it", "its",
        "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not",
        "now", "of", "off", "on", "once", "only", "or", "other", "our", "ours",
        "ourselves", "out", "over", "own", "same", "she", "should", "shouldn't", "so",
        "some", "such", "than", "that", "the", "their", "theirs", "them", "themselves",
        "then", "there", "these", "they", "this", "those", "through", "to", "too",
        "under", "until", "up", "very", "was", "wasn't", "we", "were", "weren't",
        "what", "when", "where", "which", "while", "who", "whom", "why", "will",
        "with", "won't", "would", "wouldn't", "you", "your", "yours", "yourself",
        "yourselves",
    };
    return words;
}

std::vector<std::string> preprocess_headline(std::string_view text,
                                             const std::set<std::string>& stoplist) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& tok : tokenize_words(text)) {
        if (stoplist.count(tok)) continue;
        auto stem = porter_stem(tok);
        if (stem.empty()) continue;
        if (seen.insert(stem).second) out.push_back(std::move(stem));
    }
    return out;
}

std::vector<Headline> load_headlines(const std::filesystem::path& path,
                                     const std::set<std::string>& stoplist,
                                     CleaningReport* report) {
    std::vector<Headline> out;
    for (auto& raw : load_raw_headlines(path, report)) {
        Headline h;
        h.timestamp = raw.timestamp;
        h.source_account = raw.account;
        h.tokens = preprocess_headline(raw.text, stoplist);
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

std::set<std::string> intersect(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

}  // namespace

std::vector<ItemSet> detect_keywords(const std::vector<std::vector<std::string>>& headlines,
                                     int k, int eta) {
    if (k <= 0) throw std::invalid_argument("detect_keywords: k must be positive");
    if (eta < 2) throw std::invalid_argument("detect_keywords: eta must be >= 2");

    // Canonicalize: per-headline sorted unique tokens, duplicate headlines
    // collapsed, and the batch itself sorted. This fixes pair iteration order.
    std::set<std::set<std::string>> uniq;
    for (const auto& h : headlines) uniq.insert(std::set<std::string>(h.begin(), h.end()));
    std::vector<std::set<std::string>> batch(uniq.begin(), uniq.end());
    if (batch.size() < 2) return {};

    std::vector<ItemSet> itemsets;
    for (std::size_t a = 0; a + 1 < batch.size(); ++a) {
        for (std::size_t b = a + 1; b < batch.size(); ++b) {
            std::set<std::string> common = intersect(batch[a], batch[b]);
            if (static_cast<int>(common.size()) < eta) continue;

            std::size_t best = itemsets.size();
            std::size_t best_overlap = 0;
            for (std::size_t j = 0; j < itemsets.size(); ++j) {
                std::size_t ov = intersect(itemsets[j].words, common).size();
                if (ov > best_overlap) {  // ties keep the earlier-created itemset
                    best_overlap = ov;
                    best = j;
                }
            }
            if (best < itemsets.size() && static_cast<int>(best_overlap) >= eta) {
                ItemSet& is = itemsets[best];
                is.words = intersect(is.words, common);
                for (auto it = is.word_scores.begin(); it != is.word_scores.end();)
                    it = is.words.count(it->first) ? std::next(it) : is.word_scores.erase(it);
                for (const auto& w : is.words) ++is.word_scores[w];
            } else {
                ItemSet is;
                is.words = std::move(common);
                for (const auto& w : is.words) is.word_scores[w] = 1;
                itemsets.push_back(std::move(is));
            }
        }
    }

    for (auto& is : itemsets) {
        is.total_score = 0;
        for (const auto& [w, s] : is.word_scores) is.total_score += s;
    }
    std::stable_sort(itemsets.begin(), itemsets.end(), [](const ItemSet& a, const ItemSet& b) {
        if (a.total_score != b.total_score) return a.total_score > b.total_score;
        return a.words < b.words;  // then creation order via stable sort
    });
    if (itemsets.size() > static_cast<std::size_t>(k)) itemsets.resize(static_cast<std::size_t>(k));
    return itemsets;
}

std::vector<KeywordPair> top_keyword_pairs(const std::vector<ItemSet>& itemsets,
                                           int n_sets, std::int64_t batch_hour) {
    std::vector<KeywordPair> out;
    std::size_t limit = std::min<std::size_t>(itemsets.size(), n_sets < 0 ? 0 : static_cast<std::size_t>(n_sets));
    for (std::size_t i = 0; i < limit; ++i) {
        const ItemSet& is = itemsets[i];
        if (is.words.size() < 2) continue;
        std::vector<std::pair<std::string, int>> ranked(is.word_scores.begin(), is.word_scores.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        out.push_back(make_pair_canonical(ranked[0].first, ranked[1].first, batch_hour));
    }
    return out;
}

namespace {

int term_count(const std::string& term, const std::vector<std::string>& doc) {
    return static_cast<int>(std::count(doc.begin(), doc.end(), term));
}

}  // namespace

double maxtf(const std::string& term, const std::vector<std::string>& doc,
             const std::vector<std::vector<std::string>>& corpus) {
    if (doc.empty()) throw std::invalid_argument("maxtf: document is empty");
    int global_max = 0;
    for (const auto& d : corpus) global_max = std::max(global_max, term_count(term, d));
    std::unordered_map<std::string, int> freq;
    for (const auto& w : doc) ++freq[w];
    int doc_max = 0;
    for (const auto& [w, c] : freq) doc_max = std::max(doc_max, c);
    return 0.5 + (0.5 + static_cast<double>(global_max)) / static_cast<double>(doc_max);
}

double idf(const std::string& term, const std::vector<std::vector<std::string>>& corpus) {
    if (corpus.empty()) throw std::invalid_argument("idf: empty corpus");
    std::size_t df = 0;
    for (const auto& d : corpus)
        if (std::find(d.begin(), d.end(), term) != d.end()) ++df;
    if (df == 0) throw std::invalid_argument("idf: term absent from every document: " + term);
    return std::log(static_cast<double>(corpus.size()) / static_cast<double>(df));
}

double maxtf_idf(const std::string& term, const std::vector<std::string>& doc,
                 const std::vector<std::vector<std::string>>& corpus) {
    return maxtf(term, doc, corpus) * idf(term, corpus);
}

std::vector<ScoredWord> rank_articulation_words(const std::vector<std::vector<std::string>>& corpus) {
    if (corpus.empty()) throw std::invalid_argument("rank_articulation_words: empty corpus");

    // Per-term raw score: max maxtf_idf over the documents containing it.
    std::map<std::string, double> raw;
    for (const auto& doc : corpus) {
        if (doc.empty()) continue;
        std::set<std::string> distinct(doc.begin(), doc.end());
        for (const auto& t : distinct) {
            double v = maxtf_idf(t, doc, corpus);
            auto [it, fresh] = raw.emplace(t, v);
            if (!fresh) it->second = std::max(it->second, v);
        }
    }
    if (raw.empty()) return {};

    double lo = raw.begin()->second, hi = raw.begin()->second;
    for (const auto& [w, v] : raw) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<ScoredWord> out;
    out.reserve(raw.size());
    for (const auto& [w, v] : raw) {
        double norm = hi > lo ? (v - lo) / (hi - lo) : 0.0;
        out.push_back({w, 1.0 - norm});
    }
    std::sort(out.begin(), out.end(), [](const ScoredWord& a, const ScoredWord& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.word < b.word;
    });
    return out;
}

std::map<std::int64_t, std::vector<std::vector<std::string>>> batch_by_hour(
    const std::vector<Headline>& headlines) {
    std::map<std::int64_t, std::vector<std::vector<std::string>>> out;
    for (const auto& h : headlines) out[h.timestamp / 3600].push_back(h.tokens);
    return out;
}

}  // namespace eventvq
