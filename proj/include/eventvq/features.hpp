#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eventvq/corpus.hpp"

namespace eventvq {

// Which slice of an event the features describe.
struct FeatureWindow {
    bool full = true;
    double fraction = 1.0;  // earliest ceil(fraction * n) messages when !full

    static FeatureWindow full_window() { return {true, 1.0}; }
    static FeatureWindow early(double fraction) { return {false, fraction}; }
    std::string name() const;
};

struct FeatureVector {
    std::string event_id;
    std::vector<std::pair<std::string, double>> values;  // fixed catalog order
    std::string window;

    double get(const std::string& name) const;
};

// Catalog order used by every FeatureVector and CSV export.
const std::vector<std::string>& feature_names();

struct SentimentLexicon {
    std::unordered_map<std::string, int> polarity;  // word -> +1 / -1
};

const SentimentLexicon& default_lexicon();
SentimentLexicon load_lexicon(const std::filesystem::path& path);

// A message is positive when it contains strictly more positive than negative
// lexicon token occurrences; negative symmetrically.
std::pair<int, int> sentiment_counts(const std::vector<Message>& messages,
                                     const SentimentLexicon& lexicon);

// Every catalog row, normalized per the catalog: raw, ln(x) - ln(y) with
// zeros replaced by 1e-8 before the transform, or plain x / y.
FeatureVector extract_features(const Event& event, const FeatureWindow& window,
                               const SentimentLexicon& lexicon = default_lexicon());

struct ComparisonRow {
    std::string feature_name;
    double mean_high = 0;
    double mean_other = 0;
    double t_statistic = 0;
    double p_value = 1;
};

// Welch two-tailed t-test per feature, rows sorted ascending by p-value.
std::vector<ComparisonRow> compare_categories(const std::vector<FeatureVector>& features_high,
                                              const std::vector<FeatureVector>& features_other);

}  // namespace eventvq
