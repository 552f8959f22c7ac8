#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace eventvq {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required artifact of a subcommand is missing (exit code 2).
struct MissingArtifact : std::runtime_error {
    std::filesystem::path path;
    explicit MissingArtifact(std::filesystem::path p)
        : std::runtime_error("missing required artifact: " + p.string()), path(std::move(p)) {}
};

struct PipelineConfig {
    std::filesystem::path input_messages;
    std::filesystem::path input_headlines;
    std::filesystem::path workdir = "work";
    std::filesystem::path stopword_file;  // optional extra stoplist
    std::filesystem::path lexicon_file;   // optional sentiment lexicon

    int eta = 2;
    int k_codewords = 20;
    int n_tiers = 4;
    double head_drop_fraction = 0.05;
    double early_fraction = 0.05;
    std::uint64_t seed = 42;
    int rounds = 5;
    std::vector<double> l2_grid = {0.001, 0.01, 0.1, 1, 10};

    std::int64_t window_seconds = 86400;
    std::int64_t bin_width = 1;
    std::int64_t hist_cutoff = 60;
    int baseline_rounds = 3;
    std::int64_t sample_cap = 200;
    std::string feature_window = "early";  // which feature matrix train/evaluate use
    std::size_t min_event_messages = 1;
    double class_weight = 1.0;           // weight of the high-activity class in training
    bool early_before_head_drop = false;  // take the early window before the head drop
    bool exclude_self_pairs = false;      // drop u == v terms from validation metric sums

    int synth_events = 200;
    double synth_high_fraction = 0.08;
    double synth_msg_median = 300;
    double synth_msg_sigma = 0.8;
    double synth_high_mean = 1.0;
    double synth_low_mean = 600.0;
};

void validate_config(const PipelineConfig& cfg);

}  // namespace eventvq
