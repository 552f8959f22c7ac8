#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eventvq/corpus.hpp"

namespace eventvq {

struct TierLaw {
    std::string family = "exponential";  // or "pareto"
    double mean_seconds = 1.0;
};

// Contrast knobs recognized by the generator, each as (high, other):
//   retweet_fraction, reply_fraction, mention_rate, hashtag_rate, url_rate,
//   verified_fraction, positive_fraction, negative_fraction  -- in [0,1]
//   vocab_pool, hashtag_pool, url_pool, mention_pool         -- sizes >= 1
//   author_pool_fraction                                     -- in (0,1]
//   rt_count_mean, fav_count_mean, popular_boost             -- >= 0
struct GeneratorSpec {
    int n_events = 500;
    std::vector<std::pair<std::string, double>> tier_mix = {{"high", 0.08}, {"low", 0.92}};
    std::map<std::string, TierLaw> interarrival_law = {
        {"high", {"exponential", 1.0}},
        {"low", {"exponential", 600.0}},
    };
    std::map<std::string, std::pair<double, double>> feature_contrasts;  // overrides defaults
    double msg_count_median = 2474;  // log-normal, mimicking the reference corpus
    double msg_count_sigma = 1.0;
    int msg_count_min = 20;
    int msg_count_max = 500000;
    std::uint64_t seed = 42;
};

struct SynthCorpus {
    std::vector<Event> events;
    std::map<std::string, std::string> tier_of;  // event_id -> tier label
};

const std::map<std::string, std::pair<double, double>>& default_feature_contrasts();

// Deterministic in spec.seed; events are generated independently per index so
// parallel generation partitions the seed space.
SynthCorpus generate(const GeneratorSpec& spec);

}  // namespace eventvq
