#include "eventvq/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eventvq/io_util.hpp"
#include "eventvq/rng.hpp"

namespace eventvq {
namespace {

constexpr std::int64_t kBaseEpoch = 1388534400;  // 2014-01-01T00:00:00Z

const char* const kPositiveWords[] = {"good", "great", "love", "win", "hope"};
const char* const kNegativeWords[] = {"bad", "terrible", "crisis", "fear", "sad"};

struct Knobs {
    double retweet_fraction, reply_fraction, mention_rate, hashtag_rate, url_rate;
    double verified_fraction, positive_fraction, negative_fraction;
    int vocab_pool, hashtag_pool, url_pool, mention_pool;
    double author_pool_fraction;
    double rt_count_mean, fav_count_mean, popular_boost;
};

Knobs knobs_for(const std::map<std::string, std::pair<double, double>>& contrasts, bool high) {
    auto pick = [&](const char* key) {
        auto it = contrasts.find(key);
        if (it == contrasts.end()) throw std::invalid_argument(std::string("missing contrast ") + key);
        return high ? it->second.first : it->second.second;
    };
    Knobs k;
    k.retweet_fraction = pick("retweet_fraction");
    k.reply_fraction = pick("reply_fraction");
    k.mention_rate = pick("mention_rate");
    k.hashtag_rate = pick("hashtag_rate");
    k.url_rate = pick("url_rate");
    k.verified_fraction = pick("verified_fraction");
    k.positive_fraction = pick("positive_fraction");
    k.negative_fraction = pick("negative_fraction");
    k.vocab_pool = static_cast<int>(pick("vocab_pool"));
    k.hashtag_pool = static_cast<int>(pick("hashtag_pool"));
    k.url_pool = static_cast<int>(pick("url_pool"));
    k.mention_pool = static_cast<int>(pick("mention_pool"));
    k.author_pool_fraction = pick("author_pool_fraction");
    k.rt_count_mean = pick("rt_count_mean");
    k.fav_count_mean = pick("fav_count_mean");
    k.popular_boost = pick("popular_boost");
    return k;
}

double draw_interarrival(Rng& rng, const TierLaw& law) {
    if (law.family == "exponential") return rng.exponential(law.mean_seconds);
    if (law.family == "pareto") {
        constexpr double alpha = 2.5;
        double xm = law.mean_seconds * (alpha - 1.0) / alpha;
        return xm * std::pow(1.0 - rng.uniform01(), -1.0 / alpha);
    }
    throw std::invalid_argument("unknown interarrival law: " + law.family);
}

void validate(const GeneratorSpec& spec) {
    if (spec.n_events < 1) throw std::invalid_argument("generate: n_events must be >= 1");
    if (spec.msg_count_median <= 0 || spec.msg_count_sigma < 0 || spec.msg_count_min < 1 ||
        spec.msg_count_max < spec.msg_count_min)
        throw std::invalid_argument("generate: bad message count parameters");
    double total = 0;
    for (const auto& [tier, frac] : spec.tier_mix) {
        if (frac < 0) throw std::invalid_argument("generate: negative tier fraction");
        if (!spec.interarrival_law.count(tier))
            throw std::invalid_argument("generate: no interarrival law for tier " + tier);
        total += frac;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("generate: tier fractions must sum to 1");
    for (const auto& [tier, law] : spec.interarrival_law) {
        if (law.mean_seconds <= 0)
            throw std::invalid_argument("generate: interarrival mean must be positive");
        if (law.family != "exponential" && law.family != "pareto")
            throw std::invalid_argument("generate: unknown interarrival law " + law.family);
    }
}

void validate_contrasts(const std::map<std::string, std::pair<double, double>>& c) {
    static const std::map<std::string, std::pair<double, double>> range = {
        {"retweet_fraction", {0, 1}}, {"reply_fraction", {0, 1}}, {"mention_rate", {0, 1}},
        {"hashtag_rate", {0, 1}}, {"url_rate", {0, 1}}, {"verified_fraction", {0, 1}},
        {"positive_fraction", {0, 1}}, {"negative_fraction", {0, 1}},
        {"vocab_pool", {1, 1e9}}, {"hashtag_pool", {1, 1e9}}, {"url_pool", {1, 1e9}},
        {"mention_pool", {1, 1e9}}, {"author_pool_fraction", {1e-9, 1}},
        {"rt_count_mean", {0, 1e9}}, {"fav_count_mean", {0, 1e9}}, {"popular_boost", {0, 1e9}},
    };
    for (const auto& [key, hv] : c) {
        auto it = range.find(key);
        if (it == range.end()) throw std::invalid_argument("generate: unknown contrast " + key);
        for (double v : {hv.first, hv.second})
            if (!(v >= it->second.first && v <= it->second.second))
                throw std::invalid_argument("generate: contrast " + key + " out of range");
    }
}

}  // namespace

const std::map<std::string, std::pair<double, double>>& default_feature_contrasts() {
    static const std::map<std::string, std::pair<double, double>> defaults = {
        {"retweet_fraction", {0.60, 0.20}},
        {"reply_fraction", {0.30, 0.08}},
        {"mention_rate", {0.35, 0.15}},
        {"hashtag_rate", {0.30, 0.45}},
        {"url_rate", {0.20, 0.45}},
        {"verified_fraction", {0.15, 0.04}},
        {"positive_fraction", {0.10, 0.05}},
        {"negative_fraction", {0.45, 0.10}},
        {"vocab_pool", {60, 500}},
        {"hashtag_pool", {3, 25}},   // "7 times more unique hashtags" direction
        {"url_pool", {5, 40}},
        {"mention_pool", {12, 40}},
        {"author_pool_fraction", {0.90, 0.55}},
        {"rt_count_mean", {6.0, 0.8}},
        {"fav_count_mean", {3.0, 0.5}},
        {"popular_boost", {300, 25}},
    };
    return defaults;
}

SynthCorpus generate(const GeneratorSpec& spec) {
    validate(spec);
    auto contrasts = default_feature_contrasts();
    for (const auto& [k, v] : spec.feature_contrasts) contrasts[k] = v;
    validate_contrasts(contrasts);

    // tier of event i by cumulative mix fraction
    std::vector<std::string> tier_by_index(spec.n_events);
    {
        double acc = 0;
        std::vector<std::pair<double, std::string>> cuts;
        for (const auto& [tier, frac] : spec.tier_mix) {
            acc += frac;
            cuts.emplace_back(acc, tier);
        }
        for (int i = 0; i < spec.n_events; ++i) {
            double u = (static_cast<double>(i) + 0.5) / static_cast<double>(spec.n_events);
            for (const auto& [cut, tier] : cuts)
                if (u <= cut + 1e-12) {
                    tier_by_index[i] = tier;
                    break;
                }
            if (tier_by_index[i].empty()) tier_by_index[i] = cuts.back().second;
        }
    }

    SynthCorpus corpus;
    corpus.events.reserve(spec.n_events);
    char buf[64];
    for (int idx = 0; idx < spec.n_events; ++idx) {
        const std::string& tier = tier_by_index[idx];
        const TierLaw& law = spec.interarrival_law.at(tier);
        Knobs knobs = knobs_for(contrasts, tier == "high");
        Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(idx)));

        int n = static_cast<int>(std::llround(spec.msg_count_median *
                                              std::exp(spec.msg_count_sigma * rng.normal(0, 1))));
        n = std::clamp(n, spec.msg_count_min, spec.msg_count_max);

        std::snprintf(buf, sizeof(buf), "synth-%06d", idx);
        Event ev;
        ev.event_id = buf;
        ev.keywords = {"synth", ev.event_id};

        int author_pool = std::max(1, static_cast<int>(std::llround(knobs.author_pool_fraction * n)));
        std::int64_t t = kBaseEpoch + static_cast<std::int64_t>(idx) * 86400;
        ev.collected_date = utc_date(t);
        int popular_index = -1;

        for (int i = 0; i < n; ++i) {
            if (i > 0) t += static_cast<std::int64_t>(draw_interarrival(rng, law));
            Message m;
            std::snprintf(buf, sizeof(buf), "%s-m%06d", ev.event_id.c_str(), i);
            m.id = buf;
            m.timestamp = t;
            std::snprintf(buf, sizeof(buf), "u%06d_%06d", idx,
                          static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(author_pool))));
            m.author = buf;
            m.author_verified = rng.uniform01() < knobs.verified_fraction;

            std::string text;
            int n_words = 7 + static_cast<int>(rng.uniform_int(5));
            for (int wi = 0; wi < n_words; ++wi) {
                std::snprintf(buf, sizeof(buf), "w%04d",
                              static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(knobs.vocab_pool))));
                if (!text.empty()) text += ' ';
                text += buf;
            }
            double mood = rng.uniform01();
            if (mood < knobs.positive_fraction) {
                text += std::string(" ") + kPositiveWords[rng.uniform_int(5)] + " " +
                        kPositiveWords[rng.uniform_int(5)];
            } else if (mood < knobs.positive_fraction + knobs.negative_fraction) {
                text += std::string(" ") + kNegativeWords[rng.uniform_int(5)] + " " +
                        kNegativeWords[rng.uniform_int(5)];
            }

            if (rng.uniform01() < knobs.mention_rate) {
                std::snprintf(buf, sizeof(buf), "m%04d",
                              static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(knobs.mention_pool))));
                m.mentions.push_back(buf);
                text += std::string(" @") + buf;
            }
            if (rng.uniform01() < knobs.hashtag_rate) {
                std::snprintf(buf, sizeof(buf), "tag%04d",
                              static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(knobs.hashtag_pool))));
                m.hashtags.push_back(buf);
                text += std::string(" #") + buf;
            }
            if (rng.uniform01() < knobs.url_rate) {
                std::snprintf(buf, sizeof(buf), "http://ex.io/%04d",
                              static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(knobs.url_pool))));
                m.urls.push_back(buf);
                text += std::string(" ") + buf;
            }

            if (rng.uniform01() < knobs.retweet_fraction && i > 0) {
                m.is_retweet = true;
                m.text = "RT " + text;
            } else {
                m.text = text;
                m.retweet_count = static_cast<std::int64_t>(rng.exponential(knobs.rt_count_mean));
                if (popular_index < 0) {
                    popular_index = i;
                    m.retweet_count += static_cast<std::int64_t>(knobs.popular_boost);
                }
            }
            m.favorite_count = static_cast<std::int64_t>(rng.exponential(knobs.fav_count_mean));
            if (i > 0 && rng.uniform01() < knobs.reply_fraction) {
                std::snprintf(buf, sizeof(buf), "%s-m%06d", ev.event_id.c_str(),
                              static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(i))));
                m.reply_to_id = buf;
            }
            ev.messages.push_back(std::move(m));
        }
        corpus.tier_of[ev.event_id] = tier;
        corpus.events.push_back(std::move(ev));
    }
    return corpus;
}

}  // namespace eventvq
