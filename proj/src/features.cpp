#include "eventvq/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eventvq/stats.hpp"
#include "eventvq/text.hpp"

namespace eventvq {

std::string FeatureWindow::name() const {
    if (full) return "full";
    std::ostringstream s;
    s << "early(" << fraction << ")";
    return s.str();
}

double FeatureVector::get(const std::string& name) const {
    for (const auto& [n, v] : values)
        if (n == name) return v;
    throw std::invalid_argument("unknown feature: " + name);
}

namespace {

enum class Norm { None, LogDiff, Ratio };

struct CatalogRow {
    const char* name;
    const char* denominator;  // aggregate name; nullptr when Norm::None
    Norm norm;
};

constexpr CatalogRow kCatalog[] = {
    {"component_size", nullptr, Norm::None},
    {"total_seconds", "total_tweets", Norm::LogDiff},
    {"total_tweets", nullptr, Norm::None},
    {"total_retweets", "total_tweets", Norm::LogDiff},
    {"total_tweets_retweeted", "total_tweets", Norm::LogDiff},
    {"retweets_most_retweeted", "total_retweets", Norm::LogDiff},
    {"total_mentions", "total_tweets", Norm::LogDiff},
    {"total_unique_mentions", "total_mentions", Norm::LogDiff},
    {"total_tweets_with_mention", "total_tweets", Norm::LogDiff},
    {"total_tweets_with_mostfrequent_mention", "total_tweets_with_mention", Norm::LogDiff},
    {"total_hashtags", "total_tweets", Norm::LogDiff},
    {"total_unique_hashtags", "total_hashtags", Norm::LogDiff},
    {"total_tweets_with_hashtag", "total_tweets", Norm::LogDiff},
    {"total_tweets_with_mostfrequent_hashtag", "total_tweets_with_hashtag", Norm::LogDiff},
    {"total_urls", "total_tweets", Norm::LogDiff},
    {"total_unique_urls", "total_urls", Norm::LogDiff},
    {"total_tweets_with_url", "total_tweets", Norm::LogDiff},
    {"total_tweets_with_mostfrequent_url", "total_tweets_with_url", Norm::LogDiff},
    {"total_unique_verified_users", "total_verified_users", Norm::LogDiff},
    {"total_verified_users", "total_tweets", Norm::LogDiff},
    {"total_unique_users", "total_tweets", Norm::LogDiff},
    {"total_replies", "total_unique_users", Norm::LogDiff},
    {"total_tweets_first_replied", "total_tweets", Norm::LogDiff},
    {"total_unique_users_replied", "total_unique_users", Norm::LogDiff},
    {"total_tweets_replied", "total_tweets", Norm::LogDiff},
    {"total_words", "total_tweets", Norm::LogDiff},
    {"total_unique_words", "total_words", Norm::LogDiff},
    {"total_characters", "total_tweets", Norm::LogDiff},
    {"total_rt_count", "total_tweets", Norm::LogDiff},
    {"total_fav_count", "total_tweets", Norm::LogDiff},
    {"total_positive_sentiment", "total_tweets", Norm::Ratio},
    {"total_negative_sentiment", "total_tweets", Norm::Ratio},
};

}  // namespace

const std::vector<std::string>& feature_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& row : kCatalog) v.emplace_back(row.name);
        return v;
    }();
    return names;
}

const SentimentLexicon& default_lexicon() {
    static const SentimentLexicon lex = [] {
        SentimentLexicon l;
        for (const char* w : {"good", "great", "love", "win", "hope", "happy", "best", "thank",
                              "amazing", "inspirational", "peace", "hero", "joy", "beautiful",
                              "brave", "proud", "celebrate", "success", "wonderful", "relief",
                              "safe", "rescue", "survives", "support", "praise", "strong"})
            l.polarity[w] = 1;
        for (const char* w : {"bad", "dead", "death", "dies", "kill", "killed", "attack", "crash",
                              "fear", "terrible", "war", "crisis", "sad", "loss", "threat",
                              "bomb", "rape", "disaster", "tragedy", "horrible", "worst",
                              "angry", "hate", "fail", "victim", "damage", "missing"})
            l.polarity[w] = -1;
        return l;
    }();
    return lex;
}

SentimentLexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon: " + path.string());
    SentimentLexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string word;
        int pol = 0;
        if (ss >> word >> pol && (pol == 1 || pol == -1)) lex.polarity[to_lower(word)] = pol;
    }
    if (lex.polarity.empty()) throw std::runtime_error("empty lexicon: " + path.string());
    return lex;
}

std::pair<int, int> sentiment_counts(const std::vector<Message>& messages,
                                     const SentimentLexicon& lexicon) {
    if (lexicon.polarity.empty()) throw std::invalid_argument("sentiment_counts: empty lexicon");
    int pos = 0, neg = 0;
    for (const auto& m : messages) {
        int p = 0, n = 0;
        for (const auto& tok : tokenize_words(m.text)) {
            auto it = lexicon.polarity.find(tok);
            if (it == lexicon.polarity.end()) continue;
            if (it->second > 0) ++p;
            else ++n;
        }
        if (p > n) ++pos;
        else if (n > p) ++neg;
    }
    return {pos, neg};
}

namespace {

// number of messages carrying the most frequent entity
double most_frequent_hits(const std::map<std::string, int>& per_message_counts) {
    int best = 0;
    for (const auto& [k, c] : per_message_counts) best = std::max(best, c);
    return static_cast<double>(best);
}

}  // namespace

FeatureVector extract_features(const Event& event, const FeatureWindow& window,
                               const SentimentLexicon& lexicon) {
    std::size_t n = event.messages.size();
    std::size_t take = n;
    if (!window.full) {
        if (!(window.fraction > 0.0 && window.fraction <= 1.0))
            throw std::invalid_argument("extract_features: window fraction must be in (0,1]");
        take = head_count(window.fraction, n);
    }
    if (take == 0) throw std::invalid_argument("extract_features: empty window for event " + event.event_id);

    std::vector<Message> msgs(event.messages.begin(),
                              event.messages.begin() + static_cast<std::ptrdiff_t>(take));

    std::map<std::string, double> agg;
    agg["component_size"] = static_cast<double>(event.keywords.size());
    agg["total_tweets"] = static_cast<double>(msgs.size());
    agg["total_seconds"] = static_cast<double>(msgs.back().timestamp - msgs.front().timestamp);

    double retweets = 0, tweets_retweeted = 0, most_retweeted = 0, rt_count = 0, fav_count = 0;
    double mentions = 0, tweets_with_mention = 0;
    double hashtags = 0, tweets_with_hashtag = 0;
    double urls = 0, tweets_with_url = 0;
    double verified = 0, replies = 0;
    double words = 0, characters = 0;
    std::set<std::string> uniq_mentions, uniq_hashtags, uniq_urls, uniq_users, uniq_verified,
        uniq_repliers, reply_targets, uniq_words;
    std::map<std::string, int> mention_freq, hashtag_freq, url_freq;
    std::set<std::string> window_ids;
    for (const auto& m : msgs) window_ids.insert(m.id);
    std::set<std::string> replied_in_window;

    for (const auto& m : msgs) {
        if (m.is_retweet) ++retweets;
        if (m.retweet_count > 0) ++tweets_retweeted;
        most_retweeted = std::max(most_retweeted, static_cast<double>(m.retweet_count));
        rt_count += static_cast<double>(m.retweet_count);
        fav_count += static_cast<double>(m.favorite_count);

        auto tally = [](const std::vector<std::string>& items, std::set<std::string>& uniq,
                        std::map<std::string, int>& per_message) {
            std::set<std::string> in_msg(items.begin(), items.end());
            for (const auto& x : in_msg) {
                uniq.insert(x);
                ++per_message[x];
            }
        };
        mentions += static_cast<double>(m.mentions.size());
        if (!m.mentions.empty()) ++tweets_with_mention;
        tally(m.mentions, uniq_mentions, mention_freq);
        hashtags += static_cast<double>(m.hashtags.size());
        if (!m.hashtags.empty()) ++tweets_with_hashtag;
        tally(m.hashtags, uniq_hashtags, hashtag_freq);
        urls += static_cast<double>(m.urls.size());
        if (!m.urls.empty()) ++tweets_with_url;
        tally(m.urls, uniq_urls, url_freq);

        if (m.author_verified) {
            ++verified;
            uniq_verified.insert(m.author);
        }
        uniq_users.insert(m.author);
        if (m.reply_to_id) {
            ++replies;
            uniq_repliers.insert(m.author);
            reply_targets.insert(*m.reply_to_id);
            if (window_ids.count(*m.reply_to_id)) replied_in_window.insert(*m.reply_to_id);
        }

        auto toks = split_whitespace(m.text);
        words += static_cast<double>(toks.size());
        for (const auto& t : toks) uniq_words.insert(to_lower(t));
        characters += static_cast<double>(m.text.size());
    }

    agg["total_retweets"] = retweets;
    agg["total_tweets_retweeted"] = tweets_retweeted;
    agg["retweets_most_retweeted"] = most_retweeted;
    agg["total_mentions"] = mentions;
    agg["total_unique_mentions"] = static_cast<double>(uniq_mentions.size());
    agg["total_tweets_with_mention"] = tweets_with_mention;
    agg["total_tweets_with_mostfrequent_mention"] = most_frequent_hits(mention_freq);
    agg["total_hashtags"] = hashtags;
    agg["total_unique_hashtags"] = static_cast<double>(uniq_hashtags.size());
    agg["total_tweets_with_hashtag"] = tweets_with_hashtag;
    agg["total_tweets_with_mostfrequent_hashtag"] = most_frequent_hits(hashtag_freq);
    agg["total_urls"] = urls;
    agg["total_unique_urls"] = static_cast<double>(uniq_urls.size());
    agg["total_tweets_with_url"] = tweets_with_url;
    agg["total_tweets_with_mostfrequent_url"] = most_frequent_hits(url_freq);
    agg["total_unique_verified_users"] = static_cast<double>(uniq_verified.size());
    agg["total_verified_users"] = verified;
    agg["total_unique_users"] = static_cast<double>(uniq_users.size());
    agg["total_replies"] = replies;
    agg["total_tweets_first_replied"] = static_cast<double>(reply_targets.size());
    agg["total_unique_users_replied"] = static_cast<double>(uniq_repliers.size());
    agg["total_tweets_replied"] = static_cast<double>(replied_in_window.size());
    agg["total_words"] = words;
    agg["total_unique_words"] = static_cast<double>(uniq_words.size());
    agg["total_characters"] = characters;
    agg["total_rt_count"] = rt_count;
    agg["total_fav_count"] = fav_count;
    auto [pos, neg] = sentiment_counts(msgs, lexicon);
    agg["total_positive_sentiment"] = static_cast<double>(pos);
    agg["total_negative_sentiment"] = static_cast<double>(neg);

    constexpr double kZeroSub = 1e-8;
    FeatureVector fv;
    fv.event_id = event.event_id;
    fv.window = window.name();
    fv.values.reserve(std::size(kCatalog));
    for (const auto& row : kCatalog) {
        double x = agg.at(row.name);
        double value = x;
        if (row.norm != Norm::None) {
            double y = agg.at(row.denominator);
            if (x == 0) x = kZeroSub;
            if (y == 0) y = kZeroSub;
            value = row.norm == Norm::LogDiff ? std::log(x) - std::log(y) : x / y;
        }
        fv.values.emplace_back(row.name, value);
    }
    return fv;
}

std::vector<ComparisonRow> compare_categories(const std::vector<FeatureVector>& features_high,
                                              const std::vector<FeatureVector>& features_other) {
    if (features_high.empty() || features_other.empty())
        throw std::invalid_argument("compare_categories: both groups must be nonempty");
    const auto& names = feature_names();
    std::vector<ComparisonRow> rows;
    rows.reserve(names.size());
    for (std::size_t f = 0; f < names.size(); ++f) {
        std::vector<double> xs, ys;
        xs.reserve(features_high.size());
        ys.reserve(features_other.size());
        for (const auto& v : features_high) xs.push_back(v.values.at(f).second);
        for (const auto& v : features_other) ys.push_back(v.values.at(f).second);
        TTestResult t = welch_t_test(xs, ys);
        double mh = 0, mo = 0;
        for (double x : xs) mh += x;
        for (double y : ys) mo += y;
        rows.push_back({names[f], mh / static_cast<double>(xs.size()),
                        mo / static_cast<double>(ys.size()), t.t, t.p});
    }
    std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        if (a.p_value != b.p_value) return a.p_value < b.p_value;
        return a.feature_name < b.feature_name;
    });
    return rows;
}

}  // namespace eventvq
