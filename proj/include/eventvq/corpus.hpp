#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eventvq {

// One timestamped social post. Timestamps are UTC integer seconds; sub-second
// precision is truncated at ingestion.
struct Message {
    std::string id;
    std::int64_t timestamp = 0;
    std::string text;
    std::string author;
    bool is_retweet = false;
    std::int64_t retweet_count = 0;
    std::int64_t favorite_count = 0;
    std::optional<std::string> reply_to_id;
    std::vector<std::string> mentions;
    std::vector<std::string> hashtags;
    std::vector<std::string> urls;
    bool author_verified = false;
};

struct Headline {
    std::int64_t timestamp = 0;
    std::string source_account;
    std::vector<std::string> tokens;  // lowercase, stopword-free, stemmed
};

// Keyword set plus the time-ordered messages of one real-world occurrence.
struct Event {
    std::string event_id;
    std::set<std::string> keywords;
    std::vector<Message> messages;  // sorted nondecreasing by timestamp
    std::string collected_date;     // YYYY-MM-DD
};

struct CleaningReport {
    std::size_t loaded = 0;
    std::size_t skipped = 0;     // malformed lines
    std::size_t duplicates = 0;  // duplicate ids dropped (keep-first)
};

// Line-delimited JSON records with the Message field names; unknown fields
// ignored. Malformed lines are counted and skipped (strict: thrown).
std::vector<Message> load_messages(const std::filesystem::path& path,
                                   CleaningReport* report = nullptr,
                                   bool strict = false);

struct RawHeadline {
    std::int64_t timestamp = 0;
    std::string account;
    std::string text;
};

// Headline records carry `timestamp`, `account`, `text`; tokenization into
// Headline happens in keyword mining.
std::vector<RawHeadline> load_raw_headlines(const std::filesystem::path& path,
                                            CleaningReport* report = nullptr);

std::string message_to_json_line(const Message& m, const std::string* event_id = nullptr);

// Sorts by timestamp and drops duplicate ids (keep first occurrence).
std::vector<Message> clean_messages(std::vector<Message> messages, CleaningReport* report = nullptr);

// Removes the earliest ceil(fraction * n) messages; fraction in [0, 1).
Event drop_head_fraction(const Event& event, double fraction);

struct StatsRow {
    double min = 0, mean = 0, median = 0, max = 0;
};

// Per-event summaries over a nonempty collection. Median for even counts is
// the lower-middle element.
struct DatasetStats {
    std::size_t n_events = 0;
    std::size_t total_messages = 0;
    StatsRow message_count;
    StatsRow keyword_count;
    StatsRow duration_hours;
};

DatasetStats dataset_stats(const std::vector<Event>& events);

std::string dataset_stats_text(const DatasetStats& s);

// ceil(fraction * n) with a guard against floating-point drift at exact
// integer products.
std::size_t head_count(double fraction, std::size_t n);

}  // namespace eventvq
