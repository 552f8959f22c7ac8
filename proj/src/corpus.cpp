#include "eventvq/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "eventvq/io_util.hpp"
#include "eventvq/text.hpp"

namespace eventvq {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
    std::vector<std::string> out;
    if (auto it = j.find(key); it != j.end() && it->is_array()) {
        for (const auto& v : *it)
            if (v.is_string() && !v.get<std::string>().empty()) out.push_back(v.get<std::string>());
    }
    return out;
}

Message parse_message(const json& j) {
    Message m;
    m.id = j.at("id").get<std::string>();
    if (m.id.empty()) throw std::runtime_error("empty id");
    const auto& ts = j.at("timestamp");
    if (ts.is_number_float()) m.timestamp = static_cast<std::int64_t>(ts.get<double>());
    else m.timestamp = ts.get<std::int64_t>();
    if (m.timestamp < 0) throw std::runtime_error("negative timestamp");
    m.text = j.value("text", std::string{});
    m.author = j.value("author", std::string{});
    m.is_retweet = j.value("is_retweet", false);
    m.retweet_count = j.value("retweet_count", static_cast<std::int64_t>(0));
    m.favorite_count = j.value("favorite_count", static_cast<std::int64_t>(0));
    if (m.retweet_count < 0 || m.favorite_count < 0) throw std::runtime_error("negative count");
    if (auto it = j.find("reply_to_id"); it != j.end() && it->is_string() && !it->get<std::string>().empty())
        m.reply_to_id = it->get<std::string>();
    m.mentions = string_list(j, "mentions");
    m.hashtags = string_list(j, "hashtags");
    m.urls = string_list(j, "urls");
    if (!j.contains("mentions") && !j.contains("hashtags") && !j.contains("urls")) {
        auto ents = scan_entities(m.text);
        m.mentions = std::move(ents.mentions);
        m.hashtags = std::move(ents.hashtags);
        m.urls = std::move(ents.urls);
    }
    m.author_verified = j.value("author_verified", false);
    return m;
}

}  // namespace

std::vector<Message> load_messages(const std::filesystem::path& path, CleaningReport* report, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open message file: " + path.string());
    std::vector<Message> out;
    std::string line;
    std::size_t lineno = 0, skipped = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(parse_message(json::parse(line)));
        } catch (const std::exception& e) {
            if (strict)
                throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
            ++skipped;
        }
    }
    if (report) {
        report->loaded += out.size();
        report->skipped += skipped;
    }
    return out;
}

std::vector<RawHeadline> load_raw_headlines(const std::filesystem::path& path, CleaningReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open headline file: " + path.string());
    std::vector<RawHeadline> out;
    std::string line;
    std::size_t skipped = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            RawHeadline h;
            const auto& ts = j.at("timestamp");
            h.timestamp = ts.is_number_float() ? static_cast<std::int64_t>(ts.get<double>())
                                               : ts.get<std::int64_t>();
            if (h.timestamp < 0) throw std::runtime_error("negative timestamp");
            h.account = j.value("account", std::string{});
            h.text = j.at("text").get<std::string>();
            out.push_back(std::move(h));
        } catch (const std::exception&) {
            ++skipped;
        }
    }
    if (report) {
        report->loaded += out.size();
        report->skipped += skipped;
    }
    return out;
}

namespace {

// hand-rolled writer; the loader's real JSON parser round-trips it in tests
void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

void append_string_array(std::string& out, const std::vector<std::string>& items) {
    out += '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        append_json_string(out, items[i]);
    }
    out += ']';
}

}  // namespace

std::string message_to_json_line(const Message& m, const std::string* event_id) {
    std::string out;
    out.reserve(128 + m.text.size());
    out += "{\"id\":";
    append_json_string(out, m.id);
    out += ",\"timestamp\":" + std::to_string(m.timestamp);
    out += ",\"text\":";
    append_json_string(out, m.text);
    out += ",\"author\":";
    append_json_string(out, m.author);
    out += m.is_retweet ? ",\"is_retweet\":true" : ",\"is_retweet\":false";
    out += ",\"retweet_count\":" + std::to_string(m.retweet_count);
    out += ",\"favorite_count\":" + std::to_string(m.favorite_count);
    if (m.reply_to_id) {
        out += ",\"reply_to_id\":";
        append_json_string(out, *m.reply_to_id);
    }
    out += ",\"mentions\":";
    append_string_array(out, m.mentions);
    out += ",\"hashtags\":";
    append_string_array(out, m.hashtags);
    out += ",\"urls\":";
    append_string_array(out, m.urls);
    out += m.author_verified ? ",\"author_verified\":true" : ",\"author_verified\":false";
    if (event_id) {
        out += ",\"event_id\":";
        append_json_string(out, *event_id);
    }
    out += '}';
    return out;
}

std::vector<Message> clean_messages(std::vector<Message> messages, CleaningReport* report) {
    std::stable_sort(messages.begin(), messages.end(),
                     [](const Message& a, const Message& b) { return a.timestamp < b.timestamp; });
    std::unordered_set<std::string> seen;
    seen.reserve(messages.size());
    std::vector<Message> out;
    out.reserve(messages.size());
    std::size_t dups = 0;
    for (auto& m : messages) {
        if (seen.insert(m.id).second) out.push_back(std::move(m));
        else ++dups;
    }
    if (report) report->duplicates += dups;
    return out;
}

std::size_t head_count(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
}

Event drop_head_fraction(const Event& event, double fraction) {
    if (!(fraction >= 0.0 && fraction < 1.0))
        throw std::invalid_argument("drop_head_fraction: fraction must be in [0,1)");
    std::size_t drop = head_count(fraction, event.messages.size());
    Event out;
    out.event_id = event.event_id;
    out.keywords = event.keywords;
    out.collected_date = event.collected_date;
    out.messages.assign(event.messages.begin() + static_cast<std::ptrdiff_t>(drop), event.messages.end());
    return out;
}

namespace {

StatsRow summarize(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    StatsRow r;
    r.min = v.front();
    r.max = v.back();
    double sum = 0;
    for (double x : v) sum += x;
    r.mean = sum / static_cast<double>(v.size());
    r.median = v[(v.size() - 1) / 2];  // lower-middle for even counts
    return r;
}

}  // namespace

DatasetStats dataset_stats(const std::vector<Event>& events) {
    if (events.empty()) throw std::invalid_argument("dataset_stats: empty collection");
    std::vector<double> counts, keywords, durations;
    std::size_t total = 0;
    for (const auto& e : events) {
        counts.push_back(static_cast<double>(e.messages.size()));
        keywords.push_back(static_cast<double>(e.keywords.size()));
        double dur = 0;
        if (e.messages.size() >= 2)
            dur = static_cast<double>(e.messages.back().timestamp - e.messages.front().timestamp) / 3600.0;
        durations.push_back(dur);
        total += e.messages.size();
    }
    DatasetStats s;
    s.n_events = events.size();
    s.total_messages = total;
    s.message_count = summarize(std::move(counts));
    s.keyword_count = summarize(std::move(keywords));
    s.duration_hours = summarize(std::move(durations));
    return s;
}

std::string dataset_stats_text(const DatasetStats& s) {
    std::ostringstream out;
    auto row = [&](const char* name, const StatsRow& r) {
        out << name << "\tmin " << format_double(r.min) << "\tmean " << format_double(r.mean)
            << "\tmedian " << format_double(r.median) << "\tmax " << format_double(r.max) << "\n";
    };
    out << "events\t" << s.n_events << "\nmessages\t" << s.total_messages << "\n";
    row("messages_per_event", s.message_count);
    row("keywords_per_event", s.keyword_count);
    row("duration_hours", s.duration_hours);
    return out.str();
}

}  // namespace eventvq
