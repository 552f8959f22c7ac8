#include "eventvq/artifacts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eventvq/io_util.hpp"

namespace eventvq {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

void write_messages_jsonl(const std::filesystem::path& path, const std::vector<Message>& messages,
                          const std::map<std::string, std::string>* event_of) {
    std::string out;
    for (const auto& m : messages) {
        const std::string* event_id = nullptr;
        if (event_of) {
            auto it = event_of->find(m.id);
            if (it != event_of->end()) event_id = &it->second;
        }
        out += message_to_json_line(m, event_id);
        out += '\n';
    }
    write_file_atomic(path, out);
}

void write_events(const std::filesystem::path& workdir, const std::vector<Event>& events) {
    std::filesystem::create_directories(workdir / "events");
    std::string index = "event_id,collected_date,keywords,message_file,n_messages\n";
    for (const auto& e : events) {
        std::string kw;
        for (const auto& k : e.keywords) {
            if (!kw.empty()) kw += ';';
            kw += k;
        }
        std::string rel = "events/" + e.event_id + ".jsonl";
        index += csv_escape(e.event_id) + "," + e.collected_date + "," + csv_escape(kw) + "," +
                 rel + "," + std::to_string(e.messages.size()) + "\n";
        write_messages_jsonl(workdir / rel, e.messages);
    }
    write_file_atomic(workdir / "events.csv", index);
}

std::vector<Event> load_events(const std::filesystem::path& workdir) {
    auto lines = read_lines(workdir / "events.csv");
    std::vector<Event> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_csv_line(lines[i]);
        if (f.size() < 5) throw std::runtime_error("events.csv: malformed row " + std::to_string(i));
        Event e;
        e.event_id = f[0];
        e.collected_date = f[1];
        std::istringstream kw(f[2]);
        std::string k;
        while (std::getline(kw, k, ';'))
            if (!k.empty()) e.keywords.insert(k);
        e.messages = clean_messages(load_messages(workdir / f[3]));
        out.push_back(std::move(e));
    }
    return out;
}

void write_pairs_csv(const std::filesystem::path& path, const std::vector<KeywordPair>& pairs) {
    std::string out = "batch_hour,first,second\n";
    for (const auto& p : pairs)
        out += std::to_string(p.batch_hour) + "," + csv_escape(p.first) + "," +
               csv_escape(p.second) + "\n";
    write_file_atomic(path, out);
}

std::vector<KeywordPair> load_pairs_csv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    std::vector<KeywordPair> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_csv_line(lines[i]);
        if (f.size() < 3) throw std::runtime_error("pairs csv: malformed row " + std::to_string(i));
        out.push_back(make_pair_canonical(f[1], f[2], std::stoll(f[0])));
    }
    return out;
}

void write_stopwords(const std::filesystem::path& path, const std::set<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        out += w;
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::set<std::string> out;
    for (auto& line : read_lines(path))
        if (!line.empty()) out.insert(line);
    return out;
}

void write_vectors_csv(const std::filesystem::path& path, const std::vector<EventVector>& vectors) {
    std::string out = "event_id";
    std::size_t k = vectors.empty() ? 0 : vectors.front().weights.size();
    for (std::size_t i = 0; i < k; ++i) out += ",w" + std::to_string(i);
    out += "\n";
    for (const auto& v : vectors) {
        out += csv_escape(v.event_id);
        for (double w : v.weights) out += "," + format_double(w, 17);
        out += "\n";
    }
    write_file_atomic(path, out);
}

std::vector<EventVector> load_vectors_csv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    std::vector<EventVector> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_csv_line(lines[i]);
        EventVector v;
        v.event_id = f[0];
        for (std::size_t j = 1; j < f.size(); ++j) v.weights.push_back(std::stod(f[j]));
        out.push_back(std::move(v));
    }
    return out;
}

void write_tiers_csv(const std::filesystem::path& path, const std::vector<ActivityTier>& tiers) {
    std::string out = "event_id,tier_label,tier_rank\n";
    for (const auto& t : tiers)
        for (const auto& id : t.member_ids)
            out += csv_escape(id) + "," + t.label + "," + std::to_string(t.rank) + "\n";
    write_file_atomic(path, out);
}

std::map<std::string, std::pair<std::string, int>> load_tiers_csv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    std::map<std::string, std::pair<std::string, int>> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_csv_line(lines[i]);
        if (f.size() < 3) throw std::runtime_error("tiers csv: malformed row " + std::to_string(i));
        out[f[0]] = {f[1], std::stoi(f[2])};
    }
    return out;
}

void write_features_csv(const std::filesystem::path& path, const std::vector<FeatureVector>& features) {
    std::string out = "event_id";
    for (const auto& n : feature_names()) out += "," + n;
    out += "\n";
    for (const auto& fv : features) {
        out += csv_escape(fv.event_id);
        for (const auto& [n, v] : fv.values) out += "," + format_double(v, 17);
        out += "\n";
    }
    write_file_atomic(path, out);
}

std::vector<FeatureVector> load_features_csv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) throw std::runtime_error("features csv: empty file");
    auto header = split_csv_line(lines[0]);
    std::vector<FeatureVector> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_csv_line(lines[i]);
        if (f.size() != header.size())
            throw std::runtime_error("features csv: malformed row " + std::to_string(i));
        FeatureVector fv;
        fv.event_id = f[0];
        for (std::size_t j = 1; j < f.size(); ++j) fv.values.emplace_back(header[j], std::stod(f[j]));
        out.push_back(std::move(fv));
    }
    return out;
}

void write_labels_csv(const std::filesystem::path& path,
                      const std::map<std::string, std::string>& tier_of) {
    std::string out = "event_id,tier\n";
    for (const auto& [id, tier] : tier_of) out += csv_escape(id) + "," + tier + "\n";
    write_file_atomic(path, out);
}

std::map<std::string, std::string> load_labels_csv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    std::map<std::string, std::string> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_csv_line(lines[i]);
        if (f.size() >= 2) out[f[0]] = f[1];
    }
    return out;
}

}  // namespace eventvq
