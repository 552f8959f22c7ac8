#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eventvq/activity.hpp"
#include "eventvq/corpus.hpp"
#include "eventvq/event_graph.hpp"
#include "eventvq/features.hpp"
#include "eventvq/keywords.hpp"
#include "eventvq/vq.hpp"

namespace eventvq {

// On-disk layout of a pipeline working directory. Every writer goes through
// write_file_atomic so partial runs never leave truncated artifacts.

void write_messages_jsonl(const std::filesystem::path& path, const std::vector<Message>& messages,
                          const std::map<std::string, std::string>* event_of = nullptr);

// events.csv + one jsonl file per event under events/
void write_events(const std::filesystem::path& workdir, const std::vector<Event>& events);
std::vector<Event> load_events(const std::filesystem::path& workdir);

void write_pairs_csv(const std::filesystem::path& path, const std::vector<KeywordPair>& pairs);
std::vector<KeywordPair> load_pairs_csv(const std::filesystem::path& path);

void write_stopwords(const std::filesystem::path& path, const std::set<std::string>& words);
std::set<std::string> load_stopwords(const std::filesystem::path& path);

void write_vectors_csv(const std::filesystem::path& path, const std::vector<EventVector>& vectors);
std::vector<EventVector> load_vectors_csv(const std::filesystem::path& path);

void write_tiers_csv(const std::filesystem::path& path, const std::vector<ActivityTier>& tiers);
// event_id -> (label, rank)
std::map<std::string, std::pair<std::string, int>> load_tiers_csv(const std::filesystem::path& path);

void write_features_csv(const std::filesystem::path& path, const std::vector<FeatureVector>& features);
std::vector<FeatureVector> load_features_csv(const std::filesystem::path& path);

void write_labels_csv(const std::filesystem::path& path,
                      const std::map<std::string, std::string>& tier_of);
std::map<std::string, std::string> load_labels_csv(const std::filesystem::path& path);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace eventvq
