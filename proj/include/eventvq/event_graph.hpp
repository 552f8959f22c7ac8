#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eventvq/corpus.hpp"
#include "eventvq/keywords.hpp"

namespace eventvq {

struct KeywordGraph {
    std::set<std::string> nodes;
    std::set<KeywordPair> edges;  // endpoints always inserted into nodes
    std::int64_t window_start = 0;
    std::int64_t window_length = 86400;

    void add_edge(const KeywordPair& p);
};

struct Component {
    std::set<std::string> keywords;
    std::vector<KeywordPair> pairs;
    std::vector<Message> messages;  // sorted by timestamp, deduplicated by id
};

// Maximal connected node sets; output sorted by each component's smallest
// keyword. Isolated nodes become singleton components.
std::vector<Component> connected_components(const KeywordGraph& graph);

struct SplitResult {
    std::vector<Component> fragments;
    std::vector<std::string> removed_words;  // to append to the stopword list
};

// Repeatedly removes the highest-ranked word whose removal disconnects the
// component, recursing on the fragments. Fragments reduced to a single
// keyword are dropped.
SplitResult split_on_articulation(const Component& component,
                                  const std::vector<ScoredWord>& ranked_words);

using PairKey = std::pair<std::string, std::string>;

// Union of the per-pair message sets, deduplicated by id, sorted by
// timestamp. Throws naming the pair if one is missing from the map.
Component merge_messages(const Component& component,
                         const std::map<PairKey, std::vector<Message>>& per_pair_messages);

enum class ClusterMetric { I1, I2, E1, G1, G1Prime, H1, H2 };

ClusterMetric parse_metric(const std::string& name);
std::string metric_name(ClusterMetric m);
bool metric_higher_is_better(ClusterMetric m);

// Internal/external clustering criteria over the components' messages, with
// sim(u,v) = cosine similarity of raw term-frequency vectors of message text.
// Summations follow the metric table literally: pair sums range over ordered
// pairs including u == v unless include_self_pairs is false. Messages with no
// tokens are dropped; a component left empty is excluded with a warning.
double cluster_quality(const std::vector<Component>& components, ClusterMetric metric,
                       bool include_self_pairs = true);

// Random partition of the pairs matching the given size profile (sizes count
// pairs and must sum to the number of pairs).
std::vector<Component> random_component_baseline(const std::vector<KeywordPair>& pairs,
                                                 const std::vector<int>& sizes,
                                                 std::uint64_t seed);

// Equal-count sampling per keyword pair ("the same sample of tweets" is used
// for the true components and the random baseline): every pair contributes
// min(per-pair count, cap) messages, sampled deterministically by seed.
std::map<PairKey, std::vector<Message>> sample_equal_messages(
    const std::map<PairKey, std::vector<Message>>& per_pair_messages,
    std::uint64_t seed, std::size_t cap = 0);

}  // namespace eventvq
