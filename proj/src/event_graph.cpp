#include "eventvq/event_graph.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "eventvq/rng.hpp"
#include "eventvq/text.hpp"

namespace eventvq {

void KeywordGraph::add_edge(const KeywordPair& p) {
    nodes.insert(p.first);
    nodes.insert(p.second);
    edges.insert(p);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Component> components_of(const std::set<std::string>& nodes,
                                     const std::vector<KeywordPair>& edges) {
    std::vector<std::string> names(nodes.begin(), nodes.end());
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);

    UnionFind uf(names.size());
    for (const auto& e : edges) {
        auto a = index.find(e.first), b = index.find(e.second);
        if (a == index.end() || b == index.end())
            throw std::invalid_argument("edge endpoint not in node set: " + e.first + "-" + e.second);
        uf.unite(a->second, b->second);
    }

    std::map<int, Component> by_root;
    for (std::size_t i = 0; i < names.size(); ++i)
        by_root[uf.find(static_cast<int>(i))].keywords.insert(names[i]);
    for (const auto& e : edges)
        by_root[uf.find(index[e.first])].pairs.push_back(e);

    std::vector<Component> out;
    for (auto& [root, c] : by_root) {
        std::sort(c.pairs.begin(), c.pairs.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        return *a.keywords.begin() < *b.keywords.begin();
    });
    return out;
}

}  // namespace

std::vector<Component> connected_components(const KeywordGraph& graph) {
    std::vector<KeywordPair> edges(graph.edges.begin(), graph.edges.end());
    return components_of(graph.nodes, edges);
}

namespace {

// Component count after deleting `removed` from the component's graph,
// isolated leftovers counted as components of their own.
std::size_t count_after_removal(const Component& c, const std::string& removed) {
    std::set<std::string> nodes = c.keywords;
    nodes.erase(removed);
    std::vector<KeywordPair> edges;
    for (const auto& p : c.pairs)
        if (p.first != removed && p.second != removed) edges.push_back(p);
    return components_of(nodes, edges).size();
}

void split_recursive(const Component& c, const std::vector<ScoredWord>& ranked_words,
                     SplitResult& out) {
    if (c.keywords.size() < 2) return;  // below the event keyword minimum
    for (const auto& sw : ranked_words) {
        if (!c.keywords.count(sw.word)) continue;
        if (c.keywords.size() <= 2) break;  // removal cannot leave two fragments
        if (count_after_removal(c, sw.word) < 2) continue;

        out.removed_words.push_back(sw.word);
        std::set<std::string> nodes = c.keywords;
        nodes.erase(sw.word);
        std::vector<KeywordPair> edges;
        for (const auto& p : c.pairs)
            if (p.first != sw.word && p.second != sw.word) edges.push_back(p);
        for (const auto& frag : components_of(nodes, edges))
            split_recursive(frag, ranked_words, out);
        return;
    }
    out.fragments.push_back(c);
}

}  // namespace

SplitResult split_on_articulation(const Component& component,
                                  const std::vector<ScoredWord>& ranked_words) {
    SplitResult out;
    split_recursive(component, ranked_words, out);
    return out;
}

Component merge_messages(const Component& component,
                         const std::map<PairKey, std::vector<Message>>& per_pair_messages) {
    Component out = component;
    std::vector<Message> pooled;
    for (const auto& p : component.pairs) {
        auto it = per_pair_messages.find({p.first, p.second});
        if (it == per_pair_messages.end())
            throw std::runtime_error("merge_messages: no messages for pair (" + p.first + ", " +
                                     p.second + ")");
        pooled.insert(pooled.end(), it->second.begin(), it->second.end());
    }
    out.messages = clean_messages(std::move(pooled));
    return out;
}

ClusterMetric parse_metric(const std::string& name) {
    if (name == "I1") return ClusterMetric::I1;
    if (name == "I2") return ClusterMetric::I2;
    if (name == "E1") return ClusterMetric::E1;
    if (name == "G1") return ClusterMetric::G1;
    if (name == "G1p" || name == "G1'") return ClusterMetric::G1Prime;
    if (name == "H1") return ClusterMetric::H1;
    if (name == "H2") return ClusterMetric::H2;
    throw std::invalid_argument("unknown clustering metric: " + name);
}

std::string metric_name(ClusterMetric m) {
    switch (m) {
        case ClusterMetric::I1: return "I1";
        case ClusterMetric::I2: return "I2";
        case ClusterMetric::E1: return "E1";
        case ClusterMetric::G1: return "G1";
        case ClusterMetric::G1Prime: return "G1p";
        case ClusterMetric::H1: return "H1";
        case ClusterMetric::H2: return "H2";
    }
    return "?";
}

bool metric_higher_is_better(ClusterMetric m) {
    switch (m) {
        case ClusterMetric::I1:
        case ClusterMetric::I2:
        case ClusterMetric::H1:
        case ClusterMetric::H2:
            return true;
        default:
            return false;
    }
}

namespace {

struct TfDoc {
    std::unordered_map<std::string, double> tf;
    double norm = 0;
};

TfDoc make_tf(const std::string& text) {
    TfDoc d;
    for (auto& t : tokenize_words(text)) d.tf[t] += 1.0;
    double sq = 0;
    for (const auto& [t, c] : d.tf) sq += c * c;
    d.norm = std::sqrt(sq);
    return d;
}

double cosine(const TfDoc& a, const TfDoc& b) {
    if (a.norm == 0 || b.norm == 0) return 0;
    const TfDoc& small = a.tf.size() <= b.tf.size() ? a : b;
    const TfDoc& large = a.tf.size() <= b.tf.size() ? b : a;
    double dot = 0;
    for (const auto& [t, c] : small.tf) {
        auto it = large.tf.find(t);
        if (it != large.tf.end()) dot += c * it->second;
    }
    return dot / (a.norm * b.norm);
}

struct MetricSums {
    std::vector<std::size_t> sizes;   // n_i
    std::vector<double> within;      // sum over ordered pairs inside S_i
    std::vector<double> cross;       // sum over v in S_i, u in S
    double total = 0;                // sum over ordered pairs in S
};

MetricSums compute_sums(const std::vector<Component>& components, bool include_self_pairs) {
    std::vector<std::vector<TfDoc>> docs;
    for (const auto& c : components) {
        std::vector<TfDoc> cluster;
        for (const auto& m : c.messages) {
            TfDoc d = make_tf(m.text);
            if (!d.tf.empty()) cluster.push_back(std::move(d));
        }
        if (cluster.empty()) {
            std::cerr << "cluster_quality: component with no usable text excluded\n";
            continue;
        }
        docs.push_back(std::move(cluster));
    }
    if (docs.empty()) throw std::invalid_argument("cluster_quality: no components with text");

    // Flatten with cluster boundaries so cross sums can reuse one sim matrix.
    std::vector<const TfDoc*> all;
    std::vector<std::size_t> cluster_of;
    for (std::size_t i = 0; i < docs.size(); ++i)
        for (const auto& d : docs[i]) {
            all.push_back(&d);
            cluster_of.push_back(i);
        }

    const std::size_t n = all.size();
    MetricSums s;
    s.sizes.assign(docs.size(), 0);
    s.within.assign(docs.size(), 0.0);
    s.cross.assign(docs.size(), 0.0);
    for (std::size_t i = 0; i < docs.size(); ++i) s.sizes[i] = docs[i].size();

    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v) {
            if (u == v && !include_self_pairs) continue;
            double sim = cosine(*all[u], *all[v]);
            double both = u == v ? sim : 2 * sim;  // ordered pairs
            s.total += both;
            s.cross[cluster_of[u]] += sim;
            if (u != v) s.cross[cluster_of[v]] += sim;
            if (cluster_of[u] == cluster_of[v]) s.within[cluster_of[u]] += both;
        }
    }
    return s;
}

double metric_value(const MetricSums& s, ClusterMetric metric) {
    auto safe_div = [](double a, double b) { return b > 0 ? a / b : 0.0; };
    switch (metric) {
        case ClusterMetric::I1: {
            double v = 0;
            for (std::size_t i = 0; i < s.sizes.size(); ++i)
                v += s.within[i] / static_cast<double>(s.sizes[i]);
            return v;
        }
        case ClusterMetric::I2: {
            double v = 0;
            for (double w : s.within) v += std::sqrt(std::max(w, 0.0));
            return v;
        }
        case ClusterMetric::E1: {
            double v = 0;
            for (std::size_t i = 0; i < s.sizes.size(); ++i)
                v += static_cast<double>(s.sizes[i]) * safe_div(s.cross[i], std::sqrt(std::max(s.within[i], 0.0)));
            return v;
        }
        case ClusterMetric::G1: {
            double v = 0;
            for (double c : s.cross) v += safe_div(c, s.total);
            return v;
        }
        case ClusterMetric::G1Prime: {
            double v = 0;
            for (std::size_t i = 0; i < s.sizes.size(); ++i)
                v += static_cast<double>(s.sizes[i]) * static_cast<double>(s.sizes[i]) *
                     safe_div(s.cross[i], s.within[i]);
            return v;
        }
        case ClusterMetric::H1:
            return safe_div(metric_value(s, ClusterMetric::I1), metric_value(s, ClusterMetric::E1));
        case ClusterMetric::H2:
            return safe_div(metric_value(s, ClusterMetric::I2), metric_value(s, ClusterMetric::E1));
    }
    return 0;
}

}  // namespace

double cluster_quality(const std::vector<Component>& components, ClusterMetric metric,
                       bool include_self_pairs) {
    return metric_value(compute_sums(components, include_self_pairs), metric);
}

std::vector<Component> random_component_baseline(const std::vector<KeywordPair>& pairs,
                                                 const std::vector<int>& sizes,
                                                 std::uint64_t seed) {
    long total = 0;
    for (int s : sizes) {
        if (s <= 0) throw std::invalid_argument("random_component_baseline: sizes must be positive");
        total += s;
    }
    if (total != static_cast<long>(pairs.size()))
        throw std::invalid_argument("random_component_baseline: sizes must sum to the pair count");

    std::vector<KeywordPair> shuffled = pairs;
    Rng rng(seed);
    rng.shuffle(shuffled);

    std::vector<Component> out;
    std::size_t pos = 0;
    for (int s : sizes) {
        Component c;
        for (int i = 0; i < s; ++i) {
            const auto& p = shuffled[pos++];
            c.keywords.insert(p.first);
            c.keywords.insert(p.second);
            c.pairs.push_back(p);
        }
        std::sort(c.pairs.begin(), c.pairs.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::map<PairKey, std::vector<Message>> sample_equal_messages(
    const std::map<PairKey, std::vector<Message>>& per_pair_messages,
    std::uint64_t seed, std::size_t cap) {
    if (per_pair_messages.empty()) return {};
    std::size_t take = SIZE_MAX;
    for (const auto& [k, v] : per_pair_messages) take = std::min(take, v.size());
    if (cap > 0) take = std::min(take, cap);

    std::map<PairKey, std::vector<Message>> out;
    std::uint64_t stream = 0;
    for (const auto& [k, v] : per_pair_messages) {
        std::vector<std::size_t> idx(v.size());
        std::iota(idx.begin(), idx.end(), 0);
        Rng rng(derive_seed(seed, stream++));
        rng.shuffle(idx);
        idx.resize(take);
        std::sort(idx.begin(), idx.end());
        std::vector<Message> sample;
        sample.reserve(take);
        for (auto i : idx) sample.push_back(v[i]);
        out.emplace(k, std::move(sample));
    }
    return out;
}

}  // namespace eventvq
