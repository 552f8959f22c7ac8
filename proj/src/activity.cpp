#include "eventvq/activity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "eventvq/kmeans.hpp"

namespace eventvq {

std::string tier_label(int rank, int n_tiers) {
    if (rank == 0) return "high";
    if (rank == n_tiers - 1) return "low";
    if (rank == 1) return "medium-high";
    return "medium-low";
}

std::vector<ActivityTier> cluster_events(const std::vector<EventVector>& vectors,
                                         int n_tiers, std::uint64_t seed) {
    if (n_tiers < 2) throw std::invalid_argument("cluster_events: n_tiers must be >= 2");
    if (vectors.size() < static_cast<std::size_t>(n_tiers))
        throw std::invalid_argument("cluster_events: need at least n_tiers events");
    const std::size_t dim = vectors.front().weights.size();
    std::vector<std::vector<double>> pts;
    pts.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.weights.size() != dim)
            throw std::invalid_argument("cluster_events: inconsistent vector dimensions");
        pts.push_back(v.weights);
    }
    std::set<std::vector<double>> distinct(pts.begin(), pts.end());
    if (distinct.size() < static_cast<std::size_t>(n_tiers))
        throw std::invalid_argument(
            "cluster_events: only " + std::to_string(distinct.size()) +
            " distinct event vectors; fewer effective clusters than n_tiers");

    KMeansResult r = kmeans(pts, std::vector<double>(pts.size(), 1.0), n_tiers, seed);

    std::vector<ActivityTier> tiers(n_tiers);
    std::vector<std::size_t> counts(n_tiers, 0);
    for (int c = 0; c < n_tiers; ++c) tiers[c].mean_vector.assign(dim, 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        int c = r.assignment[i];
        tiers[c].member_ids.insert(vectors[i].event_id);
        ++counts[c];
        for (std::size_t d = 0; d < dim; ++d) tiers[c].mean_vector[d] += pts[i][d];
    }
    for (int c = 0; c < n_tiers; ++c) {
        if (counts[c] == 0)
            throw std::runtime_error("cluster_events: empty cluster; clustering degenerate");
        for (auto& x : tiers[c].mean_vector) x /= static_cast<double>(counts[c]);
    }

    // Highest activity first: descending mean weight at the smallest codeword.
    std::sort(tiers.begin(), tiers.end(), [](const ActivityTier& a, const ActivityTier& b) {
        if (a.mean_vector[0] != b.mean_vector[0]) return a.mean_vector[0] > b.mean_vector[0];
        if (a.member_ids.size() != b.member_ids.size()) return a.member_ids.size() > b.member_ids.size();
        return *a.member_ids.begin() < *b.member_ids.begin();
    });
    for (int rank = 0; rank < n_tiers; ++rank) {
        tiers[rank].rank = rank;
        tiers[rank].label = tier_label(rank, n_tiers);
    }
    return tiers;
}

TierSummary tier_summary(const ActivityTier& tier, const std::vector<EventVector>& vectors) {
    if (tier.member_ids.empty()) throw std::invalid_argument("tier_summary: empty tier");
    std::vector<const EventVector*> members;
    for (const auto& v : vectors)
        if (tier.member_ids.count(v.event_id)) members.push_back(&v);
    if (members.empty()) throw std::invalid_argument("tier_summary: no member vectors supplied");

    const std::size_t dim = members.front()->weights.size();
    const double n = static_cast<double>(members.size());
    TierSummary s;
    s.mean.assign(dim, 0.0);
    s.stddev.assign(dim, 0.0);
    for (const auto* m : members)
        for (std::size_t d = 0; d < dim; ++d) s.mean[d] += m->weights[d];
    for (auto& x : s.mean) x /= n;
    for (const auto* m : members)
        for (std::size_t d = 0; d < dim; ++d) {
            double diff = m->weights[d] - s.mean[d];
            s.stddev[d] += diff * diff;
        }
    for (auto& x : s.stddev) x = std::sqrt(x / n);
    return s;
}

CdfTables cdf_export(const ActivityTier& tier,
                     const std::map<std::string, InterarrivalSeries>& series_by_id) {
    std::vector<const InterarrivalSeries*> members;
    std::int64_t max_delta = 0;
    for (const auto& id : tier.member_ids) {
        auto it = series_by_id.find(id);
        if (it == series_by_id.end())
            throw std::invalid_argument("cdf_export: no interarrival series for event " + id);
        if (it->second.deltas.empty())
            throw std::invalid_argument("cdf_export: empty series for event " + id);
        members.push_back(&it->second);
        max_delta = std::max(max_delta, *std::max_element(it->second.deltas.begin(),
                                                          it->second.deltas.end()));
    }
    if (members.empty()) throw std::invalid_argument("cdf_export: empty tier");

    // Per-event empirical CDFs via sorted deltas, averaged pointwise.
    std::vector<std::vector<std::int64_t>> sorted;
    sorted.reserve(members.size());
    for (const auto* m : members) {
        auto d = m->deltas;
        std::sort(d.begin(), d.end());
        sorted.push_back(std::move(d));
    }

    CdfTables out;
    for (std::int64_t t = 0; t <= max_delta; ++t) {
        double acc = 0;
        for (const auto& d : sorted) {
            auto le = std::upper_bound(d.begin(), d.end(), t) - d.begin();
            acc += static_cast<double>(le) / static_cast<double>(d.size());
        }
        double cdf = acc / static_cast<double>(sorted.size());
        out.seconds.push_back(t);
        out.cdf.push_back(cdf);
        if (cdf < 1.0) {
            out.seconds_log.push_back(t);
            out.log1mcdf.push_back(std::log(1.0 - cdf));
        }
    }
    return out;
}

}  // namespace eventvq
