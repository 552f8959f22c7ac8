#include "eventvq/vq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "eventvq/kmeans.hpp"

namespace eventvq {

InterarrivalSeries interarrivals(const Event& event) {
    InterarrivalSeries s;
    s.event_id = event.event_id;
    s.deltas.reserve(event.messages.size());
    for (std::size_t i = 0; i < event.messages.size(); ++i) {
        if (i == 0) {
            s.deltas.push_back(0);  // t0 taken equal to t1
            continue;
        }
        std::int64_t d = event.messages[i].timestamp - event.messages[i - 1].timestamp;
        if (d < 0) throw std::invalid_argument("interarrivals: messages not sorted by timestamp");
        s.deltas.push_back(d);
    }
    return s;
}

Codebook learn_codebook(const std::vector<InterarrivalSeries>& series, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("learn_codebook: k must be >= 2");
    std::map<std::int64_t, double> counts;
    for (const auto& s : series)
        for (auto d : s.deltas) counts[d] += 1.0;
    if (counts.empty()) throw std::invalid_argument("learn_codebook: no interarrival data");
    if (counts.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("learn_codebook: k exceeds distinct delta count (" +
                                    std::to_string(counts.size()) + "); use a smaller k");

    std::vector<std::vector<double>> pts;
    std::vector<double> w;
    pts.reserve(counts.size());
    w.reserve(counts.size());
    for (const auto& [value, count] : counts) {
        pts.push_back({static_cast<double>(value)});
        w.push_back(count);
    }

    KMeansResult r = kmeans(pts, w, k, seed);
    Codebook cb;
    cb.k = k;
    cb.meta = {seed, r.iterations, r.inertia};
    cb.centroids.reserve(k);
    for (const auto& c : r.centroids) cb.centroids.push_back(c[0]);
    std::sort(cb.centroids.begin(), cb.centroids.end());
    for (std::size_t i = 1; i < cb.centroids.size(); ++i)
        if (cb.centroids[i] == cb.centroids[i - 1])
            throw std::runtime_error("learn_codebook: duplicate centroids; use a smaller k");
    return cb;
}

int nearest_codeword(double delta, const Codebook& codebook) {
    // centroids ascending: the first of the closest pair wins ties
    auto it = std::lower_bound(codebook.centroids.begin(), codebook.centroids.end(), delta);
    if (it == codebook.centroids.begin()) return 0;
    if (it == codebook.centroids.end()) return static_cast<int>(codebook.centroids.size()) - 1;
    std::size_t hi = static_cast<std::size_t>(it - codebook.centroids.begin());
    std::size_t lo = hi - 1;
    double d_lo = delta - codebook.centroids[lo];
    double d_hi = codebook.centroids[hi] - delta;
    return static_cast<int>(d_lo <= d_hi ? lo : hi);
}

EventVector quantize(const InterarrivalSeries& series, const Codebook& codebook) {
    if (series.deltas.empty()) throw std::invalid_argument("quantize: empty series");
    if (codebook.centroids.empty() || codebook.k != static_cast<int>(codebook.centroids.size()))
        throw std::invalid_argument("quantize: invalid codebook");
    EventVector v;
    v.event_id = series.event_id;
    v.weights.assign(codebook.centroids.size(), 0.0);
    for (auto d : series.deltas) ++v.weights[nearest_codeword(static_cast<double>(d), codebook)];
    double n = static_cast<double>(series.deltas.size());
    for (auto& w : v.weights) w /= n;
    return v;
}

std::vector<HistogramBin> histogram_export(const InterarrivalSeries& series,
                                           std::int64_t bin_width, std::int64_t cutoff) {
    if (bin_width < 1) throw std::invalid_argument("histogram_export: bin_width must be >= 1");
    std::map<std::int64_t, double> counts;
    for (auto d : series.deltas) counts[(d / bin_width) * bin_width] += 1.0;
    double n = static_cast<double>(series.deltas.size());
    std::vector<HistogramBin> out;
    for (const auto& [start, c] : counts) {
        if (cutoff >= 0 && start > cutoff) break;
        out.push_back({start, c / n});
    }
    return out;
}

std::string codebook_to_text(const Codebook& cb) {
    std::ostringstream out;
    out << cb.k << " " << cb.meta.seed << "\n";
    char buf[64];
    for (double c : cb.centroids) {
        std::snprintf(buf, sizeof(buf), "%.17g", c);
        out << buf << "\n";
    }
    return out.str();
}

Codebook codebook_from_text(const std::string& text) {
    std::istringstream in(text);
    Codebook cb;
    if (!(in >> cb.k >> cb.meta.seed)) throw std::runtime_error("codebook: bad header");
    if (cb.k < 2) throw std::runtime_error("codebook: k must be >= 2");
    cb.centroids.resize(cb.k);
    for (int i = 0; i < cb.k; ++i)
        if (!(in >> cb.centroids[i])) throw std::runtime_error("codebook: truncated centroid list");
    for (int i = 1; i < cb.k; ++i)
        if (!(cb.centroids[i] > cb.centroids[i - 1]))
            throw std::runtime_error("codebook: centroids must be strictly ascending");
    return cb;
}

}  // namespace eventvq
