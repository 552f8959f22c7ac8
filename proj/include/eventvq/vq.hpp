#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eventvq/corpus.hpp"

namespace eventvq {

// Seconds between consecutive messages of one event; the first delta is 0 by
// the t0 = t1 initialization, so length equals the message count.
struct InterarrivalSeries {
    std::string event_id;
    std::vector<std::int64_t> deltas;
};

struct TrainingMeta {
    std::uint64_t seed = 0;
    int iterations = 0;
    double inertia = 0;
};

// The learned representative interarrival times, ascending.
struct Codebook {
    std::vector<double> centroids;
    int k = 0;
    TrainingMeta meta;
};

// Relative frequency of each codeword among an event's interarrival times.
struct EventVector {
    std::string event_id;
    std::vector<double> weights;
};

InterarrivalSeries interarrivals(const Event& event);

// 1-D k-means (k-means++ seeding, 10 restarts, best inertia) over the pooled
// deltas of all series. Duplicate values are collapsed to weighted points, so
// training scales with the number of distinct deltas.
Codebook learn_codebook(const std::vector<InterarrivalSeries>& series, int k, std::uint64_t seed);

// Nearest centroid per delta, ties to the smaller centroid; weights sum to 1.
EventVector quantize(const InterarrivalSeries& series, const Codebook& codebook);

int nearest_codeword(double delta, const Codebook& codebook);

struct HistogramBin {
    std::int64_t start = 0;
    double rel_freq = 0;
};

// Relative-frequency histogram of the deltas. The cutoff drops display bins
// past it; frequencies stay normalized by the full series length.
std::vector<HistogramBin> histogram_export(const InterarrivalSeries& series,
                                           std::int64_t bin_width, std::int64_t cutoff);

std::string codebook_to_text(const Codebook& cb);
Codebook codebook_from_text(const std::string& text);

}  // namespace eventvq
