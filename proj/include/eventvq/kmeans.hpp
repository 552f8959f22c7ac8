#pragma once

#include <cstdint>
#include <vector>

namespace eventvq {

struct KMeansResult {
    std::vector<std::vector<double>> centroids;  // k rows
    std::vector<int> assignment;                 // per point
    double inertia = 0;                          // weighted sum of squared distances
    int iterations = 0;                          // of the winning restart
};

// Lloyd's with k-means++ seeding, weighted points, deterministic for a fixed
// seed. Multi-restart keeps the lowest inertia. Points may carry weights so
// duplicated values can be collapsed by callers. Requires k distinct points.
KMeansResult kmeans(const std::vector<std::vector<double>>& points,
                    const std::vector<double>& weights, int k, std::uint64_t seed,
                    int max_iterations = 300, int restarts = 10);

}  // namespace eventvq
