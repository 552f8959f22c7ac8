#include "eventvq/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "eventvq/rng.hpp"

namespace eventvq {
namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// Index sampled proportionally to prob[i]; prob need not be normalized.
std::size_t sample_proportional(Rng& rng, const std::vector<double>& prob) {
    double total = 0;
    for (double p : prob) total += p;
    if (total <= 0) {
        // all-zero mass: fall back to uniform over entries
        return static_cast<std::size_t>(rng.uniform_int(prob.size()));
    }
    double x = rng.uniform01() * total;
    double acc = 0;
    for (std::size_t i = 0; i < prob.size(); ++i) {
        acc += prob[i];
        if (x < acc) return i;
    }
    return prob.size() - 1;
}

struct Run {
    std::vector<std::vector<double>> centroids;
    std::vector<int> assignment;
    double inertia = 0;
    int iterations = 0;
};

Run lloyd_once(const std::vector<std::vector<double>>& pts, const std::vector<double>& w,
               int k, Rng& rng, int max_iterations) {
    const std::size_t n = pts.size();

    // k-means++: first center by weight, remaining by weight * D^2.
    std::vector<std::vector<double>> centers;
    centers.reserve(k);
    centers.push_back(pts[sample_proportional(rng, w)]);
    std::vector<double> d2(n);
    while (static_cast<int>(centers.size()) < k) {
        std::vector<double> mass(n);
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::max();
            for (const auto& c : centers) best = std::min(best, sq_dist(pts[i], c));
            d2[i] = best;
            mass[i] = w[i] * best;
        }
        centers.push_back(pts[sample_proportional(rng, mass)]);
    }

    std::vector<int> assign(n, -1);
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(pts[i], centers[0]);
            for (int c = 1; c < k; ++c) {
                double d = sq_dist(pts[i], centers[c]);
                if (d < best_d) {  // ties keep the lower index
                    best_d = d;
                    best = c;
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        if (!changed) break;

        const std::size_t dim = pts[0].size();
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        std::vector<double> mass(k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            mass[assign[i]] += w[i];
            for (std::size_t d = 0; d < dim; ++d) sums[assign[i]][d] += w[i] * pts[i][d];
        }
        for (int c = 0; c < k; ++c) {
            if (mass[c] > 0) {
                for (std::size_t d = 0; d < dim; ++d) centers[c][d] = sums[c][d] / mass[c];
            } else {
                // empty cluster: reseed at the point contributing most inertia
                std::size_t worst = 0;
                double worst_v = -1;
                for (std::size_t i = 0; i < n; ++i) {
                    double v = w[i] * sq_dist(pts[i], centers[assign[i]]);
                    if (v > worst_v) {
                        worst_v = v;
                        worst = i;
                    }
                }
                centers[c] = pts[worst];
            }
        }
    }

    Run r;
    r.centroids = std::move(centers);
    r.assignment = std::move(assign);
    r.iterations = iter;
    // assignment refreshed against the final centers (max_iterations exit may
    // leave it one update behind)
    for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        double best_d = sq_dist(pts[i], r.centroids[0]);
        for (int c = 1; c < k; ++c) {
            double d = sq_dist(pts[i], r.centroids[c]);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        r.assignment[i] = best;
        r.inertia += w[i] * best_d;
    }
    return r;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& points,
                    const std::vector<double>& weights, int k, std::uint64_t seed,
                    int max_iterations, int restarts) {
    if (points.empty()) throw std::invalid_argument("kmeans: no points");
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (weights.size() != points.size())
        throw std::invalid_argument("kmeans: weights size mismatch");
    std::set<std::vector<double>> distinct(points.begin(), points.end());
    if (distinct.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("kmeans: k exceeds the number of distinct points; use a smaller k");

    Run best;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        Run run = lloyd_once(points, weights, k, rng, max_iterations);
        if (!have || run.inertia < best.inertia) {
            best = std::move(run);
            have = true;
        }
    }

    KMeansResult out;
    out.centroids = std::move(best.centroids);
    out.assignment = std::move(best.assignment);
    out.inertia = best.inertia;
    out.iterations = best.iterations;
    return out;
}

}  // namespace eventvq
