#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace eventvq {

// Deterministic generator (splitmix64) used everywhere randomness matters.
// std::shuffle / std::*_distribution are implementation-defined, so seeded
// results would not be reproducible across standard libraries; this is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // [0, n), n > 0
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do { r = next_u64(); } while (r >= limit);
        return r % n;
    }

    double exponential(double mean) { return -mean * std::log(1.0 - uniform01()); }

    double normal(double mean, double sd) {
        // Box-Muller, one variate per call (cached pair dropped for simplicity)
        double u1 = uniform01(), u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Stable way to derive independent streams from one user-facing seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    return r.next_u64();
}

}  // namespace eventvq
