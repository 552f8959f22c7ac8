#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eventvq/vq.hpp"

namespace eventvq {

// One activity group; rank 0 is the highest-activity tier.
struct ActivityTier {
    int rank = 0;
    std::string label;
    std::set<std::string> member_ids;
    std::vector<double> mean_vector;
};

// "high" / "medium-high" / "medium-low" / "low"; for n_tiers != 4 the first
// rank is high, the last low, rank 1 medium-high and the rest medium-low.
std::string tier_label(int rank, int n_tiers);

// k-means over the event vectors; clusters ranked by descending mean weight
// at coordinate 0 (the smallest codeword). Identical vectors fewer than
// n_tiers make the clustering degenerate and raise an error.
std::vector<ActivityTier> cluster_events(const std::vector<EventVector>& vectors,
                                         int n_tiers, std::uint64_t seed);

struct TierSummary {
    std::vector<double> mean;
    std::vector<double> stddev;  // population
};

TierSummary tier_summary(const ActivityTier& tier, const std::vector<EventVector>& vectors);

// Average empirical CDF across the tier's member events at integer seconds,
// plus the log(1 - CDF) table with CDF == 1 rows omitted.
struct CdfTables {
    std::vector<std::int64_t> seconds;
    std::vector<double> cdf;
    std::vector<std::int64_t> seconds_log;
    std::vector<double> log1mcdf;
};

CdfTables cdf_export(const ActivityTier& tier,
                     const std::map<std::string, InterarrivalSeries>& series_by_id);

}  // namespace eventvq
