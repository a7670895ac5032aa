#ifndef VCLUST_EVALUATION_HPP
#define VCLUST_EVALUATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "vclust/partition.hpp"

namespace vclust {

/// m of n variables classified consistently with a reference partition under
/// the best cluster-label matching.
struct EfficiencyScore {
    std::size_t matched = 0;  // m
    std::size_t total = 0;    // n

    double percent() const { return 100.0 * static_cast<double>(matched) / static_cast<double>(total); }
    std::string ratio() const;  // "m/n"

    friend bool operator==(const EfficiencyScore&, const EfficiencyScore&) = default;
};

/// Maximum agreement over all injective cluster-label matchings, solved as a
/// maximum-weight assignment on the contingency table.  Symmetric in its
/// arguments and invariant under relabeling of either partition.
EfficiencyScore match_partitions(const Partition& candidate, const Partition& reference);

struct EfficiencyStatistics {
    double average_percent = 0.0;
    EfficiencyScore median;   // lower of the two middles for even counts
    EfficiencyScore mode;     // most frequent m, smallest m on ties
    EfficiencyScore minimum;
    EfficiencyScore maximum;
};

EfficiencyStatistics summarize(const std::vector<EfficiencyScore>& scores);

/// exact_levels buckets scores as n/n, (n-1)/n, (n-2)/n and a <=(n-3)/n floor;
/// percent_bands uses (90,100], (80,90], (70,80] and a <=70% floor.
enum class BucketScheme { exact_levels, percent_bands };

struct Bucket {
    std::string label;
    std::size_t count = 0;
    double percent_of_scores = 0.0;
};

std::vector<Bucket> bucket_distribution(const std::vector<EfficiencyScore>& scores,
                                        BucketScheme scheme);

/// Everything reported about one clustering procedure.
struct EfficiencyReport {
    std::string variant_code;
    std::vector<EfficiencyScore> scores;  // one per initial set, in set order
    EfficiencyStatistics statistics;
    std::vector<Bucket> distribution;
};

EfficiencyReport make_report(std::string variant_code, std::vector<EfficiencyScore> scores,
                             BucketScheme scheme);

}  // namespace vclust

#endif
