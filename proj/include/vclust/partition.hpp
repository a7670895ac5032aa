#ifndef VCLUST_PARTITION_HPP
#define VCLUST_PARTITION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace vclust {

/// Assignment of variable indices to cluster labels 0..k-1.  Every label is
/// in range and every cluster id occurs at least once.
struct Partition {
    std::vector<std::size_t> labels;
    std::size_t cluster_count = 0;
    std::string provenance;
    std::size_t iterations = 0;  // filled by kmeans
    bool converged = true;       // filled by kmeans

    /// Builds a partition from raw labels; cluster_count = max label + 1.
    /// Throws if some id in 0..k-1 never occurs.
    static Partition from_labels(std::vector<std::size_t> labels, std::string provenance = "");

    /// Relabels so cluster ids follow the ascending order of each cluster's
    /// smallest member index.
    Partition canonical() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.labels == b.labels;
    }
};

}  // namespace vclust

#endif
