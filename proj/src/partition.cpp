#include "vclust/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace vclust {

Partition Partition::from_labels(std::vector<std::size_t> labels, std::string provenance) {
    if (labels.empty()) {
        throw std::invalid_argument("Partition: empty label vector");
    }
    const std::size_t k = 1 + *std::max_element(labels.begin(), labels.end());
    std::vector<bool> seen(k, false);
    for (std::size_t l : labels) seen[l] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("Partition: some cluster id in 0..k-1 never occurs");
    }
    Partition p;
    p.labels = std::move(labels);
    p.cluster_count = k;
    p.provenance = std::move(provenance);
    return p;
}

Partition Partition::canonical() const {
    std::vector<std::size_t> remap(cluster_count, cluster_count);
    std::size_t next = 0;
    Partition out = *this;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (remap[labels[i]] == cluster_count) remap[labels[i]] = next++;
        out.labels[i] = remap[labels[i]];
    }
    return out;
}

}  // namespace vclust
