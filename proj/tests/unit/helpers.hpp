#ifndef VCLUST_TEST_HELPERS_HPP
#define VCLUST_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "vclust/matrix.hpp"
#include "vclust/partition.hpp"
#include "vclust/relation.hpp"

namespace helpers {

inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

/// Max absolute elementwise deviation between two spectra after sorting both
/// non-ascending.
inline double spectrum_deviation(const std::vector<double>& a, const std::vector<double>& b) {
    const auto x = sorted_desc(a);
    const auto y = sorted_desc(b);
    REQUIRE(x.size() == y.size());
    double dev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, std::abs(x[i] - y[i]));
    return dev;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

inline vclust::SymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t order,
                                                double lo = -1.0, double hi = 1.0) {
    vclust::SymmetricMatrix s(order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i; j < order; ++j) s.set(i, j, uniform(rng, lo, hi));
    }
    return s;
}

/// Similarity-role matrix: entries in [0,1], unit diagonal.
inline vclust::SymmetricMatrix random_similarity(std::mt19937_64& rng, std::size_t order) {
    vclust::SymmetricMatrix s(order);
    for (std::size_t i = 0; i < order; ++i) {
        s.set(i, i, 1.0);
        for (std::size_t j = i + 1; j < order; ++j) s.set(i, j, uniform(rng, 0.0, 1.0));
    }
    return s;
}

/// PSD matrix with unit diagonal, built as a normalized Gram matrix B B^T.
inline vclust::SymmetricMatrix random_correlation(std::mt19937_64& rng, std::size_t order) {
    std::vector<std::vector<double>> b(order, std::vector<double>(order + 2));
    for (auto& row : b) {
        for (double& v : row) v = uniform(rng, -1.0, 1.0);
    }
    vclust::SymmetricMatrix corr(order);
    std::vector<double> norm(order, 0.0);
    for (std::size_t i = 0; i < order; ++i) {
        double sq = 0.0;
        for (double v : b[i]) sq += v * v;
        norm[i] = std::sqrt(sq);
    }
    for (std::size_t i = 0; i < order; ++i) {
        corr.set(i, i, 1.0);
        for (std::size_t j = i + 1; j < order; ++j) {
            double dot = 0.0;
            for (std::size_t t = 0; t < b[i].size(); ++t) dot += b[i][t] * b[j][t];
            corr.set(i, j, std::clamp(dot / (norm[i] * norm[j]), -1.0, 1.0));
        }
    }
    return corr;
}

inline vclust::RelationMatrix random_relation(std::mt19937_64& rng, std::size_t order,
                                              double edge_probability) {
    vclust::RelationMatrix r(order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
            if (uniform(rng, 0.0, 1.0) < edge_probability) r.relate(i, j);
        }
    }
    return r;
}

/// Random partition with every cluster id 0..k-1 occupied.
inline vclust::Partition random_partition(std::mt19937_64& rng, std::size_t order,
                                          std::size_t k) {
    std::vector<std::size_t> labels(order);
    for (std::size_t i = 0; i < k; ++i) labels[i] = i;  // occupancy
    for (std::size_t i = k; i < order; ++i) labels[i] = uniform_index(rng, k);
    std::shuffle(labels.begin(), labels.end(), rng);
    return vclust::Partition::from_labels(std::move(labels));
}

/// Exhaustive maximum agreement over all injective label matchings; the
/// independent oracle for match_partitions.
inline std::size_t brute_force_match(const vclust::Partition& a, const vclust::Partition& b) {
    const std::size_t k = std::max(a.cluster_count, b.cluster_count);
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::size_t best = 0;
    do {
        std::size_t agree = 0;
        for (std::size_t i = 0; i < a.labels.size(); ++i) {
            if (perm[a.labels[i]] == b.labels[i]) ++agree;
        }
        best = std::max(best, agree);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace helpers

#endif
