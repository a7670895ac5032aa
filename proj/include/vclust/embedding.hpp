#ifndef VCLUST_EMBEDDING_HPP
#define VCLUST_EMBEDDING_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vclust/matrix.hpp"

namespace vclust {

/// Two embedding rows closer than this (max-norm) count as the same point.
inline constexpr double kDistinctRowTol = 1e-6;

/// c x k matrix whose row i is the clustering point for variable i.
struct Embedding {
    Matrix points;
    std::string source;  // "pc-table", "laplacian", "normalized-laplacian"
    bool row_normalized = false;
    std::vector<std::size_t> zero_rows;  // rows left unnormalized (zero norm)
};

/// Copy with every nonzero row scaled to unit Euclidean length; zero rows are
/// kept as zero vectors and listed in zero_rows.
Embedding normalize_rows(const Embedding& e);

/// Number of pairwise-distinct rows under kDistinctRowTol.
std::size_t distinct_row_count(const Matrix& points, double tol = kDistinctRowTol);

/// True when the selected rows are pairwise distinct under tol.
bool rows_pairwise_distinct(const Matrix& points, std::span<const std::size_t> indices,
                            double tol = kDistinctRowTol);

}  // namespace vclust

#endif
