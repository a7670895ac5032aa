#ifndef VCLUST_SIMILARITY_HPP
#define VCLUST_SIMILARITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "vclust/embedding.hpp"
#include "vclust/matrix.hpp"

namespace vclust {

/// n observations of c named variables, n >= 3, c >= 2, all entries finite.
struct ObservationTable {
    std::vector<std::string> names;  // size c
    Matrix values;                   // n x c

    std::size_t variable_count() const { return values.cols(); }
    std::size_t observation_count() const { return values.rows(); }
    void validate() const;
};

/// Pearson correlation matrix; diagonal exactly 1, entries clamped to [-1,1].
/// A zero-variance column is an error naming the column.
SymmetricMatrix correlation_matrix(const ObservationTable& data);

/// Element-wise square of a correlation matrix; entries land in [0,1] and the
/// diagonal stays exactly 1.
SymmetricMatrix determination_matrix(const SymmetricMatrix& corr);

/// Determination coefficients between principal components (rows) and primary
/// variables (columns), plus the eigenvalue ladder.  Column j of det sums to 1
/// (the total variance of a standardized variable); row j sums to eigenvalue j.
struct PcSimilarityTable {
    Matrix det;                              // c x c, det(j,i) = l_j * v(i,j)^2
    std::vector<double> eigenvalues;         // non-ascending
    std::vector<double> cumulative_variance; // running percentage of trace
};

/// Eigendecomposes a correlation matrix.  Eigenvalues below -psd_tol are an
/// error; small negatives are clamped to zero before the squaring step.  The
/// default tolerance is loose enough for correlation matrices reconstructed
/// from rounded text.
PcSimilarityTable pc_similarity(const SymmetricMatrix& corr, double psd_tol = 1e-2);

/// Embedding whose c rows are the transposes of the first k rows of det:
/// one point per primary variable.
Embedding pc_cluster_points(const PcSimilarityTable& table, std::size_t k);

}  // namespace vclust

#endif
