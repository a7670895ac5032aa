#ifndef VCLUST_SPECTRAL_HPP
#define VCLUST_SPECTRAL_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "vclust/embedding.hpp"
#include "vclust/matrix.hpp"

namespace vclust {

/// Node degrees D(i,i) = sum_j s(i,j), diagonal term included.
/// Entries must be non-negative.
std::vector<double> degrees(const SymmetricMatrix& s);

/// L = D - S.  Rows sum to zero; positive semidefinite.
SymmetricMatrix laplacian(const SymmetricMatrix& s);

/// L_n = I - D^{-1/2} S D^{-1/2}.  A zero degree is an error naming the node.
SymmetricMatrix normalized_laplacian(const SymmetricMatrix& s);

/// Columns are the eigenvectors of the k smallest eigenvalues of a
/// Laplacian-role matrix, in ascending eigenvalue order, sign-normalized per
/// jacobi_eigen.  With normalize_rows, each row is scaled to unit length;
/// zero rows stay zero and are listed in the embedding's zero_rows.
Embedding spectral_embedding(const SymmetricMatrix& laplacian_role, std::size_t k,
                             bool normalize_rows, std::string_view source = "laplacian");

}  // namespace vclust

#endif
