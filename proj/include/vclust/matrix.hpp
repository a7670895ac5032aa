#ifndef VCLUST_MATRIX_HPP
#define VCLUST_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace vclust {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    bool all_finite() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Square symmetric matrix; entry(i,j) == entry(j,i) holds exactly because
/// set() writes both triangles and from_full() mirrors the upper triangle
/// after validating |a(i,j) - a(j,i)| against a tolerance.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t order);

    /// Validates squareness, finiteness and symmetry (within sym_tol), then
    /// copies the upper triangle over the lower one.
    static SymmetricMatrix from_full(const Matrix& full, double sym_tol = 1e-9);

    std::size_t order() const { return full_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return full_(i, j); }
    void set(std::size_t i, std::size_t j, double value);

    double trace() const;
    const Matrix& full() const { return full_; }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    Matrix full_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted non-ascending
    Matrix eigenvectors;              // column j pairs with eigenvalues[j]
};

/// Full eigendecomposition of a symmetric matrix by cyclic-by-row Jacobi
/// rotations with threshold pivoting.  Converged when the off-diagonal
/// Frobenius norm drops below tol * max(1, ||a||_F); throws after 100
/// sweeps without convergence.
///
/// Eigenvalues come back sorted non-ascending.  Within a group of numerically
/// equal eigenvalues (|l_i - l_j| <= 1e-9 * max(1, |l_i|)) the pre-sort column
/// order is preserved.  Each eigenvector is sign-normalized so that its
/// largest-magnitude entry (lowest index on ties) is positive.
EigenDecomposition jacobi_eigen(const SymmetricMatrix& a, double tol = 1e-12);

/// Number of eigenvalues with |l| <= zero_tol.
std::size_t count_zero_eigenvalues(const EigenDecomposition& d, double zero_tol);

/// Same with the default tolerance 1e-8 * max(1, max |eigenvalue|).
std::size_t count_zero_eigenvalues(const EigenDecomposition& d);

}  // namespace vclust

#endif
