#include "vclust/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vclust {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

SymmetricMatrix::SymmetricMatrix(std::size_t order) : full_(order, order, 0.0) {
    if (order < 1) {
        throw std::invalid_argument("SymmetricMatrix: order must be >= 1");
    }
}

SymmetricMatrix SymmetricMatrix::from_full(const Matrix& full, double sym_tol) {
    if (full.rows() != full.cols()) {
        throw std::invalid_argument("SymmetricMatrix: matrix is not square");
    }
    if (!full.all_finite()) {
        throw std::invalid_argument("SymmetricMatrix: non-finite entry");
    }
    SymmetricMatrix s(full.rows());
    for (std::size_t i = 0; i < full.rows(); ++i) {
        for (std::size_t j = i; j < full.cols(); ++j) {
            if (std::abs(full(i, j) - full(j, i)) > sym_tol) {
                std::ostringstream msg;
                msg << "SymmetricMatrix: asymmetric at (" << i << "," << j << "): " << full(i, j)
                    << " vs " << full(j, i);
                throw std::invalid_argument(msg.str());
            }
            s.set(i, j, full(i, j));
        }
    }
    return s;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("SymmetricMatrix: non-finite entry");
    }
    full_(i, j) = value;
    full_(j, i) = value;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order(); ++i) t += full_(i, i);
    return t;
}

namespace {

double off_diagonal_frobenius(const Matrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) sum += m(i, j) * m(i, j);
        }
    }
    return std::sqrt(sum);
}

double frobenius(const Matrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * m(i, j);
    }
    return std::sqrt(sum);
}

void rotate(Matrix& a, std::size_t i, std::size_t j, std::size_t k, std::size_t l, double s,
            double tau) {
    const double g = a(i, j);
    const double h = a(k, l);
    a(i, j) = g - s * (h + g * tau);
    a(k, l) = h + s * (g - h * tau);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymmetricMatrix& input, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("jacobi_eigen: tol must be > 0");
    }
    const std::size_t n = input.order();
    Matrix a = input.full();
    Matrix v(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    const double target = tol * std::max(1.0, frobenius(a));
    constexpr int kMaxSweeps = 100;
    bool converged = false;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = off_diagonal_frobenius(a);
        if (off <= target) {
            converged = true;
            break;
        }
        // Threshold pivoting: early sweeps skip entries that are small
        // against the current off-diagonal mass.
        const double thresh = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double g = 100.0 * std::abs(apq);
                if (sweep > 4 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + g == std::abs(a(q, q))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= thresh || apq == 0.0) continue;

                const double h = a(q, q) - a(p, p);
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double delta = t * apq;
                a(p, p) -= delta;
                a(q, q) += delta;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < p; ++r) rotate(a, r, p, r, q, s, tau);
                for (std::size_t r = p + 1; r < q; ++r) rotate(a, p, r, r, q, s, tau);
                for (std::size_t r = q + 1; r < n; ++r) rotate(a, p, r, q, r, s, tau);
                for (std::size_t r = 0; r < n; ++r) rotate(v, r, p, r, q, s, tau);
                for (std::size_t r = 0; r < p; ++r) a(p, r) = a(r, p);
                for (std::size_t r = 0; r < q; ++r) a(q, r) = a(r, q);
                for (std::size_t r = p; r < n; ++r) a(r, p) = a(p, r);
                for (std::size_t r = q; r < n; ++r) a(r, q) = a(q, r);
            }
        }
    }
    if (!converged && off_diagonal_frobenius(a) > target) {
        std::ostringstream msg;
        msg << "jacobi_eigen: no convergence after " << kMaxSweeps
            << " sweeps; off-diagonal residual " << off_diagonal_frobenius(a) << " exceeds "
            << target;
        throw std::runtime_error(msg.str());
    }

    // Sort non-ascending, keeping pre-sort column order inside groups of
    // numerically equal eigenvalues.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    std::size_t group_start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const bool boundary =
            i == n || std::abs(a(order[i], order[i]) - a(order[i - 1], order[i - 1])) >
                          1e-9 * std::max(1.0, std::abs(a(order[i - 1], order[i - 1])));
        if (boundary) {
            std::sort(order.begin() + group_start, order.begin() + i);
            group_start = i;
        }
    }

    EigenDecomposition result;
    result.eigenvalues.resize(n);
    result.eigenvectors = Matrix(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        result.eigenvalues[j] = a(src, src);
        // Sign convention: largest-magnitude entry positive, lowest index on ties.
        std::size_t lead = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(v(i, src)) > std::abs(v(lead, src))) lead = i;
        }
        const double sign = v(lead, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, j) = sign * v(i, src);
    }
    return result;
}

std::size_t count_zero_eigenvalues(const EigenDecomposition& d, double zero_tol) {
    if (!(zero_tol > 0.0)) {
        throw std::invalid_argument("count_zero_eigenvalues: zero_tol must be > 0");
    }
    return static_cast<std::size_t>(std::count_if(
        d.eigenvalues.begin(), d.eigenvalues.end(),
        [zero_tol](double l) { return std::abs(l) <= zero_tol; }));
}

std::size_t count_zero_eigenvalues(const EigenDecomposition& d) {
    double max_mag = 0.0;
    for (double l : d.eigenvalues) max_mag = std::max(max_mag, std::abs(l));
    return count_zero_eigenvalues(d, 1e-8 * std::max(1.0, max_mag));
}

}  // namespace vclust
