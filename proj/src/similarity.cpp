#include "vclust/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vclust/matrix.hpp"

namespace vclust {

void ObservationTable::validate() const {
    if (values.rows() < 3) {
        throw std::invalid_argument("ObservationTable: need at least 3 observations");
    }
    if (values.cols() < 2) {
        throw std::invalid_argument("ObservationTable: need at least 2 variables");
    }
    if (!names.empty() && names.size() != values.cols()) {
        throw std::invalid_argument("ObservationTable: name count does not match column count");
    }
    if (!values.all_finite()) {
        throw std::invalid_argument("ObservationTable: non-finite entry");
    }
}

SymmetricMatrix correlation_matrix(const ObservationTable& data) {
    data.validate();
    const std::size_t n = data.values.rows();
    const std::size_t c = data.values.cols();

    std::vector<double> mean(c, 0.0);
    for (std::size_t j = 0; j < c; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += data.values(i, j);
        mean[j] = sum / static_cast<double>(n);
    }
    std::vector<double> sq(c, 0.0);  // centered sum of squares
    for (std::size_t j = 0; j < c; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = data.values(i, j) - mean[j];
            sum += d * d;
        }
        sq[j] = sum;
        if (sum == 0.0) {
            std::ostringstream msg;
            msg << "correlation_matrix: column "
                << (j < data.names.size() ? data.names[j] : "V" + std::to_string(j + 1))
                << " has zero variance";
            throw std::invalid_argument(msg.str());
        }
    }

    SymmetricMatrix corr(c);
    for (std::size_t i = 0; i < c; ++i) corr.set(i, i, 1.0);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            double cross = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                cross += (data.values(t, i) - mean[i]) * (data.values(t, j) - mean[j]);
            }
            // Sample vs population normalization cancels in the ratio.
            const double r = cross / std::sqrt(sq[i] * sq[j]);
            corr.set(i, j, std::clamp(r, -1.0, 1.0));
        }
    }
    return corr;
}

namespace {

void require_correlation_role(const SymmetricMatrix& corr) {
    constexpr double slack = 1e-9;
    for (std::size_t i = 0; i < corr.order(); ++i) {
        if (std::abs(corr(i, i) - 1.0) > slack) {
            throw std::invalid_argument("expected unit diagonal in a correlation matrix");
        }
        for (std::size_t j = i + 1; j < corr.order(); ++j) {
            if (corr(i, j) < -1.0 - slack || corr(i, j) > 1.0 + slack) {
                throw std::invalid_argument("correlation entry outside [-1,1]");
            }
        }
    }
}

}  // namespace

SymmetricMatrix determination_matrix(const SymmetricMatrix& corr) {
    require_correlation_role(corr);
    SymmetricMatrix det(corr.order());
    for (std::size_t i = 0; i < corr.order(); ++i) {
        det.set(i, i, 1.0);
        for (std::size_t j = i + 1; j < corr.order(); ++j) {
            det.set(i, j, std::clamp(corr(i, j) * corr(i, j), 0.0, 1.0));
        }
    }
    return det;
}

PcSimilarityTable pc_similarity(const SymmetricMatrix& corr, double psd_tol) {
    require_correlation_role(corr);
    const std::size_t c = corr.order();
    const EigenDecomposition eig = jacobi_eigen(corr);
    if (eig.eigenvalues.back() < -psd_tol) {
        std::ostringstream msg;
        msg << "pc_similarity: matrix is not positive semidefinite (min eigenvalue "
            << eig.eigenvalues.back() << ", tolerance " << -psd_tol << ")";
        throw std::invalid_argument(msg.str());
    }

    PcSimilarityTable table;
    table.eigenvalues = eig.eigenvalues;
    table.det = Matrix(c, c, 0.0);
    for (std::size_t j = 0; j < c; ++j) {
        const double lambda = std::max(eig.eigenvalues[j], 0.0);
        for (std::size_t i = 0; i < c; ++i) {
            const double v = eig.eigenvectors(i, j);
            table.det(j, i) = lambda * v * v;
        }
    }
    table.cumulative_variance.resize(c);
    double running = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
        running += eig.eigenvalues[j];
        table.cumulative_variance[j] = 100.0 * running / static_cast<double>(c);
    }
    return table;
}

Embedding pc_cluster_points(const PcSimilarityTable& table, std::size_t k) {
    const std::size_t c = table.det.cols();
    if (k < 1 || k > c) {
        throw std::invalid_argument("pc_cluster_points: k out of range");
    }
    Embedding e;
    e.points = Matrix(c, k, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < k; ++j) e.points(i, j) = table.det(j, i);
    }
    e.source = "pc-table";
    return e;
}

}  // namespace vclust
