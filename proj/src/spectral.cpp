#include "vclust/spectral.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vclust {

std::vector<double> degrees(const SymmetricMatrix& s) {
    const std::size_t c = s.order();
    std::vector<double> d(c, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            if (s(i, j) < 0.0) {
                std::ostringstream msg;
                msg << "degrees: negative similarity at (" << i << "," << j << ")";
                throw std::invalid_argument(msg.str());
            }
            sum += s(i, j);
        }
        d[i] = sum;
    }
    return d;
}

SymmetricMatrix laplacian(const SymmetricMatrix& s) {
    const std::vector<double> d = degrees(s);
    const std::size_t c = s.order();
    SymmetricMatrix l(c);
    for (std::size_t i = 0; i < c; ++i) {
        l.set(i, i, d[i] - s(i, i));
        for (std::size_t j = i + 1; j < c; ++j) l.set(i, j, -s(i, j));
    }
    return l;
}

SymmetricMatrix normalized_laplacian(const SymmetricMatrix& s) {
    const std::vector<double> d = degrees(s);
    const std::size_t c = s.order();
    for (std::size_t i = 0; i < c; ++i) {
        if (d[i] <= 0.0) {
            std::ostringstream msg;
            msg << "normalized_laplacian: node " << i << " has zero degree";
            throw std::invalid_argument(msg.str());
        }
    }
    SymmetricMatrix l(c);
    for (std::size_t i = 0; i < c; ++i) {
        l.set(i, i, 1.0 - s(i, i) / d[i]);
        for (std::size_t j = i + 1; j < c; ++j) {
            l.set(i, j, -s(i, j) / std::sqrt(d[i] * d[j]));
        }
    }
    return l;
}

Embedding spectral_embedding(const SymmetricMatrix& laplacian_role, std::size_t k,
                             bool normalize, std::string_view source) {
    const std::size_t c = laplacian_role.order();
    if (k < 1 || k > c) {
        throw std::invalid_argument("spectral_embedding: k out of range");
    }
    const EigenDecomposition eig = jacobi_eigen(laplacian_role);
    Embedding e;
    e.points = Matrix(c, k, 0.0);
    // Column j holds the eigenvector of the j-th smallest eigenvalue.
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = c - 1 - j;
        for (std::size_t i = 0; i < c; ++i) e.points(i, j) = eig.eigenvectors(i, src);
    }
    e.source = std::string(source);
    if (normalize) {
        e = normalize_rows(e);
    }
    return e;
}

Embedding normalize_rows(const Embedding& input) {
    Embedding e = input;
    e.zero_rows.clear();
    for (std::size_t i = 0; i < e.points.rows(); ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < e.points.cols(); ++j) sq += e.points(i, j) * e.points(i, j);
        const double norm = std::sqrt(sq);
        if (norm <= 1e-12) {
            e.zero_rows.push_back(i);  // left as a zero vector
            continue;
        }
        for (std::size_t j = 0; j < e.points.cols(); ++j) e.points(i, j) /= norm;
    }
    e.row_normalized = true;
    return e;
}

std::size_t distinct_row_count(const Matrix& points, double tol) {
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < points.rows(); ++i) {
        bool matched = false;
        for (std::size_t rep : representatives) {
            double dev = 0.0;
            for (std::size_t j = 0; j < points.cols(); ++j) {
                dev = std::max(dev, std::abs(points(i, j) - points(rep, j)));
            }
            if (dev <= tol) {
                matched = true;
                break;
            }
        }
        if (!matched) representatives.push_back(i);
    }
    return representatives.size();
}

bool rows_pairwise_distinct(const Matrix& points, std::span<const std::size_t> indices,
                            double tol) {
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            double dev = 0.0;
            for (std::size_t j = 0; j < points.cols(); ++j) {
                dev = std::max(dev, std::abs(points(indices[a], j) - points(indices[b], j)));
            }
            if (dev <= tol) return false;
        }
    }
    return true;
}

}  // namespace vclust
