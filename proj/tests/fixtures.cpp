#include "fixtures.hpp"

#include <initializer_list>

namespace fixtures {

using vclust::Matrix;
using vclust::Partition;
using vclust::RelationMatrix;
using vclust::SymmetricMatrix;

namespace {

Matrix matrix_from(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    Matrix m(r, c, 0.0);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

SymmetricMatrix symmetric_from(std::initializer_list<std::initializer_list<double>> rows) {
    return SymmetricMatrix::from_full(matrix_from(rows));
}

RelationMatrix relation_from(std::initializer_list<std::initializer_list<double>> rows) {
    const Matrix m = matrix_from(rows);
    RelationMatrix r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != 0.0) r.relate(i, j);
        }
    }
    return r;
}

}  // namespace

SymmetricMatrix iris_determination() {
    return symmetric_from({{1, 0.004, 0.749, 0.666},
                           {0.004, 1, 0.103, 0.090},
                           {0.749, 0.103, 1, 0.920},
                           {0.666, 0.090, 0.920, 1}});
}

Matrix iris_pc_points() {
    return matrix_from({{0.812, 0.097}, {0.129, 0.863}, {0.972, 0.001}, {0.936, 0.001}});
}

RelationMatrix iris_relation_50() {
    return relation_from({{1, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 1}});
}

RelationMatrix iris_relation_70() {
    return relation_from({{1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 1}, {0, 0, 1, 1}});
}

SymmetricMatrix iris_relation_50_laplacian() {
    return symmetric_from(
        {{2, 0, -1, -1}, {0, 0, 0, 0}, {-1, 0, 2, -1}, {-1, 0, -1, 2}});
}

SymmetricMatrix houses_correlation() {
    return symmetric_from({
        {1, 0.69, 0.11, 0.13, 0.05, -0.02, 0.07, -0.14, -0.05},
        {0.69, 1, -0.12, 0.20, -0.01, 0.00, 0.01, -0.08, -0.02},
        {0.11, -0.12, 1, -0.36, -0.32, -0.30, -0.30, 0.01, -0.11},
        {0.13, 0.20, -0.36, 1, 0.93, 0.86, 0.92, -0.04, 0.04},
        {0.05, -0.01, -0.32, 0.93, 1, 0.88, 0.98, -0.07, 0.07},
        {-0.02, 0.00, -0.30, 0.86, 0.88, 1, 0.91, -0.11, 0.10},
        {0.07, 0.01, -0.30, 0.92, 0.98, 0.91, 1, -0.07, 0.06},
        {-0.14, -0.08, 0.01, -0.04, -0.07, -0.11, -0.07, 1, -0.92},
        {-0.05, -0.02, -0.11, 0.04, 0.07, 0.10, 0.06, -0.92, 1},
    });
}

Matrix houses_pc_points() {
    // Transposed from the published 4x9 block.
    const Matrix t = matrix_from({
        {0.008, 0.012, 0.183, 0.918, 0.938, 0.865, 0.943, 0.022, 0.022},
        {0.070, 0.061, 0.000, 0.007, 0.010, 0.004, 0.010, 0.917, 0.844},
        {0.770, 0.765, 0.004, 0.012, 0.003, 0.011, 0.001, 0.027, 0.103},
        {0.025, 0.040, 0.790, 0.001, 0.014, 0.013, 0.019, 0.007, 0.001},
    });
    Matrix m(t.cols(), t.rows(), 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) m(j, i) = t(i, j);
    }
    return m;
}

SymmetricMatrix houses_determination() {
    return symmetric_from({
        {1, 0.473, 0.011, 0.018, 0.003, 0.001, 0.004, 0.021, 0.002},
        {0.473, 1, 0.014, 0.039, 0.000, 0.000, 0.000, 0.006, 0.000},
        {0.011, 0.014, 1, 0.131, 0.103, 0.088, 0.092, 0.000, 0.012},
        {0.018, 0.039, 0.131, 1, 0.865, 0.735, 0.844, 0.001, 0.002},
        {0.003, 0.000, 0.103, 0.865, 1, 0.771, 0.960, 0.004, 0.005},
        {0.001, 0.000, 0.088, 0.735, 0.771, 1, 0.823, 0.012, 0.010},
        {0.004, 0.000, 0.092, 0.844, 0.960, 0.823, 1, 0.005, 0.003},
        {0.021, 0.006, 0.000, 0.001, 0.004, 0.012, 0.005, 1, 0.855},
        {0.002, 0.000, 0.012, 0.002, 0.005, 0.010, 0.003, 0.855, 1},
    });
}

RelationMatrix houses_relation_45() {
    return relation_from({
        {1, 1, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 1, 1},
    });
}

SymmetricMatrix ds3_correlation() {
    return symmetric_from({
        {1, 0.81, 0.78, 0.39, 0.87, 0.78, 0.44, -0.33, 0.08, 0.53},
        {0.81, 1, 0.87, 0.78, 0.90, 0.75, 0.34, 0.11, -0.28, 0.47},
        {0.78, 0.87, 1, 0.62, 0.72, 0.64, 0.48, -0.05, -0.29, 0.78},
        {0.39, 0.78, 0.62, 1, 0.45, 0.42, 0.06, 0.62, -0.65, 0.25},
        {0.87, 0.90, 0.72, 0.45, 1, 0.82, 0.34, -0.21, 0.07, 0.34},
        {0.78, 0.75, 0.64, 0.42, 0.82, 1, 0.24, -0.10, -0.04, 0.33},
        {0.44, 0.34, 0.48, 0.06, 0.34, 0.24, 1, -0.36, 0.02, 0.55},
        {-0.33, 0.11, -0.05, 0.62, -0.21, -0.10, -0.36, 1, -0.85, -0.17},
        {0.08, -0.28, -0.29, -0.65, 0.07, -0.04, 0.02, -0.85, 1, -0.34},
        {0.53, 0.47, 0.78, 0.25, 0.34, 0.33, 0.55, -0.17, -0.34, 1},
    });
}

SymmetricMatrix ds3_determination() {
    return symmetric_from({
        {1, 0.66, 0.61, 0.15, 0.75, 0.61, 0.20, 0.11, 0.01, 0.28},
        {0.66, 1, 0.76, 0.60, 0.80, 0.57, 0.11, 0.01, 0.08, 0.22},
        {0.61, 0.76, 1, 0.39, 0.52, 0.41, 0.23, 0.00, 0.08, 0.60},
        {0.15, 0.60, 0.39, 1, 0.20, 0.17, 0.00, 0.38, 0.42, 0.06},
        {0.75, 0.80, 0.52, 0.20, 1, 0.68, 0.11, 0.04, 0.01, 0.11},
        {0.61, 0.57, 0.41, 0.17, 0.68, 1, 0.06, 0.01, 0.00, 0.11},
        {0.20, 0.11, 0.23, 0.00, 0.11, 0.06, 1, 0.13, 0.00, 0.31},
        {0.11, 0.01, 0.00, 0.38, 0.04, 0.01, 0.13, 1, 0.71, 0.03},
        {0.01, 0.08, 0.08, 0.42, 0.01, 0.00, 0.00, 0.71, 1, 0.12},
        {0.28, 0.22, 0.60, 0.06, 0.11, 0.11, 0.31, 0.03, 0.12, 1},
    });
}

RelationMatrix ds3_relation_55() {
    return relation_from({
        {1, 1, 1, 0, 1, 1, 0, 0, 0, 0},
        {1, 1, 1, 1, 1, 1, 0, 0, 0, 0},
        {1, 1, 1, 0, 0, 0, 0, 0, 0, 1},
        {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 1, 1, 0, 0, 0, 0},
        {1, 1, 0, 0, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
    });
}

std::vector<double> iris_relation_laplacian_eigs() { return {3, 3, 0, 0}; }
std::vector<double> iris_relation_nlaplacian_eigs() { return {1, 1, 0, 0}; }
std::vector<double> iris_determination_laplacian_eigs() { return {2.656, 2.151, 0.259, 0}; }
std::vector<double> iris_determination_nlaplacian_eigs() { return {0.974, 0.856, 0.187, 0}; }
std::vector<double> houses_relation_laplacian_eigs() { return {4, 4, 4, 2, 2, 0, 0, 0, 0}; }
std::vector<double> houses_relation_nlaplacian_eigs() { return {1, 1, 1, 1, 1, 0, 0, 0, 0}; }
std::vector<double> houses_determination_laplacian_eigs() {
    return {3.684, 3.488, 3.213, 1.752, 1.007, 0.550, 0.077, 0.053, 0.000};
}
std::vector<double> houses_determination_nlaplacian_eigs() {
    return {0.99, 0.95, 0.92, 0.92, 0.66, 0.34, 0.04, 0.02, 0};
}
std::vector<double> houses_correlation_eigs() {
    return {3.912, 1.923, 1.697, 0.910, 0.293, 0.143, 0.063, 0.045, 0.015};
}
std::vector<double> ds3_relation_laplacian_eigs() {
    return {6.060, 5.142, 4, 3.034, 2, 1.075, 0.689, 0, 0, 0};
}
std::vector<double> ds3_determination_nlaplacian_eigs() {
    return {0.99, 0.95, 0.95, 0.90, 0.88, 0.77, 0.69, 0.50, 0.27, 0};
}
std::vector<double> ds3_correlation_eigs() {
    return {5.164, 2.507, 1.248, 0.461, 0.320, 0.126, 0.116, 0.040, 0.017, 0.000};
}

Partition man2_iris() { return Partition::from_labels({0, 1, 0, 0}, "2Man"); }

Partition man4_houses() {
    return Partition::from_labels({0, 0, 1, 2, 2, 2, 2, 3, 3}, "4Man");
}

Partition man3_ds3() {
    return Partition::from_labels({0, 0, 0, 0, 0, 0, 1, 2, 2, 0}, "3Man");
}

std::vector<const char*> houses_table_variants() {
    return {"4EP", "4CP", "4EnP", "4EL", "4CL", "4EnL", "4CnL"};
}

std::vector<double> houses_table_averages() {
    return {81.6, 83.7, 83.7, 89.0, 91.2, 89.3, 91.1};
}

}  // namespace fixtures
