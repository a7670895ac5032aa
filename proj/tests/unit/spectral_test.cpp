#include <doctest.h>

#include <cmath>
#include <random>

#include "../fixtures.hpp"
#include "helpers.hpp"
#include "vclust/relation.hpp"
#include "vclust/spectral.hpp"

using namespace vclust;

TEST_CASE("degrees include the self-similarity term") {
    const auto relation_degrees = degrees(fixtures::iris_relation_50().as_similarity());
    CHECK(relation_degrees == std::vector<double>{3, 1, 3, 3});

    const auto similarity_degrees = degrees(fixtures::iris_determination());
    const double want[] = {2.419, 1.197, 2.772, 2.676};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(similarity_degrees[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }

    SymmetricMatrix eye(3);
    for (std::size_t i = 0; i < 3; ++i) eye.set(i, i, 1.0);
    CHECK(degrees(eye) == std::vector<double>{1, 1, 1});

    SymmetricMatrix negative(2);
    negative.set(0, 0, 1.0);
    negative.set(1, 1, 1.0);
    negative.set(0, 1, -0.1);
    CHECK_THROWS_AS(degrees(negative), std::invalid_argument);
}

TEST_CASE("laplacian of the iris relation matches the published integer matrix") {
    const auto l = laplacian(fixtures::iris_relation_50().as_similarity());
    CHECK(l == fixtures::iris_relation_50_laplacian());
}

TEST_CASE("laplacian rows sum to zero and the matrix is PSD") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t order = 2 + trial % 10;
        const auto s = helpers::random_similarity(rng, order);
        const auto l = laplacian(s);
        for (std::size_t i = 0; i < order; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < order; ++j) row += l(i, j);
            CHECK(std::abs(row) <= 1e-9);
        }
        CHECK(jacobi_eigen(l).eigenvalues.back() >= -1e-9);
    }
}

TEST_CASE("identity similarity has a zero laplacian and zero normalized laplacian") {
    SymmetricMatrix eye(4);
    for (std::size_t i = 0; i < 4; ++i) eye.set(i, i, 1.0);
    const auto l = laplacian(eye);
    const auto ln = normalized_laplacian(eye);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(l(i, j) == 0.0);
            CHECK(ln(i, j) == 0.0);
        }
    }
}

TEST_CASE("normalized laplacian of the iris relation has the +-1/3 pattern") {
    const auto ln = normalized_laplacian(fixtures::iris_relation_50().as_similarity());
    CHECK(ln(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(ln(0, 2) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(ln(1, 1) == doctest::Approx(0.0));
    CHECK(helpers::spectrum_deviation(jacobi_eigen(ln).eigenvalues,
                                      fixtures::iris_relation_nlaplacian_eigs()) <= 1e-9);
}

TEST_CASE("published spectra of the determination laplacians") {
    const auto iris = fixtures::iris_determination();
    CHECK(helpers::spectrum_deviation(jacobi_eigen(laplacian(iris)).eigenvalues,
                                      fixtures::iris_determination_laplacian_eigs()) <= 2e-3);
    CHECK(helpers::spectrum_deviation(jacobi_eigen(normalized_laplacian(iris)).eigenvalues,
                                      fixtures::iris_determination_nlaplacian_eigs()) <= 2e-3);

    const auto houses = fixtures::houses_determination();
    CHECK(helpers::spectrum_deviation(jacobi_eigen(laplacian(houses)).eigenvalues,
                                      fixtures::houses_determination_laplacian_eigs()) <= 1e-2);
    CHECK(helpers::spectrum_deviation(jacobi_eigen(normalized_laplacian(houses)).eigenvalues,
                                      fixtures::houses_determination_nlaplacian_eigs()) <= 1e-2);

    const auto ds3 = fixtures::ds3_determination();
    CHECK(helpers::spectrum_deviation(jacobi_eigen(normalized_laplacian(ds3)).eigenvalues,
                                      fixtures::ds3_determination_nlaplacian_eigs()) <= 1e-2);
    CHECK(helpers::spectrum_deviation(
              jacobi_eigen(laplacian(fixtures::ds3_relation_55().as_similarity())).eigenvalues,
              fixtures::ds3_relation_laplacian_eigs()) <= 1e-2);
}

TEST_CASE("normalized laplacian eigenvalues stay within [0,2]") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = helpers::random_similarity(rng, 2 + trial % 9);
        const auto eigs = jacobi_eigen(normalized_laplacian(s)).eigenvalues;
        CHECK(eigs.front() <= 2.0 + 1e-9);
        CHECK(eigs.back() >= -1e-9);
    }
}

TEST_CASE("embedding of the iris relation has the published distinct-row pattern") {
    const auto s = fixtures::iris_relation_50().as_similarity();
    const auto m = spectral_embedding(laplacian(s), 2, false);
    // One constant block row repeated three times plus the isolated node.
    CHECK(distinct_row_count(m.points) == 2);
    const double v = 1.0 / std::sqrt(3.0);
    // Columns may come in either order inside the zero eigenspace; identify by
    // the isolated node's coordinate.
    const bool isolated_first = std::abs(m.points(1, 0) - 1.0) < 1e-9;
    const std::size_t block = isolated_first ? 1 : 0;
    const std::size_t isolated = isolated_first ? 0 : 1;
    for (std::size_t i : {std::size_t{0}, std::size_t{2}, std::size_t{3}}) {
        CHECK(m.points(i, block) == doctest::Approx(v).epsilon(1e-9));
        CHECK(m.points(i, isolated) == doctest::Approx(0.0));
    }
    CHECK(m.points(1, isolated) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.points(1, block) == doctest::Approx(0.0));
}

TEST_CASE("row-normalized embedding of the normalized laplacian") {
    const auto s = fixtures::iris_relation_50().as_similarity();
    const auto m = spectral_embedding(normalized_laplacian(s), 2, true, "normalized-laplacian");
    CHECK(m.row_normalized);
    CHECK(m.zero_rows.empty());
    for (std::size_t i = 0; i < 4; ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < 2; ++j) sq += m.points(i, j) * m.points(i, j);
        CHECK(std::sqrt(sq) == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(distinct_row_count(m.points) == 2);
}

TEST_CASE("k=1 embedding of a connected graph is a constant column") {
    SymmetricMatrix s(5);
    for (std::size_t i = 0; i < 5; ++i) s.set(i, i, 1.0);
    for (std::size_t i = 0; i + 1 < 5; ++i) s.set(i, i + 1, 1.0);  // path graph
    const auto m = spectral_embedding(laplacian(s), 1, false);
    for (std::size_t i = 1; i < 5; ++i) {
        CHECK(m.points(i, 0) == doctest::Approx(m.points(0, 0)).epsilon(1e-9));
    }
    CHECK_THROWS(spectral_embedding(laplacian(s), 0, false));
    CHECK_THROWS(spectral_embedding(laplacian(s), 6, false));
}

TEST_CASE("q-component relations embed as exactly q distinct rows") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t order = 2 + trial % 11;
        const auto r = helpers::random_relation(rng, order, helpers::uniform(rng, 0.1, 0.6));
        const auto p = connected_components(r);
        const std::size_t q = p.cluster_count;
        const auto s = r.as_similarity();

        for (const bool normalized : {false, true}) {
            const auto l = normalized ? normalized_laplacian(s) : laplacian(s);
            const auto m = spectral_embedding(l, q, normalized);
            CHECK(distinct_row_count(m.points) == q);
            // Rows are equal exactly when the variables share a component.
            for (std::size_t i = 0; i < order; ++i) {
                for (std::size_t j = i + 1; j < order; ++j) {
                    double dev = 0.0;
                    for (std::size_t t = 0; t < q; ++t) {
                        dev = std::max(dev, std::abs(m.points(i, t) - m.points(j, t)));
                    }
                    if (p.labels[i] == p.labels[j]) {
                        CHECK(dev <= 1e-6);
                    } else {
                        CHECK(dev > 1e-6);
                    }
                }
            }
        }
    }
}

TEST_CASE("zero rows survive normalization and are flagged") {
    Embedding e;
    e.points = Matrix(3, 2, 0.0);
    e.points(0, 0) = 3.0;
    e.points(0, 1) = 4.0;
    e.points(2, 1) = -2.0;
    const auto n = normalize_rows(e);
    CHECK(n.zero_rows == std::vector<std::size_t>{1});
    CHECK(n.points(0, 0) == doctest::Approx(0.6));
    CHECK(n.points(1, 0) == 0.0);
    CHECK(n.points(1, 1) == 0.0);
    CHECK(n.points(2, 1) == doctest::Approx(-1.0));
}
