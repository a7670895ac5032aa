#include "vclust/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vclust {

const char* to_string(Dissimilarity d) {
    return d == Dissimilarity::euclidean ? "euclidean" : "cosine";
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("euclidean: dimension mismatch");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double cosine_dissimilarity(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cosine_dissimilarity: dimension mismatch");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 1.0;  // zero vector: maximally dissimilar
    const double cos2 = (dot * dot) / (na * nb);
    return std::clamp(1.0 - cos2, 0.0, 1.0);
}

double dissimilarity(Dissimilarity kind, std::span<const double> a, std::span<const double> b) {
    return kind == Dissimilarity::euclidean ? euclidean(a, b) : cosine_dissimilarity(a, b);
}

namespace {

void validate_initial_set(const InitialSet& init, std::size_t c) {
    if (init.indices.empty()) {
        throw std::invalid_argument("kmeans: empty initial set");
    }
    for (std::size_t i = 0; i < init.indices.size(); ++i) {
        if (init.indices[i] >= c) {
            throw std::invalid_argument("kmeans: initial index out of range");
        }
        if (i > 0 && init.indices[i] <= init.indices[i - 1]) {
            throw std::invalid_argument("kmeans: initial indices must be distinct and ascending");
        }
    }
}

std::string indices_text(const std::vector<std::size_t>& idx) {
    std::ostringstream out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out << ' ';
        out << idx[i];
    }
    return out.str();
}

}  // namespace

Partition kmeans(const Embedding& points, const InitialSet& init, Dissimilarity diss,
                 const KmeansOptions& options, KmeansTrace* trace) {
    const std::size_t c = points.points.rows();
    const std::size_t dim = points.points.cols();
    const std::size_t k = init.indices.size();
    validate_initial_set(init, c);
    if (!points.points.all_finite()) {
        throw std::invalid_argument("kmeans: non-finite embedding");
    }
    if (k > distinct_row_count(points.points)) {
        std::ostringstream msg;
        msg << "kmeans: k=" << k << " exceeds the distinct-row count "
            << distinct_row_count(points.points);
        throw std::invalid_argument(msg.str());
    }

    Matrix centroids(k, dim, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t t = 0; t < dim; ++t) centroids(j, t) = points.points(init.indices[j], t);
    }

    std::vector<std::size_t> labels(c, 0), previous;
    std::vector<std::size_t> counts(k, 0);
    std::size_t rounds = 0;
    bool converged = false;

    while (rounds < options.max_iterations) {
        ++rounds;
        // Assignment; ties go to the lowest centroid index.
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < c; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const double d = dissimilarity(diss, points.points.row(i), centroids.row(j));
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
            labels[i] = best_j;
            ++counts[best_j];
        }
        // Empty-cluster repair: re-seed with the point farthest from its own
        // centroid, never stealing a sole member.
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] != 0) continue;
            double worst = -1.0;
            std::size_t pick = c;
            for (std::size_t i = 0; i < c; ++i) {
                if (counts[labels[i]] < 2) continue;
                const double d =
                    dissimilarity(diss, points.points.row(i), centroids.row(labels[i]));
                if (d > worst) {
                    worst = d;
                    pick = i;
                }
            }
            --counts[labels[pick]];
            labels[pick] = j;
            counts[j] = 1;
            for (std::size_t t = 0; t < dim; ++t) centroids(j, t) = points.points(pick, t);
        }
        if (trace) {
            double objective = 0.0;
            for (std::size_t i = 0; i < c; ++i) {
                const double d =
                    dissimilarity(diss, points.points.row(i), centroids.row(labels[i]));
                // The Lloyd potential for the Euclidean metric is the sum of
                // squared distances; both halves of the iteration decrease it.
                objective += diss == Dissimilarity::euclidean ? d * d : d;
            }
            trace->objective.push_back(objective);
        }
        if (labels == previous) {
            converged = true;
            break;
        }
        previous = labels;
        // Centroid update: arithmetic mean of the assigned points.
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t t = 0; t < dim; ++t) centroids(j, t) = 0.0;
        }
        for (std::size_t i = 0; i < c; ++i) {
            for (std::size_t t = 0; t < dim; ++t) centroids(labels[i], t) += points.points(i, t);
        }
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t t = 0; t < dim; ++t) {
                centroids(j, t) /= static_cast<double>(counts[j]);
            }
        }
    }

    Partition p;
    p.labels = labels;
    p.cluster_count = k;
    p.iterations = rounds;
    p.converged = converged;
    std::ostringstream prov;
    prov << "kmeans " << to_string(diss) << " init=[" << indices_text(init.indices) << "] source="
         << points.source;
    p.provenance = prov.str();
    return p;
}

unsigned long long binomial(std::size_t c, std::size_t k, unsigned long long cap) {
    if (k > c) return 0;
    k = std::min(k, c - k);
    unsigned long long result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const unsigned long long numer = c - k + i;
        if (result > std::numeric_limits<unsigned long long>::max() / numer) {
            return cap;  // saturate on overflow
        }
        result = result * numer / i;  // exact: result holds C(c-k+i, i) at each step
        if (result >= cap) return cap;  // C(c-k+i, i) grows with i, so this is final
    }
    return result;
}

std::vector<InitialSet> enumerate_initial_sets(std::size_t c, std::size_t k) {
    if (k < 1 || k > c) {
        throw std::invalid_argument("enumerate_initial_sets: need 1 <= k <= c");
    }
    std::vector<InitialSet> sets;
    std::vector<std::size_t> current(k);
    std::iota(current.begin(), current.end(), 0);
    while (true) {
        sets.push_back(InitialSet{current, 0.0});
        // Lexicographic successor.
        std::size_t i = k;
        while (i > 0 && current[i - 1] == c - k + i - 1) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return sets;
}

namespace {

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased and platform-independent.
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

}  // namespace

std::vector<InitialSet> sample_initial_sets(std::size_t c, std::size_t k, std::size_t m,
                                            std::uint64_t seed) {
    if (k < 1 || k > c) {
        throw std::invalid_argument("sample_initial_sets: need 1 <= k <= c");
    }
    if (m < 1) {
        throw std::invalid_argument("sample_initial_sets: need m >= 1");
    }
    if (binomial(c, k, m + 1ULL) <= m) {
        throw std::invalid_argument(
            "sample_initial_sets: C(c,k) <= m; use enumerate_initial_sets instead");
    }
    std::mt19937_64 rng(seed);
    std::vector<InitialSet> sets;
    sets.reserve(m);
    std::vector<std::size_t> pool(c);
    for (std::size_t s = 0; s < m; ++s) {
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t j = t + static_cast<std::size_t>(bounded_rand(rng, c - t));
            std::swap(pool[t], pool[j]);
        }
        InitialSet set;
        set.indices.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(set.indices.begin(), set.indices.end());
        sets.push_back(std::move(set));
    }
    return sets;
}

double entropy(const Embedding& points, const InitialSet& set, Dissimilarity diss) {
    for (std::size_t idx : set.indices) {
        if (idx >= points.points.rows()) {
            throw std::invalid_argument("entropy: index out of range");
        }
    }
    std::vector<double> distances;
    for (std::size_t a = 0; a < set.indices.size(); ++a) {
        for (std::size_t b = a + 1; b < set.indices.size(); ++b) {
            distances.push_back(dissimilarity(diss, points.points.row(set.indices[a]),
                                              points.points.row(set.indices[b])));
        }
    }
    const double total = std::accumulate(distances.begin(), distances.end(), 0.0);
    if (total == 0.0) return 0.0;
    double e = 0.0;
    for (double d : distances) {
        if (d <= 0.0) continue;  // 0 ln 0 := 0
        const double p = d / total;
        e -= p * std::log(p);
    }
    return e;
}

std::vector<std::size_t> top_entropy_selection(std::span<const InitialSet> sets, double fraction) {
    if (sets.empty()) {
        throw std::invalid_argument("top_entropy_selection: empty input");
    }
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("top_entropy_selection: fraction must lie in (0,1]");
    }
    const double raw = fraction * static_cast<double>(sets.size());
    const std::size_t take = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    std::vector<std::size_t> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sets[a].entropy != sets[b].entropy) return sets[a].entropy > sets[b].entropy;
        return sets[a].indices < sets[b].indices;  // ties at the cut: lexicographic
    });
    order.resize(std::max<std::size_t>(take, 1));
    return order;
}

std::vector<InitialSet> top_entropy_fraction(const std::vector<InitialSet>& sets, double fraction) {
    std::vector<InitialSet> out;
    for (std::size_t pos : top_entropy_selection(sets, fraction)) out.push_back(sets[pos]);
    return out;
}

}  // namespace vclust
