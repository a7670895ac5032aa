#ifndef VCLUST_KMEANS_HPP
#define VCLUST_KMEANS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vclust/embedding.hpp"
#include "vclust/partition.hpp"

namespace vclust {

enum class Dissimilarity { euclidean, cosine };

const char* to_string(Dissimilarity d);

/// sqrt(sum (a_i - b_i)^2)
double euclidean(std::span<const double> a, std::span<const double> b);

/// 1 - cos^2(a, b); sign-blind and scale-invariant.  A zero-norm vector is
/// maximally dissimilar to everything: the measure returns 1.
double cosine_dissimilarity(std::span<const double> a, std::span<const double> b);

double dissimilarity(Dissimilarity kind, std::span<const double> a, std::span<const double> b);

/// k distinct row indices into an embedding, sorted ascending.
struct InitialSet {
    std::vector<std::size_t> indices;
    double entropy = 0.0;
};

struct KmeansOptions {
    std::size_t max_iterations = 1000;
};

/// Per-assignment-round objective.  Euclidean rounds record the Lloyd
/// potential (within-cluster sum of squared distances), which both the
/// assignment and the mean update can only decrease; cosine rounds record the
/// plain dissimilarity sum, which carries no such guarantee.
struct KmeansTrace {
    std::vector<double> objective;
};

/// Lloyd iteration: assign each point to the centroid minimizing diss (ties
/// to the lowest centroid index), recompute centroids as arithmetic means,
/// stop when assignments repeat or after max_iterations rounds.  An empty
/// cluster is re-seeded with the point farthest from its own centroid.
/// The result records the round count and a converged flag.
Partition kmeans(const Embedding& points, const InitialSet& init, Dissimilarity diss,
                 const KmeansOptions& options = {}, KmeansTrace* trace = nullptr);

/// C(c,k) saturating at cap.
unsigned long long binomial(std::size_t c, std::size_t k,
                            unsigned long long cap = ~0ULL);

/// All C(c,k) k-element index subsets of {0..c-1} in lexicographic order.
std::vector<InitialSet> enumerate_initial_sets(std::size_t c, std::size_t k);

/// m subsets drawn uniformly (indices distinct within a set, repeats across
/// sets allowed), deterministic for a given seed.  Requires C(c,k) > m;
/// otherwise enumerate_initial_sets is the right tool and this throws.
std::vector<InitialSet> sample_initial_sets(std::size_t c, std::size_t k, std::size_t m,
                                            std::uint64_t seed);

/// Shannon entropy of the normalized pairwise dissimilarities among the
/// set's points: S = sum d_ij, p_ij = d_ij/S, E = sum -p_ij ln p_ij with
/// 0 ln 0 := 0 and E := 0 when S = 0.
double entropy(const Embedding& points, const InitialSet& set, Dissimilarity diss);

/// Positions of the ceil(fraction * n) highest-entropy sets; ties broken by
/// lexicographic index order.
std::vector<std::size_t> top_entropy_selection(std::span<const InitialSet> sets, double fraction);

/// The selected sets themselves, in ranking order.
std::vector<InitialSet> top_entropy_fraction(const std::vector<InitialSet>& sets, double fraction);

}  // namespace vclust

#endif
