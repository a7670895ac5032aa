#ifndef VCLUST_RELATION_HPP
#define VCLUST_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vclust/matrix.hpp"
#include "vclust/parallel.hpp"
#include "vclust/partition.hpp"

namespace vclust {

enum class RelationKind { equivalence, similarity };

const char* to_string(RelationKind kind);

/// Reflexive symmetric binary relation on c variables.  The diagonal is all
/// ones and bit(i,j) == bit(j,i) by construction.
class RelationMatrix {
public:
    explicit RelationMatrix(std::size_t order);

    std::size_t order() const { return order_; }
    bool operator()(std::size_t i, std::size_t j) const { return bits_[i * order_ + j] != 0; }

    /// Sets bit(i,j) and bit(j,i).
    void relate(std::size_t i, std::size_t j);

    /// Threshold this relation was built with, when it came from build_relation.
    std::optional<double> epsilon() const { return epsilon_; }
    void set_epsilon(double eps) { epsilon_ = eps; }

    /// The relation as a 0/1 similarity matrix (graph adjacency with self-loops).
    SymmetricMatrix as_similarity() const;

    friend bool operator==(const RelationMatrix& a, const RelationMatrix& b) {
        return a.order_ == b.order_ && a.bits_ == b.bits_;
    }

private:
    std::size_t order_ = 0;
    std::vector<std::uint8_t> bits_;
    std::optional<double> epsilon_;
};

/// bit(i,j) = 1 iff i == j or s(i,j) >= epsilon.  s must be a similarity
/// matrix: entries in [0,1], unit diagonal.
RelationMatrix build_relation(const SymmetricMatrix& s, double epsilon);

/// R * R <= R under Boolean multiplication: every two-arc path has a one-arc
/// shortcut.
bool is_transitive(const RelationMatrix& r);

/// equivalence iff transitive; reflexivity and symmetry hold by type invariant.
RelationKind classify_relation(const RelationMatrix& r);

/// Connected components of the relation graph; labels assigned by ascending
/// smallest member index.
Partition connected_components(const RelationMatrix& r);

struct SweepPoint {
    double epsilon;
    std::size_t components;
    RelationKind kind;
};

/// Evaluates build_relation at epsilon = lo, lo+step, ... up to hi and reports
/// component count and relation kind per threshold, ordered by epsilon.
std::vector<SweepPoint> epsilon_sweep(const SymmetricMatrix& s, double lo, double hi, double step,
                                      Exec exec = Exec::openmp);

}  // namespace vclust

#endif
