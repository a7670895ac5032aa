#include "vclust/relation.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vclust {

const char* to_string(RelationKind kind) {
    return kind == RelationKind::equivalence ? "equivalence" : "similarity";
}

RelationMatrix::RelationMatrix(std::size_t order) : order_(order), bits_(order * order, 0) {
    if (order < 1) {
        throw std::invalid_argument("RelationMatrix: order must be >= 1");
    }
    for (std::size_t i = 0; i < order; ++i) bits_[i * order + i] = 1;  // reflexive
}

void RelationMatrix::relate(std::size_t i, std::size_t j) {
    bits_[i * order_ + j] = 1;
    bits_[j * order_ + i] = 1;
}

SymmetricMatrix RelationMatrix::as_similarity() const {
    SymmetricMatrix s(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i; j < order_; ++j) {
            s.set(i, j, (*this)(i, j) ? 1.0 : 0.0);
        }
    }
    return s;
}

RelationMatrix build_relation(const SymmetricMatrix& s, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("build_relation: epsilon must lie in [0,1]");
    }
    constexpr double slack = 1e-9;
    const std::size_t c = s.order();
    RelationMatrix r(c);
    for (std::size_t i = 0; i < c; ++i) {
        if (std::abs(s(i, i) - 1.0) > slack) {
            throw std::invalid_argument("build_relation: similarity matrix needs a unit diagonal");
        }
        for (std::size_t j = i + 1; j < c; ++j) {
            const double v = s(i, j);
            if (v < -slack || v > 1.0 + slack) {
                std::ostringstream msg;
                msg << "build_relation: entry (" << i << "," << j << ") = " << v
                    << " outside [0,1]";
                throw std::invalid_argument(msg.str());
            }
            if (v >= epsilon) r.relate(i, j);  // "not less than" threshold
        }
    }
    r.set_epsilon(epsilon);
    return r;
}

bool is_transitive(const RelationMatrix& r) {
    const std::size_t c = r.order();
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (r(i, j)) continue;
            for (std::size_t m = 0; m < c; ++m) {
                if (r(i, m) && r(m, j)) return false;  // (R*R)_ij = 1 but R_ij = 0
            }
        }
    }
    return true;
}

RelationKind classify_relation(const RelationMatrix& r) {
    return is_transitive(r) ? RelationKind::equivalence : RelationKind::similarity;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep the smallest index as root
    }
};

}  // namespace

Partition connected_components(const RelationMatrix& r) {
    const std::size_t c = r.order();
    UnionFind uf(c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            if (r(i, j)) uf.merge(i, j);
        }
    }
    // Roots are the smallest members, so scanning ascending labels components
    // by ascending smallest member index.
    Partition p;
    p.labels.resize(c);
    std::vector<std::size_t> label_of_root(c, c);
    std::size_t next = 0;
    for (std::size_t i = 0; i < c; ++i) {
        const std::size_t root = uf.find(i);
        if (label_of_root[root] == c) label_of_root[root] = next++;
        p.labels[i] = label_of_root[root];
    }
    p.cluster_count = next;
    std::ostringstream prov;
    prov << "connected-components";
    if (r.epsilon()) prov << " epsilon=" << *r.epsilon();
    p.provenance = prov.str();
    return p;
}

std::vector<SweepPoint> epsilon_sweep(const SymmetricMatrix& s, double lo, double hi, double step,
                                      Exec exec) {
    if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
        throw std::invalid_argument("epsilon_sweep: need 0 <= lo <= hi <= 1");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("epsilon_sweep: step must be > 0");
    }
    const std::size_t count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-12)) + 1;
    std::vector<SweepPoint> points(count);
    parallel_for(count, exec, [&](std::size_t i) {
        const double eps = lo + static_cast<double>(i) * step;
        const RelationMatrix r = build_relation(s, eps);
        points[i] = SweepPoint{eps, connected_components(r).cluster_count, classify_relation(r)};
    });
    return points;
}

}  // namespace vclust
