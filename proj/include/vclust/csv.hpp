#ifndef VCLUST_CSV_HPP
#define VCLUST_CSV_HPP

#include <iosfwd>
#include <string>

#include "vclust/embedding.hpp"
#include "vclust/matrix.hpp"
#include "vclust/partition.hpp"
#include "vclust/relation.hpp"
#include "vclust/similarity.hpp"

namespace vclust {

// Comma-separated values, '.' decimal separator, no thousands separators.
// Lines starting with '#' are comments and are skipped on read.

Matrix read_matrix_csv(std::istream& in);
SymmetricMatrix read_symmetric_csv(std::istream& in, double sym_tol = 1e-9);
RelationMatrix read_relation_csv(std::istream& in);

/// Observations with an optional leading header row of variable names.
ObservationTable read_observations_csv(std::istream& in);

/// Labels, one per line or comma-separated; an optional header row and an
/// optional leading name/index column are tolerated (the last field counts).
Partition read_partition_csv(std::istream& in);

/// precision < 0 writes full round-trip precision; otherwise fixed decimals.
void write_matrix_csv(std::ostream& out, const Matrix& m, int precision = -1);
void write_relation_csv(std::ostream& out, const RelationMatrix& r);

/// Matrix rows preceded by a '#' provenance comment line.
void write_embedding_csv(std::ostream& out, const Embedding& e);

void write_partition_csv(std::ostream& out, const Partition& p,
                         const std::vector<std::string>& names = {});

Matrix read_matrix_file(const std::string& path);
SymmetricMatrix read_symmetric_file(const std::string& path, double sym_tol = 1e-9);
ObservationTable read_observations_file(const std::string& path);
Partition read_partition_file(const std::string& path);

}  // namespace vclust

#endif
