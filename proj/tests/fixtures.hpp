#ifndef VCLUST_TEST_FIXTURES_HPP
#define VCLUST_TEST_FIXTURES_HPP

#include <vector>

#include "vclust/matrix.hpp"
#include "vclust/partition.hpp"
#include "vclust/relation.hpp"

// Published matrices and spectra for the three tabulated datasets: the four
// iris flower measurements, the nine-variable California housing table and a
// ten-variable measurement series.  Values are the printed ones (2-3
// decimals), so derived quantities carry that rounding.
namespace fixtures {

vclust::SymmetricMatrix iris_determination();        // 4x4 similarity S
vclust::Matrix iris_pc_points();                     // 4x2 PC determination rows
vclust::RelationMatrix iris_relation_50();           // threshold 0.50
vclust::RelationMatrix iris_relation_70();           // threshold 0.70
vclust::SymmetricMatrix iris_relation_50_laplacian();

vclust::SymmetricMatrix houses_correlation();        // 9x9
vclust::Matrix houses_pc_points();                   // 9x4
vclust::SymmetricMatrix houses_determination();      // 9x9
vclust::RelationMatrix houses_relation_45();

vclust::SymmetricMatrix ds3_correlation();           // 10x10
vclust::SymmetricMatrix ds3_determination();         // 10x10
vclust::RelationMatrix ds3_relation_55();

// Printed spectra (sorted non-ascending).
std::vector<double> iris_relation_laplacian_eigs();             // {3,3,0,0}
std::vector<double> iris_relation_nlaplacian_eigs();            // {1,1,0,0}
std::vector<double> iris_determination_laplacian_eigs();        // {2.656,...}
std::vector<double> iris_determination_nlaplacian_eigs();       // {0.974,...}
std::vector<double> houses_relation_laplacian_eigs();           // {4,4,4,2,2,0,0,0,0}
std::vector<double> houses_relation_nlaplacian_eigs();          // {1,1,1,1,1,0,0,0,0}
std::vector<double> houses_determination_laplacian_eigs();
std::vector<double> houses_determination_nlaplacian_eigs();
std::vector<double> houses_correlation_eigs();
std::vector<double> ds3_relation_laplacian_eigs();
std::vector<double> ds3_determination_nlaplacian_eigs();
std::vector<double> ds3_correlation_eigs();

// Reference partitions: connected components of the relation graphs.
vclust::Partition man2_iris();    // {v1,v3,v4},{v2}
vclust::Partition man4_houses();  // {1,2},{3},{4..7},{8,9}
vclust::Partition man3_ds3();     // {1..6,10},{7},{8,9}

// Published efficiency table for the houses data, four clusters, 126 sets:
// variant order 4EP, 4CP, 4EnP, 4EL, 4CL, 4EnL, 4CnL.
std::vector<const char*> houses_table_variants();
std::vector<double> houses_table_averages();

}  // namespace fixtures

#endif
