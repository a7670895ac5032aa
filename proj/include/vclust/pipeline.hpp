#ifndef VCLUST_PIPELINE_HPP
#define VCLUST_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vclust/embedding.hpp"
#include "vclust/evaluation.hpp"
#include "vclust/kmeans.hpp"
#include "vclust/matrix.hpp"
#include "vclust/parallel.hpp"
#include "vclust/partition.hpp"
#include "vclust/similarity.hpp"

namespace vclust {

/// Where a variant's clustering points come from.
enum class VariantSource {
    pc,                             // P: rows of the PC determination table
    pc_normalized,                  // nP: same, rows normalized to unit length
    laplacian,                      // L: Laplacian of the determination matrix
    normalized_laplacian,           // nL
    relation_laplacian,             // L<eps>: Laplacian of the relation at eps
    relation_normalized_laplacian,  // nL<eps>
};

/// Clustering procedure code, e.g. "4EL", "2CnL", "4EnL45%", "3CL55%".
/// Grammar: [k] (E|C) [n] (P|L) [epsilon][%].  An epsilon turns L into the
/// relation source; P never takes one.  "CnP" is rejected: the cosine measure
/// is normalization-invariant, so CP already covers it.
struct VariantCode {
    std::size_t k = 0;  // 0: take the experiment-wide k
    Dissimilarity measure = Dissimilarity::euclidean;
    VariantSource source = VariantSource::pc;
    double epsilon = 0.0;  // only for relation sources

    static VariantCode parse(std::string_view text);
    std::string str() const;

    bool relation_source() const {
        return source == VariantSource::relation_laplacian ||
               source == VariantSource::relation_normalized_laplacian;
    }
};

enum class InputKind { observations, similarity, correlation };

InputKind parse_input_kind(std::string_view text);
const char* to_string(InputKind kind);

/// Loaded input plus everything derivable from it.  The determination matrix
/// is always present; the correlation matrix only when the input supports it.
struct Dataset {
    std::vector<std::string> names;
    std::optional<ObservationTable> observations;
    std::optional<SymmetricMatrix> correlation;
    SymmetricMatrix similarity;  // determination coefficients

    std::size_t variable_count() const { return similarity.order(); }
};

Dataset load_dataset(const std::string& path, InputKind kind);
Dataset dataset_from_similarity(SymmetricMatrix s, std::vector<std::string> names = {});
Dataset dataset_from_correlation(SymmetricMatrix corr, std::vector<std::string> names = {});
Dataset dataset_from_observations(ObservationTable table);

struct ReferenceSpec {
    enum class Kind { relation_components, file };
    Kind kind = Kind::relation_components;
    double epsilon = 0.5;  // relation_components
    std::string path;      // file

    /// "relation:0.45" or "file:partition.csv"
    static ReferenceSpec parse(std::string_view text);
    std::string str() const;
};

struct InitStrategy {
    enum class Kind { exhaustive, random };
    Kind kind = Kind::exhaustive;
    std::size_t runs = 300;     // random only
    std::uint64_t seed = 1;     // random only

    std::string str() const;
};

struct ExperimentConfig {
    std::string input_path;
    InputKind input_kind = InputKind::observations;
    std::vector<double> epsilons;  // expands variant codes written without one
    std::size_t k = 2;
    std::vector<std::string> variants;
    InitStrategy init;
    double entropy_fraction = 1.0 / 3.0;
    ReferenceSpec reference;
    std::string output_dir;
    std::size_t exhaustive_cap = 300;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

/// Connected components of the relation at epsilon.  A component count other
/// than expected_k is an error whose message includes a sweep of the
/// neighborhood to guide re-selection.
Partition derive_reference(const SymmetricMatrix& s, double epsilon, std::size_t expected_k);

/// Clustering points for one variant over a dataset.
Embedding variant_embedding(const Dataset& data, const VariantCode& variant, std::size_t k);

struct VariantResult {
    VariantCode variant;
    std::vector<InitialSet> initial_sets;  // admissible sets, entropies filled
    EfficiencyReport full;                 // whole population
    EfficiencyReport top_entropy;          // highest-entropy fraction
    double entropy_delta_pp = 0.0;         // top average minus full average
    std::size_t inadmissible_sets = 0;     // dropped for coinciding rows
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<std::string> names;
    Partition reference;
    std::vector<VariantResult> variants;
};

ExperimentResult run_experiment(const Dataset& data, const ExperimentConfig& config,
                                Exec exec = Exec::openmp);
ExperimentResult run_experiment(const ExperimentConfig& config, Exec exec = Exec::openmp);

// Report rendering.  All percentages carry one decimal, matrices three; the
// same config and seed render byte-identically.
std::string render_statistics_csv(const ExperimentResult& result, bool top_entropy = false);
std::string render_distribution_csv(const ExperimentResult& result, bool top_entropy = false);
std::string render_entropy_delta_csv(const ExperimentResult& result);
std::string render_scores_csv(const VariantResult& variant);
std::string render_manifest_json(const ExperimentResult& result);
std::string render_report_json(const ExperimentResult& result);

/// Writes the full report bundle (CSV tables plus JSON manifest) under dir.
void write_reports(const ExperimentResult& result, const std::string& dir);

}  // namespace vclust

#endif
