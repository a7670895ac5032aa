// Command-line front end: analyze (correlation/determination/PCA tables),
// sweep (threshold sweep report), cluster (single variant run) and
// experiment (full variant x initial-set grid).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vclust/csv.hpp"
#include "vclust/evaluation.hpp"
#include "vclust/kmeans.hpp"
#include "vclust/pipeline.hpp"
#include "vclust/relation.hpp"
#include "vclust/spectral.hpp"
#include "vclust/version.hpp"

using namespace vclust;

namespace {

struct InputArgs {
    std::string path;
    std::string kind = "observations";

    Dataset load() const { return load_dataset(path, parse_input_kind(kind)); }
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
    cmd->add_option("--input", args.path, "input CSV file")->required();
    cmd->add_option("--input-kind", args.kind,
                    "observations | similarity | correlation")
        ->check(CLI::IsMember({"observations", "similarity", "correlation"}));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string percent_cell(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", value);
    return buf;
}

int run_analyze(const InputArgs& input, const std::string& out_dir,
                const std::vector<double>& relation_epsilons) {
    const Dataset data = input.load();
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    {
        std::ofstream out(dir / "determination.csv");
        write_matrix_csv(out, data.similarity.full(), 3);
    }
    for (double eps : relation_epsilons) {
        char name[48];
        std::snprintf(name, sizeof name, "relation_%03d.csv",
                      static_cast<int>(std::lround(eps * 1000.0)));
        std::ofstream out(dir / name);
        write_relation_csv(out, build_relation(data.similarity, eps));
    }
    nlohmann::json j;
    j["library_version"] = kVersion;
    j["variables"] = data.names;

    if (data.correlation) {
        {
            std::ofstream out(dir / "correlation.csv");
            write_matrix_csv(out, data.correlation->full(), 3);
        }
        const PcSimilarityTable table = pc_similarity(*data.correlation);
        const std::size_t c = table.eigenvalues.size();

        std::ostringstream variance;
        variance << "No.,eigenvalue,cumulative_eigenvalues,percent_of_variance,"
                    "cumulative_percent\n";
        double running = 0.0;
        for (std::size_t i = 0; i < c; ++i) {
            running += table.eigenvalues[i];
            char row[160];
            std::snprintf(row, sizeof row, "%zu,%.3f,%.3f,%s,%s\n", i + 1, table.eigenvalues[i],
                          running,
                          percent_cell(100.0 * table.eigenvalues[i] / static_cast<double>(c)).c_str(),
                          percent_cell(table.cumulative_variance[i]).c_str());
            variance << row;
        }
        write_text(dir / "pca_variance.csv", variance.str());

        std::ostringstream similarity;
        similarity << "PC";
        for (const auto& name : data.names) similarity << ',' << name;
        similarity << '\n';
        for (std::size_t j2 = 0; j2 < c; ++j2) {
            similarity << "PC" << (j2 + 1);
            for (std::size_t i = 0; i < c; ++i) {
                similarity << ',' << percent_cell(100.0 * table.det(j2, i));
            }
            similarity << '\n';
        }
        write_text(dir / "pc_similarity.csv", similarity.str());

        j["eigenvalues"] = table.eigenvalues;
        j["cumulative_variance"] = table.cumulative_variance;
    }
    write_text(dir / "analyze.json", j.dump(2));
    std::cout << "analysis tables written to " << dir.string() << "\n";
    return 0;
}

int run_sweep(const InputArgs& input, double lo, double hi, double step,
              const std::string& out_file, Exec exec) {
    const Dataset data = input.load();
    const auto points = epsilon_sweep(data.similarity, lo, hi, step, exec);
    std::ostringstream out;
    out << "epsilon,components,kind\n";
    for (const auto& p : points) {
        char row[96];
        std::snprintf(row, sizeof row, "%.3f,%zu,%s\n", p.epsilon, p.components,
                      to_string(p.kind));
        out << row;
    }
    if (out_file.empty()) {
        std::cout << out.str();
    } else {
        write_text(out_file, out.str());
        std::cout << "sweep report written to " << out_file << "\n";
    }
    return 0;
}

int run_cluster(const InputArgs& input, const std::string& variant_text, std::size_t k,
                const std::vector<std::size_t>& init_indices, const std::string& reference_text,
                const std::string& out_dir) {
    const Dataset data = input.load();
    VariantCode variant = VariantCode::parse(variant_text);
    if (variant.k == 0) variant.k = k;
    if (variant.k == 0) {
        throw std::invalid_argument("give k in the variant code (e.g. 4EL) or via --k");
    }

    const Embedding points = variant_embedding(data, variant, variant.k);
    InitialSet init;
    if (!init_indices.empty()) {
        init.indices = init_indices;
        std::sort(init.indices.begin(), init.indices.end());
    } else {
        // First admissible set in lexicographic order.
        for (auto& candidate : enumerate_initial_sets(data.variable_count(), variant.k)) {
            if (rows_pairwise_distinct(points.points, candidate.indices)) {
                init = std::move(candidate);
                break;
            }
        }
        if (init.indices.empty()) {
            throw std::runtime_error("no admissible initial set of pairwise-distinct points");
        }
    }
    init.entropy = entropy(points, init, variant.measure);

    const Partition partition = kmeans(points, init, variant.measure);
    std::cout << "variant " << variant.str() << ", initial set [";
    for (std::size_t i = 0; i < init.indices.size(); ++i) {
        std::cout << (i ? " " : "") << init.indices[i];
    }
    std::cout << "], entropy " << init.entropy << "\n";
    std::cout << (partition.converged ? "converged" : "iteration cap hit") << " after "
              << partition.iterations << " rounds\n";
    for (std::size_t i = 0; i < partition.labels.size(); ++i) {
        std::cout << data.names[i] << " -> cluster " << partition.labels[i] << "\n";
    }
    if (!reference_text.empty()) {
        const ReferenceSpec spec = ReferenceSpec::parse(reference_text);
        const Partition reference =
            spec.kind == ReferenceSpec::Kind::relation_components
                ? derive_reference(data.similarity, spec.epsilon, variant.k)
                : read_partition_file(spec.path);
        const EfficiencyScore score = match_partitions(partition, reference);
        std::cout << "efficiency " << score.ratio() << " (" << percent_cell(score.percent())
                  << ")\n";
    }
    if (!out_dir.empty()) {
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        {
            std::ofstream out(dir / "embedding.csv");
            write_embedding_csv(out, points);
        }
        {
            std::ofstream out(dir / "partition.csv");
            write_partition_csv(out, partition, data.names);
        }
        std::cout << "embedding and partition written to " << dir.string() << "\n";
    }
    return 0;
}

int run_experiment_cmd(const ExperimentConfig& config, Exec exec) {
    const ExperimentResult result = run_experiment(config, exec);
    if (config.output_dir.empty()) {
        std::cout << render_statistics_csv(result) << "\n"
                  << render_distribution_csv(result) << "\n"
                  << render_entropy_delta_csv(result);
        return 0;
    }
    write_reports(result, config.output_dir);
    std::cout << "reports written to " << config.output_dir << "\n";
    std::cout << render_statistics_csv(result);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertical clustering of correlated variables"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "run single-threaded (reference execution path)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "correlation/determination/PCA tables");
    InputArgs analyze_input;
    add_input_options(analyze, analyze_input);
    std::string analyze_out = ".";
    analyze->add_option("--out", analyze_out, "output directory");
    std::vector<double> relation_epsilons;
    analyze->add_option("--relation-at", relation_epsilons,
                        "also write the 0/1 relation matrix at these thresholds");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "component count per similarity threshold");
    InputArgs sweep_input;
    add_input_options(sweep, sweep_input);
    double lo = 0.40, hi = 0.70, step = 0.05;
    sweep->add_option("--lo", lo, "lowest threshold")->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--hi", hi, "highest threshold")->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--step", step, "threshold step");
    std::string sweep_out;
    sweep->add_option("--out", sweep_out, "output CSV file (default stdout)");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "single variant run");
    InputArgs cluster_input;
    add_input_options(cluster, cluster_input);
    std::string variant_text;
    cluster->add_option("--variant,--variants", variant_text, "variant code, e.g. 4EL45%")
        ->required();
    std::size_t cluster_k = 0;
    cluster->add_option("--k", cluster_k, "cluster count when the code carries none");
    std::vector<std::size_t> init_indices;
    cluster->add_option("--init-set", init_indices,
                        "initial point indices (default: first admissible set)");
    std::string cluster_reference;
    cluster->add_option("--reference", cluster_reference,
                        "relation:<epsilon> or file:<path> to score against");
    std::string cluster_out;
    cluster->add_option("--out", cluster_out, "output directory for embedding and partition");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "full variant x initial-set grid");
    std::string config_path;
    experiment->add_option("--config", config_path, "JSON config file");
    InputArgs experiment_input;
    experiment->add_option("--input", experiment_input.path, "input CSV file");
    experiment->add_option("--input-kind", experiment_input.kind,
                           "observations | similarity | correlation")
        ->check(CLI::IsMember({"observations", "similarity", "correlation"}));
    std::vector<double> epsilons;
    experiment->add_option("--epsilon", epsilons, "threshold(s) for <X>Leps-style variants");
    std::size_t k = 0;
    experiment->add_option("--k", k, "number of clusters");
    std::vector<std::string> variants;
    experiment->add_option("--variants", variants, "variant codes")->delimiter(',');
    std::string init_kind = "exhaustive";
    experiment->add_option("--init", init_kind, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    std::size_t runs = 300;
    experiment->add_option("--runs", runs, "random initial sets to draw");
    std::uint64_t seed = 1;
    experiment->add_option("--seed", seed, "random seed");
    double entropy_fraction = 1.0 / 3.0;
    experiment->add_option("--entropy-fraction", entropy_fraction,
                           "highest-entropy fraction for the filtered report");
    std::string reference_text;
    experiment->add_option("--reference", reference_text, "relation:<epsilon> or file:<path>");
    std::string experiment_out;
    experiment->add_option("--out", experiment_out, "report directory");
    std::size_t cap = 300;
    experiment->add_option("--cap", cap, "exhaustive enumeration cap");

    CLI11_PARSE(app, argc, argv);
    const Exec exec = serial ? Exec::serial : Exec::openmp;

    try {
        if (*analyze) return run_analyze(analyze_input, analyze_out, relation_epsilons);
        if (*sweep) return run_sweep(sweep_input, lo, hi, step, sweep_out, exec);
        if (*cluster) {
            return run_cluster(cluster_input, variant_text, cluster_k, init_indices,
                               cluster_reference, cluster_out);
        }
        if (*experiment) {
            ExperimentConfig config;
            if (!config_path.empty()) {
                config = ExperimentConfig::from_json_file(config_path);
            }
            if (!experiment_input.path.empty()) config.input_path = experiment_input.path;
            if (experiment->count("--input-kind")) {
                config.input_kind = parse_input_kind(experiment_input.kind);
            }
            if (!epsilons.empty()) config.epsilons = epsilons;
            if (k > 0) config.k = k;
            if (!variants.empty()) config.variants = variants;
            if (experiment->count("--init")) {
                config.init.kind = init_kind == "random" ? InitStrategy::Kind::random
                                                         : InitStrategy::Kind::exhaustive;
            }
            if (experiment->count("--runs")) config.init.runs = runs;
            if (experiment->count("--seed")) config.init.seed = seed;
            if (experiment->count("--entropy-fraction")) config.entropy_fraction = entropy_fraction;
            if (!reference_text.empty()) config.reference = ReferenceSpec::parse(reference_text);
            if (!experiment_out.empty()) config.output_dir = experiment_out;
            if (experiment->count("--cap")) config.exhaustive_cap = cap;
            return run_experiment_cmd(config, exec);
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
