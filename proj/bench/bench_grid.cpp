// Benchmark: the experiment grid and the threshold sweep under the serial
// reference path versus the OpenMP path, verifying identical reports.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "vclust/pipeline.hpp"
#include "vclust/relation.hpp"

using namespace vclust;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Block-structured similarity: within-block values high, cross-block low, so
// the relation at 0.5 recovers the planted blocks.
SymmetricMatrix planted_similarity(std::size_t c, std::size_t blocks, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    SymmetricMatrix s(c);
    for (std::size_t i = 0; i < c; ++i) {
        s.set(i, i, 1.0);
        for (std::size_t j = i + 1; j < c; ++j) {
            const bool same_block = i % blocks == j % blocks;
            s.set(i, j, same_block ? uniform(0.6, 0.9) : uniform(0.0, 0.4));
        }
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t c = 120;
    std::size_t k = 6;
    std::size_t runs = 300;
    if (argc > 1) c = std::stoul(argv[1]);
    if (argc > 2) k = std::stoul(argv[2]);
    if (argc > 3) runs = std::stoul(argv[3]);

    const Dataset data = dataset_from_similarity(planted_similarity(c, k, 7));

    ExperimentConfig config;
    config.k = k;
    config.epsilons = {0.5};
    config.variants = {"EL", "CL", "EnL", "CnL", "ELeps", "CnLeps"};
    config.init.kind = InitStrategy::Kind::random;
    config.init.runs = runs;
    config.init.seed = 99;
    config.reference.kind = ReferenceSpec::Kind::relation_components;
    config.reference.epsilon = 0.5;

    std::printf("experiment grid: c=%zu k=%zu runs=%zu variants=%zu\n", c, k, runs,
                config.variants.size() + 1);

    auto start = Clock::now();
    const auto serial = run_experiment(data, config, Exec::serial);
    const double t_serial = seconds_since(start);

    start = Clock::now();
    const auto parallel = run_experiment(data, config, Exec::openmp);
    const double t_parallel = seconds_since(start);

    const bool identical = render_report_json(serial) == render_report_json(parallel);
    std::printf("  serial   %8.3f s\n", t_serial);
    std::printf("  openmp   %8.3f s   speedup %.2fx   reports identical: %s\n", t_parallel,
                t_serial / t_parallel, identical ? "yes" : "NO");

    std::printf("threshold sweep: c=%zu, 1001 thresholds\n", c);
    start = Clock::now();
    const auto sweep_serial = epsilon_sweep(data.similarity, 0.0, 1.0, 0.001, Exec::serial);
    const double s_serial = seconds_since(start);
    start = Clock::now();
    const auto sweep_parallel = epsilon_sweep(data.similarity, 0.0, 1.0, 0.001, Exec::openmp);
    const double s_parallel = seconds_since(start);
    bool sweep_identical = sweep_serial.size() == sweep_parallel.size();
    for (std::size_t i = 0; sweep_identical && i < sweep_serial.size(); ++i) {
        sweep_identical = sweep_serial[i].components == sweep_parallel[i].components &&
                          sweep_serial[i].kind == sweep_parallel[i].kind;
    }
    std::printf("  serial   %8.3f s\n", s_serial);
    std::printf("  openmp   %8.3f s   speedup %.2fx   reports identical: %s\n", s_parallel,
                s_serial / s_parallel, sweep_identical ? "yes" : "NO");
    return identical && sweep_identical ? 0 : 1;
}
