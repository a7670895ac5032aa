#include "vclust/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vclust/csv.hpp"
#include "vclust/relation.hpp"
#include "vclust/spectral.hpp"
#include "vclust/version.hpp"

namespace vclust {

namespace {

std::string format_epsilon_percent(double epsilon) {
    const long long tenths = std::llround(epsilon * 1000.0);
    std::string out = std::to_string(tenths / 10);
    if (tenths % 10 != 0) {
        out += '.';
        out += std::to_string(tenths % 10);
    }
    return out + "%";
}

std::string format_percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", value);
    return buf;
}

std::string format_signed_pp(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", value);
    return buf;
}

}  // namespace

VariantCode VariantCode::parse(std::string_view text) {
    const std::string_view original = text;
    const auto fail = [&](const std::string& why) -> VariantCode {
        throw std::invalid_argument("variant code '" + std::string(original) + "': " + why);
    };

    VariantCode code;
    std::size_t pos = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > 0) {
        std::size_t k = 0;
        std::from_chars(text.data(), text.data() + pos, k);
        if (k == 0) fail("k must be positive");
        code.k = k;
    }
    text.remove_prefix(pos);

    if (text.empty() || (text[0] != 'E' && text[0] != 'C')) fail("expected measure E or C");
    code.measure = text[0] == 'E' ? Dissimilarity::euclidean : Dissimilarity::cosine;
    text.remove_prefix(1);

    bool normalized = false;
    if (!text.empty() && text[0] == 'n') {
        normalized = true;
        text.remove_prefix(1);
    }

    if (text.empty() || (text[0] != 'P' && text[0] != 'L')) fail("expected source P or L");
    const bool pc_source = text[0] == 'P';
    text.remove_prefix(1);

    if (pc_source) {
        if (!text.empty()) fail("P takes no epsilon");
        if (normalized && code.measure == Dissimilarity::cosine) {
            fail("the cosine measure is normalization-invariant; use CP");
        }
        code.source = normalized ? VariantSource::pc_normalized : VariantSource::pc;
        return code;
    }

    if (text.empty()) {
        code.source =
            normalized ? VariantSource::normalized_laplacian : VariantSource::laplacian;
        return code;
    }

    bool percent = false;
    if (text.back() == '%') {
        percent = true;
        text.remove_suffix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("bad epsilon");
    if (percent) value /= 100.0;
    if (!(value >= 0.0 && value <= 1.0)) {
        fail("epsilon must lie in [0,1]; write percentages with a trailing %");
    }
    code.epsilon = value;
    code.source = normalized ? VariantSource::relation_normalized_laplacian
                             : VariantSource::relation_laplacian;
    return code;
}

std::string VariantCode::str() const {
    std::string out;
    if (k > 0) out += std::to_string(k);
    out += measure == Dissimilarity::euclidean ? 'E' : 'C';
    switch (source) {
        case VariantSource::pc: out += 'P'; break;
        case VariantSource::pc_normalized: out += "nP"; break;
        case VariantSource::laplacian: out += 'L'; break;
        case VariantSource::normalized_laplacian: out += "nL"; break;
        case VariantSource::relation_laplacian: out += 'L'; out += format_epsilon_percent(epsilon); break;
        case VariantSource::relation_normalized_laplacian:
            out += "nL";
            out += format_epsilon_percent(epsilon);
            break;
    }
    return out;
}

InputKind parse_input_kind(std::string_view text) {
    if (text == "observations") return InputKind::observations;
    if (text == "similarity") return InputKind::similarity;
    if (text == "correlation") return InputKind::correlation;
    throw std::invalid_argument("input kind must be observations, similarity or correlation");
}

const char* to_string(InputKind kind) {
    switch (kind) {
        case InputKind::observations: return "observations";
        case InputKind::similarity: return "similarity";
        case InputKind::correlation: return "correlation";
    }
    return "?";
}

namespace {

std::vector<std::string> default_names(std::size_t c) {
    std::vector<std::string> names;
    names.reserve(c);
    for (std::size_t i = 0; i < c; ++i) names.push_back("V" + std::to_string(i + 1));
    return names;
}

void require_similarity_role(const SymmetricMatrix& s) {
    constexpr double slack = 1e-9;
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (std::abs(s(i, i) - 1.0) > slack) {
            throw std::invalid_argument("similarity matrix needs a unit diagonal");
        }
        for (std::size_t j = i + 1; j < s.order(); ++j) {
            if (s(i, j) < -slack || s(i, j) > 1.0 + slack) {
                throw std::invalid_argument("similarity entries must lie in [0,1]");
            }
        }
    }
}

}  // namespace

Dataset dataset_from_similarity(SymmetricMatrix s, std::vector<std::string> names) {
    require_similarity_role(s);
    Dataset d{names.empty() ? default_names(s.order()) : std::move(names), std::nullopt,
              std::nullopt, std::move(s)};
    return d;
}

Dataset dataset_from_correlation(SymmetricMatrix corr, std::vector<std::string> names) {
    SymmetricMatrix sim = determination_matrix(corr);
    Dataset d{names.empty() ? default_names(corr.order()) : std::move(names), std::nullopt,
              std::move(corr), std::move(sim)};
    return d;
}

Dataset dataset_from_observations(ObservationTable table) {
    table.validate();
    SymmetricMatrix corr = correlation_matrix(table);
    SymmetricMatrix sim = determination_matrix(corr);
    std::vector<std::string> names =
        table.names.empty() ? default_names(corr.order()) : table.names;
    return Dataset{std::move(names), std::move(table), std::move(corr), std::move(sim)};
}

Dataset load_dataset(const std::string& path, InputKind kind) {
    switch (kind) {
        case InputKind::observations:
            return dataset_from_observations(read_observations_file(path));
        case InputKind::correlation:
            return dataset_from_correlation(read_symmetric_file(path));
        case InputKind::similarity:
            return dataset_from_similarity(read_symmetric_file(path));
    }
    throw std::logic_error("unreachable");
}

ReferenceSpec ReferenceSpec::parse(std::string_view text) {
    ReferenceSpec spec;
    if (text.starts_with("relation:")) {
        text.remove_prefix(9);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw std::invalid_argument("reference: bad epsilon in 'relation:<epsilon>'");
        }
        spec.kind = Kind::relation_components;
        spec.epsilon = value;
        return spec;
    }
    if (text.starts_with("file:")) {
        spec.kind = Kind::file;
        spec.path = std::string(text.substr(5));
        return spec;
    }
    throw std::invalid_argument("reference must be 'relation:<epsilon>' or 'file:<path>'");
}

std::string ReferenceSpec::str() const {
    if (kind == Kind::file) return "file:" + path;
    char buf[48];
    std::snprintf(buf, sizeof buf, "relation:%g", epsilon);
    return buf;
}

std::string InitStrategy::str() const {
    if (kind == Kind::exhaustive) return "exhaustive";
    std::ostringstream out;
    out << "random runs=" << runs << " seed=" << seed;
    return out.str();
}

Partition derive_reference(const SymmetricMatrix& s, double epsilon, std::size_t expected_k) {
    const RelationMatrix r = build_relation(s, epsilon);
    Partition p = connected_components(r);
    if (p.cluster_count != expected_k) {
        const double lo = std::max(0.0, epsilon - 0.05);
        const double hi = std::min(1.0, epsilon + 0.05);
        const auto sweep = epsilon_sweep(s, lo, hi, 0.005, Exec::serial);
        std::ostringstream msg;
        msg << "derive_reference: relation at epsilon=" << epsilon << " has " << p.cluster_count
            << " components, expected " << expected_k << "; nearby sweep:";
        for (const auto& point : sweep) {
            msg << ' ' << point.epsilon << "->" << point.components;
        }
        throw std::runtime_error(msg.str());
    }
    std::ostringstream prov;
    prov << p.cluster_count << "Man from relation components at epsilon="
         << format_epsilon_percent(epsilon);
    p.provenance = prov.str();
    return p;
}

Embedding variant_embedding(const Dataset& data, const VariantCode& variant, std::size_t k) {
    switch (variant.source) {
        case VariantSource::pc:
        case VariantSource::pc_normalized: {
            if (!data.correlation) {
                throw std::invalid_argument(
                    "variant " + variant.str() +
                    " needs a correlation matrix; a similarity-only input cannot provide one");
            }
            Embedding e = pc_cluster_points(pc_similarity(*data.correlation), k);
            if (variant.source == VariantSource::pc_normalized) e = normalize_rows(e);
            return e;
        }
        case VariantSource::laplacian:
            return spectral_embedding(laplacian(data.similarity), k, false, "laplacian");
        case VariantSource::normalized_laplacian:
            return spectral_embedding(normalized_laplacian(data.similarity), k, true,
                                      "normalized-laplacian");
        case VariantSource::relation_laplacian: {
            const RelationMatrix r = build_relation(data.similarity, variant.epsilon);
            return spectral_embedding(laplacian(r.as_similarity()), k, false, "laplacian");
        }
        case VariantSource::relation_normalized_laplacian: {
            const RelationMatrix r = build_relation(data.similarity, variant.epsilon);
            return spectral_embedding(normalized_laplacian(r.as_similarity()), k, true,
                                      "normalized-laplacian");
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

std::vector<VariantCode> resolve_variants(const ExperimentConfig& config) {
    std::vector<VariantCode> out;
    for (const std::string& text : config.variants) {
        std::vector<VariantCode> parsed;
        if (text.size() > 3 && text.ends_with("eps")) {
            // "ELeps" style codes expand over the config's epsilon list.
            if (config.epsilons.empty()) {
                throw std::invalid_argument("variant '" + text +
                                            "' needs a non-empty epsilons list");
            }
            VariantCode base = VariantCode::parse(text.substr(0, text.size() - 3));
            if (base.source != VariantSource::laplacian &&
                base.source != VariantSource::normalized_laplacian) {
                throw std::invalid_argument("variant '" + text + "': only L/nL take an epsilon");
            }
            for (double eps : config.epsilons) {
                VariantCode v = base;
                v.source = base.source == VariantSource::laplacian
                               ? VariantSource::relation_laplacian
                               : VariantSource::relation_normalized_laplacian;
                v.epsilon = eps;
                parsed.push_back(v);
            }
        } else {
            parsed.push_back(VariantCode::parse(text));
        }
        for (VariantCode& v : parsed) {
            if (v.k == 0) v.k = config.k;
            if (v.k != config.k) {
                throw std::invalid_argument("variant " + v.str() + " conflicts with k=" +
                                            std::to_string(config.k));
            }
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("experiment has no variants");
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const Dataset& data, const ExperimentConfig& config, Exec exec) {
    const std::size_t c = data.variable_count();
    if (config.k < 1 || config.k > c) {
        throw std::invalid_argument("experiment k out of range");
    }

    Partition reference;
    if (config.reference.kind == ReferenceSpec::Kind::relation_components) {
        reference = derive_reference(data.similarity, config.reference.epsilon, config.k);
    } else {
        reference = read_partition_file(config.reference.path);
        if (reference.labels.size() != c) {
            throw std::invalid_argument("reference partition order mismatch");
        }
    }

    const std::vector<VariantCode> variants = resolve_variants(config);

    if (config.init.kind == InitStrategy::Kind::exhaustive) {
        const unsigned long long total = binomial(c, config.k, config.exhaustive_cap + 1ULL);
        if (total > config.exhaustive_cap) {
            std::ostringstream msg;
            msg << "exhaustive initial sets: C(" << c << "," << config.k << ") exceeds the cap "
                << config.exhaustive_cap << "; use the random strategy";
            throw std::invalid_argument(msg.str());
        }
    }

    ExperimentResult result;
    result.config = config;
    result.names = data.names;
    result.reference = reference;
    result.variants.resize(variants.size());

    const BucketScheme scheme =
        c <= 10 ? BucketScheme::exact_levels : BucketScheme::percent_bands;

    // Per-variant setup: embedding, admissible initial sets, entropies.
    std::vector<Embedding> embeddings(variants.size());
    for (std::size_t v = 0; v < variants.size(); ++v) {
        VariantResult& vr = result.variants[v];
        vr.variant = variants[v];
        embeddings[v] = variant_embedding(data, variants[v], config.k);

        std::vector<InitialSet> sets =
            config.init.kind == InitStrategy::Kind::exhaustive
                ? enumerate_initial_sets(c, config.k)
                : sample_initial_sets(c, config.k, config.init.runs, config.init.seed);
        for (InitialSet& set : sets) {
            if (!rows_pairwise_distinct(embeddings[v].points, set.indices)) {
                ++vr.inadmissible_sets;  // coinciding points cannot seed k clusters
                continue;
            }
            set.entropy = entropy(embeddings[v], set, variants[v].measure);
            vr.initial_sets.push_back(std::move(set));
        }
        if (vr.initial_sets.empty()) {
            throw std::runtime_error("variant " + variants[v].str() +
                                     " has no admissible initial sets");
        }
    }

    // The variant x initial-set grid is a parallel map with order-stable
    // collection: every task owns one pre-sized slot.
    struct Task {
        std::size_t variant;
        std::size_t set;
    };
    std::vector<Task> tasks;
    for (std::size_t v = 0; v < variants.size(); ++v) {
        for (std::size_t s = 0; s < result.variants[v].initial_sets.size(); ++s) {
            tasks.push_back({v, s});
        }
    }
    std::vector<std::vector<EfficiencyScore>> scores(variants.size());
    for (std::size_t v = 0; v < variants.size(); ++v) {
        scores[v].resize(result.variants[v].initial_sets.size());
    }
    parallel_for(tasks.size(), exec, [&](std::size_t t) {
        const auto [v, s] = tasks[t];
        const Partition candidate =
            kmeans(embeddings[v], result.variants[v].initial_sets[s], variants[v].measure);
        scores[v][s] = match_partitions(candidate, reference);
    });

    for (std::size_t v = 0; v < variants.size(); ++v) {
        VariantResult& vr = result.variants[v];
        vr.full = make_report(variants[v].str(), scores[v], scheme);

        const auto picked = top_entropy_selection(vr.initial_sets, config.entropy_fraction);
        std::vector<EfficiencyScore> top_scores;
        top_scores.reserve(picked.size());
        for (std::size_t pos : picked) top_scores.push_back(scores[v][pos]);
        vr.top_entropy = make_report(variants[v].str(), std::move(top_scores), scheme);
        vr.entropy_delta_pp =
            vr.top_entropy.statistics.average_percent - vr.full.statistics.average_percent;
    }
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config, Exec exec) {
    return run_experiment(load_dataset(config.input_path, config.input_kind), config, exec);
}

// ---------------------------------------------------------------------------
// Configuration JSON
// ---------------------------------------------------------------------------

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExperimentConfig config;
    config.input_path = j.value("input", "");
    config.input_kind = parse_input_kind(j.value("input_kind", "observations"));
    if (j.contains("epsilons")) {
        for (const auto& e : j.at("epsilons")) config.epsilons.push_back(e.get<double>());
    }
    config.k = j.at("k").get<std::size_t>();
    for (const auto& v : j.at("variants")) config.variants.push_back(v.get<std::string>());
    if (j.contains("init")) {
        const auto& init = j.at("init");
        const std::string kind = init.value("kind", "exhaustive");
        if (kind == "exhaustive") {
            config.init.kind = InitStrategy::Kind::exhaustive;
        } else if (kind == "random") {
            config.init.kind = InitStrategy::Kind::random;
            config.init.runs = init.value("runs", std::size_t{300});
            config.init.seed = init.value("seed", std::uint64_t{1});
        } else {
            throw std::invalid_argument("init kind must be exhaustive or random");
        }
    }
    config.entropy_fraction = j.value("entropy_fraction", 1.0 / 3.0);
    if (j.contains("reference")) {
        const auto& ref = j.at("reference");
        if (ref.is_string()) {
            config.reference = ReferenceSpec::parse(ref.get<std::string>());
        } else {
            const std::string kind = ref.value("kind", "relation");
            if (kind == "relation") {
                config.reference.kind = ReferenceSpec::Kind::relation_components;
                config.reference.epsilon = ref.at("epsilon").get<double>();
            } else if (kind == "file") {
                config.reference.kind = ReferenceSpec::Kind::file;
                config.reference.path = ref.at("path").get<std::string>();
            } else {
                throw std::invalid_argument("reference kind must be relation or file");
            }
        }
    }
    config.output_dir = j.value("out", "");
    config.exhaustive_cap = j.value("exhaustive_cap", std::size_t{300});
    return config;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string ExperimentConfig::to_json_text() const {
    nlohmann::json j;
    j["input"] = input_path;
    j["input_kind"] = to_string(input_kind);
    j["epsilons"] = epsilons;
    j["k"] = k;
    j["variants"] = variants;
    if (init.kind == InitStrategy::Kind::exhaustive) {
        j["init"] = {{"kind", "exhaustive"}};
    } else {
        j["init"] = {{"kind", "random"}, {"runs", init.runs}, {"seed", init.seed}};
    }
    j["entropy_fraction"] = entropy_fraction;
    if (reference.kind == ReferenceSpec::Kind::relation_components) {
        j["reference"] = {{"kind", "relation"}, {"epsilon", reference.epsilon}};
    } else {
        j["reference"] = {{"kind", "file"}, {"path", reference.path}};
    }
    j["out"] = output_dir;
    j["exhaustive_cap"] = exhaustive_cap;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

namespace {

const EfficiencyReport& pick(const VariantResult& vr, bool top) {
    return top ? vr.top_entropy : vr.full;
}

}  // namespace

std::string render_statistics_csv(const ExperimentResult& result, bool top_entropy) {
    std::ostringstream out;
    out << "Statistics";
    for (const auto& vr : result.variants) out << ',' << vr.variant.str();
    out << '\n';
    out << "Average efficiency";
    for (const auto& vr : result.variants) {
        out << ',' << format_percent(pick(vr, top_entropy).statistics.average_percent);
    }
    out << '\n';
    out << "Median";
    for (const auto& vr : result.variants) out << ',' << pick(vr, top_entropy).statistics.median.ratio();
    out << '\n';
    out << "Mode";
    for (const auto& vr : result.variants) out << ',' << pick(vr, top_entropy).statistics.mode.ratio();
    out << '\n';
    out << "Minimal efficiency";
    for (const auto& vr : result.variants) out << ',' << pick(vr, top_entropy).statistics.minimum.ratio();
    out << '\n';
    out << "Maximal efficiency";
    for (const auto& vr : result.variants) out << ',' << pick(vr, top_entropy).statistics.maximum.ratio();
    out << '\n';
    return out.str();
}

std::string render_distribution_csv(const ExperimentResult& result, bool top_entropy) {
    std::ostringstream out;
    out << "Performance levels";
    for (const auto& vr : result.variants) out << ',' << vr.variant.str();
    out << '\n';
    if (result.variants.empty()) return out.str();
    const auto& labels = pick(result.variants.front(), top_entropy).distribution;
    for (std::size_t b = 0; b < labels.size(); ++b) {
        out << labels[b].label;
        for (const auto& vr : result.variants) {
            out << ',' << format_percent(pick(vr, top_entropy).distribution[b].percent_of_scores);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_entropy_delta_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "variant,average_full,average_top_entropy,delta_pp\n";
    for (const auto& vr : result.variants) {
        out << vr.variant.str() << ',' << format_percent(vr.full.statistics.average_percent) << ','
            << format_percent(vr.top_entropy.statistics.average_percent) << ','
            << format_signed_pp(vr.entropy_delta_pp) << '\n';
    }
    return out.str();
}

std::string render_scores_csv(const VariantResult& vr) {
    std::ostringstream out;
    out << "indices,entropy,matched,total,percent\n";
    for (std::size_t s = 0; s < vr.initial_sets.size(); ++s) {
        const auto& set = vr.initial_sets[s];
        for (std::size_t i = 0; i < set.indices.size(); ++i) {
            if (i) out << ';';
            out << set.indices[i];
        }
        char entropy_text[48];
        std::snprintf(entropy_text, sizeof entropy_text, "%.12g", set.entropy);
        const auto& score = vr.full.scores[s];
        out << ',' << entropy_text << ',' << score.matched << ',' << score.total << ','
            << format_percent(score.percent()) << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json statistics_json(const EfficiencyStatistics& st) {
    return {{"average_percent", st.average_percent}, {"median", st.median.ratio()},
            {"mode", st.mode.ratio()},               {"minimum", st.minimum.ratio()},
            {"maximum", st.maximum.ratio()}};
}

nlohmann::json distribution_json(const std::vector<Bucket>& buckets) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& b : buckets) {
        out.push_back({{"label", b.label}, {"count", b.count}, {"percent", b.percent_of_scores}});
    }
    return out;
}

}  // namespace

std::string render_manifest_json(const ExperimentResult& result) {
    nlohmann::json j;
    j["library_version"] = kVersion;
    j["config"] = nlohmann::json::parse(result.config.to_json_text());
    j["variables"] = result.names;
    j["reference"] = {{"labels", result.reference.labels},
                      {"clusters", result.reference.cluster_count},
                      {"provenance", result.reference.provenance}};
    nlohmann::json variants = nlohmann::json::array();
    for (const auto& vr : result.variants) {
        variants.push_back({{"code", vr.variant.str()},
                            {"initial_sets", vr.initial_sets.size()},
                            {"inadmissible_sets", vr.inadmissible_sets}});
    }
    j["variants"] = variants;
    return j.dump(2);
}

std::string render_report_json(const ExperimentResult& result) {
    nlohmann::json j;
    j["library_version"] = kVersion;
    j["reference"] = {{"labels", result.reference.labels},
                      {"clusters", result.reference.cluster_count},
                      {"provenance", result.reference.provenance}};
    nlohmann::json variants = nlohmann::json::array();
    for (const auto& vr : result.variants) {
        nlohmann::json sets = nlohmann::json::array();
        for (std::size_t s = 0; s < vr.initial_sets.size(); ++s) {
            sets.push_back({{"indices", vr.initial_sets[s].indices},
                            {"entropy", vr.initial_sets[s].entropy},
                            {"matched", vr.full.scores[s].matched},
                            {"total", vr.full.scores[s].total}});
        }
        variants.push_back({{"code", vr.variant.str()},
                            {"statistics", statistics_json(vr.full.statistics)},
                            {"distribution", distribution_json(vr.full.distribution)},
                            {"top_entropy_statistics", statistics_json(vr.top_entropy.statistics)},
                            {"top_entropy_distribution", distribution_json(vr.top_entropy.distribution)},
                            {"entropy_delta_pp", vr.entropy_delta_pp},
                            {"initial_sets", sets}});
    }
    j["variants"] = variants;
    return j.dump(2);
}

namespace {

std::string sanitize_filename(const std::string& code) {
    std::string out;
    for (char ch : code) {
        if (ch == '%') {
            out += "pct";
        } else if (ch == '.') {
            out += '_';
        } else {
            out += ch;
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

}  // namespace

void write_reports(const ExperimentResult& result, const std::string& dir) {
    const std::filesystem::path base(dir);
    std::filesystem::create_directories(base);
    write_file(base / "manifest.json", render_manifest_json(result));
    write_file(base / "report.json", render_report_json(result));
    write_file(base / "statistics.csv", render_statistics_csv(result, false));
    write_file(base / "distribution.csv", render_distribution_csv(result, false));
    write_file(base / "statistics_top_entropy.csv", render_statistics_csv(result, true));
    write_file(base / "distribution_top_entropy.csv", render_distribution_csv(result, true));
    write_file(base / "entropy_delta.csv", render_entropy_delta_csv(result));
    for (const auto& vr : result.variants) {
        write_file(base / ("scores_" + sanitize_filename(vr.variant.str()) + ".csv"),
                   render_scores_csv(vr));
    }
    {
        std::ofstream out(base / "reference_partition.csv");
        write_partition_csv(out, result.reference, result.names);
    }
}

}  // namespace vclust
