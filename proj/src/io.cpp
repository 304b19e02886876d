#include "qgol/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qgol/dense.hpp"
#include "qgol/error.hpp"
#include "qgol/mps.hpp"
#include "qgol/version.hpp"

namespace qgol {

namespace {

// Strict field access over one JSON object: every key must be consumed.
class Fields {
  public:
    Fields(const Json &doc, std::string where) : doc_(doc), where_(std::move(where)) {
        if (!doc_.is_object()) throw ConfigError(where_ + ": expected an object");
    }

    bool has(const std::string &key) const { return doc_.contains(key); }

    template <typename T> T get(const std::string &key) {
        if (!doc_.contains(key)) throw ConfigError(name(key) + ": missing required field");
        return convert<T>(key);
    }

    template <typename T> T get_or(const std::string &key, T fallback) {
        if (!doc_.contains(key)) return fallback;
        return convert<T>(key);
    }

    const Json &sub(const std::string &key) {
        if (!doc_.contains(key)) throw ConfigError(name(key) + ": missing required section");
        seen_.insert(key);
        return doc_.at(key);
    }

    std::string name(const std::string &key) const { return where_.empty() ? key : where_ + "." + key; }

    void finish() const {
        for (const auto &[key, value] : doc_.items()) {
            if (!seen_.contains(key)) throw ConfigError(name(key) + ": unknown field");
        }
    }

  private:
    template <typename T> T convert(const std::string &key) {
        seen_.insert(key);
        const Json &value = doc_.at(key);
        try {
            if constexpr (std::is_same_v<T, double>) {
                if (!value.is_number()) throw ConfigError("");
            } else if constexpr (std::is_same_v<T, bool>) {
                if (!value.is_boolean()) throw ConfigError("");
            } else if constexpr (std::is_integral_v<T>) {
                if (!value.is_number_integer()) throw ConfigError("");
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!value.is_string()) throw ConfigError("");
            }
            return value.get<T>();
        } catch (const std::exception &) {
            throw ConfigError(name(key) + ": wrong type (" + value.dump() + ")");
        }
    }

    const Json &doc_;
    std::string where_;
    std::set<std::string> seen_;
};

std::string initial_kind_name(InitialCondition::Kind kind) {
    switch (kind) {
    case InitialCondition::Kind::Bits: return "bits";
    case InitialCondition::Kind::Preset: return "preset";
    case InitialCondition::Kind::Random: return "random";
    }
    return "unknown";
}

Json to_json(const InitialCondition &init) {
    Json doc{{"kind", initial_kind_name(init.kind)}};
    switch (init.kind) {
    case InitialCondition::Kind::Bits: doc["bits"] = init.bits; break;
    case InitialCondition::Kind::Preset: doc["name"] = init.preset; break;
    case InitialCondition::Kind::Random:
        doc["rho0"] = init.rho0;
        doc["seed"] = init.seed;
        break;
    }
    return doc;
}

InitialCondition initial_from_json(const Json &doc, const std::string &where) {
    Fields f(doc, where);
    InitialCondition init;
    const auto kind = f.get<std::string>("kind");
    if (kind == "bits") {
        init.kind = InitialCondition::Kind::Bits;
        init.bits = f.get<std::string>("bits");
    } else if (kind == "preset") {
        init.kind = InitialCondition::Kind::Preset;
        init.preset = f.get<std::string>("name");
    } else if (kind == "random") {
        init.kind = InitialCondition::Kind::Random;
        init.rho0 = f.get<double>("rho0");
        init.seed = f.get<std::uint64_t>("seed");
    } else {
        throw ConfigError(f.name("kind") + ": expected bits, preset or random, got '" + kind + "'");
    }
    f.finish();
    return init;
}

Json to_json(const OutputSpec &out) {
    return Json{{"directory", out.directory}, {"prefix", out.prefix}, {"amplitudes", out.amplitudes}};
}

OutputSpec output_from_json(const Json &doc, const std::string &where) {
    Fields f(doc, where);
    OutputSpec out;
    out.directory = f.get_or<std::string>("directory", out.directory);
    out.prefix = f.get_or<std::string>("prefix", out.prefix);
    out.amplitudes = f.get_or<bool>("amplitudes", out.amplitudes);
    f.finish();
    return out;
}

Json ensemble_core_to_json(const EnsembleSpec &spec) {
    return Json{{"num_sites", spec.num_sites},
                {"rho0_grid", spec.rho0_grid},
                {"realizations", spec.realizations},
                {"backend", to_string(spec.backend)},
                {"evolution", to_json(spec.params)},
                {"bond_cap", spec.bond_cap},
                {"generations", spec.generations},
                {"boundary", to_string(spec.boundary)},
                {"master_seed", spec.master_seed},
                {"window_fraction", spec.window_fraction},
                {"threads", spec.threads}};
}

std::vector<double> read_grid(Fields &f, const std::string &key) {
    const Json &grid = f.sub(key);
    if (!grid.is_array()) throw ConfigError(f.name(key) + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto &v : grid) {
        if (!v.is_number()) throw ConfigError(f.name(key) + ": expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path &path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    return out;
}

void write_json(const std::filesystem::path &path, const Json &doc) {
    auto out = open_output(path);
    out << doc.dump(2) << '\n';
}

std::filesystem::path output_path(const OutputSpec &out, const std::string &suffix) {
    return std::filesystem::path(out.directory) / (out.prefix + suffix);
}

Json metadata_json(const std::map<std::string, std::string> &meta) {
    Json doc = Json::object();
    for (const auto &[k, v] : meta) doc[k] = v;
    return doc;
}

Json point_to_json(const EnsemblePoint &p) {
    Json reals = Json::array();
    for (const auto &r : p.realizations) {
        reals.push_back({{"seed", r.seed},
                         {"initial_config", r.initial_config},
                         {"rho_eq", r.rho_eq},
                         {"delta_eq", r.delta_eq},
                         {"delta_literal_eq", r.delta_literal_eq},
                         {"rho_drift", r.rho_drift},
                         {"delta_drift", r.delta_drift}});
    }
    return Json{{"rho0", p.rho0},
                {"rho_eq_mean", p.rho_eq_mean},
                {"rho_eq_stderr", p.rho_eq_stderr},
                {"delta_eq_mean", p.delta_eq_mean},
                {"delta_eq_stderr", p.delta_eq_stderr},
                {"delta_literal_sum_mean", p.delta_literal_mean},
                {"max_drift_rho", p.max_drift_rho},
                {"realizations", reals}};
}

EnsemblePoint point_from_json(const Json &doc, const std::string &where) {
    Fields f(doc, where);
    EnsemblePoint p;
    p.rho0 = f.get<double>("rho0");
    p.rho_eq_mean = f.get<double>("rho_eq_mean");
    p.rho_eq_stderr = f.get<double>("rho_eq_stderr");
    p.delta_eq_mean = f.get<double>("delta_eq_mean");
    p.delta_eq_stderr = f.get<double>("delta_eq_stderr");
    p.delta_literal_mean = f.get<double>("delta_literal_sum_mean");
    p.max_drift_rho = f.get<double>("max_drift_rho");
    const Json &reals = f.sub("realizations");
    if (!reals.is_array()) throw ConfigError(f.name("realizations") + ": expected an array");
    for (const auto &r : reals) {
        Fields rf(r, f.name("realizations[]"));
        RealizationResult out;
        out.seed = rf.get<std::uint64_t>("seed");
        out.initial_config = rf.get<std::string>("initial_config");
        out.rho_eq = rf.get<double>("rho_eq");
        out.delta_eq = rf.get<double>("delta_eq");
        out.delta_literal_eq = rf.get<double>("delta_literal_eq");
        out.rho_drift = rf.get<double>("rho_drift");
        out.delta_drift = rf.get<double>("delta_drift");
        rf.finish();
        p.realizations.push_back(std::move(out));
    }
    f.finish();
    return p;
}

void write_ensemble_table(const std::filesystem::path &path, const EnsembleSummary &summary) {
    auto out = open_output(path);
    out << "rho0,rho_eq_mean,rho_eq_stderr,delta_eq_mean,delta_eq_stderr,delta_literal_sum_mean,R,backend\n";
    for (const auto &p : summary.points) {
        out << fmt_double(p.rho0) << ',' << fmt_double(p.rho_eq_mean) << ',' << fmt_double(p.rho_eq_stderr) << ','
            << fmt_double(p.delta_eq_mean) << ',' << fmt_double(p.delta_eq_stderr) << ','
            << fmt_double(p.delta_literal_mean) << ',' << summary.spec.realizations << ','
            << to_string(summary.spec.backend) << '\n';
    }
}

} // namespace

ClassicalConfig preset_config(const std::string &name, int num_sites) {
    LatticeSpec spec(num_sites);
    std::string pattern;
    if (name == "A") {
        pattern = "110011";
    } else if (name == "B") {
        pattern = std::string(24, '1');
    } else {
        throw ConfigError("unknown preset '" + name + "' (expected A or B)");
    }
    const int len = static_cast<int>(pattern.size());
    if (len > num_sites) {
        throw ConfigError("preset " + name + " needs at least " + std::to_string(len) + " sites");
    }
    auto config = ClassicalConfig::all_dead(num_sites);
    const int start = (num_sites - len) / 2;
    for (int k = 0; k < len; ++k) config.bits[static_cast<std::size_t>(start + k)] = pattern[static_cast<std::size_t>(k)] == '1';
    return config;
}

ClassicalConfig resolve_initial(const RunConfig &config) {
    switch (config.initial.kind) {
    case InitialCondition::Kind::Bits: {
        auto c = ClassicalConfig::from_string(config.initial.bits);
        if (c.size() != config.num_sites) {
            throw ConfigError("initial.bits: length " + std::to_string(c.size()) + " does not match num_sites " +
                              std::to_string(config.num_sites));
        }
        return c;
    }
    case InitialCondition::Kind::Preset: return preset_config(config.initial.preset, config.num_sites);
    case InitialCondition::Kind::Random:
        return sample_initial_config(config.num_sites, config.initial.rho0, config.initial.seed);
    }
    throw ConfigError("initial: unsupported kind");
}

Json to_json(const EvolutionParams &params) {
    return Json{{"dt", params.dt},
                {"t_final", params.t_final},
                {"order", params.order},
                {"sample_interval", params.sample_interval},
                {"generation_time", params.generation_time}};
}

EvolutionParams evolution_from_json(const Json &doc) {
    Fields f(doc, "evolution");
    EvolutionParams p;
    p.dt = f.get_or<double>("dt", p.dt);
    p.t_final = f.get_or<double>("t_final", p.t_final);
    p.order = f.get_or<int>("order", p.order);
    p.sample_interval = f.get_or<double>("sample_interval", p.sample_interval);
    p.generation_time = f.get_or<double>("generation_time", p.generation_time);
    f.finish();
    return p;
}

Json to_json(const RunConfig &config) {
    return Json{{"num_sites", config.num_sites},
                {"backend", to_string(config.backend)},
                {"initial", to_json(config.initial)},
                {"evolution", to_json(config.evolution)},
                {"bond_cap", config.bond_cap},
                {"generations", config.generations},
                {"boundary", to_string(config.boundary)},
                {"output", to_json(config.output)}};
}

RunConfig run_config_from_json(const Json &doc) {
    Fields f(doc, "");
    RunConfig c;
    c.num_sites = f.get<int>("num_sites");
    c.backend = backend_from_string(f.get_or<std::string>("backend", to_string(c.backend)));
    c.initial = initial_from_json(f.sub("initial"), "initial");
    if (f.has("evolution")) c.evolution = evolution_from_json(f.sub("evolution"));
    c.bond_cap = f.get_or<int>("bond_cap", c.bond_cap);
    c.generations = f.get_or<int>("generations", c.generations);
    c.boundary = boundary_from_string(f.get_or<std::string>("boundary", to_string(c.boundary)));
    if (f.has("output")) c.output = output_from_json(f.sub("output"), "output");
    f.finish();
    return c;
}

Json to_json(const EnsembleSpec &spec, const OutputSpec &output) {
    Json doc = ensemble_core_to_json(spec);
    doc["output"] = to_json(output);
    return doc;
}

std::pair<EnsembleSpec, OutputSpec> ensemble_spec_from_json(const Json &doc) {
    Fields f(doc, "");
    EnsembleSpec s;
    OutputSpec out;
    s.num_sites = f.get<int>("num_sites");
    s.rho0_grid = read_grid(f, "rho0_grid");
    s.realizations = f.get_or<int>("realizations", s.realizations);
    s.backend = backend_from_string(f.get_or<std::string>("backend", to_string(s.backend)));
    if (f.has("evolution")) s.params = evolution_from_json(f.sub("evolution"));
    s.bond_cap = f.get_or<int>("bond_cap", s.bond_cap);
    s.generations = f.get_or<int>("generations", s.generations);
    s.boundary = boundary_from_string(f.get_or<std::string>("boundary", to_string(s.boundary)));
    s.master_seed = f.get_or<std::uint64_t>("master_seed", s.master_seed);
    s.window_fraction = f.get_or<double>("window_fraction", s.window_fraction);
    s.threads = f.get_or<int>("threads", s.threads);
    if (f.has("output")) out = output_from_json(f.sub("output"), "output");
    f.finish();
    return {s, out};
}

Json to_json(const EnsembleSummary &summary) {
    Json points = Json::array();
    for (const auto &p : summary.points) points.push_back(point_to_json(p));
    return Json{{"spec", ensemble_core_to_json(summary.spec)},
                {"metadata", metadata_json(summary.metadata)},
                {"points", points}};
}

EnsembleSummary ensemble_summary_from_json(const Json &doc) {
    Fields f(doc, "");
    EnsembleSummary s;
    s.spec = ensemble_spec_from_json(f.sub("spec")).first;
    const Json &meta = f.sub("metadata");
    if (!meta.is_object()) throw ConfigError("metadata: expected an object");
    for (const auto &[k, v] : meta.items()) {
        if (!v.is_string()) throw ConfigError("metadata." + k + ": expected a string");
        s.metadata[k] = v.get<std::string>();
    }
    const Json &points = f.sub("points");
    if (!points.is_array()) throw ConfigError("points: expected an array");
    for (const auto &p : points) s.points.push_back(point_from_json(p, "points[]"));
    f.finish();
    return s;
}

Json load_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

std::string config_hash(const Json &doc) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : doc.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TrajectoryRecord classical_record(const ClassicalTrajectory &trajectory, double generation_time) {
    TrajectoryRecord record;
    for (std::size_t g = 0; g < trajectory.configs.size(); ++g) {
        const auto &bits = trajectory.configs[g].bits;
        record_sample(record, static_cast<double>(g) * generation_time, std::vector<double>(bits.begin(), bits.end()));
    }
    compute_visibility(record, generation_time);
    record.metadata["backend"] = "classical";
    record.metadata["code_version"] = kVersion;
    return record;
}

RunOutputs cmd_run(const RunConfig &config) {
    const auto initial = resolve_initial(config);
    const Json config_doc = to_json(config);

    RunOutputs out;
    std::optional<DenseState> final_state;
    switch (config.backend) {
    case Backend::Exact:
        if (config.output.amplitudes) {
            final_state.emplace(1);
            out.record = evolve_exact(initial, config.evolution, &*final_state);
        } else {
            out.record = evolve_exact(initial, config.evolution);
        }
        break;
    case Backend::Mps: out.record = evolve_mps(initial, config.evolution, config.bond_cap); break;
    case Backend::Classical: {
        out.record = classical_record(classical_evolve(initial, config.generations, config.boundary),
                                      config.evolution.generation_time);
        out.record.metadata["boundary"] = to_string(config.boundary);
        break;
    }
    }
    auto &record = out.record;
    record.metadata["initial_config"] = initial.to_string();
    record.metadata["config_hash"] = config_hash(config_doc);
    record.metadata["dt"] = fmt_double(config.evolution.dt);
    record.metadata["order"] = std::to_string(config.evolution.order);
    record.metadata["generation_time"] = fmt_double(config.evolution.generation_time);
    record.metadata["bit_convention"] = "basis index bit (i-1) = occupation of site i (site 1 least significant)";
    if (config.initial.kind == InitialCondition::Kind::Random) {
        record.metadata["seed"] = std::to_string(config.initial.seed);
        record.metadata["rng"] = kRngName;
    }
    if (config.initial.kind == InitialCondition::Kind::Preset) {
        record.metadata["preset"] = config.initial.preset;
        record.metadata["preset_placement"] = "pattern centered, start site floor((L - len) / 2) + 1";
    }

    out.sites_table = output_path(config.output, "_sites.csv");
    {
        auto f = open_output(out.sites_table);
        f << "t,site,n,v,D\n";
        for (std::size_t s = 0; s < record.num_samples(); ++s) {
            const std::string t = fmt_double(record.times[s]);
            for (int i = 0; i < record.num_sites; ++i) {
                const auto k = static_cast<std::size_t>(i);
                f << t << ',' << (i + 1) << ',' << fmt_double(record.populations[s][k]) << ','
                  << fmt_double(record.visibility[s][k]) << ',' << int(record.discretized[s][k]) << '\n';
            }
        }
    }
    out.cluster_table = output_path(config.output, "_clusters.csv");
    {
        auto f = open_output(out.cluster_table);
        f << "t,ell,count\n";
        for (std::size_t s = 0; s < record.num_samples(); ++s) {
            const std::string t = fmt_double(record.times[s]);
            for (int ell = 1; ell <= record.num_sites; ++ell) f << t << ',' << ell << ',' << record.clusters[s].at(ell) << '\n';
        }
    }
    Json meta = metadata_json(record.metadata);
    meta["config"] = config_doc;
    Json diagnostics{{"norm", record.norm},
                     {"energy", record.energy},
                     {"discarded_weight", record.discarded_weight},
                     {"max_bond", record.max_bond},
                     {"visibility_truncated", record.visibility_truncated}};
    out.summary = output_path(config.output, "_summary.json");
    write_json(out.summary, Json{{"metadata", meta},
                                 {"times", record.times},
                                 {"density", record.density},
                                 {"diversity", record.diversity},
                                 {"diversity_literal", record.diversity_literal},
                                 {"diagnostics", diagnostics}});
    if (final_state) {
        out.amplitudes = output_path(config.output, "_amplitudes.csv");
        auto f = open_output(*out.amplitudes);
        f << "index,re,im\n";
        const auto amps = final_state->amplitudes();
        for (std::size_t k = 0; k < amps.size(); ++k) {
            f << k << ',' << fmt_double(amps[k].real()) << ',' << fmt_double(amps[k].imag()) << '\n';
        }
    }
    return out;
}

EnsembleOutputs cmd_ensemble(const EnsembleSpec &spec, const OutputSpec &output) {
    EnsembleOutputs out;
    out.result = run_ensemble(spec);
    out.result.metadata["config_hash"] = config_hash(to_json(spec, output));
    if (spec.backend == Backend::Mps) out.result.metadata["bond_cap"] = std::to_string(spec.bond_cap);
    out.table = output_path(output, "_ensemble.csv");
    write_ensemble_table(out.table, out.result);
    out.summary = output_path(output, "_ensemble.json");
    write_json(out.summary, to_json(out.result));
    return out;
}

CompareSpec compare_spec_from_json(const Json &doc) {
    Fields f(doc, "");
    EnsembleSpec shared;
    shared.num_sites = f.get<int>("num_sites");
    shared.rho0_grid = read_grid(f, "rho0_grid");
    shared.realizations = f.get_or<int>("realizations", shared.realizations);
    shared.master_seed = f.get_or<std::uint64_t>("master_seed", shared.master_seed);
    shared.window_fraction = f.get_or<double>("window_fraction", shared.window_fraction);
    shared.threads = f.get_or<int>("threads", shared.threads);

    CompareSpec spec;
    spec.quantum = shared;
    {
        Fields q(f.sub("quantum"), "quantum");
        spec.quantum.backend = backend_from_string(q.get_or<std::string>("backend", "mps"));
        if (spec.quantum.backend == Backend::Classical) {
            throw ConfigError("quantum.backend: must be exact or mps");
        }
        if (q.has("evolution")) spec.quantum.params = evolution_from_json(q.sub("evolution"));
        spec.quantum.bond_cap = q.get_or<int>("bond_cap", spec.quantum.bond_cap);
        q.finish();
    }
    spec.classical = shared;
    spec.classical.backend = Backend::Classical;
    {
        Fields c(f.sub("classical"), "classical");
        spec.classical.generations = c.get_or<int>("generations", spec.classical.generations);
        spec.classical.boundary = boundary_from_string(c.get_or<std::string>("boundary", "frozen"));
        c.finish();
    }
    if (f.has("output")) spec.output = output_from_json(f.sub("output"), "output");
    f.finish();
    return spec;
}

CompareOutputs cmd_compare(const CompareSpec &spec) {
    const auto quantum = run_ensemble(spec.quantum);
    const auto classical = run_ensemble(spec.classical);
    CompareOutputs out;
    for (std::size_t k = 0; k < quantum.points.size(); ++k) {
        out.rows.push_back({quantum.points[k].rho0, quantum.points[k], classical.points[k]});
    }
    out.table = output_path(spec.output, "_compare.csv");
    {
        auto f = open_output(out.table);
        f << "rho0,quantum_rho_eq_mean,quantum_rho_eq_stderr,quantum_delta_eq_mean,quantum_delta_eq_stderr,"
             "quantum_delta_literal_sum_mean,classical_rho_eq_mean,classical_rho_eq_stderr,classical_delta_eq_mean,"
             "classical_delta_eq_stderr,classical_delta_literal_sum_mean,R,quantum_backend\n";
        for (const auto &r : out.rows) {
            f << fmt_double(r.rho0) << ',' << fmt_double(r.quantum.rho_eq_mean) << ','
              << fmt_double(r.quantum.rho_eq_stderr) << ',' << fmt_double(r.quantum.delta_eq_mean) << ','
              << fmt_double(r.quantum.delta_eq_stderr) << ',' << fmt_double(r.quantum.delta_literal_mean) << ','
              << fmt_double(r.classical.rho_eq_mean) << ',' << fmt_double(r.classical.rho_eq_stderr) << ','
              << fmt_double(r.classical.delta_eq_mean) << ',' << fmt_double(r.classical.delta_eq_stderr) << ','
              << fmt_double(r.classical.delta_literal_mean) << ',' << spec.quantum.realizations << ','
              << to_string(spec.quantum.backend) << '\n';
        }
    }
    out.summary = output_path(spec.output, "_compare.json");
    write_json(out.summary, Json{{"quantum", to_json(quantum)}, {"classical", to_json(classical)}});
    return out;
}

Json to_json(const InjectivityReport &report) {
    Json collisions = Json::array();
    for (const auto &c : report.collisions) {
        collisions.push_back({{"first", c.first}, {"second", c.second}, {"image", c.image}});
    }
    return Json{{"num_sites", report.num_sites},
                {"num_configs", report.num_configs},
                {"distinct_images", report.distinct_images},
                {"bijective", report.bijective},
                {"total_collisions", report.total_collisions},
                {"listed_collisions", collisions},
                {"config_packing", "bit (i-1) = site i"}};
}

Json to_json(const ScalingStudy &study) {
    Json points = Json::array();
    for (const auto &p : study.points) {
        points.push_back({{"num_sites", p.num_sites},
                          {"rho_eq_mean", p.rho_eq_mean},
                          {"rho_eq_stderr", p.rho_eq_stderr},
                          {"delta_eq_mean", p.delta_eq_mean},
                          {"delta_eq_stderr", p.delta_eq_stderr}});
    }
    const auto &fit = study.diversity_fit;
    return Json{{"rho0", study.rho0},
                {"points", points},
                {"diversity_fit",
                 {{"exponent", fit.exponent},
                  {"prefactor", fit.prefactor},
                  {"exponent_stderr", fit.exponent_stderr},
                  {"ci95", {fit.ci_low, fit.ci_high}}}}};
}

} // namespace qgol
