// Command-line front end: run, classical, ensemble, compare, scan, scaling.

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qgol/error.hpp"
#include "qgol/io.hpp"

namespace {

using qgol::Json;

struct RunFlags {
    std::string config_path;
    std::optional<int> sites;
    std::optional<std::string> backend;
    std::optional<std::string> bits;
    std::optional<std::string> preset;
    std::optional<double> rho0;
    std::optional<std::uint64_t> seed;
    std::optional<double> dt;
    std::optional<double> t_final;
    std::optional<int> order;
    std::optional<double> sample_interval;
    std::optional<double> generation_time;
    std::optional<int> bond_cap;
    std::optional<int> generations;
    std::optional<std::string> boundary;
    std::optional<std::string> out_dir;
    std::optional<std::string> prefix;
    bool amplitudes = false;
};

void add_run_flags(CLI::App *cmd, RunFlags &f) {
    cmd->add_option("-c,--config", f.config_path, "JSON run configuration; flags override its fields");
    cmd->add_option("-L,--sites", f.sites, "Number of sites");
    cmd->add_option("--backend", f.backend, "exact | mps | classical");
    cmd->add_option("--bits", f.bits, "Initial bit string, site 1 first");
    cmd->add_option("--preset", f.preset, "Initial preset: A or B");
    cmd->add_option("--rho0", f.rho0, "Random initial density");
    cmd->add_option("--seed", f.seed, "Seed for a random initial configuration");
    cmd->add_option("--dt", f.dt, "Trotter step");
    cmd->add_option("--t-final", f.t_final, "Total evolution time");
    cmd->add_option("--order", f.order, "Splitting order (1, 2, 4)");
    cmd->add_option("--sample-interval", f.sample_interval, "Observable sampling period");
    cmd->add_option("--generation-time", f.generation_time, "Generation time T (visibility window)");
    cmd->add_option("-m,--bond-cap", f.bond_cap, "MPS bond dimension cap");
    cmd->add_option("--generations", f.generations, "Classical generations");
    cmd->add_option("--boundary", f.boundary, "Classical boundary: frozen | periodic");
    cmd->add_option("-o,--out-dir", f.out_dir, "Output directory");
    cmd->add_option("--prefix", f.prefix, "Output file prefix");
    cmd->add_flag("--amplitudes", f.amplitudes, "Dump final amplitudes (exact backend)");
}

qgol::RunConfig resolve_run_config(const RunFlags &f) {
    qgol::RunConfig c;
    if (!f.config_path.empty()) c = qgol::run_config_from_json(qgol::load_json(f.config_path));
    if (f.sites) c.num_sites = *f.sites;
    if (f.backend) c.backend = qgol::backend_from_string(*f.backend);
    const int init_flags = (f.bits ? 1 : 0) + (f.preset ? 1 : 0) + (f.rho0 ? 1 : 0);
    if (init_flags > 1) throw qgol::ConfigError("use only one of --bits, --preset, --rho0");
    if (f.bits) {
        c.initial.kind = qgol::InitialCondition::Kind::Bits;
        c.initial.bits = *f.bits;
        if (!f.sites) c.num_sites = static_cast<int>(f.bits->size());
    }
    if (f.preset) {
        c.initial.kind = qgol::InitialCondition::Kind::Preset;
        c.initial.preset = *f.preset;
    }
    if (f.rho0) {
        c.initial.kind = qgol::InitialCondition::Kind::Random;
        c.initial.rho0 = *f.rho0;
    }
    if (f.seed) c.initial.seed = *f.seed;
    if (f.dt) c.evolution.dt = *f.dt;
    if (f.t_final) c.evolution.t_final = *f.t_final;
    if (f.order) c.evolution.order = *f.order;
    if (f.sample_interval) c.evolution.sample_interval = *f.sample_interval;
    if (f.generation_time) c.evolution.generation_time = *f.generation_time;
    if (f.bond_cap) c.bond_cap = *f.bond_cap;
    if (f.generations) c.generations = *f.generations;
    if (f.boundary) c.boundary = qgol::boundary_from_string(*f.boundary);
    if (f.out_dir) c.output.directory = *f.out_dir;
    if (f.prefix) c.output.prefix = *f.prefix;
    if (f.amplitudes) c.output.amplitudes = true;
    return c;
}

std::vector<int> parse_sizes(const std::string &text) {
    std::vector<int> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception &) {
            throw qgol::ConfigError("--sizes: '" + item + "' is not an integer");
        }
    }
    return sizes;
}

void print_json(const Json &doc, const std::string &path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw qgol::Error("cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Game of Life simulator"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto *run = app.add_subcommand("run", "Evolve one initial condition and write trajectory tables");
    add_run_flags(run, run_flags);

    RunFlags classical_flags;
    auto *classical = app.add_subcommand("classical", "Run the classical automaton");
    add_run_flags(classical, classical_flags);

    std::string ensemble_path;
    std::optional<int> ensemble_threads;
    auto *ensemble = app.add_subcommand("ensemble", "Equilibrium statistics over random initial configurations");
    ensemble->add_option("spec", ensemble_path, "JSON ensemble spec")->required();
    ensemble->add_option("-j,--threads", ensemble_threads, "Worker threads (0 = all cores)");

    std::string compare_path;
    auto *compare = app.add_subcommand("compare", "Quantum vs classical equilibrium table");
    compare->add_option("spec", compare_path, "JSON compare spec")->required();

    int scan_sites = 8;
    std::string scan_boundary = "frozen";
    std::string scan_out;
    auto *scan = app.add_subcommand("scan", "Exhaustive injectivity check of the classical step");
    scan->add_option("-L,--sites", scan_sites, "Number of sites (<= 16)");
    scan->add_option("--boundary", scan_boundary, "frozen | periodic");
    scan->add_option("-o,--output", scan_out, "Write the JSON report here instead of stdout");

    double scaling_rho0 = 0.5;
    std::string scaling_sizes = "32,64,128,256,512,1024";
    int scaling_realizations = 30;
    int scaling_generations = 200;
    std::uint64_t scaling_seed = 1;
    std::string scaling_boundary = "frozen";
    std::string scaling_out;
    auto *scaling = app.add_subcommand("scaling", "Classical equilibrium vs system size with power-law fit");
    scaling->add_option("--rho0", scaling_rho0, "Initial density");
    scaling->add_option("--sizes", scaling_sizes, "Comma-separated chain lengths");
    scaling->add_option("-R,--realizations", scaling_realizations, "Realizations per size");
    scaling->add_option("--generations", scaling_generations, "Generations per run");
    scaling->add_option("--seed", scaling_seed, "Master seed");
    scaling->add_option("--boundary", scaling_boundary, "frozen | periodic");
    scaling->add_option("-o,--output", scaling_out, "Write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run || *classical) {
            auto config = resolve_run_config(*run ? run_flags : classical_flags);
            if (*classical) config.backend = qgol::Backend::Classical;
            const auto out = qgol::cmd_run(config);
            std::cout << out.sites_table.string() << '\n'
                      << out.cluster_table.string() << '\n'
                      << out.summary.string() << '\n';
            if (out.amplitudes) std::cout << out.amplitudes->string() << '\n';
        } else if (*ensemble) {
            auto [spec, output] = qgol::ensemble_spec_from_json(qgol::load_json(ensemble_path));
            if (ensemble_threads) spec.threads = *ensemble_threads;
            const auto out = qgol::cmd_ensemble(spec, output);
            std::cout << out.table.string() << '\n' << out.summary.string() << '\n';
        } else if (*compare) {
            const auto spec = qgol::compare_spec_from_json(qgol::load_json(compare_path));
            const auto out = qgol::cmd_compare(spec);
            std::cout << out.table.string() << '\n' << out.summary.string() << '\n';
        } else if (*scan) {
            const auto report = qgol::injectivity_scan(scan_sites, qgol::boundary_from_string(scan_boundary));
            print_json(qgol::to_json(report), scan_out);
        } else if (*scaling) {
            const auto study = qgol::scaling_study(scaling_rho0, parse_sizes(scaling_sizes), scaling_realizations,
                                                   scaling_generations, scaling_seed,
                                                   qgol::boundary_from_string(scaling_boundary));
            print_json(qgol::to_json(study), scaling_out);
        }
    } catch (const qgol::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
