#pragma once

// Run configuration documents, presets, table/summary writers and the
// command implementations behind the CLI.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgol/classical.hpp"
#include "qgol/ensemble.hpp"
#include "qgol/observables.hpp"
#include "qgol/splitting.hpp"

namespace qgol {

using Json = nlohmann::json;

struct InitialCondition {
    enum class Kind { Bits, Preset, Random };
    Kind kind = Kind::Preset;
    std::string bits;
    std::string preset = "A";
    double rho0 = 0.5;
    std::uint64_t seed = 1;

    friend bool operator==(const InitialCondition &, const InitialCondition &) = default;
};

struct OutputSpec {
    std::string directory = ".";
    std::string prefix = "qgol";
    /// Also dump the final dense amplitudes (exact backend only).
    bool amplitudes = false;

    friend bool operator==(const OutputSpec &, const OutputSpec &) = default;
};

struct RunConfig {
    int num_sites = 32;
    Backend backend = Backend::Exact;
    InitialCondition initial;
    EvolutionParams evolution;
    int bond_cap = 30;
    int generations = 200;
    Boundary boundary = Boundary::Frozen;
    OutputSpec output;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

/// "A": two pairs of alive sites separated by two dead ones, centered.
/// "B": 24 contiguous alive sites, centered.
ClassicalConfig preset_config(const std::string &name, int num_sites);

ClassicalConfig resolve_initial(const RunConfig &config);

// JSON documents. Parsing rejects unknown fields and wrong types with a
// ConfigError naming the offending field.
Json to_json(const EvolutionParams &params);
EvolutionParams evolution_from_json(const Json &doc);
Json to_json(const RunConfig &config);
RunConfig run_config_from_json(const Json &doc);
Json to_json(const EnsembleSpec &spec, const OutputSpec &output);
std::pair<EnsembleSpec, OutputSpec> ensemble_spec_from_json(const Json &doc);
Json to_json(const EnsembleSummary &summary);
EnsembleSummary ensemble_summary_from_json(const Json &doc);

/// Reads and parses a JSON file; throws ConfigError on I/O or syntax errors.
Json load_json(const std::filesystem::path &path);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string config_hash(const Json &doc);

/// Generation g is placed at t = g * generation_time; populations are the bits.
TrajectoryRecord classical_record(const ClassicalTrajectory &trajectory, double generation_time);

struct RunOutputs {
    std::filesystem::path sites_table;
    std::filesystem::path cluster_table;
    std::filesystem::path summary;
    std::optional<std::filesystem::path> amplitudes;
    TrajectoryRecord record;
};

/// Evolves with the configured backend and writes
///   <prefix>_sites.csv     t,site,n,v,D
///   <prefix>_clusters.csv  t,ell,count
///   <prefix>_summary.json  series, diagnostics, metadata
RunOutputs cmd_run(const RunConfig &config);

struct EnsembleOutputs {
    std::filesystem::path table;
    std::filesystem::path summary;
    EnsembleSummary result;
};

/// Writes <prefix>_ensemble.csv with columns rho0, rho_eq_mean,
/// rho_eq_stderr, delta_eq_mean, delta_eq_stderr, delta_literal_sum_mean, R,
/// backend, plus the full summary document.
EnsembleOutputs cmd_ensemble(const EnsembleSpec &spec, const OutputSpec &output);

struct CompareSpec {
    EnsembleSpec quantum;
    EnsembleSpec classical;
    OutputSpec output;
};

/// Requires "quantum" and "classical" sections; shared fields (num_sites,
/// rho0_grid, realizations, master_seed, window_fraction, threads) live at
/// the top level.
CompareSpec compare_spec_from_json(const Json &doc);

struct CompareRow {
    double rho0;
    EnsemblePoint quantum;
    EnsemblePoint classical;
};

struct CompareOutputs {
    std::filesystem::path table;
    std::filesystem::path summary;
    std::vector<CompareRow> rows;
};

CompareOutputs cmd_compare(const CompareSpec &spec);

Json to_json(const InjectivityReport &report);
Json to_json(const ScalingStudy &study);

} // namespace qgol
