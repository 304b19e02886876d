#pragma once

// Random initial conditions, ensemble averaging over realizations,
// equilibrium extraction and classical size scaling.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qgol/classical.hpp"
#include "qgol/lattice.hpp"
#include "qgol/splitting.hpp"

namespace qgol {

enum class Backend { Exact, Mps, Classical };

std::string to_string(Backend backend);
/// Accepts "exact", "mps" or "classical"; throws ConfigError otherwise.
Backend backend_from_string(const std::string &name);
std::string to_string(Boundary boundary);
Boundary boundary_from_string(const std::string &name);

/// Exactly round(rho0 * L) alive sites at uniformly random distinct positions.
ClassicalConfig sample_initial_config(int num_sites, double rho0, std::uint64_t seed);

/// Seed of realization `realization` at grid point `point`; distinct for
/// distinct (point, realization) pairs.
std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t point, std::size_t realization);

inline constexpr const char *kSeedScheme = "splitmix64(master + 0x9e3779b97f4a7c15 * (point * 2^32 + realization + 1))";
inline constexpr const char *kRngName = "std::mt19937_64";

struct EquilibriumEstimate {
    double mean = 0.0;
    /// |mean of last quarter - mean of third quarter| of the whole series.
    double drift = 0.0;
};

/// Mean over the final `window_fraction` of the samples. Needs >= 8 samples.
EquilibriumEstimate equilibrium_estimate(std::span<const double> series, double window_fraction);

struct EnsembleSpec {
    int num_sites = 32;
    std::vector<double> rho0_grid;
    int realizations = 30;
    Backend backend = Backend::Classical;
    EvolutionParams params;
    int bond_cap = 30;
    int generations = 200;
    Boundary boundary = Boundary::Frozen;
    std::uint64_t master_seed = 1;
    double window_fraction = 0.25;
    /// 0 selects std::thread::hardware_concurrency().
    int threads = 0;

    void validate() const;
};

struct RealizationResult {
    std::uint64_t seed = 0;
    std::string initial_config;
    double rho_eq = 0.0;
    double delta_eq = 0.0;
    double delta_literal_eq = 0.0;
    double rho_drift = 0.0;
    double delta_drift = 0.0;
};

struct EnsemblePoint {
    double rho0 = 0.0;
    double rho_eq_mean = 0.0;
    double rho_eq_stderr = 0.0;
    double delta_eq_mean = 0.0;
    double delta_eq_stderr = 0.0;
    double delta_literal_mean = 0.0;
    double max_drift_rho = 0.0;
    std::vector<RealizationResult> realizations;
};

struct EnsembleSummary {
    EnsembleSpec spec;
    std::vector<EnsemblePoint> points;
    std::map<std::string, std::string> metadata;
};

struct MeanStderr {
    double mean = 0.0;
    /// Sample standard deviation over sqrt(n); zero for a single value.
    double stderr_ = 0.0;
};
MeanStderr mean_stderr(std::span<const double> values);

/// Runs every (rho0, realization) pair, in parallel when spec.threads != 1.
/// Results do not depend on the thread count. Backend failures are rethrown
/// with the offending grid point and realization in the message.
EnsembleSummary run_ensemble(const EnsembleSpec &spec);

struct ScalingPoint {
    int num_sites = 0;
    double rho_eq_mean = 0.0;
    double rho_eq_stderr = 0.0;
    double delta_eq_mean = 0.0;
    double delta_eq_stderr = 0.0;
};

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double exponent_stderr = 0.0;
    /// 95% confidence interval from Student's t with n-2 degrees of freedom.
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Least-squares fit of log y = log a + b log x. Throws ConfigError with
/// fewer than 3 points or non-positive values.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

struct ScalingStudy {
    double rho0 = 0.0;
    std::vector<ScalingPoint> points;
    PowerLawFit diversity_fit;
};

/// Classical ensembles at each size, followed by a power-law fit of the
/// equilibrium diversity against L.
ScalingStudy scaling_study(double rho0, const std::vector<int> &sizes, int realizations,
                           int generations = 200, std::uint64_t master_seed = 1,
                           Boundary boundary = Boundary::Frozen, int threads = 0);

} // namespace qgol
