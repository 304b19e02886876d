#pragma once

// State-vector backend. Basis index bit (i-1) holds the occupation of site i,
// so site 1 is the least significant bit.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qgol/lattice.hpp"
#include "qgol/observables.hpp"
#include "qgol/splitting.hpp"

namespace qgol {

using Complex = std::complex<double>;

/// Largest chain the dense backend accepts (2^24 amplitudes, 256 MiB).
inline constexpr int kDenseMaxSites = 24;

class DenseState {
  public:
    /// |0...0> on `num_sites` sites; throws CapacityError above kDenseMaxSites.
    explicit DenseState(int num_sites);

    int num_sites() const noexcept { return num_sites_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    double norm() const;

  private:
    int num_sites_;
    std::vector<Complex> amplitudes_;
};

/// Basis state encoding `config`.
DenseState init_dense(const ClassicalConfig &config);

/// In-place exp(-i theta h) for one term: amplitude pairs differing in the
/// flip bit rotate by theta when the neighbor count is 2 or 3, all other
/// amplitudes are untouched.
void apply_term_propagator(DenseState &state, const HamTerm &term, double theta);

/// Occupation expectation values n_1..n_L. Throws DiagnosticsError when the
/// norm deviates from one by more than 1e-6.
std::vector<double> populations(const DenseState &state);

/// <psi|H|psi> for the given term list.
double energy(const DenseState &state, const std::vector<HamTerm> &terms);

/// Applies one product-formula step of length dt over the sublattice groups.
class DenseStepper {
  public:
    DenseStepper(const LatticeSpec &spec, double dt, int order);

    void step(DenseState &state) const;
    const std::vector<HamTerm> &terms() const noexcept { return terms_; }

  private:
    std::vector<HamTerm> terms_;
    std::array<std::vector<HamTerm>, 3> groups_;
    std::vector<SplittingStage> schedule_;
    double dt_;
};

/// Convenience wrapper: one step of `params.dt` at `params.order`.
void trotter_step(DenseState &state, const std::array<std::vector<HamTerm>, 3> &groups,
                  const EvolutionParams &params);

/// Full run from a classical configuration, sampling every
/// params.sample_interval (t = 0 included). Records norm and energy.
/// When `final_state` is given it receives the state at the last sample.
TrajectoryRecord evolve_exact(const ClassicalConfig &config, const EvolutionParams &params,
                              DenseState *final_state = nullptr);

} // namespace qgol
