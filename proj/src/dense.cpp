#include "qgol/dense.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qgol/error.hpp"
#include "qgol/version.hpp"

namespace qgol {

DenseState::DenseState(int num_sites) : num_sites_(num_sites) {
    if (num_sites < 1 || num_sites > kDenseMaxSites) {
        throw CapacityError("dense backend holds at most " + std::to_string(kDenseMaxSites) +
                            " sites, got " + std::to_string(num_sites) +
                            "; use the mps backend for longer chains");
    }
    amplitudes_.assign(std::size_t{1} << num_sites, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

double DenseState::norm() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

DenseState init_dense(const ClassicalConfig &config) {
    DenseState state(config.size());
    auto amps = state.amplitudes();
    amps[0] = 0.0;
    amps[config.to_index()] = 1.0;
    return state;
}

void apply_term_propagator(DenseState &state, const HamTerm &term, double theta) {
    if (theta == 0.0) return;
    const std::uint64_t flip = term.flip_mask();
    const std::uint64_t neighbors = term.neighbor_mask();
    const double c = std::cos(theta);
    const Complex minus_i_s{0.0, -std::sin(theta)};
    auto amps = state.amplitudes();
    const std::uint64_t dim = amps.size();
    // Visit each pair once through its flip-bit-clear member.
    const std::uint64_t low_mask = flip - 1;
    for (std::uint64_t k = 0; k < dim / 2; ++k) {
        const std::uint64_t i0 = ((k & ~low_mask) << 1) | (k & low_mask);
        if (!count_is_active(std::popcount(i0 & neighbors))) continue;
        const std::uint64_t i1 = i0 | flip;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = c * a0 + minus_i_s * a1;
        amps[i1] = minus_i_s * a0 + c * a1;
    }
}

std::vector<double> populations(const DenseState &state) {
    const double nrm = state.norm();
    if (std::abs(nrm - 1.0) > 1e-6) {
        throw DiagnosticsError("state norm " + std::to_string(nrm) + " deviates from one");
    }
    std::vector<double> n(static_cast<std::size_t>(state.num_sites()), 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        const double p = std::norm(amps[idx]);
        if (p == 0.0) continue;
        for (std::uint64_t bits = idx; bits != 0; bits &= bits - 1) {
            n[static_cast<std::size_t>(std::countr_zero(bits))] += p;
        }
    }
    return n;
}

double energy(const DenseState &state, const std::vector<HamTerm> &terms) {
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (const auto &term : terms) {
        const std::uint64_t flip = term.flip_mask();
        const std::uint64_t neighbors = term.neighbor_mask();
        for (std::uint64_t i0 = 0; i0 < amps.size(); ++i0) {
            if ((i0 & flip) || !count_is_active(std::popcount(i0 & neighbors))) continue;
            total += 2.0 * std::real(std::conj(amps[i0]) * amps[i0 | flip]);
        }
    }
    return total;
}

DenseStepper::DenseStepper(const LatticeSpec &spec, double dt, int order)
    : terms_(build_terms(spec)), groups_(sublattice_partition(terms_)),
      schedule_(splitting_schedule(order)), dt_(dt) {}

void DenseStepper::step(DenseState &state) const {
    for (const auto &stage : schedule_) {
        for (const auto &term : groups_[static_cast<std::size_t>(stage.group)]) {
            apply_term_propagator(state, term, stage.fraction * dt_);
        }
    }
}

void trotter_step(DenseState &state, const std::array<std::vector<HamTerm>, 3> &groups,
                  const EvolutionParams &params) {
    for (const auto &stage : splitting_schedule(params.order)) {
        for (const auto &term : groups[static_cast<std::size_t>(stage.group)]) {
            apply_term_propagator(state, term, stage.fraction * params.dt);
        }
    }
}

TrajectoryRecord evolve_exact(const ClassicalConfig &config, const EvolutionParams &params,
                              DenseState *final_state) {
    params.validate();
    const LatticeSpec spec(config.size());
    DenseState state = init_dense(config);
    const DenseStepper stepper(spec, params.dt, params.order);

    TrajectoryRecord record;
    record.num_sites = spec.size();
    record.metadata = {
        {"backend", "exact"},
        {"bit_convention", "basis index bit (i-1) = occupation of site i (site 1 least significant)"},
        {"code_version", kVersion},
        {"initial_config", config.to_string()},
    };

    auto sample = [&](double t) {
        record_sample(record, t, populations(state));
        record.norm.push_back(state.norm());
        record.energy.push_back(energy(state, stepper.terms()));
    };

    sample(0.0);
    const long per_sample = params.steps_per_sample();
    const long samples = params.num_samples();
    for (long s = 1; s <= samples; ++s) {
        for (long k = 0; k < per_sample; ++k) stepper.step(state);
        sample(static_cast<double>(s * per_sample) * params.dt);
    }
    compute_visibility(record, params.generation_time);
    if (final_state != nullptr) *final_state = std::move(state);
    return record;
}

} // namespace qgol
