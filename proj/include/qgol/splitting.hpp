#pragma once

// Product-formula schedules over the three commuting sublattice groups.

#include <numbers>
#include <vector>

namespace qgol {

struct EvolutionParams {
    double dt = 1e-2;
    double t_final = 100.0;
    /// Splitting order: 1 (Lie), 2 (Strang) or 4 (Forest-Ruth triple jump of Strang).
    int order = 4;
    double sample_interval = 5e-2;
    /// Time between generations: a constantly active dead site is fully
    /// alive after pi/2.
    double generation_time = std::numbers::pi / 2.0;

    /// Throws ConfigError on dt <= 0, sample_interval < dt,
    /// t_final < sample_interval or an unsupported order.
    void validate() const;
    /// Number of Trotter steps between two recorded samples.
    long steps_per_sample() const;
    /// Number of recorded samples after t = 0.
    long num_samples() const;

    friend bool operator==(const EvolutionParams &, const EvolutionParams &) = default;
};

/// One factor of a product formula: evolve group `group` for `fraction * dt`.
struct SplittingStage {
    int group;
    double fraction;
};

/// Stages of one Trotter step, with adjacent stages on the same group merged.
/// The fractions attached to each group sum to one.
std::vector<SplittingStage> splitting_schedule(int order);

} // namespace qgol
