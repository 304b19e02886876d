#pragma once

// Classical reversible counterpart: each generation, every flip site whose
// four neighbors hold exactly 2 or 3 alive cells toggles.

#include <cstdint>
#include <vector>

#include "qgol/lattice.hpp"
#include "qgol/observables.hpp"

namespace qgol {

enum class Boundary {
    /// Sites 1, 2, L-1, L never change (same as the quantum model).
    Frozen,
    /// Every site updates, neighbors wrap around the ring.
    Periodic,
};

ClassicalConfig classical_step(const ClassicalConfig &config, Boundary boundary = Boundary::Frozen);

struct ClassicalTrajectory {
    /// configs[g] is generation g; configs[0] is the initial condition.
    std::vector<ClassicalConfig> configs;
    std::vector<double> density;
    std::vector<ClusterCounts> clusters;
    std::vector<int> diversity;
    std::vector<int> diversity_literal;
};

/// Runs `generations` steps (generations >= 1); throws ConfigError otherwise.
ClassicalTrajectory classical_evolve(const ClassicalConfig &config, int generations,
                                     Boundary boundary = Boundary::Frozen);

inline constexpr int kScanMaxSites = 16;

struct Collision {
    std::uint32_t first;
    std::uint32_t second;
    std::uint32_t image;
};

struct InjectivityReport {
    int num_sites = 0;
    std::uint64_t num_configs = 0;
    std::uint64_t distinct_images = 0;
    bool bijective = false;
    /// Pairs sharing an image (each later preimage paired with the first one
    /// found), capped at kMaxListedCollisions entries.
    std::vector<Collision> collisions;
    std::uint64_t total_collisions = 0;

    static constexpr std::size_t kMaxListedCollisions = 4096;
};

/// Applies classical_step to all 2^L configurations. Configurations are
/// packed with site 1 as the least significant bit. Throws CapacityError for
/// L > kScanMaxSites.
InjectivityReport injectivity_scan(int num_sites, Boundary boundary = Boundary::Frozen);

} // namespace qgol
