#include "qgol/classical.hpp"

#include <string>

#include "qgol/error.hpp"

namespace qgol {

ClassicalConfig classical_step(const ClassicalConfig &config, Boundary boundary) {
    const int n = config.size();
    LatticeSpec spec(n);
    ClassicalConfig next = config;
    const auto &bits = config.bits;
    if (boundary == Boundary::Frozen) {
        for (int i = spec.first_flip_site(); i <= spec.last_flip_site(); ++i) {
            const std::size_t k = static_cast<std::size_t>(i - 1);
            const int alive = bits[k - 2] + bits[k - 1] + bits[k + 1] + bits[k + 2];
            if (count_is_active(alive)) next.bits[k] ^= 1;
        }
    } else {
        for (int k = 0; k < n; ++k) {
            auto at = [&](int offset) { return bits[static_cast<std::size_t>((k + offset + n) % n)]; };
            if (count_is_active(at(-2) + at(-1) + at(1) + at(2))) next.bits[static_cast<std::size_t>(k)] ^= 1;
        }
    }
    return next;
}

ClassicalTrajectory classical_evolve(const ClassicalConfig &config, int generations, Boundary boundary) {
    if (generations < 1) throw ConfigError("classical evolution needs at least one generation");
    ClassicalTrajectory traj;
    traj.configs.reserve(static_cast<std::size_t>(generations + 1));
    traj.configs.push_back(config);
    for (int g = 0; g < generations; ++g) traj.configs.push_back(classical_step(traj.configs.back(), boundary));
    for (const auto &c : traj.configs) {
        auto counts = cluster_function(c.bits);
        traj.density.push_back(density(c.bits));
        traj.diversity.push_back(diversity(counts));
        traj.diversity_literal.push_back(diversity_literal_sum(counts));
        traj.clusters.push_back(std::move(counts));
    }
    return traj;
}

namespace {

std::uint32_t step_packed(std::uint32_t state, int n, Boundary boundary) {
    auto bit = [&](int site0) { return static_cast<int>((state >> site0) & 1u); };
    std::uint32_t next = state;
    if (boundary == Boundary::Frozen) {
        for (int k = 2; k <= n - 3; ++k) {
            if (count_is_active(bit(k - 2) + bit(k - 1) + bit(k + 1) + bit(k + 2))) next ^= 1u << k;
        }
    } else {
        for (int k = 0; k < n; ++k) {
            const int alive = bit((k - 2 + n) % n) + bit((k - 1 + n) % n) + bit((k + 1) % n) + bit((k + 2) % n);
            if (count_is_active(alive)) next ^= 1u << k;
        }
    }
    return next;
}

} // namespace

InjectivityReport injectivity_scan(int num_sites, Boundary boundary) {
    if (num_sites > kScanMaxSites) {
        throw CapacityError("injectivity scan supports at most " + std::to_string(kScanMaxSites) +
                            " sites, got " + std::to_string(num_sites));
    }
    LatticeSpec spec(num_sites);
    InjectivityReport report;
    report.num_sites = spec.size();
    report.num_configs = std::uint64_t{1} << num_sites;

    constexpr std::uint32_t kUnseen = 0xffffffffu;
    std::vector<std::uint32_t> preimage(report.num_configs, kUnseen);
    for (std::uint32_t c = 0; c < report.num_configs; ++c) {
        const std::uint32_t image = step_packed(c, num_sites, boundary);
        if (preimage[image] == kUnseen) {
            preimage[image] = c;
            ++report.distinct_images;
        } else {
            ++report.total_collisions;
            if (report.collisions.size() < InjectivityReport::kMaxListedCollisions) {
                report.collisions.push_back({preimage[image], c, image});
            }
        }
    }
    report.bijective = report.total_collisions == 0;
    return report;
}

} // namespace qgol
