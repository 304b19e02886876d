#pragma once

// Measured quantities derived from population time series: visibility,
// discretized populations, cluster-size histogram, density and diversity.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qgol {

/// Histogram of maximal runs of alive cells; by_size[l-1] counts runs of length l.
struct ClusterCounts {
    std::vector<int> by_size;

    int at(int length) const {
        return length >= 1 && length <= static_cast<int>(by_size.size())
                   ? by_size[static_cast<std::size_t>(length - 1)]
                   : 0;
    }
    int num_clusters() const;
    /// Sum over l of l * C(l), i.e. the number of alive cells covered.
    int mass() const;

    friend bool operator==(const ClusterCounts &, const ClusterCounts &) = default;
};

struct VisibilityValue {
    double value = 0.0;
    /// The window [t - T/2, t + T/2] reached past the recorded samples.
    bool truncated = false;
};

/// 1 iff n > 0.5; exactly one half maps to dead.
std::vector<std::uint8_t> discretize(std::span<const double> populations);

ClusterCounts cluster_function(std::span<const std::uint8_t> alive);

double density(std::span<const std::uint8_t> alive);

/// Number of distinct cluster sizes present.
int diversity(const ClusterCounts &counts);

/// Sum of all cluster counts (the literal sum-over-l reading).
int diversity_literal_sum(const ClusterCounts &counts);

/// max - min of `series` over samples with |times[k] - t| <= window / 2.
/// Throws ConfigError when the series is empty or mismatched with `times`.
VisibilityValue visibility(std::span<const double> times, std::span<const double> series, double t,
                           double window);

/// Sampled time series for one run. Matrices are indexed [sample][site-1].
struct TrajectoryRecord {
    int num_sites = 0;
    std::vector<double> times;
    std::vector<std::vector<double>> populations;
    std::vector<std::vector<double>> visibility;
    std::vector<std::uint8_t> visibility_truncated;
    std::vector<std::vector<std::uint8_t>> discretized;
    std::vector<ClusterCounts> clusters;
    std::vector<double> density;
    std::vector<int> diversity;
    std::vector<int> diversity_literal;

    // Diagnostics. `norm` and `energy` are filled by both quantum backends;
    // the truncation columns only by the MPS backend.
    std::vector<double> norm;
    std::vector<double> energy;
    std::vector<double> discarded_weight;
    std::vector<int> max_bond;

    std::map<std::string, std::string> metadata;

    std::size_t num_samples() const noexcept { return times.size(); }
};

/// Appends one sample and derives the discretized columns from it.
void record_sample(TrajectoryRecord &record, double t, std::vector<double> populations);

/// Fills record.visibility for window length `generation_time`.
void compute_visibility(TrajectoryRecord &record, double generation_time);

} // namespace qgol
