#include "qgol/observables.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qgol/error.hpp"

namespace qgol {

int ClusterCounts::num_clusters() const { return std::accumulate(by_size.begin(), by_size.end(), 0); }

int ClusterCounts::mass() const {
    int total = 0;
    for (std::size_t k = 0; k < by_size.size(); ++k) total += static_cast<int>(k + 1) * by_size[k];
    return total;
}

std::vector<std::uint8_t> discretize(std::span<const double> populations) {
    std::vector<std::uint8_t> out(populations.size());
    std::transform(populations.begin(), populations.end(), out.begin(),
                   [](double n) { return static_cast<std::uint8_t>(n > 0.5 ? 1 : 0); });
    return out;
}

ClusterCounts cluster_function(std::span<const std::uint8_t> alive) {
    ClusterCounts counts;
    counts.by_size.assign(alive.size(), 0);
    std::size_t run = 0;
    for (std::size_t k = 0; k <= alive.size(); ++k) {
        if (k < alive.size() && alive[k]) {
            ++run;
        } else if (run > 0) {
            ++counts.by_size[run - 1];
            run = 0;
        }
    }
    return counts;
}

double density(std::span<const std::uint8_t> alive) {
    if (alive.empty()) return 0.0;
    const auto ones = std::count(alive.begin(), alive.end(), std::uint8_t{1});
    return static_cast<double>(ones) / static_cast<double>(alive.size());
}

int diversity(const ClusterCounts &counts) {
    return static_cast<int>(std::count_if(counts.by_size.begin(), counts.by_size.end(),
                                          [](int c) { return c > 0; }));
}

int diversity_literal_sum(const ClusterCounts &counts) { return counts.num_clusters(); }

VisibilityValue visibility(std::span<const double> times, std::span<const double> series, double t,
                           double window) {
    if (times.empty() || times.size() != series.size()) {
        throw ConfigError("visibility needs a non-empty series matching its sample times");
    }
    const double half = window / 2.0;
    // Sample times are accumulated sums of dt; allow for rounding at the window edges.
    const double eps = 1e-9 * std::max(1.0, std::abs(t) + half);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (std::abs(times[k] - t) <= half + eps) {
            lo = std::min(lo, series[k]);
            hi = std::max(hi, series[k]);
        }
    }
    VisibilityValue out;
    out.truncated = (t - half < times.front() - eps) || (t + half > times.back() + eps);
    out.value = hi >= lo ? std::abs(hi - lo) : 0.0;
    return out;
}

void record_sample(TrajectoryRecord &record, double t, std::vector<double> populations) {
    if (record.num_sites == 0) record.num_sites = static_cast<int>(populations.size());
    if (static_cast<int>(populations.size()) != record.num_sites) {
        throw ConfigError("population vector length does not match the record");
    }
    auto discrete = discretize(populations);
    auto counts = cluster_function(discrete);
    record.times.push_back(t);
    record.density.push_back(density(discrete));
    record.diversity.push_back(diversity(counts));
    record.diversity_literal.push_back(diversity_literal_sum(counts));
    record.clusters.push_back(std::move(counts));
    record.discretized.push_back(std::move(discrete));
    record.populations.push_back(std::move(populations));
}

void compute_visibility(TrajectoryRecord &record, double generation_time) {
    const std::size_t samples = record.num_samples();
    const auto sites = static_cast<std::size_t>(record.num_sites);
    record.visibility.assign(samples, std::vector<double>(sites, 0.0));
    record.visibility_truncated.assign(samples, 0);
    if (samples == 0) return;

    // Sliding min/max over a sorted time axis: two pointers bound the window.
    std::vector<double> series(samples);
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::vector<std::pair<std::size_t, std::size_t>> bounds(samples);
    const double half = generation_time / 2.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = record.times[k];
        const double eps = 1e-9 * std::max(1.0, std::abs(t) + half);
        while (record.times[lo] < t - half - eps) ++lo;
        if (hi < k) hi = k;
        while (hi + 1 < samples && record.times[hi + 1] <= t + half + eps) ++hi;
        bounds[k] = {lo, hi};
        record.visibility_truncated[k] =
            (t - half < record.times.front() - eps) || (t + half > record.times.back() + eps);
    }
    for (std::size_t site = 0; site < sites; ++site) {
        for (std::size_t k = 0; k < samples; ++k) {
            double mn = record.populations[bounds[k].first][site];
            double mx = mn;
            for (std::size_t j = bounds[k].first; j <= bounds[k].second; ++j) {
                mn = std::min(mn, record.populations[j][site]);
                mx = std::max(mx, record.populations[j][site]);
            }
            record.visibility[k][site] = mx - mn;
        }
    }
}

} // namespace qgol
