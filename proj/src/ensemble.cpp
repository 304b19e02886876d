#include "qgol/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "qgol/dense.hpp"
#include "qgol/error.hpp"
#include "qgol/mps.hpp"
#include "qgol/version.hpp"

namespace qgol {

std::string to_string(Backend backend) {
    switch (backend) {
    case Backend::Exact: return "exact";
    case Backend::Mps: return "mps";
    case Backend::Classical: return "classical";
    }
    return "unknown";
}

Backend backend_from_string(const std::string &name) {
    if (name == "exact") return Backend::Exact;
    if (name == "mps") return Backend::Mps;
    if (name == "classical") return Backend::Classical;
    throw ConfigError("unknown backend '" + name + "' (expected exact, mps or classical)");
}

std::string to_string(Boundary boundary) { return boundary == Boundary::Frozen ? "frozen" : "periodic"; }

Boundary boundary_from_string(const std::string &name) {
    if (name == "frozen") return Boundary::Frozen;
    if (name == "periodic") return Boundary::Periodic;
    throw ConfigError("unknown boundary '" + name + "' (expected frozen or periodic)");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t point, std::size_t realization) {
    const std::uint64_t counter = (static_cast<std::uint64_t>(point) << 32) + realization + 1;
    return splitmix64(master_seed + 0x9e3779b97f4a7c15ULL * counter);
}

ClassicalConfig sample_initial_config(int num_sites, double rho0, std::uint64_t seed) {
    if (!(rho0 >= 0.0 && rho0 <= 1.0)) throw ConfigError("rho0 must lie in [0, 1]");
    const auto alive = static_cast<std::size_t>(std::lround(rho0 * num_sites));
    std::vector<int> order(static_cast<std::size_t>(num_sites));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first `alive` entries are a uniform sample.
    for (std::size_t k = 0; k < alive; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, order.size() - 1);
        std::swap(order[k], order[pick(rng)]);
    }
    auto config = ClassicalConfig::all_dead(num_sites);
    for (std::size_t k = 0; k < alive; ++k) config.bits[static_cast<std::size_t>(order[k])] = 1;
    return config;
}

EquilibriumEstimate equilibrium_estimate(std::span<const double> series, double window_fraction) {
    if (series.size() < 8) throw ConfigError("equilibrium estimate needs at least 8 samples");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw ConfigError("equilibrium window fraction must lie in (0, 1]");
    }
    const std::size_t n = series.size();
    const auto window = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::lround(window_fraction * static_cast<double>(n))), 1, n);
    auto mean_of = [&](std::size_t begin, std::size_t end) {
        return std::accumulate(series.begin() + static_cast<std::ptrdiff_t>(begin),
                               series.begin() + static_cast<std::ptrdiff_t>(end), 0.0) /
               static_cast<double>(end - begin);
    };
    const std::size_t quarter = n / 4;
    EquilibriumEstimate est;
    est.mean = mean_of(n - window, n);
    est.drift = std::abs(mean_of(n - quarter, n) - mean_of(n - 2 * quarter, n - quarter));
    return est;
}

MeanStderr mean_stderr(std::span<const double> values) {
    MeanStderr out;
    if (values.empty()) return out;
    const double n = static_cast<double>(values.size());
    out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return out;
}

void EnsembleSpec::validate() const {
    LatticeSpec check(num_sites);
    if (realizations < 1) throw ConfigError("realizations must be at least 1");
    if (rho0_grid.empty()) throw ConfigError("rho0 grid is empty");
    for (double r : rho0_grid) {
        if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("rho0 values must lie in [0, 1]");
    }
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw ConfigError("window fraction must lie in (0, 1]");
    }
    if (backend == Backend::Classical) {
        if (generations + 1 < 8) throw ConfigError("classical runs need at least 7 generations");
    } else {
        params.validate();
        if (params.num_samples() + 1 < 8) throw ConfigError("quantum runs need at least 8 samples");
    }
    if (backend == Backend::Mps && bond_cap < 1) throw ConfigError("bond cap must be at least 1");
}

namespace {

struct Series {
    std::vector<double> rho;
    std::vector<double> delta;
    std::vector<double> delta_literal;
};

Series run_one(const EnsembleSpec &spec, const ClassicalConfig &initial) {
    Series s;
    auto take = [&](const auto &density, const auto &diversity, const auto &literal) {
        s.rho.assign(density.begin(), density.end());
        s.delta.assign(diversity.begin(), diversity.end());
        s.delta_literal.assign(literal.begin(), literal.end());
    };
    switch (spec.backend) {
    case Backend::Classical: {
        const auto traj = classical_evolve(initial, spec.generations, spec.boundary);
        take(traj.density, traj.diversity, traj.diversity_literal);
        break;
    }
    case Backend::Exact: {
        const auto rec = evolve_exact(initial, spec.params);
        take(rec.density, rec.diversity, rec.diversity_literal);
        break;
    }
    case Backend::Mps: {
        const auto rec = evolve_mps(initial, spec.params, spec.bond_cap);
        take(rec.density, rec.diversity, rec.diversity_literal);
        break;
    }
    }
    return s;
}

RealizationResult realize(const EnsembleSpec &spec, std::size_t point, std::size_t realization) {
    RealizationResult r;
    r.seed = derive_seed(spec.master_seed, point, realization);
    const auto initial = sample_initial_config(spec.num_sites, spec.rho0_grid[point], r.seed);
    r.initial_config = initial.to_string();
    const auto series = run_one(spec, initial);
    const auto rho = equilibrium_estimate(series.rho, spec.window_fraction);
    const auto delta = equilibrium_estimate(series.delta, spec.window_fraction);
    r.rho_eq = rho.mean;
    r.rho_drift = rho.drift;
    r.delta_eq = delta.mean;
    r.delta_drift = delta.drift;
    r.delta_literal_eq = equilibrium_estimate(series.delta_literal, spec.window_fraction).mean;
    return r;
}

[[noreturn]] void rethrow_with_context(std::exception_ptr error, double rho0, std::size_t realization) {
    const std::string where = "rho0=" + std::to_string(rho0) + " realization=" + std::to_string(realization) + ": ";
    try {
        std::rethrow_exception(error);
    } catch (const CapacityError &e) {
        throw CapacityError(where + e.what());
    } catch (const ConfigError &e) {
        throw ConfigError(where + e.what());
    } catch (const std::exception &e) {
        throw Error(where + e.what());
    }
}

} // namespace

EnsembleSummary run_ensemble(const EnsembleSpec &spec) {
    spec.validate();
    const std::size_t points = spec.rho0_grid.size();
    const auto per_point = static_cast<std::size_t>(spec.realizations);
    const std::size_t tasks = points * per_point;

    std::vector<RealizationResult> results(tasks);
    std::vector<std::exception_ptr> errors(tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t task = next++; task < tasks; task = next++) {
            try {
                results[task] = realize(spec, task / per_point, task % per_point);
            } catch (...) {
                errors[task] = std::current_exception();
            }
        }
    };

    std::size_t threads = spec.threads > 0 ? static_cast<std::size_t>(spec.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, tasks);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
    }
    for (std::size_t task = 0; task < tasks; ++task) {
        if (errors[task]) rethrow_with_context(errors[task], spec.rho0_grid[task / per_point], task % per_point);
    }

    EnsembleSummary summary;
    summary.spec = spec;
    summary.metadata = {
        {"backend", to_string(spec.backend)},
        {"code_version", kVersion},
        {"rng", kRngName},
        {"seed_scheme", kSeedScheme},
        {"master_seed", std::to_string(spec.master_seed)},
    };
    for (std::size_t p = 0; p < points; ++p) {
        EnsemblePoint point;
        point.rho0 = spec.rho0_grid[p];
        point.realizations.assign(results.begin() + static_cast<std::ptrdiff_t>(p * per_point),
                                  results.begin() + static_cast<std::ptrdiff_t>((p + 1) * per_point));
        std::vector<double> rho, delta, literal;
        for (const auto &r : point.realizations) {
            rho.push_back(r.rho_eq);
            delta.push_back(r.delta_eq);
            literal.push_back(r.delta_literal_eq);
            point.max_drift_rho = std::max(point.max_drift_rho, r.rho_drift);
        }
        const auto rs = mean_stderr(rho);
        const auto ds = mean_stderr(delta);
        point.rho_eq_mean = rs.mean;
        point.rho_eq_stderr = rs.stderr_;
        point.delta_eq_mean = ds.mean;
        point.delta_eq_stderr = ds.stderr_;
        point.delta_literal_mean = mean_stderr(literal).mean;
        summary.points.push_back(std::move(point));
    }
    return summary;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ConfigError("power-law fit needs matching x and y");
    if (x.size() < 3) throw ConfigError("power-law fit needs at least 3 points");
    const std::size_t n = x.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(x[k] > 0.0) || !(y[k] > 0.0)) throw ConfigError("power-law fit needs positive values");
        lx[k] = std::log(x[k]);
        ly[k] = std::log(y[k]);
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sxx += (lx[k] - mx) * (lx[k] - mx);
        sxy += (lx[k] - mx) * (ly[k] - my);
    }
    if (sxx == 0.0) throw ConfigError("power-law fit needs at least two distinct x values");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.prefactor = std::exp(intercept);
    double rss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double r = ly[k] - intercept - fit.exponent * lx[k];
        rss += r * r;
    }
    const double dof = static_cast<double>(n - 2);
    fit.exponent_stderr = std::sqrt(rss / dof / sxx);
    const boost::math::students_t dist(dof);
    const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
    fit.ci_low = fit.exponent - t * fit.exponent_stderr;
    fit.ci_high = fit.exponent + t * fit.exponent_stderr;
    return fit;
}

ScalingStudy scaling_study(double rho0, const std::vector<int> &sizes, int realizations, int generations,
                           std::uint64_t master_seed, Boundary boundary, int threads) {
    if (sizes.size() < 3) throw ConfigError("scaling study needs at least 3 system sizes");
    ScalingStudy study;
    study.rho0 = rho0;
    std::vector<double> xs, ys;
    for (int size : sizes) {
        EnsembleSpec spec;
        spec.num_sites = size;
        spec.rho0_grid = {rho0};
        spec.realizations = realizations;
        spec.backend = Backend::Classical;
        spec.generations = generations;
        spec.boundary = boundary;
        spec.master_seed = master_seed + static_cast<std::uint64_t>(size);
        spec.threads = threads;
        const auto summary = run_ensemble(spec);
        const auto &p = summary.points.front();
        study.points.push_back({size, p.rho_eq_mean, p.rho_eq_stderr, p.delta_eq_mean, p.delta_eq_stderr});
        xs.push_back(size);
        ys.push_back(p.delta_eq_mean);
    }
    study.diversity_fit = fit_power_law(xs, ys);
    return study;
}

} // namespace qgol
