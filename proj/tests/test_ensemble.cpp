#include <doctest.h>

#include <cmath>
#include <set>

#include "qgol/ensemble.hpp"
#include "qgol/error.hpp"

using namespace qgol;

TEST_SUITE("ensemble") {

TEST_CASE("exact-count sampling") {
    CHECK(sample_initial_config(32, 0.0, 1) == ClassicalConfig::all_dead(32));
    CHECK(sample_initial_config(32, 1.0, 1) == ClassicalConfig::all_alive(32));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(sample_initial_config(32, 0.5, seed).alive_count() == 16);
        CHECK(sample_initial_config(33, 0.3, seed).alive_count() == 10);
    }
    CHECK(sample_initial_config(32, 0.5, 4) == sample_initial_config(32, 0.5, 4));
    CHECK_FALSE(sample_initial_config(32, 0.5, 4) == sample_initial_config(32, 0.5, 5));
    CHECK_THROWS_AS(sample_initial_config(32, 1.5, 1), ConfigError);
}

TEST_CASE("sampled positions are uniform") {
    std::vector<int> hits(20);
    const int trials = 20000;
    for (int k = 0; k < trials; ++k) {
        const auto c = sample_initial_config(20, 0.25, derive_seed(9, 0, static_cast<std::size_t>(k)));
        for (int i = 0; i < 20; ++i) hits[static_cast<std::size_t>(i)] += c.at(i + 1);
    }
    // Each site is alive with probability 5/20; binomial sd is about 61.
    for (int h : hits) CHECK(std::abs(h - trials / 4) < 300);
}

TEST_CASE("derived seeds are distinct") {
    std::set<std::uint64_t> seen;
    for (std::size_t p = 0; p < 20; ++p) {
        for (std::size_t r = 0; r < 100; ++r) seen.insert(derive_seed(1, p, r));
    }
    CHECK(seen.size() == 2000);
    CHECK(derive_seed(1, 0, 0) != derive_seed(2, 0, 0));
}

TEST_CASE("equilibrium estimate") {
    const std::vector<double> flat(40, 0.3);
    const auto e = equilibrium_estimate(flat, 0.25);
    CHECK(e.mean == doctest::Approx(0.3));
    CHECK(e.drift == doctest::Approx(0.0));

    std::vector<double> step(40, 1.0);
    for (std::size_t k = 20; k < 40; ++k) step[k] = 0.0;
    CHECK(equilibrium_estimate(step, 0.25).mean == 0.0);
    CHECK(equilibrium_estimate(step, 0.5).mean == 0.0);
    CHECK(equilibrium_estimate(step, 1.0).mean == 0.5);

    std::vector<double> ramp(40);
    for (std::size_t k = 0; k < 40; ++k) ramp[k] = static_cast<double>(k);
    CHECK(equilibrium_estimate(ramp, 0.25).drift == doctest::Approx(10.0));
    CHECK_THROWS_AS(equilibrium_estimate(std::vector<double>(7, 1.0), 0.25), ConfigError);
}

TEST_CASE("mean and standard error") {
    const std::vector<double> v{1, 2, 3, 4};
    const auto m = mean_stderr(v);
    CHECK(m.mean == 2.5);
    CHECK(m.stderr_ == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
    CHECK(mean_stderr(std::vector<double>{7}).stderr_ == 0.0);
}

TEST_CASE("classical fixed points in the ensemble") {
    EnsembleSpec spec;
    spec.num_sites = 32;
    spec.rho0_grid = {0.0, 1.0, 1.0};
    spec.realizations = 5;
    spec.generations = 50;
    const auto summary = run_ensemble(spec);
    REQUIRE(summary.points.size() == 3);
    CHECK(summary.points[0].rho_eq_mean == 0.0);
    CHECK(summary.points[0].delta_eq_mean == 0.0);
    CHECK(summary.points[1].rho_eq_mean == 1.0);
    CHECK(summary.points[1].rho_eq_stderr == 0.0);
    CHECK(summary.points[1].delta_eq_mean == 1.0);
    CHECK(summary.points[2].rho_eq_mean == 1.0);
}

TEST_CASE("results do not depend on the thread count") {
    EnsembleSpec spec;
    spec.num_sites = 10;
    spec.rho0_grid = {0.3, 0.6};
    spec.realizations = 4;
    spec.backend = Backend::Exact;
    spec.params.t_final = 1.0;
    spec.threads = 1;
    const auto a = run_ensemble(spec);
    spec.threads = 3;
    const auto b = run_ensemble(spec);
    for (std::size_t p = 0; p < a.points.size(); ++p) {
        CHECK(a.points[p].rho_eq_mean == b.points[p].rho_eq_mean);
        CHECK(a.points[p].delta_eq_mean == b.points[p].delta_eq_mean);
        for (std::size_t r = 0; r < a.points[p].realizations.size(); ++r) {
            CHECK(a.points[p].realizations[r].seed == b.points[p].realizations[r].seed);
            CHECK(a.points[p].realizations[r].initial_config == b.points[p].realizations[r].initial_config);
        }
    }
}

TEST_CASE("worker errors carry their grid point") {
    EnsembleSpec spec;
    spec.num_sites = 30;
    spec.rho0_grid = {0.5};
    spec.realizations = 2;
    spec.backend = Backend::Exact;
    spec.params.t_final = 1.0;
    try {
        run_ensemble(spec);
        FAIL("expected a capacity error");
    } catch (const CapacityError &e) {
        CHECK(std::string(e.what()).find("rho0") != std::string::npos);
    }
}

TEST_CASE("power-law fit") {
    const std::vector<double> x{32, 64, 128, 256};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 0.5));
    const auto fit = fit_power_law(x, y);
    CHECK(fit.exponent == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.prefactor == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.ci_low <= fit.exponent);
    CHECK(fit.ci_high >= fit.exponent);

    // Noisy data: the interval uses t(0.975, n-2).
    const std::vector<double> noisy{1.0, 2.2, 2.8, 4.4};
    const std::vector<double> xs{1, 2, 3, 4};
    const auto f = fit_power_law(xs, noisy);
    CHECK(f.ci_high - f.exponent == doctest::Approx(4.302652729911275 * f.exponent_stderr).epsilon(1e-9));

    CHECK_THROWS_AS(fit_power_law(std::vector<double>{32}, std::vector<double>{3}), ConfigError);
    CHECK_THROWS_AS(fit_power_law(std::vector<double>{1, 2, 3}, std::vector<double>{1, 0, 2}), ConfigError);
    CHECK_THROWS_AS(scaling_study(0.5, {32}, 3), ConfigError);
}

TEST_CASE("spec validation") {
    EnsembleSpec spec;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec.rho0_grid = {0.5};
    CHECK_NOTHROW(spec.validate());
    spec.realizations = 0;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    CHECK_THROWS_AS(backend_from_string("dmrg"), ConfigError);
    CHECK(backend_from_string("mps") == Backend::Mps);
    CHECK(boundary_from_string("periodic") == Boundary::Periodic);
}

}
