#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qgol/dense.hpp"
#include "qgol/error.hpp"
#include "qgol/oracle.hpp"

using namespace qgol;

namespace {

double max_deviation(const DenseState &a, const DenseState &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a.amplitudes()[k] - b.amplitudes()[k]));
    }
    return worst;
}

ClassicalConfig random_config(int L, std::mt19937_64 &rng) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(L));
    for (auto &x : b) x = static_cast<std::uint8_t>(rng() & 1u);
    return ClassicalConfig(b);
}

DenseState evolve_steps(const ClassicalConfig &c, double dt, int order, int steps) {
    auto state = init_dense(c);
    const DenseStepper stepper(LatticeSpec(c.size()), dt, order);
    for (int k = 0; k < steps; ++k) stepper.step(state);
    return state;
}

} // namespace

TEST_SUITE("dense") {

TEST_CASE("basis encoding") {
    const auto zero = init_dense(ClassicalConfig::all_dead(5));
    CHECK(zero.amplitudes()[0] == Complex{1.0, 0.0});
    const auto s = init_dense(ClassicalConfig::from_string("00110"));
    CHECK(s.amplitudes()[12] == Complex{1.0, 0.0});
    CHECK(s.norm() == 1.0);
    CHECK_THROWS_AS(DenseState(30), CapacityError);
}

TEST_CASE("single term propagator") {
    const auto terms = build_terms(LatticeSpec(5));
    // |11001>: sites 1, 2 and 5 alive, neighbors of site 3 hold three ones.
    auto s = init_dense(ClassicalConfig::from_string("11001"));
    apply_term_propagator(s, terms[0], std::numbers::pi / 2);
    const auto target = ClassicalConfig::from_string("11101").to_index();
    CHECK(std::abs(s.amplitudes()[target] - Complex{0.0, -1.0}) < 1e-15);
    CHECK(std::abs(s.amplitudes()[ClassicalConfig::from_string("11001").to_index()]) < 1e-15);

    auto frozen = init_dense(ClassicalConfig::from_string("01000"));
    apply_term_propagator(frozen, terms[0], 0.7);
    CHECK(frozen.amplitudes()[2] == Complex{1.0, 0.0});

    std::mt19937_64 rng(3);
    DenseState r(5);
    std::normal_distribution<double> g;
    for (auto &a : r.amplitudes()) a = {g(rng), g(rng)};
    const DenseState before = r;
    apply_term_propagator(r, terms[0], 0.0);
    CHECK(max_deviation(r, before) == 0.0);
}

TEST_CASE("propagator equals the matrix exponential of the brute-force term") {
    const int L = 7;
    const auto terms = build_terms(LatticeSpec(L));
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (const auto &term : terms) {
        DenseState s(L);
        for (auto &a : s.amplitudes()) a = {g(rng), g(rng)};
        Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(s.amplitudes().data(), s.dimension());
        const double theta = 0.37;
        const Eigen::MatrixXcd h = oracle::term_matrix(L, term.flip_site).cast<Complex>();
        const Eigen::MatrixXcd u = (Complex{0.0, -theta} * h).exp();
        const Eigen::VectorXcd expected = u * v;
        apply_term_propagator(s, term, theta);
        const Eigen::VectorXcd got = Eigen::Map<Eigen::VectorXcd>(s.amplitudes().data(), s.dimension());
        CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("rabi oscillation on five sites") {
    EvolutionParams p;
    p.t_final = 3.0;
    const auto rec = evolve_exact(ClassicalConfig::from_string("11001"), p);
    double worst = 0.0;
    for (std::size_t s = 0; s < rec.num_samples(); ++s) {
        worst = std::max(worst, std::abs(rec.populations[s][2] - std::pow(std::sin(rec.times[s]), 2)));
        CHECK(rec.populations[s][0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rec.populations[s][3] == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(worst < 1e-6);

    // sin^2(pi/4) = 1/2 and the visibility over one generation around pi/4 is 1.
    EvolutionParams q;
    q.dt = std::numbers::pi / 400;
    q.sample_interval = std::numbers::pi / 400;
    q.t_final = std::numbers::pi;
    const auto r = evolve_exact(ClassicalConfig::from_string("11001"), q);
    CHECK(r.populations[100][2] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.visibility[100][2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.visibility[100][0] < 1e-12);
}

TEST_CASE("stationary states") {
    for (const char *c : {"0000000000", "0000100000"}) {
        auto s = evolve_steps(ClassicalConfig::from_string(c), 0.01, 4, 200);
        CHECK(s.amplitudes()[ClassicalConfig::from_string(c).to_index()] == Complex{1.0, 0.0});
    }
}

TEST_CASE("order 2 and order 4 differ at third order per step") {
    std::mt19937_64 rng(5);
    const auto c = random_config(9, rng);
    std::vector<double> diffs;
    for (double dt : {0.2, 0.1, 0.05}) {
        diffs.push_back(max_deviation(evolve_steps(c, dt, 2, 1), evolve_steps(c, dt, 4, 1)));
    }
    // Halving dt should shrink the one-step difference by about 2^3.
    CHECK(diffs[0] / diffs[1] > 6.0);
    CHECK(diffs[1] / diffs[2] > 7.0);
}

TEST_CASE("global convergence orders against the oracle") {
    std::mt19937_64 rng(9);
    const auto c = ClassicalConfig::from_string("011011010");
    const auto exact = oracle::dense_oracle_evolve(init_dense(c), 1.0);
    for (int order : {1, 2, 4}) {
        const double e1 = max_deviation(evolve_steps(c, 0.1, order, 10), exact);
        const double e2 = max_deviation(evolve_steps(c, 0.05, order, 20), exact);
        CAPTURE(order);
        CHECK(e1 / e2 > std::pow(2.0, order) * 0.8);
    }
}

TEST_CASE("trotterized evolution matches the oracle at L=9") {
    std::mt19937_64 rng(17);
    const oracle::ExactPropagator exact(9);
    for (int trial = 0; trial < 3; ++trial) {
        const auto c = random_config(9, rng);
        const auto expected = exact.evolve(init_dense(c), 1.0);
        CHECK(max_deviation(evolve_steps(c, 0.01, 4, 100), expected) < 1e-5);
    }
}

TEST_CASE("norm and energy conservation with zero energy for basis states") {
    std::mt19937_64 rng(23);
    const auto c = random_config(12, rng);
    EvolutionParams p;
    p.t_final = 5.0;
    const auto rec = evolve_exact(c, p);
    for (std::size_t s = 0; s < rec.num_samples(); ++s) {
        CHECK(std::abs(rec.norm[s] - 1.0) < 1e-12);
        CHECK(std::abs(rec.energy[s]) < 1e-12);
    }
}

TEST_CASE("energy matches the brute-force hamiltonian") {
    const int L = 8;
    std::mt19937_64 rng(29);
    std::normal_distribution<double> g;
    DenseState s(L);
    for (auto &a : s.amplitudes()) a = {g(rng), g(rng)};
    const Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(s.amplitudes().data(), s.dimension());
    const double expected = std::real(v.dot(oracle::hamiltonian_matrix(L).cast<Complex>() * v));
    CHECK(energy(s, build_terms(LatticeSpec(L))) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("populations reject unnormalized states") {
    DenseState s(5);
    s.amplitudes()[0] = 2.0;
    CHECK_THROWS_AS(populations(s), DiagnosticsError);
}

TEST_CASE("reflection equivariance of the evolution") {
    std::mt19937_64 rng(31);
    const oracle::ExactPropagator exact(10);
    for (int trial = 0; trial < 4; ++trial) {
        const auto c = random_config(10, rng);
        const auto a = populations(exact.evolve(init_dense(c), 2.3));
        const auto b = populations(exact.evolve(init_dense(c.mirrored()), 2.3));
        for (int i = 0; i < 10; ++i) CHECK(a[static_cast<std::size_t>(i)] == doctest::Approx(b[static_cast<std::size_t>(9 - i)]).epsilon(1e-10));

        // Trotterized: the mirrored schedule differs only by splitting error.
        EvolutionParams p;
        p.t_final = 2.0;
        const auto ra = evolve_exact(c, p);
        const auto rb = evolve_exact(c.mirrored(), p);
        for (int i = 0; i < 10; ++i) {
            CHECK(std::abs(ra.populations.back()[static_cast<std::size_t>(i)] -
                           rb.populations.back()[static_cast<std::size_t>(9 - i)]) < 1e-6);
        }
    }
}

}
