#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qgol/error.hpp"
#include "qgol/lattice.hpp"
#include "qgol/observables.hpp"

using namespace qgol;

namespace {

std::vector<std::uint8_t> bits_of(const char *s) { return ClassicalConfig::from_string(s).bits; }

} // namespace

TEST_SUITE("observables") {

TEST_CASE("discretize uses a strict threshold") {
    const std::vector<double> n{0.9, 0.1, 0.5};
    CHECK(discretize(n) == std::vector<std::uint8_t>{1, 0, 0});
    const std::vector<double> basis{0, 0, 1, 1, 0};
    CHECK(discretize(basis) == bits_of("00110"));
}

TEST_CASE("cluster function") {
    const auto c = cluster_function(bits_of("110111"));
    CHECK(c.at(2) == 1);
    CHECK(c.at(3) == 1);
    CHECK(c.at(1) == 0);
    CHECK(c.num_clusters() == 2);
    CHECK(c.mass() == 5);

    const auto alive = cluster_function(std::vector<std::uint8_t>(12, 1));
    CHECK(alive.at(12) == 1);
    CHECK(alive.num_clusters() == 1);
    CHECK(cluster_function(std::vector<std::uint8_t>(12, 0)).num_clusters() == 0);
}

TEST_CASE("density and diversity") {
    CHECK(density(bits_of("0011001100")) == doctest::Approx(0.4));
    CHECK(density(std::vector<std::uint8_t>(7, 1)) == 1.0);
    CHECK(density(std::vector<std::uint8_t>(7, 0)) == 0.0);

    CHECK(diversity(cluster_function(bits_of("110111"))) == 2);
    CHECK(diversity(cluster_function(bits_of("11011011011011"))) == 1);
    CHECK(diversity_literal_sum(cluster_function(bits_of("11011011011011"))) == 5);
    CHECK(diversity(cluster_function(bits_of("0000"))) == 0);
}

TEST_CASE("visibility") {
    const double T = std::numbers::pi / 2;
    std::vector<double> times, rabi, flat;
    for (int k = 0; k <= 400; ++k) {
        const double t = 0.01 * k;
        times.push_back(t);
        rabi.push_back(std::pow(std::sin(t), 2));
        flat.push_back(0.3);
    }
    const auto v = visibility(times, rabi, std::numbers::pi / 4, T);
    CHECK(v.value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_FALSE(v.truncated);
    CHECK(visibility(times, flat, 1.0, T).value == 0.0);
    CHECK(visibility(times, rabi, 0.0, T).truncated);
    CHECK(visibility(times, rabi, 4.0, T).truncated);
    CHECK_THROWS_AS(visibility(times, std::vector<double>{}, 1.0, T), ConfigError);
}

TEST_CASE("cluster mass equals alive count on random vectors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10000; ++trial) {
        const int L = 1 + static_cast<int>(rng() % 64);
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0, 1)(rng));
        std::vector<std::uint8_t> b(static_cast<std::size_t>(L));
        int alive = 0;
        for (auto &x : b) alive += (x = coin(rng) ? 1 : 0);
        const auto c = cluster_function(b);
        REQUIRE(c.mass() == alive);
        REQUIRE(diversity(c) <= c.num_clusters());
    }
}

TEST_CASE("record sample derives columns") {
    TrajectoryRecord r;
    r.num_sites = 4;
    record_sample(r, 0.0, {1, 0.6, 0.2, 1});
    CHECK(r.discretized[0] == std::vector<std::uint8_t>{1, 1, 0, 1});
    CHECK(r.density[0] == 0.75);
    CHECK(r.diversity[0] == 2);
    CHECK(r.diversity_literal[0] == 2);
}

}
