#include <doctest.h>

#include <map>
#include <random>

#include "qgol/classical.hpp"
#include "qgol/error.hpp"

using namespace qgol;

namespace {

// Rule applied by hand from the neighbor counts, without the library helpers.
ClassicalConfig reference_step(const ClassicalConfig &c) {
    auto out = c;
    const int L = c.size();
    for (int i = 3; i <= L - 2; ++i) {
        const int n = c.at(i - 2) + c.at(i - 1) + c.at(i + 1) + c.at(i + 2);
        if (n == 2 || n == 3) out.bits[static_cast<std::size_t>(i - 1)] ^= 1u;
    }
    return out;
}

} // namespace

TEST_SUITE("classical") {

TEST_CASE("worked examples") {
    const auto c = ClassicalConfig::from_string("0011001100");
    CHECK(classical_step(c).to_string() == "0011111100");
    const auto traj = classical_evolve(c, 2);
    REQUIRE(traj.configs.size() == 3);
    CHECK(traj.configs[1].to_string() == "0011111100");
    CHECK(traj.configs[2].to_string() == "0000110000");
    CHECK(classical_step(ClassicalConfig::all_alive(17)) == ClassicalConfig::all_alive(17));
    CHECK(classical_step(ClassicalConfig::all_dead(17)) == ClassicalConfig::all_dead(17));
}

TEST_CASE("fixed-point trajectories") {
    const auto alive = classical_evolve(ClassicalConfig::all_alive(20), 100);
    const auto dead = classical_evolve(ClassicalConfig::all_dead(20), 100);
    for (std::size_t g = 0; g <= 100; ++g) {
        CHECK(alive.density[g] == 1.0);
        CHECK(alive.diversity[g] == 1);
        CHECK(dead.density[g] == 0.0);
        CHECK(dead.diversity[g] == 0);
    }
    CHECK_THROWS_AS(classical_evolve(ClassicalConfig::all_dead(8), 0), ConfigError);
}

TEST_CASE("exhaustive agreement with the hand rule") {
    for (int L : {5, 8, 11}) {
        for (unsigned m = 0; m < (1u << L); ++m) {
            std::vector<std::uint8_t> b(static_cast<std::size_t>(L));
            for (int k = 0; k < L; ++k) b[static_cast<std::size_t>(k)] = (m >> k) & 1u;
            const ClassicalConfig c(b);
            REQUIRE(classical_step(c) == reference_step(c));
        }
    }
}

TEST_CASE("periodic boundary wraps neighbors") {
    // Site 1 sees sites L-1, L, 2, 3.
    const auto c = ClassicalConfig::from_string("0100000011");
    const auto next = classical_step(c, Boundary::Periodic);
    CHECK(next.at(1) == 1);
    CHECK(classical_step(ClassicalConfig::all_alive(9), Boundary::Periodic) == ClassicalConfig::all_alive(9));
}

TEST_CASE("reflection equivariance") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::uint8_t> b(24);
        for (auto &x : b) x = static_cast<std::uint8_t>(rng() & 1u);
        const ClassicalConfig c(b);
        for (auto boundary : {Boundary::Frozen, Boundary::Periodic}) {
            REQUIRE(classical_step(c.mirrored(), boundary) == classical_step(c, boundary).mirrored());
        }
    }
}

TEST_CASE("injectivity scan agrees with brute-force enumeration") {
    for (int L : {5, 8}) {
        const auto report = injectivity_scan(L);
        std::map<std::string, int> images;
        for (unsigned m = 0; m < (1u << L); ++m) {
            std::vector<std::uint8_t> b(static_cast<std::size_t>(L));
            for (int k = 0; k < L; ++k) b[static_cast<std::size_t>(k)] = (m >> k) & 1u;
            images[classical_step(ClassicalConfig(b)).to_string()]++;
        }
        CHECK(report.num_sites == L);
        CHECK(report.num_configs == (1u << L));
        CHECK(report.distinct_images == images.size());
        CHECK(report.bijective == (images.size() == (1u << L)));
        CHECK(report.total_collisions == (1u << L) - images.size());
        for (const auto &col : report.collisions) {
            std::vector<std::uint8_t> a(static_cast<std::size_t>(L)), b(static_cast<std::size_t>(L));
            for (int k = 0; k < L; ++k) {
                a[static_cast<std::size_t>(k)] = (col.first >> k) & 1u;
                b[static_cast<std::size_t>(k)] = (col.second >> k) & 1u;
            }
            CHECK(col.first != col.second);
            CHECK(classical_step(ClassicalConfig(a)) == classical_step(ClassicalConfig(b)));
            CHECK(classical_step(ClassicalConfig(a)).to_index() == col.image);
        }
    }
    CHECK_THROWS_AS(injectivity_scan(17), CapacityError);
}

}
