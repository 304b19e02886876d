#include <doctest.h>

#include <random>

#include "../src/linalg.hpp"

using qgol::detail::truncated_svd;

TEST_SUITE("linalg") {

TEST_CASE("untruncated factors reconstruct the input") {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g;
    for (auto [rows, cols] : {std::pair{16, 16}, {32, 16}, {20, 64}, {60, 480}, {1, 2}}) {
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = {g(rng), g(rng)};
        const auto svd = truncated_svd(m, 1000, 0.0);
        const Eigen::MatrixXcd back = svd.u * svd.singular_values.asDiagonal() * svd.vh;
        CHECK((back - m).norm() < 1e-12 * m.norm());
        const auto k = svd.singular_values.size();
        CHECK((svd.u.adjoint() * svd.u - Eigen::MatrixXcd::Identity(k, k)).norm() < 1e-12);
        CHECK((svd.vh * svd.vh.adjoint() - Eigen::MatrixXcd::Identity(k, k)).norm() < 1e-12);
        CHECK(svd.discarded_weight == 0.0);
    }
}

TEST_CASE("rank-deficient input with clustered singular values") {
    // Many exactly repeated and near-zero singular values; the shape that
    // arises when a few-site gate acts on a product-like window.
    std::mt19937_64 rng(13);
    std::normal_distribution<double> g;
    const int n = 32;
    Eigen::MatrixXcd a(n, n), b(n, n);
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        a.data()[k] = {g(rng), g(rng)};
        b.data()[k] = {g(rng), g(rng)};
    }
    const Eigen::MatrixXcd qa = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
    const Eigen::MatrixXcd qb = Eigen::HouseholderQR<Eigen::MatrixXcd>(b).householderQ();
    Eigen::VectorXd s(n);
    for (int k = 0; k < n; ++k) s(k) = k < 8 ? 0.3 : (k < 20 ? 1e-6 : 1e-15 * k);
    const Eigen::MatrixXcd m = qa * s.cast<std::complex<double>>().asDiagonal() * qb.adjoint();
    const auto svd = truncated_svd(m, 1000, 0.0);
    CHECK((svd.u * svd.singular_values.asDiagonal() * svd.vh - m).norm() < 1e-13);
}

TEST_CASE("truncation by cap and by relative cutoff") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 2.0;
    m(1, 1) = 1.0;
    m(2, 2) = 1e-12;
    const auto capped = truncated_svd(m, 1, 1e-10);
    CHECK(capped.singular_values.size() == 1);
    CHECK(capped.discarded_weight == doctest::Approx(1.0));
    CHECK(capped.total_weight == doctest::Approx(5.0));
    const auto cut = truncated_svd(m, 10, 1e-10);
    CHECK(cut.singular_values.size() == 2);
    CHECK(truncated_svd(Eigen::MatrixXcd::Zero(3, 3), 10, 1e-10).singular_values.size() == 1);
}

}
