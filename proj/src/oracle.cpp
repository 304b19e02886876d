#include "qgol/oracle.hpp"

#include <string>

#include "qgol/error.hpp"

namespace qgol::oracle {

namespace {

void check_capacity(int num_sites) {
    if (num_sites < 5 || num_sites > kOracleMaxSites) {
        throw CapacityError("exact-matrix oracle supports 5.." + std::to_string(kOracleMaxSites) +
                            " sites, got " + std::to_string(num_sites));
    }
}

int bit(Eigen::Index index, int site) { return static_cast<int>((index >> (site - 1)) & 1); }

} // namespace

Eigen::MatrixXd projector_matrix(int num_sites, int site) {
    check_capacity(num_sites);
    const Eigen::Index dim = Eigen::Index{1} << num_sites;
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        const int alive = bit(s, site - 2) + bit(s, site - 1) + bit(s, site + 1) + bit(s, site + 2);
        if (alive == 2 || alive == 3) p(s, s) = 1.0;
    }
    return p;
}

Eigen::MatrixXd term_matrix(int num_sites, int site) {
    check_capacity(num_sites);
    const Eigen::Index dim = Eigen::Index{1} << num_sites;
    Eigen::MatrixXd flip = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) flip(s ^ (Eigen::Index{1} << (site - 1)), s) = 1.0;
    return flip * projector_matrix(num_sites, site);
}

Eigen::MatrixXd hamiltonian_matrix(int num_sites) {
    check_capacity(num_sites);
    const Eigen::Index dim = Eigen::Index{1} << num_sites;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int site = 3; site <= num_sites - 2; ++site) h += term_matrix(num_sites, site);
    return h;
}

ExactPropagator::ExactPropagator(int num_sites) : num_sites_(num_sites) {
    check_capacity(num_sites);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_matrix(num_sites));
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

DenseState ExactPropagator::evolve(const DenseState &state, double t) const {
    if (state.num_sites() != num_sites_) throw ConfigError("state size does not match propagator");
    const auto amps = state.amplitudes();
    const Eigen::Map<const Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
    Eigen::VectorXcd coeffs = eigenvectors_.transpose().cast<Complex>() * psi;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::exp(Complex{0.0, -eigenvalues_(k) * t});
    }
    const Eigen::VectorXcd out = eigenvectors_.cast<Complex>() * coeffs;
    DenseState result(num_sites_);
    auto dst = result.amplitudes();
    for (Eigen::Index k = 0; k < out.size(); ++k) dst[static_cast<std::size_t>(k)] = out(k);
    return result;
}

DenseState dense_oracle_evolve(const DenseState &state, double t) {
    check_capacity(state.num_sites());
    return ExactPropagator(state.num_sites()).evolve(state, t);
}

} // namespace qgol::oracle
