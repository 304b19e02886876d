#pragma once

// Reference-quality exact evolution through full diagonalization of the
// 2^L x 2^L Hamiltonian. The matrices here are built by direct bit counting
// and share no code with the Trotterized propagators they are used to check.

#include <Eigen/Dense>

#include "qgol/dense.hpp"

namespace qgol::oracle {

/// Largest chain for which full matrices are built.
inline constexpr int kOracleMaxSites = 10;

/// Diagonal projector onto basis states whose neighbors of `site` hold 2 or 3 ones.
Eigen::MatrixXd projector_matrix(int num_sites, int site);

/// Matrix of the single term at `site` (flip times projector).
Eigen::MatrixXd term_matrix(int num_sites, int site);

/// Full Hamiltonian, the sum of term_matrix over sites 3..L-2.
Eigen::MatrixXd hamiltonian_matrix(int num_sites);

/// exp(-i H t) |state> via eigendecomposition of H. Throws CapacityError above
/// kOracleMaxSites.
DenseState dense_oracle_evolve(const DenseState &state, double t);

/// Caches the eigendecomposition so many times can be evaluated cheaply.
class ExactPropagator {
  public:
    explicit ExactPropagator(int num_sites);
    DenseState evolve(const DenseState &state, double t) const;

  private:
    int num_sites_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

} // namespace qgol::oracle
