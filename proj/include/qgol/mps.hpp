#pragma once

// Matrix-product-state backend. Each site tensor is stored as a pair of
// (left bond x right bond) matrices, one per physical state. Five-site
// terms are applied by contracting the window, acting with the gate and
// re-factorizing with truncated SVDs.

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "qgol/dense.hpp"
#include "qgol/lattice.hpp"
#include "qgol/observables.hpp"
#include "qgol/splitting.hpp"

namespace qgol {

inline constexpr int kDefaultBondCap = 30;
/// Singular values below this fraction of the largest one are dropped.
inline constexpr double kDefaultSvdCutoff = 1e-10;

/// One site of an operator in tensor-train form: a 2x2 (out, in) block per
/// pair of operator-bond indices.
struct MpoTensor {
    int left_dim = 1;
    int right_dim = 1;
    std::vector<Eigen::Matrix2cd> blocks;

    MpoTensor(int left, int right);
    Eigen::Matrix2cd &at(int l, int r) { return blocks[static_cast<std::size_t>(l * right_dim + r)]; }
    const Eigen::Matrix2cd &at(int l, int r) const {
        return blocks[static_cast<std::size_t>(l * right_dim + r)];
    }
};

/// Operator on sites first_site..first_site+4 (1-based). Internal bond
/// dimensions are 2, 3, 3, 2: the bonds carry the running neighbor count.
struct FiveSiteOperator {
    int first_site = 1;
    std::array<MpoTensor, 5> tensors{MpoTensor(1, 2), MpoTensor(2, 3), MpoTensor(3, 3),
                                     MpoTensor(3, 2), MpoTensor(2, 1)};

    int max_internal_bond() const;
    /// 32x32 matrix; window site k (0-based) is bit k of the row/column index.
    Eigen::MatrixXcd to_dense() const;
};

/// exp(-i theta h) for `term` as a five-site operator.
FiveSiteOperator term_propagator_operator(const HamTerm &term, double theta);

/// The term h itself (flip times projector), used for energy measurements.
FiveSiteOperator term_hamiltonian_operator(const HamTerm &term);

struct TruncationLedger {
    /// Sum of discarded squared weights over the whole run.
    double total_discarded = 0.0;
    /// Value of total_discarded at the end of each closed step.
    std::vector<double> cumulative_per_step;
    /// Product of pre-renormalization norms within each closed step.
    std::vector<double> raw_norm_per_step;

    void add(double discarded, double raw_norm);
    void close_step();

  private:
    double pending_raw_norm_ = 1.0;
};

class MpsState {
  public:
    /// Product state encoding `config`; all bonds have dimension one.
    explicit MpsState(const ClassicalConfig &config, int bond_cap = kDefaultBondCap,
                      double svd_cutoff = kDefaultSvdCutoff);

    int num_sites() const noexcept { return static_cast<int>(tensors_.size()); }
    int bond_cap() const noexcept { return bond_cap_; }
    double svd_cutoff() const noexcept { return svd_cutoff_; }
    /// Dimension of the bond between `site` and `site + 1` (1-based).
    int bond_dimension(int site) const;
    int max_bond_dimension() const;
    /// 1-based site holding the norm; left of it tensors are left-orthonormal,
    /// right of it right-orthonormal.
    int canonical_center() const noexcept { return center_ + 1; }
    void move_center(int site);

    const std::array<Eigen::MatrixXcd, 2> &tensor(int site) const {
        return tensors_[static_cast<std::size_t>(site - 1)];
    }
    const TruncationLedger &ledger() const noexcept { return ledger_; }
    TruncationLedger &ledger() noexcept { return ledger_; }

    /// Norm by full contraction.
    double norm() const;
    /// Expands to a state vector (dense backend size limits apply).
    DenseState to_dense() const;

    /// Contracts sites first..first+4 with `window_matrix` (32x32, see
    /// FiveSiteOperator::to_dense), re-splits with truncation, renormalizes
    /// and returns the discarded weight.
    double apply_window(int first_site, const Eigen::MatrixXcd &window_matrix);

  private:
    void shift_center_right();
    void shift_center_left();

    std::vector<std::array<Eigen::MatrixXcd, 2>> tensors_;
    int bond_cap_;
    double svd_cutoff_;
    int center_ = 0;
    TruncationLedger ledger_;
};

MpsState init_mps(const ClassicalConfig &config, int bond_cap = kDefaultBondCap);

/// Applies `op` at its window and recompresses to the state's bond cap.
/// Returns the discarded weight, which is also appended to the ledger.
double apply_and_compress(MpsState &state, const FiveSiteOperator &op);

/// Site occupations n_1..n_L. Throws DiagnosticsError when the norm deviates
/// from one by more than 1e-6.
std::vector<double> populations(const MpsState &state);

double energy(const MpsState &state, const std::vector<HamTerm> &terms);

/// One product-formula step of length dt, sweeping each sublattice group in
/// ascending site order.
class MpsStepper {
  public:
    MpsStepper(const LatticeSpec &spec, double dt, int order);
    void step(MpsState &state) const;
    const std::vector<HamTerm> &terms() const noexcept { return terms_; }

  private:
    std::vector<HamTerm> terms_;
    std::array<std::vector<HamTerm>, 3> groups_;
    std::vector<SplittingStage> schedule_;
    std::vector<Eigen::MatrixXcd> stage_gates_;
};

/// Full run; the record additionally carries the cumulative discarded weight
/// and the maximal bond dimension at each sample.
TrajectoryRecord evolve_mps(const ClassicalConfig &config, const EvolutionParams &params,
                            int bond_cap = kDefaultBondCap);

} // namespace qgol
