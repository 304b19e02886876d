#include "qgol/mps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linalg.hpp"
#include "qgol/error.hpp"
#include "qgol/version.hpp"

namespace qgol {

namespace {

using Eigen::Matrix2cd;
using Eigen::MatrixXcd;

Matrix2cd projector(int bit) {
    Matrix2cd p = Matrix2cd::Zero();
    p(bit, bit) = 1.0;
    return p;
}

// Shared skeleton: the outer four sites only route the neighbor count
// through the operator bonds; the center block is chosen from the total.
FiveSiteOperator counting_operator(int first_site, const Matrix2cd &active, const Matrix2cd &inactive) {
    FiveSiteOperator op;
    op.first_site = first_site;
    auto &[w0, w1, w2, w3, w4] = op.tensors;
    for (int s = 0; s < 2; ++s) {
        w0.at(0, s) = projector(s);
        for (int left = 0; left < 2; ++left) w1.at(left, left + s) += projector(s);
        for (int need = 0; need < 3; ++need) {
            if (need - s >= 0 && need - s <= 1) w3.at(need, need - s) += projector(s);
        }
        w4.at(s, 0) = projector(s);
    }
    for (int left = 0; left < 3; ++left) {
        for (int right = 0; right < 3; ++right) {
            w2.at(left, right) = count_is_active(left + right) ? active : inactive;
        }
    }
    return op;
}

// kron with `high` acting on the more significant bit.
MatrixXcd kron(const Matrix2cd &high, const MatrixXcd &low) {
    const Eigen::Index n = low.rows();
    MatrixXcd out(2 * n, 2 * n);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.block(i * n, j * n, n, n) = high(i, j) * low;
    }
    return out;
}

} // namespace

MpoTensor::MpoTensor(int left, int right)
    : left_dim(left), right_dim(right),
      blocks(static_cast<std::size_t>(left * right), Matrix2cd::Zero()) {}

int FiveSiteOperator::max_internal_bond() const {
    int best = 0;
    for (std::size_t k = 0; k + 1 < tensors.size(); ++k) best = std::max(best, tensors[k].right_dim);
    return best;
}

MatrixXcd FiveSiteOperator::to_dense() const {
    std::vector<MatrixXcd> partial(static_cast<std::size_t>(tensors[0].right_dim));
    for (int r = 0; r < tensors[0].right_dim; ++r) partial[static_cast<std::size_t>(r)] = tensors[0].at(0, r);
    for (std::size_t k = 1; k < tensors.size(); ++k) {
        const auto &w = tensors[k];
        const Eigen::Index dim = 2 * partial.front().rows();
        std::vector<MatrixXcd> next(static_cast<std::size_t>(w.right_dim), MatrixXcd::Zero(dim, dim));
        for (int l = 0; l < w.left_dim; ++l) {
            for (int r = 0; r < w.right_dim; ++r) {
                if (w.at(l, r).isZero(0.0)) continue;
                next[static_cast<std::size_t>(r)] += kron(w.at(l, r), partial[static_cast<std::size_t>(l)]);
            }
        }
        partial = std::move(next);
    }
    return partial.front();
}

FiveSiteOperator term_propagator_operator(const HamTerm &term, double theta) {
    Matrix2cd rotation;
    const Complex c{std::cos(theta), 0.0};
    const Complex minus_i_s{0.0, -std::sin(theta)};
    rotation << c, minus_i_s, minus_i_s, c;
    return counting_operator(term.flip_site - 2, rotation, Matrix2cd::Identity());
}

FiveSiteOperator term_hamiltonian_operator(const HamTerm &term) {
    Matrix2cd flip;
    flip << 0.0, 1.0, 1.0, 0.0;
    return counting_operator(term.flip_site - 2, flip, Matrix2cd::Zero());
}

void TruncationLedger::add(double discarded, double raw_norm) {
    total_discarded += discarded;
    pending_raw_norm_ *= raw_norm;
}

void TruncationLedger::close_step() {
    cumulative_per_step.push_back(total_discarded);
    raw_norm_per_step.push_back(pending_raw_norm_);
    pending_raw_norm_ = 1.0;
}

MpsState::MpsState(const ClassicalConfig &config, int bond_cap, double svd_cutoff)
    : bond_cap_(bond_cap), svd_cutoff_(svd_cutoff) {
    LatticeSpec spec(config.size());
    if (bond_cap < 1) throw ConfigError("bond cap must be at least 1");
    tensors_.resize(static_cast<std::size_t>(spec.size()));
    for (int k = 0; k < spec.size(); ++k) {
        auto &t = tensors_[static_cast<std::size_t>(k)];
        const int bit = config.bits[static_cast<std::size_t>(k)];
        t[0] = MatrixXcd::Constant(1, 1, bit == 0 ? 1.0 : 0.0);
        t[1] = MatrixXcd::Constant(1, 1, bit == 1 ? 1.0 : 0.0);
    }
}

int MpsState::bond_dimension(int site) const {
    if (site < 1 || site >= num_sites()) throw ConfigError("bond index out of range");
    return static_cast<int>(tensors_[static_cast<std::size_t>(site - 1)][0].cols());
}

int MpsState::max_bond_dimension() const {
    int best = 1;
    for (const auto &t : tensors_) best = std::max(best, static_cast<int>(t[0].cols()));
    return best;
}

void MpsState::shift_center_right() {
    auto &here = tensors_[static_cast<std::size_t>(center_)];
    auto &next = tensors_[static_cast<std::size_t>(center_ + 1)];
    const Eigen::Index dl = here[0].rows();
    const Eigen::Index dr = here[0].cols();
    MatrixXcd stacked(2 * dl, dr);
    stacked << here[0], here[1];
    Eigen::HouseholderQR<MatrixXcd> qr(stacked);
    const Eigen::Index rank = std::min(2 * dl, dr);
    const MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(2 * dl, rank);
    const MatrixXcd r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
    here[0] = q.topRows(dl);
    here[1] = q.bottomRows(dl);
    next[0] = r * next[0];
    next[1] = r * next[1];
    ++center_;
}

void MpsState::shift_center_left() {
    auto &here = tensors_[static_cast<std::size_t>(center_)];
    auto &prev = tensors_[static_cast<std::size_t>(center_ - 1)];
    const Eigen::Index dl = here[0].rows();
    const Eigen::Index dr = here[0].cols();
    MatrixXcd side(dl, 2 * dr);
    side << here[0], here[1];
    // side = L Q from the QR of its adjoint.
    Eigen::HouseholderQR<MatrixXcd> qr(side.adjoint());
    const Eigen::Index rank = std::min(dl, 2 * dr);
    const MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(2 * dr, rank);
    const MatrixXcd r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
    const MatrixXcd qh = q.adjoint();
    here[0] = qh.leftCols(dr);
    here[1] = qh.rightCols(dr);
    const MatrixXcd l = r.adjoint();
    prev[0] = prev[0] * l;
    prev[1] = prev[1] * l;
    --center_;
}

void MpsState::move_center(int site) {
    if (site < 1 || site > num_sites()) throw ConfigError("center site out of range");
    while (center_ < site - 1) shift_center_right();
    while (center_ > site - 1) shift_center_left();
}

double MpsState::norm() const {
    MatrixXcd env = MatrixXcd::Identity(1, 1);
    for (const auto &t : tensors_) env = t[0].adjoint() * env * t[0] + t[1].adjoint() * env * t[1];
    return std::sqrt(std::abs(env(0, 0)));
}

DenseState MpsState::to_dense() const {
    DenseState out(num_sites());
    // rows[s] holds the row vector for prefix configuration s.
    std::vector<MatrixXcd> rows{MatrixXcd::Identity(1, 1)};
    for (const auto &t : tensors_) {
        std::vector<MatrixXcd> next(rows.size() * 2);
        const std::size_t half = rows.size();
        for (std::size_t s = 0; s < half; ++s) {
            next[s] = rows[s] * t[0];
            next[s + half] = rows[s] * t[1];
        }
        rows = std::move(next);
    }
    auto amps = out.amplitudes();
    for (std::size_t s = 0; s < rows.size(); ++s) amps[s] = rows[s](0, 0);
    return out;
}

double MpsState::apply_window(int first_site, const MatrixXcd &window_matrix) {
    const int first = first_site - 1;
    if (first < 0 || first + 4 >= num_sites()) {
        throw ConfigError("operator window starting at site " + std::to_string(first_site) +
                          " does not fit the chain");
    }
    if (center_ < first) move_center(first + 1);
    if (center_ > first + 4) move_center(first + 5);

    // Contract the window: blocks[s] is (left bond x right bond), bit k of s
    // is the physical state of window site k.
    std::vector<MatrixXcd> blocks{tensors_[static_cast<std::size_t>(first)][0],
                                  tensors_[static_cast<std::size_t>(first)][1]};
    for (int k = 1; k < 5; ++k) {
        const auto &t = tensors_[static_cast<std::size_t>(first + k)];
        const std::size_t half = blocks.size();
        std::vector<MatrixXcd> next(2 * half);
        for (std::size_t s = 0; s < half; ++s) {
            next[s] = blocks[s] * t[0];
            next[s + half] = blocks[s] * t[1];
        }
        blocks = std::move(next);
    }

    std::vector<MatrixXcd> acted(blocks.size(), MatrixXcd::Zero(blocks[0].rows(), blocks[0].cols()));
    for (Eigen::Index out = 0; out < window_matrix.rows(); ++out) {
        for (Eigen::Index in = 0; in < window_matrix.cols(); ++in) {
            const Complex g = window_matrix(out, in);
            if (g == Complex{0.0, 0.0}) continue;
            acted[static_cast<std::size_t>(out)] += g * blocks[static_cast<std::size_t>(in)];
        }
    }
    blocks = std::move(acted);

    double discarded = 0.0;
    for (int k = 0; k < 4; ++k) {
        const Eigen::Index dl = blocks[0].rows();
        const Eigen::Index dr = blocks[0].cols();
        const std::size_t rest = blocks.size() / 2;
        MatrixXcd m(2 * dl, static_cast<Eigen::Index>(rest) * dr);
        for (std::size_t r = 0; r < rest; ++r) {
            for (std::size_t s = 0; s < 2; ++s) {
                m.block(static_cast<Eigen::Index>(s) * dl, static_cast<Eigen::Index>(r) * dr, dl, dr) =
                    blocks[s + 2 * r];
            }
        }
        const auto svd = detail::truncated_svd(m, bond_cap_, svd_cutoff_);
        const double kept = svd.total_weight - svd.discarded_weight;
        const double fraction = svd.total_weight > 0.0 ? svd.discarded_weight / svd.total_weight : 0.0;
        discarded += fraction;
        ledger_.add(fraction, svd.total_weight > 0.0 ? std::sqrt(kept / svd.total_weight) : 1.0);

        auto &site = tensors_[static_cast<std::size_t>(first + k)];
        site[0] = svd.u.topRows(dl);
        site[1] = svd.u.bottomRows(dl);

        const MatrixXcd carry = (svd.singular_values / std::sqrt(kept)).asDiagonal() * svd.vh;
        std::vector<MatrixXcd> next(rest);
        for (std::size_t r = 0; r < rest; ++r) {
            next[r] = carry.middleCols(static_cast<Eigen::Index>(r) * dr, dr);
        }
        blocks = std::move(next);
    }
    auto &last = tensors_[static_cast<std::size_t>(first + 4)];
    last[0] = blocks[0];
    last[1] = blocks[1];
    center_ = first + 4;
    return discarded;
}

MpsState init_mps(const ClassicalConfig &config, int bond_cap) { return MpsState(config, bond_cap); }

double apply_and_compress(MpsState &state, const FiveSiteOperator &op) {
    return state.apply_window(op.first_site, op.to_dense());
}

namespace {

struct Environments {
    std::vector<MatrixXcd> left;  // left[k]: contraction of sites < k (0-based)
    std::vector<MatrixXcd> right; // right[k]: contraction of sites >= k
};

Environments build_environments(const MpsState &state) {
    const int n = state.num_sites();
    Environments env;
    env.left.resize(static_cast<std::size_t>(n + 1));
    env.right.resize(static_cast<std::size_t>(n + 1));
    env.left[0] = MatrixXcd::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        const auto &t = state.tensor(k + 1);
        const auto &e = env.left[static_cast<std::size_t>(k)];
        env.left[static_cast<std::size_t>(k + 1)] = t[0].adjoint() * e * t[0] + t[1].adjoint() * e * t[1];
    }
    env.right[static_cast<std::size_t>(n)] = MatrixXcd::Identity(1, 1);
    for (int k = n - 1; k >= 0; --k) {
        const auto &t = state.tensor(k + 1);
        const auto &e = env.right[static_cast<std::size_t>(k + 1)];
        env.right[static_cast<std::size_t>(k)] = t[0] * e * t[0].adjoint() + t[1] * e * t[1].adjoint();
    }
    return env;
}

double checked_norm_squared(const Environments &env) {
    const double norm2 = std::real(env.left.back()(0, 0));
    if (std::abs(std::sqrt(std::max(norm2, 0.0)) - 1.0) > 1e-6) {
        throw DiagnosticsError("MPS norm " + std::to_string(std::sqrt(std::max(norm2, 0.0))) +
                               " deviates from one");
    }
    return norm2;
}

Complex window_expectation(const MpsState &state, const Environments &env, const FiveSiteOperator &op) {
    const int first = op.first_site - 1;
    std::vector<MatrixXcd> carry{env.left[static_cast<std::size_t>(first)]};
    for (int k = 0; k < 5; ++k) {
        const auto &w = op.tensors[static_cast<std::size_t>(k)];
        const auto &t = state.tensor(first + k + 1);
        const Eigen::Index d = t[0].cols();
        std::vector<MatrixXcd> next(static_cast<std::size_t>(w.right_dim), MatrixXcd::Zero(d, d));
        for (int l = 0; l < w.left_dim; ++l) {
            for (int r = 0; r < w.right_dim; ++r) {
                const auto &block = w.at(l, r);
                for (int out = 0; out < 2; ++out) {
                    for (int in = 0; in < 2; ++in) {
                        if (block(out, in) == Complex{0.0, 0.0}) continue;
                        next[static_cast<std::size_t>(r)] +=
                            block(out, in) * (t[out].adjoint() * carry[static_cast<std::size_t>(l)] * t[in]);
                    }
                }
            }
        }
        carry = std::move(next);
    }
    return (carry.front() * env.right[static_cast<std::size_t>(first + 5)]).trace();
}

} // namespace

std::vector<double> populations(const MpsState &state) {
    const auto env = build_environments(state);
    const double norm2 = checked_norm_squared(env);
    std::vector<double> n(static_cast<std::size_t>(state.num_sites()));
    for (int k = 0; k < state.num_sites(); ++k) {
        const auto &t = state.tensor(k + 1);
        const Complex value = (env.left[static_cast<std::size_t>(k)] * t[1] *
                               env.right[static_cast<std::size_t>(k + 1)] * t[1].adjoint())
                                  .trace();
        n[static_cast<std::size_t>(k)] = std::clamp(std::real(value) / norm2, 0.0, 1.0);
    }
    return n;
}

double energy(const MpsState &state, const std::vector<HamTerm> &terms) {
    const auto env = build_environments(state);
    const double norm2 = checked_norm_squared(env);
    double total = 0.0;
    for (const auto &term : terms) {
        total += std::real(window_expectation(state, env, term_hamiltonian_operator(term)));
    }
    return total / norm2;
}

MpsStepper::MpsStepper(const LatticeSpec &spec, double dt, int order)
    : terms_(build_terms(spec)), groups_(sublattice_partition(terms_)),
      schedule_(splitting_schedule(order)) {
    const HamTerm any = terms_.front();
    for (const auto &stage : schedule_) {
        stage_gates_.push_back(term_propagator_operator(any, stage.fraction * dt).to_dense());
    }
}

void MpsStepper::step(MpsState &state) const {
    for (std::size_t k = 0; k < schedule_.size(); ++k) {
        for (const auto &term : groups_[static_cast<std::size_t>(schedule_[k].group)]) {
            state.apply_window(term.flip_site - 2, stage_gates_[k]);
        }
    }
    state.ledger().close_step();
}

TrajectoryRecord evolve_mps(const ClassicalConfig &config, const EvolutionParams &params, int bond_cap) {
    params.validate();
    const LatticeSpec spec(config.size());
    MpsState state(config, bond_cap);
    const MpsStepper stepper(spec, params.dt, params.order);

    TrajectoryRecord record;
    record.num_sites = spec.size();
    record.metadata = {
        {"backend", "mps"},
        {"bond_cap", std::to_string(bond_cap)},
        {"svd_cutoff", "1e-10"},
        {"code_version", kVersion},
        {"initial_config", config.to_string()},
    };

    auto sample = [&](double t) {
        record_sample(record, t, populations(state));
        record.norm.push_back(state.norm());
        record.energy.push_back(energy(state, stepper.terms()));
        record.discarded_weight.push_back(state.ledger().total_discarded);
        record.max_bond.push_back(state.max_bond_dimension());
    };

    sample(0.0);
    const long per_sample = params.steps_per_sample();
    const long samples = params.num_samples();
    for (long s = 1; s <= samples; ++s) {
        for (long k = 0; k < per_sample; ++k) stepper.step(state);
        sample(static_cast<double>(s * per_sample) * params.dt);
    }
    compute_visibility(record, params.generation_time);
    return record;
}

} // namespace qgol
