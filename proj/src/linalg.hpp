#pragma once

#include <Eigen/Dense>

namespace qgol::detail {

struct TruncatedSvd {
    Eigen::MatrixXcd u;
    Eigen::VectorXd singular_values;
    Eigen::MatrixXcd vh;
    double total_weight = 0.0;
    double discarded_weight = 0.0;
};

/// Thin SVD of `m` keeping at most `cap` singular values, further dropping
/// those below `rel_cutoff` times the largest. At least one value is kept.
TruncatedSvd truncated_svd(const Eigen::MatrixXcd &m, int cap, double rel_cutoff);

} // namespace qgol::detail
