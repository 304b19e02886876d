#include "linalg.hpp"

#include <algorithm>
#include <string>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "qgol/error.hpp"

namespace qgol::detail {

namespace {

struct FullSvd {
    Eigen::MatrixXcd u;
    Eigen::VectorXd s;
    Eigen::MatrixXcd vh;
};

// Eigen 3.4's BDCSVD returns inaccurate factors for some small complex
// matrices met during time evolution, so the decomposition goes to LAPACK:
// divide and conquer first, the QR-iteration driver if that fails to converge.
FullSvd lapack_svd(const Eigen::MatrixXcd &m) {
    const lapack_int rows = static_cast<lapack_int>(m.rows());
    const lapack_int cols = static_cast<lapack_int>(m.cols());
    const lapack_int k = std::min(rows, cols);
    FullSvd out{Eigen::MatrixXcd(rows, k), Eigen::VectorXd(k), Eigen::MatrixXcd(k, cols)};

    Eigen::MatrixXcd a = m;
    lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', rows, cols, a.data(), rows, out.s.data(), out.u.data(),
                                     rows, out.vh.data(), k);
    if (info > 0) {
        a = m;
        std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(k - 1, 1)));
        info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', rows, cols, a.data(), rows, out.s.data(), out.u.data(),
                              rows, out.vh.data(), k, superb.data());
    }
    if (info != 0) {
        throw DiagnosticsError("SVD of a " + std::to_string(rows) + "x" + std::to_string(cols) +
                               " matrix failed (LAPACK info " + std::to_string(info) + ")");
    }
    return out;
}

} // namespace

TruncatedSvd truncated_svd(const Eigen::MatrixXcd &m, int cap, double rel_cutoff) {
    const FullSvd svd = lapack_svd(m);
    const Eigen::VectorXd &s = svd.s;

    TruncatedSvd out;
    out.total_weight = s.squaredNorm();
    Eigen::Index keep = std::min<Eigen::Index>(s.size(), cap);
    const double threshold = s.size() > 0 ? rel_cutoff * s(0) : 0.0;
    while (keep > 1 && s(keep - 1) <= threshold) --keep;
    keep = std::max<Eigen::Index>(keep, 1);

    out.discarded_weight = s.tail(s.size() - keep).squaredNorm();
    out.u = svd.u.leftCols(keep);
    out.singular_values = s.head(keep);
    out.vh = svd.vh.topRows(keep);
    return out;
}

} // namespace qgol::detail
