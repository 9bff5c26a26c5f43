#include "eave/mmatrix.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace eave {

std::string MMatrixReport::summary() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "m-matrix=%s (pos offdiag: %zu, neg colsums: %zu, bad diag: %zu, "
                  "strict cols: %d, colsum range [%.3g, %.3g], tol %.3g)",
                  is_m_matrix ? "yes" : "no", positive_offdiag.size(),
                  negative_col_sums.size(), nonpositive_diag.size(), strict_col_count,
                  min_col_sum, max_col_sum, tol);
    return buf;
}

MMatrixReport m_matrix_check(const SparseMatrix& a, double tol) {
    if (a.n_rows != a.n_cols) throw Error("m_matrix_check: matrix not square");
    MMatrixReport rep;
    rep.tol = tol < 0.0 ? 1e-12 * a.max_abs() : tol;

    std::vector<double> col_sum(a.n_cols, 0.0);
    std::vector<bool> has_diag(a.n_rows, false);
    for (int i = 0; i < a.n_rows; ++i) {
        for (int k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
            const int j = a.col_idx[k];
            const double v = a.values[k];
            col_sum[j] += v;
            if (i == j) {
                has_diag[i] = true;
                if (v <= 0.0) rep.nonpositive_diag.emplace_back(i, v);
            } else if (v > rep.tol) {
                rep.positive_offdiag.emplace_back(i, j, v);
            }
        }
    }
    for (int i = 0; i < a.n_rows; ++i)
        if (!has_diag[i]) rep.nonpositive_diag.emplace_back(i, 0.0);

    rep.min_col_sum = std::numeric_limits<double>::infinity();
    rep.max_col_sum = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < a.n_cols; ++j) {
        rep.min_col_sum = std::min(rep.min_col_sum, col_sum[j]);
        rep.max_col_sum = std::max(rep.max_col_sum, col_sum[j]);
        if (col_sum[j] < -rep.tol) rep.negative_col_sums.emplace_back(j, col_sum[j]);
        if (col_sum[j] > rep.tol) rep.strict_col_count++;
    }

    rep.is_m_matrix = rep.positive_offdiag.empty() && rep.negative_col_sums.empty() &&
                      rep.nonpositive_diag.empty() && rep.strict_col_count >= 1;
    return rep;
}

} // namespace eave
