#ifndef EAVE_MMATRIX_HPP
#define EAVE_MMATRIX_HPP

#include "eave/sparse.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace eave {

// Structural M-matrix verdict: nonpositive off-diagonals, positive diagonal,
// nonnegative column sums with at least one strictly positive column.
struct MMatrixReport {
    bool is_m_matrix = false;
    double tol = 0.0;
    std::vector<std::tuple<int, int, double>> positive_offdiag;  // (i, j, value)
    std::vector<std::pair<int, double>> negative_col_sums;       // (j, sum)
    std::vector<std::pair<int, double>> nonpositive_diag;        // (i, value)
    double min_col_sum = 0.0;
    double max_col_sum = 0.0;
    int strict_col_count = 0;

    std::string summary() const;
};

// tol < 0 selects the default 1e-12 * max|A_ij|.
MMatrixReport m_matrix_check(const SparseMatrix& a, double tol = -1.0);

} // namespace eave

#endif
