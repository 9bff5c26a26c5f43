#ifndef EAVE_SPARSE_HPP
#define EAVE_SPARSE_HPP

#include "eave/dense.hpp"

#include <iosfwd>
#include <vector>

namespace eave {

// Coordinate-format staging buffer; duplicate (i,j) entries are summed
// during compression.
struct Triplets {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<double> values;

    Triplets() = default;
    Triplets(int r, int c) : n_rows(r), n_cols(c) {}

    void add(int i, int j, double v) {
        rows.push_back(i);
        cols.push_back(j);
        values.push_back(v);
    }
};

// Compressed sparse row matrix. Column indices are sorted within each row
// and entries that sum to exactly zero are dropped at finalization.
struct SparseMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> row_ptr;  // size n_rows + 1
    std::vector<int> col_idx;
    std::vector<double> values;

    static SparseMatrix from_triplets(const Triplets& t);
    static SparseMatrix identity(int n);

    int nnz() const { return static_cast<int>(values.size()); }
    double at(int i, int j) const;  // 0.0 when absent
    double max_abs() const;

    std::vector<double> multiply(const std::vector<double>& x) const;
    std::vector<double> multiply_transpose(const std::vector<double>& x) const;

    DenseMatrix to_dense() const;

    // Coordinate text dump, one `i j value` line per entry, 0-based.
    void dump(std::ostream& os) const;
};

std::vector<double> spmv(const SparseMatrix& a, const std::vector<double>& x);
std::vector<double> transpose_spmv(const SparseMatrix& a, const std::vector<double>& x);

bool symmetry_check(const SparseMatrix& a, double tol);

// Largest |A_ij - B_ij| over the union of both sparsity patterns.
double max_elementwise_diff(const SparseMatrix& a, const SparseMatrix& b);

} // namespace eave

#endif
