#include "eave/sparse.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace eave {

SparseMatrix SparseMatrix::from_triplets(const Triplets& t) {
    SparseMatrix m;
    m.n_rows = t.n_rows;
    m.n_cols = t.n_cols;
    const std::size_t nnz_in = t.values.size();

    // Counting sort by row, then sort each row segment by column and sum
    // duplicates. Deterministic regardless of insertion order.
    std::vector<int> count(t.n_rows + 1, 0);
    for (std::size_t k = 0; k < nnz_in; ++k) count[t.rows[k] + 1]++;
    std::partial_sum(count.begin(), count.end(), count.begin());

    std::vector<int> order(nnz_in);
    {
        std::vector<int> next(count.begin(), count.end() - 1);
        for (std::size_t k = 0; k < nnz_in; ++k) order[next[t.rows[k]]++] = static_cast<int>(k);
    }

    m.row_ptr.assign(t.n_rows + 1, 0);
    m.col_idx.reserve(nnz_in);
    m.values.reserve(nnz_in);
    std::vector<int> seg;
    for (int i = 0; i < t.n_rows; ++i) {
        seg.assign(order.begin() + count[i], order.begin() + count[i + 1]);
        std::sort(seg.begin(), seg.end(),
                  [&](int a, int b) { return t.cols[a] < t.cols[b]; });
        std::size_t k = 0;
        while (k < seg.size()) {
            const int j = t.cols[seg[k]];
            double acc = 0.0;
            while (k < seg.size() && t.cols[seg[k]] == j) acc += t.values[seg[k++]];
            if (acc != 0.0) {
                m.col_idx.push_back(j);
                m.values.push_back(acc);
            }
        }
        m.row_ptr[i + 1] = static_cast<int>(m.col_idx.size());
    }
    for (double v : m.values)
        if (!std::isfinite(v)) throw Error("sparse matrix contains a non-finite entry");
    return m;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m;
    m.n_rows = m.n_cols = n;
    m.row_ptr.resize(n + 1);
    m.col_idx.resize(n);
    m.values.assign(n, 1.0);
    for (int i = 0; i <= n; ++i) m.row_ptr[i] = i;
    std::iota(m.col_idx.begin(), m.col_idx.end(), 0);
    return m;
}

double SparseMatrix::at(int i, int j) const {
    const auto begin = col_idx.begin() + row_ptr[i];
    const auto end = col_idx.begin() + row_ptr[i + 1];
    const auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return 0.0;
    return values[it - col_idx.begin()];
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y(n_rows, 0.0);
    for (int i = 0; i < n_rows; ++i) {
        double acc = 0.0;
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) acc += values[k] * x[col_idx[k]];
        y[i] = acc;
    }
    return y;
}

std::vector<double> SparseMatrix::multiply_transpose(const std::vector<double>& x) const {
    std::vector<double> y(n_cols, 0.0);
    for (int i = 0; i < n_rows; ++i)
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) y[col_idx[k]] += values[k] * x[i];
    return y;
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix d(n_rows, n_cols);
    for (int i = 0; i < n_rows; ++i)
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) d(i, col_idx[k]) = values[k];
    return d;
}

void SparseMatrix::dump(std::ostream& os) const {
    char buf[64];
    for (int i = 0; i < n_rows; ++i)
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", i, col_idx[k], values[k]);
            os << buf;
        }
}

std::vector<double> spmv(const SparseMatrix& a, const std::vector<double>& x) {
    return a.multiply(x);
}

std::vector<double> transpose_spmv(const SparseMatrix& a, const std::vector<double>& x) {
    return a.multiply_transpose(x);
}

bool symmetry_check(const SparseMatrix& a, double tol) {
    if (a.n_rows != a.n_cols) return false;
    for (int i = 0; i < a.n_rows; ++i)
        for (int k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
            if (std::abs(a.values[k] - a.at(a.col_idx[k], i)) > tol) return false;
    return true;
}

double max_elementwise_diff(const SparseMatrix& a, const SparseMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.n_rows; ++i)
        for (int k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
            m = std::max(m, std::abs(a.values[k] - b.at(i, a.col_idx[k])));
    for (int i = 0; i < b.n_rows; ++i)
        for (int k = b.row_ptr[i]; k < b.row_ptr[i + 1]; ++k)
            m = std::max(m, std::abs(b.values[k] - a.at(i, b.col_idx[k])));
    return m;
}

} // namespace eave
