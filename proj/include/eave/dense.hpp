#ifndef EAVE_DENSE_HPP
#define EAVE_DENSE_HPP

#include <cstddef>
#include <vector>

namespace eave {

// Small row-major dense matrix used for local element matrices and the
// dense solver fallback.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }

    DenseMatrix transposed() const;

    // this * other
    DenseMatrix operator*(const DenseMatrix& other) const;
    std::vector<double> operator*(const std::vector<double>& v) const;

    double max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// Solves A x = b by LU with partial pivoting. Throws SolverFailure when the
// matrix is numerically singular.
std::vector<double> dense_solve(DenseMatrix a, std::vector<double> b);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(DenseMatrix a, double tol = 1e-13);

} // namespace eave

#endif
