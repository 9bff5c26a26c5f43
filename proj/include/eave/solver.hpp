#ifndef EAVE_SOLVER_HPP
#define EAVE_SOLVER_HPP

#include "eave/sparse.hpp"

#include <vector>

namespace eave {

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;   // relative, ||b - Ax|| / ||b||
    bool used_dense_fallback = false;
};

// BiCGStab with ILU(0) preconditioning; falls back to dense LU for
// n <= 2000 when the iteration stalls. Throws SolverFailure otherwise.
std::vector<double> solve_sparse(const SparseMatrix& a, const std::vector<double>& b,
                                 double tol = 1e-10, int max_iter = 0,
                                 SolveStats* stats = nullptr);

} // namespace eave

#endif
