#include "eave/solver.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace eave {

namespace {

double dot_v(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm_v(const std::vector<double>& a) { return std::sqrt(dot_v(a, a)); }

// Zero-fill incomplete LU stored on the matrix sparsity pattern.
// L is unit lower triangular, U upper triangular including the diagonal.
struct Ilu0 {
    SparseMatrix f;          // factored values on the pattern of A
    std::vector<int> diag;   // index of the diagonal entry per row

    static std::optional<Ilu0> factor(const SparseMatrix& a) {
        Ilu0 ilu;
        ilu.f = a;
        ilu.diag.assign(a.n_rows, -1);
        for (int i = 0; i < a.n_rows; ++i)
            for (int k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
                if (a.col_idx[k] == i) ilu.diag[i] = k;
        for (int d : ilu.diag)
            if (d < 0) return std::nullopt;

        SparseMatrix& m = ilu.f;
        for (int i = 0; i < m.n_rows; ++i) {
            for (int kk = m.row_ptr[i]; kk < m.row_ptr[i + 1]; ++kk) {
                const int k = m.col_idx[kk];
                if (k >= i) break;
                const double ukk = m.values[ilu.diag[k]];
                if (std::abs(ukk) < 1e-300) return std::nullopt;
                const double lik = m.values[kk] / ukk;
                m.values[kk] = lik;
                // Row i update restricted to the existing pattern.
                int jj = kk + 1;
                for (int pp = ilu.diag[k] + 1; pp < m.row_ptr[k + 1]; ++pp) {
                    const int j = m.col_idx[pp];
                    while (jj < m.row_ptr[i + 1] && m.col_idx[jj] < j) ++jj;
                    if (jj == m.row_ptr[i + 1]) break;
                    if (m.col_idx[jj] == j) m.values[jj] -= lik * m.values[pp];
                }
            }
            if (std::abs(m.values[ilu.diag[i]]) < 1e-300) return std::nullopt;
        }
        return ilu;
    }

    void apply(const std::vector<double>& r, std::vector<double>& z) const {
        const SparseMatrix& m = f;
        const int n = m.n_rows;
        for (int i = 0; i < n; ++i) {
            double acc = r[i];
            for (int k = m.row_ptr[i]; k < diag[i]; ++k) acc -= m.values[k] * z[m.col_idx[k]];
            z[i] = acc;
        }
        for (int i = n - 1; i >= 0; --i) {
            double acc = z[i];
            for (int k = diag[i] + 1; k < m.row_ptr[i + 1]; ++k)
                acc -= m.values[k] * z[m.col_idx[k]];
            z[i] = acc / m.values[diag[i]];
        }
    }
};

bool bicgstab(const SparseMatrix& a, const std::vector<double>& b, const Ilu0* prec,
              double tol, int max_iter, std::vector<double>& x, int& iters_out,
              double& rel_out) {
    const int n = a.n_rows;
    const double bnorm = norm_v(b);
    std::vector<double> r(n), rhat(n), p(n, 0.0), v(n, 0.0), s(n), t(n);
    std::vector<double> phat(n, 0.0), shat(n, 0.0);

    auto true_residual = [&](const std::vector<double>& xx) {
        std::vector<double> ax = a.multiply(xx);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = b[i] - ax[i];
            acc += d * d;
        }
        return std::sqrt(acc);
    };

    double rho = 1.0, alpha = 1.0, omega = 1.0;
    auto restart = [&]() {
        const std::vector<double> ax = a.multiply(x);
        for (int i = 0; i < n; ++i) r[i] = b[i] - ax[i];
        rhat = r;
        rho = alpha = omega = 1.0;
        std::fill(p.begin(), p.end(), 0.0);
        std::fill(v.begin(), v.end(), 0.0);
    };
    restart();

    int restarts = 0;
    for (int it = 1; it <= max_iter; ++it) {
        iters_out = it;
        const double rho_new = dot_v(rhat, r);
        if (std::abs(rho_new) < 1e-290) {
            // Breakdown of the rhat inner product.
            if (++restarts > 5) break;
            restart();
            continue;
        }
        const double beta = (rho_new / rho) * (alpha / omega);
        rho = rho_new;
        for (int i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
        if (prec) prec->apply(p, phat); else phat = p;
        v = a.multiply(phat);
        const double rv = dot_v(rhat, v);
        if (std::abs(rv) < 1e-290) {
            if (++restarts > 5) break;
            restart();
            continue;
        }
        alpha = rho / rv;
        for (int i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
        if (norm_v(s) <= tol * bnorm) {
            for (int i = 0; i < n; ++i) x[i] += alpha * phat[i];
            rel_out = true_residual(x) / bnorm;
            if (rel_out <= tol) return true;
            restart();
            continue;
        }
        if (prec) prec->apply(s, shat); else shat = s;
        t = a.multiply(shat);
        const double tt = dot_v(t, t);
        omega = tt < 1e-290 ? 0.0 : dot_v(t, s) / tt;
        for (int i = 0; i < n; ++i) x[i] += alpha * phat[i] + omega * shat[i];
        for (int i = 0; i < n; ++i) r[i] = s[i] - omega * t[i];
        if (norm_v(r) <= tol * bnorm) {
            rel_out = true_residual(x) / bnorm;
            if (rel_out <= tol) return true;
        }
        if (std::abs(omega) < 1e-290) {
            // Stagnated update direction.
            if (++restarts > 5) break;
            restart();
        }
    }
    rel_out = true_residual(x) / bnorm;
    return rel_out <= tol;
}

} // namespace

std::vector<double> solve_sparse(const SparseMatrix& a, const std::vector<double>& b,
                                 double tol, int max_iter, SolveStats* stats) {
    if (a.n_rows != a.n_cols) throw Error("solve_sparse: matrix not square");
    if (static_cast<int>(b.size()) != a.n_rows) throw Error("solve_sparse: size mismatch");
    const int n = a.n_rows;
    if (max_iter <= 0) max_iter = std::max(500, std::min(10 * n, 8000));

    if (n == 0) return {};
    const double bnorm = norm_v(b);
    if (bnorm == 0.0) {
        if (stats) *stats = {0, 0.0, false};
        return std::vector<double>(n, 0.0);
    }

    std::vector<double> x(n, 0.0);
    int iters = 0;
    double rel = 0.0;
    const auto ilu = Ilu0::factor(a);
    const bool ok = bicgstab(a, b, ilu ? &*ilu : nullptr, tol, max_iter, x, iters, rel);
    if (ok) {
        if (stats) *stats = {iters, rel, false};
        return x;
    }

    if (n <= 2000) {
        std::vector<double> xd = dense_solve(a.to_dense(), b);
        std::vector<double> ax = a.multiply(xd);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = b[i] - ax[i];
            acc += d * d;
        }
        const double rel_d = std::sqrt(acc) / bnorm;
        if (rel_d <= tol) {
            if (stats) *stats = {iters, rel_d, true};
            return xd;
        }
        throw SolverFailure(rel_d, iters, "solve_sparse: dense fallback residual above tolerance");
    }
    throw SolverFailure(rel, iters, "solve_sparse: BiCGStab did not reach tolerance");
}

} // namespace eave
