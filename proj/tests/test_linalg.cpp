#include "eave/dense.hpp"
#include "eave/errors.hpp"
#include "eave/mmatrix.hpp"
#include "eave/solver.hpp"
#include "eave/sparse.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace eave;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("triplet compression sums duplicates against a dense oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 20;
        Triplets t(n, n);
        DenseMatrix dense(n, n);
        const int entries = 120 + static_cast<int>(test::uniform(rng, 0, 80));
        for (int k = 0; k < entries; ++k) {
            const int i = static_cast<int>(test::uniform(rng, 0, n - 1e-9));
            const int j = static_cast<int>(test::uniform(rng, 0, n - 1e-9));
            const double v = test::uniform(rng, -2.0, 2.0);
            t.add(i, j, v);
            dense(i, j) += v;
        }
        const SparseMatrix a = SparseMatrix::from_triplets(t);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(a.at(i, j) == doctest::Approx(dense(i, j)).epsilon(1e-14));
        // Sorted, deduplicated columns per row.
        for (int i = 0; i < n; ++i)
            for (int k = a.row_ptr[i] + 1; k < a.row_ptr[i + 1]; ++k)
                CHECK(a.col_idx[k - 1] < a.col_idx[k]);
    }
}

TEST_CASE("spmv and transpose spmv match a dense oracle on random 5x5") {
    std::mt19937_64 rng(11);
    Triplets t(5, 5);
    DenseMatrix dense(5, 5);
    for (int k = 0; k < 12; ++k) {
        const int i = static_cast<int>(test::uniform(rng, 0, 5 - 1e-9));
        const int j = static_cast<int>(test::uniform(rng, 0, 5 - 1e-9));
        const double v = test::uniform(rng, -1.0, 1.0);
        t.add(i, j, v);
        dense(i, j) += v;
    }
    const SparseMatrix a = SparseMatrix::from_triplets(t);
    std::vector<double> x(5);
    for (double& xi : x) xi = test::uniform(rng, -1.0, 1.0);
    const auto y = spmv(a, x);
    const auto yt = transpose_spmv(a, x);
    for (int i = 0; i < 5; ++i) {
        double want = 0.0, want_t = 0.0;
        for (int j = 0; j < 5; ++j) {
            want += dense(i, j) * x[j];
            want_t += dense(j, i) * x[j];
        }
        CHECK(y[i] == doctest::Approx(want).epsilon(1e-14));
        CHECK(yt[i] == doctest::Approx(want_t).epsilon(1e-14));
    }
}

TEST_CASE("spmv identity and empty rows") {
    const SparseMatrix eye = SparseMatrix::identity(4);
    const std::vector<double> x{1.0, -2.0, 3.0, 0.5};
    CHECK(spmv(eye, x) == x);

    Triplets t(3, 3);
    t.add(0, 0, 2.0);
    t.add(2, 1, -1.0);
    const SparseMatrix a = SparseMatrix::from_triplets(t);
    const auto y = spmv(a, {1.0, 1.0, 1.0});
    CHECK(y[1] == 0.0);  // empty row
}

TEST_CASE("symmetry check") {
    CHECK(symmetry_check(SparseMatrix::identity(3), 1e-14));
    Triplets t(2, 2);
    t.add(0, 1, 1.0);
    CHECK_FALSE(symmetry_check(SparseMatrix::from_triplets(t), 1e-14));
}

TEST_CASE("m-matrix check on the classic examples") {
    CHECK(m_matrix_check(SparseMatrix::identity(3)).is_m_matrix);

    Triplets good(2, 2);
    good.add(0, 0, 2.0);
    good.add(0, 1, -1.0);
    good.add(1, 0, -1.0);
    good.add(1, 1, 2.0);
    CHECK(m_matrix_check(SparseMatrix::from_triplets(good)).is_m_matrix);

    Triplets bad(2, 2);
    bad.add(0, 0, 1.0);
    bad.add(0, 1, 0.5);
    bad.add(1, 0, 0.5);
    bad.add(1, 1, 1.0);
    const MMatrixReport rep = m_matrix_check(SparseMatrix::from_triplets(bad));
    CHECK_FALSE(rep.is_m_matrix);
    REQUIRE(rep.positive_offdiag.size() == 2);
    CHECK(std::get<0>(rep.positive_offdiag[0]) == 0);
    CHECK(std::get<1>(rep.positive_offdiag[0]) == 1);
    CHECK(std::get<0>(rep.positive_offdiag[1]) == 1);
    CHECK(std::get<1>(rep.positive_offdiag[1]) == 0);
}

TEST_CASE("m-matrix verdict is invariant under symmetric permutation") {
    std::mt19937_64 rng(3);
    const int n = 12;
    Triplets t(n, n);
    for (int i = 0; i < n; ++i) {
        t.add(i, i, 4.0);
        const int j = (i + 1) % n;
        t.add(i, j, -1.0);
        t.add(j, i, -1.0);
    }
    const SparseMatrix a = SparseMatrix::from_triplets(t);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Triplets tp(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
            tp.add(perm[i], perm[a.col_idx[k]], a.values[k]);
    const SparseMatrix ap = SparseMatrix::from_triplets(tp);
    CHECK(m_matrix_check(a).is_m_matrix == m_matrix_check(ap).is_m_matrix);
}

TEST_CASE("solver: identity, diagonally dominant system, singular failure") {
    const SparseMatrix eye = SparseMatrix::identity(5);
    const std::vector<double> b{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(solve_sparse(eye, b) == b);

    std::mt19937_64 rng(5);
    const int n = 60;
    Triplets t(n, n);
    for (int i = 0; i < n; ++i) {
        t.add(i, i, 5.0 + test::uniform(rng));
        t.add(i, (i + 1) % n, -1.0 - test::uniform(rng));
        t.add(i, (i + 7) % n, -1.0);
    }
    const SparseMatrix a = SparseMatrix::from_triplets(t);
    std::vector<double> x_true(n);
    for (double& v : x_true) v = test::uniform(rng, -1.0, 1.0);
    const auto rhs = spmv(a, x_true);
    SolveStats stats;
    const auto x = solve_sparse(a, rhs, 1e-12, 0, &stats);
    CHECK(stats.residual <= 1e-12);
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-9));

    Triplets sing(3, 3);
    sing.add(0, 0, 1.0);
    sing.add(2, 2, 1.0);  // row 1 empty
    CHECK_THROWS_AS(solve_sparse(SparseMatrix::from_triplets(sing), {1.0, 1.0, 1.0}),
                    SolverFailure);
}

TEST_CASE("dense solve and symmetric eigenvalues") {
    DenseMatrix a = test::dense_from({{4.0, 1.0, 0.0}, {1.0, 3.0, -1.0}, {0.0, -1.0, 2.0}});
    const std::vector<double> x_true{1.0, -2.0, 0.5};
    const auto b = a * x_true;
    const auto x = dense_solve(a, b);
    for (int i = 0; i < 3; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-12));

    const auto ev = symmetric_eigenvalues(test::dense_from({{2.0, 1.0}, {1.0, 2.0}}));
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_SUITE_END();
