#include "eave/errors.hpp"
#include "eave/experiments.hpp"
#include "eave/norms.hpp"
#include "eave/problem.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace eave;

TEST_SUITE_BEGIN("harness");

TEST_CASE("layer solution: boundary traces and the outflow corner") {
    for (double eps : {1e-1, 1e-2, 1e-6}) {
        const ScalarField u = exact_solution_layer(eps);
        for (double x : {0.0, 0.3, 0.7, 1.0}) CHECK(u({x, 1.0}) == 0.0);
        for (double y : {0.0, 0.4, 1.0}) CHECK(u({0.0, y}) == 0.0);
    }
    const ScalarField u6 = exact_solution_layer(1e-6);
    CHECK(u6({1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
    // Spot value against the closed form at a generic point.
    const double eps = 0.1;
    const ScalarField u = exact_solution_layer(eps);
    const double want =
        0.4 * (1.0 - std::exp((0.7 - 1.0) / eps)) / (1.0 - std::exp(-2.0 / eps));
    CHECK(u({0.4, 0.7}) == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("inf norm") {
    CHECK(inf_norm({}) == 0.0);
    CHECK(inf_norm({0.0, 0.0}) == 0.0);
    CHECK(inf_norm({-3.0, 2.0}) == 3.0);
}

TEST_CASE("a-norm of the linear function x on the unit square cell") {
    const PolygonalMesh square =
        PolygonalMesh::build({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, {{0, 1, 2, 3}});
    std::vector<double> v(4);
    for (int i = 0; i < 4; ++i) v[i] = square.vertices[i].x;
    for (StabChoice stab : {StabChoice::DofScalar, StabChoice::EdgeDiff})
        CHECK(a_norm_vem(square, v, stab) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a_norm_vem(square, std::vector<double>(4, 0.0), StabChoice::DofScalar) == 0.0);
    CHECK(a_norm_vem(square, std::vector<double>(4, 1.0), StabChoice::DofScalar) <= 1e-12);
}

TEST_CASE("observed order recovers synthetic rates") {
    CHECK(observed_order(4.0, 1.0, 0.5, 0.25) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(observed_order(2.0, 1.0, 0.5, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isnan(observed_order(0.0, 1.0, 0.5, 0.25)));
}

TEST_CASE("run_refinement produces decreasing errors and a valid csv") {
    ExperimentConfig config;
    config.scheme = SchemeKind::EAVE;
    config.family = "voro";
    config.resolutions = {4, 8};
    config.problem = "sine";
    config.seed = 5;
    const ConvergenceReport report = run_refinement(config);
    REQUIRE(report.rows.size() == 2);
    CHECK_FALSE(report.any_failed);
    CHECK(report.rows[1].err_a < report.rows[0].err_a);
    CHECK(report.rows[1].dofs > report.rows[0].dofs);
    CHECK(report.rows[0].h > report.rows[1].h);

    std::ostringstream os;
    write_report_csv(os, report);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "h,dofs,err_A,order_A,err_inf,order_inf,assemble_ms,solve_ms,m_matrix");
    int lines = 0;
    for (std::string line; std::getline(is, line);) ++lines;
    CHECK(lines == 2);
}

TEST_CASE("failed rows are marked and do not abort the report") {
    ConvergenceReport report;
    report.rows.push_back({8, 0.125, 49, 1e-2, std::nan(""), 1e-3, std::nan(""), 1.0, 2.0, true,
                           false, ""});
    ConvergenceRow failed;
    failed.failed = true;
    failed.message = "mesh generation failed";
    report.rows.push_back(failed);
    report.any_failed = true;
    std::ostringstream os;
    write_report_csv(os, report);
    CHECK(os.str().find("FAILED") != std::string::npos);
}

TEST_CASE("epsilon sweep covers all five schemes in order") {
    const SweepReport report = run_epsilon_sweep({1e-2, 1e-3}, 4);
    REQUIRE(report.rows.size() == 10);
    CHECK(report.rows[0].scheme == "fe");
    CHECK(report.rows[1].scheme == "fe");
    CHECK(report.rows[2].scheme == "supg");
    CHECK(report.rows.back().scheme == "meave");
    CHECK(report.rows[0].epsilon == 1e-2);
    CHECK(report.rows[1].epsilon == 1e-3);
    for (const SweepRow& row : report.rows) CHECK(std::isfinite(row.err_inf));
}

TEST_CASE("monotonicity audit: meave passes, fe fails in the sharp regime") {
    const GeneratedMesh hexa = make_mesh("hexa-dual", 8, TriangleKind::UniformRight, 1);
    const AuditReport meave = run_monotonicity_audit(SchemeKind::MEAVE, hexa, {1e-2, 1e-6},
                                                     StabChoice::DofScalar);
    for (const AuditRow& row : meave.rows) {
        CHECK(row.m_matrix);
        CHECK(row.dmp_checked);
        CHECK(row.dmp_ok);
    }

    const GeneratedMesh tri = make_mesh("tri", 8, TriangleKind::UniformRight, 1);
    const AuditReport fe = run_monotonicity_audit(SchemeKind::FE, tri, {1e-6},
                                                  StabChoice::DofScalar);
    REQUIRE(fe.rows.size() == 1);
    CHECK_FALSE(fe.rows[0].m_matrix);
    // Spurious oscillations overshoot the boundary data noticeably.
    CHECK(fe.rows[0].u_max > fe.rows[0].g_max + 0.05);
}

TEST_CASE("plot emitters are deterministic and header-only when empty") {
    ConvergenceReport empty;
    std::ostringstream os1;
    emit_refinement_plot(os1, empty);
    CHECK(os1.str().find('#') == 0);
    int data_lines = 0;
    std::istringstream is(os1.str());
    for (std::string line; std::getline(is, line);)
        if (!line.empty() && line[0] != '#') ++data_lines;
    CHECK(data_lines == 0);

    const SweepReport sweep = run_epsilon_sweep({1e-2}, 4);
    std::ostringstream a, b;
    emit_sweep_plot(a, sweep);
    emit_sweep_plot(b, run_epsilon_sweep({1e-2}, 4));
    CHECK(a.str() == b.str());
    CHECK(a.str().find("fe ") != std::string::npos);
}

TEST_CASE("config parser: happy path and the documented failure modes") {
    const char* path = "test_config_tmp.cfg";
    {
        std::ofstream os(path);
        os << "# refinement study\n"
           << "scheme = meave\n"
           << "family = hexa-dual\n"
           << "resolutions = 8,16,32\n"
           << "epsilon = 1e-2\n"
           << "stab = sv\n"
           << "seed = 7\n"
           << "problem = layer\n";
    }
    const ExperimentConfig config = parse_config_file(path);
    CHECK(config.scheme == SchemeKind::MEAVE);
    CHECK(config.family == "hexa-dual");
    CHECK(config.resolutions == std::vector<int>{8, 16, 32});
    CHECK(config.epsilon == 1e-2);
    CHECK(config.seed == 7);
    std::remove(path);

    ExperimentConfig bad;
    bad.resolutions = {8, 8};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.resolutions = {8, 16};
    bad.epsilon = -1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.epsilon = 1e-2;
    bad.scheme = SchemeKind::FE;
    bad.family = "voro";
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.family = "tri";
    bad.validate();
}

TEST_CASE("projection L2 diagnostic: exact on linears, converges on sine") {
    // The elliptic projection reproduces linear functions, so the diagnostic
    // vanishes for a linear field on any mesh, including non-convex cells.
    const PolygonalMesh ncvx = generate_ncvx(3);
    const ScalarField lin = [](Point2 p) { return 0.4 * p.x - 1.1 * p.y + 0.2; };
    CHECK(projection_l2_error(ncvx, nodal_interpolant(ncvx, lin), lin) <= 1e-13);

    const ScalarField sine = exact_solution_sine();
    const PolygonalMesh coarse = generate_voronoi(50, 2, 9);
    const PolygonalMesh fine = generate_voronoi(400, 2, 9);
    const double e_coarse = projection_l2_error(coarse, nodal_interpolant(coarse, sine), sine);
    const double e_fine = projection_l2_error(fine, nodal_interpolant(fine, sine), sine);
    CHECK(e_fine < 0.5 * e_coarse);
}

TEST_CASE("nodal interpolant hits vertex values exactly") {
    const GeneratedMesh gm = make_mesh("voro", 4, TriangleKind::UniformRight, 3);
    const ScalarField u = exact_solution_sine();
    const auto ui = nodal_interpolant(gm.mesh, u);
    for (int v = 0; v < gm.mesh.num_vertices(); ++v)
        CHECK(ui[v] == u(gm.mesh.vertices[v]));
}

TEST_SUITE_END();
