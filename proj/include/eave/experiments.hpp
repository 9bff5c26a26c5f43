#ifndef EAVE_EXPERIMENTS_HPP
#define EAVE_EXPERIMENTS_HPP

#include "eave/assemble.hpp"
#include "eave/generators.hpp"
#include "eave/mmatrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eave {

struct ExperimentConfig {
    SchemeKind scheme = SchemeKind::MEAVE;
    std::string family = "hexa-dual";  // tri | hexa-dual | voro-dual | voro | opti | ncvx
    TriangleKind tri_kind = TriangleKind::UniformRight;
    std::vector<int> resolutions;      // strictly increasing, nominal h = 1/n
    double epsilon = 1e-2;
    StabChoice stab = StabChoice::DofScalar;
    EdgeAverageRule edge_rule = EdgeAverageRule::EndpointAverage;
    std::uint64_t seed = 1;
    std::string problem = "layer";     // layer | sine
    std::string out;                   // CSV path; empty = no file

    void validate() const;
};

ExperimentConfig parse_config_file(const std::string& path);
StabChoice stab_from_name(const std::string& name);

// A generated mesh, with the dual pair attached for dual families.
struct GeneratedMesh {
    PolygonalMesh mesh;
    std::optional<DualMeshPair> dual;
};

GeneratedMesh make_mesh(const std::string& family, int resolution, TriangleKind kind,
                        std::uint64_t seed);

// One scheme assembly + Dirichlet reduction for a problem.
AssembledOperator assemble_scheme(SchemeKind scheme, const GeneratedMesh& gm,
                                  const ProblemSpec& spec, StabChoice stab);

struct ConvergenceRow {
    int resolution = 0;
    double h = 0.0;
    int dofs = 0;
    double err_a = 0.0, order_a = 0.0;
    double err_inf = 0.0, order_inf = 0.0;
    double assemble_ms = 0.0, solve_ms = 0.0;
    bool m_matrix = false;
    bool failed = false;
    std::string message;
};

struct ConvergenceReport {
    ExperimentConfig config;
    std::vector<ConvergenceRow> rows;
    bool any_failed = false;
};

// Refinement study against the nodal interpolant of the exact solution;
// failed rows are marked and the remaining resolutions still run.
ConvergenceReport run_refinement(const ExperimentConfig& config);

// Observed order between consecutive levels.
double observed_order(double err_coarse, double err_fine, double h_coarse, double h_fine);

// CSV schema: h,dofs,err_A,order_A,err_inf,order_inf,assemble_ms,solve_ms,m_matrix.
void write_report_csv(std::ostream& os, const ConvergenceReport& report);

struct SweepRow {
    std::string scheme;
    double epsilon = 0.0;
    double err_inf = 0.0;
};

struct SweepReport {
    int resolution = 0;
    std::uint64_t seed = 1;
    std::vector<SweepRow> rows;
};

// L-infinity errors of all five schemes on the layer problem at fixed
// resolution: FE/SUPG/EAFE on right triangles, EAVE/M-EAVE on hexa-dual.
SweepReport run_epsilon_sweep(const std::vector<double>& epsilons, int resolution);
void write_sweep_csv(std::ostream& os, const SweepReport& report);

struct AuditRow {
    std::string scheme;
    double epsilon = 0.0;
    bool m_matrix = false;
    bool dmp_checked = false;
    bool dmp_ok = false;
    double u_min = 0.0, u_max = 0.0, g_min = 0.0, g_max = 0.0;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditRow> rows;
};

// Assembles the scheme on the layer problem for each epsilon, checks the
// M-matrix property of the reduced operator and, when it holds, verifies
// the discrete maximum principle of the solved system.
AuditReport run_monotonicity_audit(SchemeKind scheme, const GeneratedMesh& gm,
                                   const std::vector<double>& epsilons, StabChoice stab,
                                   double dmp_tol = 1e-10);
void write_audit_report(std::ostream& os, const AuditReport& report);

// Plot-ready data files (no timing columns, byte-stable across runs).
void emit_refinement_plot(std::ostream& os, const ConvergenceReport& report);
void emit_sweep_plot(std::ostream& os, const SweepReport& report);

} // namespace eave

#endif
