#include "eave/experiments.hpp"

#include "eave/errors.hpp"
#include "eave/norms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eave {

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

int voronoi_cell_target(int resolution) {
    // Seed density matched to the hexagonal lattice at the same nominal h.
    return std::max(4, static_cast<int>(std::llround(1.247 * resolution * resolution)));
}

ProblemSpec problem_for(const ExperimentConfig& config) {
    ProblemSpec spec;
    if (config.problem == "layer") spec = layer_problem(config.epsilon);
    else if (config.problem == "sine") spec = sine_problem();
    else throw ConfigError("unknown problem: " + config.problem);
    spec.edge_rule = config.edge_rule;
    return spec;
}

ScalarField exact_for(const ExperimentConfig& config) {
    if (config.problem == "layer") return exact_solution_layer(config.epsilon);
    return exact_solution_sine();
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw ConfigError(what + ": trailing characters in '" + s + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(what + ": cannot parse '" + s + "' as a number");
    }
}

long long parse_integer(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw ConfigError(what + ": trailing characters in '" + s + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(what + ": cannot parse '" + s + "' as an integer");
    }
}

} // namespace

void ExperimentConfig::validate() const {
    if (resolutions.empty()) throw ConfigError("no resolutions given");
    for (std::size_t i = 1; i < resolutions.size(); ++i)
        if (resolutions[i] <= resolutions[i - 1])
            throw ConfigError("resolutions must be strictly increasing");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    const bool tri = family == "tri";
    const bool dual = family == "hexa-dual" || family == "voro-dual";
    switch (scheme) {
        case SchemeKind::FE:
        case SchemeKind::SUPG:
        case SchemeKind::EAFE:
            if (!tri) throw ConfigError(scheme_name(scheme) + " requires the tri family");
            break;
        case SchemeKind::MEAVE:
            if (!dual) throw ConfigError("meave requires a dual mesh family");
            break;
        case SchemeKind::EAVE:
            break;
    }
    if (family != "tri" && family != "hexa-dual" && family != "voro-dual" && family != "voro" &&
        family != "opti" && family != "ncvx")
        throw ConfigError("unknown family: " + family);
    if (problem != "layer" && problem != "sine")
        throw ConfigError("unknown problem: " + problem);
}

StabChoice stab_from_name(const std::string& name) {
    if (name == "sv") return StabChoice::DofScalar;
    if (name == "se") return StabChoice::EdgeDiff;
    throw ConfigError("unknown stabilization: " + name + " (expected sv or se)");
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config " + path);
    ExperimentConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "scheme") {
            config.scheme = scheme_from_name(value);
        } else if (key == "family") {
            config.family = value;
        } else if (key == "kind") {
            if (value == "uniform-right") config.tri_kind = TriangleKind::UniformRight;
            else if (value == "equilateral") config.tri_kind = TriangleKind::Equilateral;
            else throw ConfigError("unknown kind: " + value);
        } else if (key == "resolutions") {
            config.resolutions.clear();
            std::istringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ','))
                config.resolutions.push_back(
                    static_cast<int>(parse_integer(trim(tok), "resolutions")));
        } else if (key == "epsilon") {
            config.epsilon = parse_double(value, "epsilon");
        } else if (key == "stab") {
            config.stab = stab_from_name(value);
        } else if (key == "edge-rule") {
            if (value == "average") config.edge_rule = EdgeAverageRule::EndpointAverage;
            else if (value == "midpoint") config.edge_rule = EdgeAverageRule::Midpoint;
            else throw ConfigError("unknown edge-rule: " + value);
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_integer(value, "seed"));
        } else if (key == "problem") {
            config.problem = value;
        } else if (key == "out") {
            config.out = value;
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key " + key);
        }
    }
    config.validate();
    return config;
}

GeneratedMesh make_mesh(const std::string& family, int resolution, TriangleKind kind,
                        std::uint64_t seed) {
    GeneratedMesh gm;
    if (family == "tri") {
        gm.mesh = generate_triangle_mesh(resolution, kind);
    } else if (family == "hexa-dual") {
        gm.dual = generate_hexa_dual(resolution);
        gm.mesh = gm.dual->primary;
    } else if (family == "voro-dual") {
        gm.dual = generate_voro_dual(voronoi_cell_target(resolution), seed);
        gm.mesh = gm.dual->primary;
    } else if (family == "voro") {
        gm.mesh = generate_voronoi(voronoi_cell_target(resolution), 0, seed);
    } else if (family == "opti") {
        gm.mesh = generate_voronoi(voronoi_cell_target(resolution), 50, seed);
    } else if (family == "ncvx") {
        gm.mesh = generate_ncvx(resolution);
    } else {
        throw ConfigError("unknown family: " + family);
    }
    return gm;
}

AssembledOperator assemble_scheme(SchemeKind scheme, const GeneratedMesh& gm,
                                  const ProblemSpec& spec, StabChoice stab) {
    switch (scheme) {
        case SchemeKind::FE: return assemble_fe(gm.mesh, spec);
        case SchemeKind::SUPG: return assemble_supg(gm.mesh, spec);
        case SchemeKind::EAFE: return assemble_eafe(gm.mesh, spec);
        case SchemeKind::EAVE: return assemble_eave(gm.mesh, spec, stab);
        case SchemeKind::MEAVE:
            if (!gm.dual) throw Error("meave requires a dual mesh pair");
            return assemble_meave(*gm.dual, spec);
    }
    throw Error("unreachable scheme");
}

double observed_order(double err_coarse, double err_fine, double h_coarse, double h_fine) {
    if (!(err_coarse > 0.0) || !(err_fine > 0.0) || !(h_coarse > h_fine))
        return std::nan("");
    return std::log(err_coarse / err_fine) / std::log(h_coarse / h_fine);
}

ConvergenceReport run_refinement(const ExperimentConfig& config) {
    config.validate();
    ConvergenceReport report;
    report.config = config;

    const ProblemSpec spec = problem_for(config);
    const ScalarField exact = exact_for(config);

    const ConvergenceRow* prev = nullptr;
    for (int resolution : config.resolutions) {
        ConvergenceRow row;
        row.resolution = resolution;
        try {
            const GeneratedMesh gm = make_mesh(config.family, resolution, config.tri_kind,
                                               config.seed);
            row.h = gm.mesh.h;

            const double t0 = now_ms();
            const AssembledOperator op = assemble_scheme(config.scheme, gm, spec, config.stab);
            const LinearSystem sys = apply_dirichlet(op, gm.mesh, spec.g);
            row.assemble_ms = now_ms() - t0;
            row.dofs = static_cast<int>(sys.vertex_of_free.size());
            row.m_matrix = m_matrix_check(sys.a).is_m_matrix;

            const double t1 = now_ms();
            const std::vector<double> u = solve_system(sys);
            row.solve_ms = now_ms() - t1;

            std::vector<double> err = nodal_interpolant(gm.mesh, exact);
            for (std::size_t i = 0; i < err.size(); ++i) err[i] -= u[i];
            row.err_inf = inf_norm(err);
            row.err_a = (config.scheme == SchemeKind::MEAVE)
                            ? a_norm_fvm(*gm.dual, err)
                            : a_norm_vem(gm.mesh, err, config.stab);
            if (prev && !prev->failed) {
                row.order_a = observed_order(prev->err_a, row.err_a, prev->h, row.h);
                row.order_inf = observed_order(prev->err_inf, row.err_inf, prev->h, row.h);
            } else {
                row.order_a = std::nan("");
                row.order_inf = std::nan("");
            }
        } catch (const Error& err) {
            row.failed = true;
            row.message = err.what();
            report.any_failed = true;
        }
        report.rows.push_back(row);
        prev = &report.rows.back();
    }

    if (!config.out.empty()) {
        std::ofstream os(config.out);
        if (!os) throw ConfigError("cannot open " + config.out + " for writing");
        write_report_csv(os, report);
    }
    return report;
}

void write_report_csv(std::ostream& os, const ConvergenceReport& report) {
    os << "h,dofs,err_A,order_A,err_inf,order_inf,assemble_ms,solve_ms,m_matrix\n";
    for (const ConvergenceRow& row : report.rows) {
        if (row.failed) {
            os << "FAILED,,,,,,,," << row.message << "\n";
            continue;
        }
        os << fmt(row.h) << "," << row.dofs << "," << fmt(row.err_a) << "," << fmt(row.order_a)
           << "," << fmt(row.err_inf) << "," << fmt(row.order_inf) << ","
           << fmt(row.assemble_ms, "%.3f") << "," << fmt(row.solve_ms, "%.3f") << ","
           << (row.m_matrix ? 1 : 0) << "\n";
    }
}

SweepReport run_epsilon_sweep(const std::vector<double>& epsilons, int resolution) {
    SweepReport report;
    report.resolution = resolution;

    // FE and SUPG run on the right-triangle grid, where the unstabilized
    // Galerkin solution exhibits its blow-up as epsilon shrinks. EAFE runs
    // on near-equilateral triangles: on the axis-aligned grid its fitted
    // flux is nodally exact for the layer problem and the errors collapse
    // to solver noise, which would make the epsilon-ratio check vacuous.
    const GeneratedMesh tri_right = make_mesh("tri", resolution, TriangleKind::UniformRight, 1);
    const GeneratedMesh tri_equi = make_mesh("tri", resolution, TriangleKind::Equilateral, 1);
    const GeneratedMesh hexa = make_mesh("hexa-dual", resolution, TriangleKind::UniformRight, 1);

    const SchemeKind schemes[] = {SchemeKind::FE, SchemeKind::SUPG, SchemeKind::EAFE,
                                  SchemeKind::EAVE, SchemeKind::MEAVE};
    for (SchemeKind scheme : schemes) {
        const GeneratedMesh& gm =
            (scheme == SchemeKind::EAVE || scheme == SchemeKind::MEAVE)
                ? hexa
                : (scheme == SchemeKind::EAFE ? tri_equi : tri_right);
        for (double eps : epsilons) {
            const ProblemSpec spec = layer_problem(eps);
            const AssembledOperator op = assemble_scheme(scheme, gm, spec, StabChoice::DofScalar);
            const LinearSystem sys = apply_dirichlet(op, gm.mesh, spec.g);
            const std::vector<double> u = solve_system(sys);
            std::vector<double> err = nodal_interpolant(gm.mesh, exact_solution_layer(eps));
            for (std::size_t i = 0; i < err.size(); ++i) err[i] -= u[i];
            report.rows.push_back({scheme_name(scheme), eps, inf_norm(err)});
        }
    }
    return report;
}

void write_sweep_csv(std::ostream& os, const SweepReport& report) {
    os << "scheme,epsilon,err_inf\n";
    for (const SweepRow& row : report.rows)
        os << row.scheme << "," << fmt(row.epsilon) << "," << fmt(row.err_inf) << "\n";
}

AuditReport run_monotonicity_audit(SchemeKind scheme, const GeneratedMesh& gm,
                                   const std::vector<double>& epsilons, StabChoice stab,
                                   double dmp_tol) {
    AuditReport report;
    for (double eps : epsilons) {
        AuditRow row;
        row.scheme = scheme_name(scheme);
        row.epsilon = eps;
        const ProblemSpec spec = layer_problem(eps);
        const AssembledOperator op = assemble_scheme(scheme, gm, spec, stab);
        const LinearSystem sys = apply_dirichlet(op, gm.mesh, spec.g);
        const MMatrixReport mm = m_matrix_check(sys.a);
        row.m_matrix = mm.is_m_matrix;
        row.detail = mm.summary();

        const std::vector<double> u = solve_system(sys);
        row.u_min = *std::min_element(u.begin(), u.end());
        row.u_max = *std::max_element(u.begin(), u.end());
        row.g_min = 0.0;
        row.g_max = 0.0;
        bool first = true;
        for (int v = 0; v < gm.mesh.num_vertices(); ++v) {
            if (!gm.mesh.boundary_vertex[v]) continue;
            const double g = sys.boundary_value[v];
            row.g_min = first ? g : std::min(row.g_min, g);
            row.g_max = first ? g : std::max(row.g_max, g);
            first = false;
        }
        if (row.m_matrix) {
            row.dmp_checked = true;
            row.dmp_ok = row.u_min >= row.g_min - dmp_tol && row.u_max <= row.g_max + dmp_tol;
        }
        report.rows.push_back(row);
    }
    return report;
}

void write_audit_report(std::ostream& os, const AuditReport& report) {
    os << "scheme,epsilon,m_matrix,dmp,u_min,u_max,g_min,g_max\n";
    for (const AuditRow& row : report.rows) {
        os << row.scheme << "," << fmt(row.epsilon) << "," << (row.m_matrix ? 1 : 0) << ","
           << (row.dmp_checked ? (row.dmp_ok ? "pass" : "fail") : "skipped") << ","
           << fmt(row.u_min) << "," << fmt(row.u_max) << "," << fmt(row.g_min) << ","
           << fmt(row.g_max) << "\n";
    }
}

void emit_refinement_plot(std::ostream& os, const ConvergenceReport& report) {
    os << "# " << scheme_name(report.config.scheme) << " on " << report.config.family
       << ", problem " << report.config.problem << "\n";
    os << "# columns: h err_A err_inf\n";
    for (const ConvergenceRow& row : report.rows) {
        if (row.failed) continue;
        os << fmt(row.h) << " " << fmt(row.err_a) << " " << fmt(row.err_inf) << "\n";
    }
}

void emit_sweep_plot(std::ostream& os, const SweepReport& report) {
    os << "# columns: scheme epsilon err_inf\n";
    for (const SweepRow& row : report.rows)
        os << row.scheme << " " << fmt(row.epsilon) << " " << fmt(row.err_inf) << "\n";
}

} // namespace eave
