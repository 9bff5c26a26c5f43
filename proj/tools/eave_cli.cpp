#include "eave/errors.hpp"
#include "eave/experiments.hpp"
#include "eave/mesh_io.hpp"
#include "eave/norms.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace eave;

std::vector<double> parse_epsilons(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("cannot parse epsilon value '" + tok + "'");
        }
    }
    if (out.empty()) throw ConfigError("no epsilon values given");
    for (double e : out)
        if (!(e > 0.0)) throw ConfigError("epsilon values must be positive");
    return out;
}

GeneratedMesh load_mesh(const std::string& path) {
    MeshFile file = read_mesh_file(path);
    GeneratedMesh gm;
    gm.mesh = std::move(file.mesh);
    if (file.dual) gm.dual = std::move(*file.dual);
    return gm;
}

int cmd_mesh_gen(const std::string& family, int n, std::uint64_t seed, int lloyd,
                 const std::string& kind, const std::string& out) {
    const TriangleKind tri_kind =
        kind == "equilateral" ? TriangleKind::Equilateral : TriangleKind::UniformRight;
    GeneratedMesh gm;
    if (family == "voro" && lloyd >= 0) {
        const int cells = std::max(4, static_cast<int>(std::llround(1.247 * n * n)));
        gm.mesh = generate_voronoi(cells, lloyd, seed);
    } else {
        gm = make_mesh(family, n, tri_kind, seed);
    }
    if (gm.dual)
        write_dual_file(out, *gm.dual);
    else
        write_mesh_file(out, gm.mesh);
    std::printf("wrote %s: %d vertices, %d cells, h = %.6g\n", out.c_str(),
                gm.mesh.num_vertices(), gm.mesh.num_cells(), gm.mesh.h);
    return 0;
}

int cmd_solve(const std::string& scheme_name_s, const std::string& mesh_path, double epsilon,
              const std::string& stab_s, const std::string& problem, const std::string& prefix,
              bool dump_matrix, bool project_error, const std::string& edge_rule) {
    const SchemeKind scheme = scheme_from_name(scheme_name_s);
    const StabChoice stab = stab_from_name(stab_s);
    const GeneratedMesh gm = load_mesh(mesh_path);
    if (scheme == SchemeKind::MEAVE && !gm.dual)
        throw ConfigError("meave needs a mesh file with a DUAL section");

    ProblemSpec spec;
    ScalarField exact;
    if (problem == "layer") {
        spec = layer_problem(epsilon);
        exact = exact_solution_layer(epsilon);
    } else if (problem == "sine") {
        spec = sine_problem();
        exact = exact_solution_sine();
    } else {
        throw ConfigError("unknown problem: " + problem);
    }
    if (edge_rule == "midpoint") spec.edge_rule = EdgeAverageRule::Midpoint;
    else if (edge_rule != "average") throw ConfigError("unknown edge rule: " + edge_rule);

    const AssembledOperator op = assemble_scheme(scheme, gm, spec, stab);
    const LinearSystem sys = apply_dirichlet(op, gm.mesh, spec.g);
    SolveStats stats;
    const std::vector<double> u = solve_system(sys, &stats);

    std::vector<double> err = nodal_interpolant(gm.mesh, exact);
    for (std::size_t i = 0; i < err.size(); ++i) err[i] -= u[i];
    const double err_a = scheme == SchemeKind::MEAVE
                             ? a_norm_fvm(*gm.dual, err)
                             : a_norm_vem(gm.mesh, err, stab);

    const std::string solution_path = prefix + "_solution.csv";
    std::ofstream os(solution_path);
    if (!os) throw Error("cannot open " + solution_path);
    os << "x,y,u\n";
    char buf[128];
    for (int v = 0; v < gm.mesh.num_vertices(); ++v) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", gm.mesh.vertices[v].x,
                      gm.mesh.vertices[v].y, u[v]);
        os << buf;
    }
    if (dump_matrix) {
        std::ofstream ms(prefix + "_matrix.txt");
        if (!ms) throw Error("cannot open matrix dump");
        sys.a.dump(ms);
    }
    std::printf("%s on %s: %d dofs, err_A = %.6e, err_inf = %.6e, residual = %.2e (%d iters)\n",
                scheme_name_s.c_str(), mesh_path.c_str(),
                static_cast<int>(sys.vertex_of_free.size()), err_a, inf_norm(err),
                stats.residual, stats.iterations);
    if (project_error)
        std::printf("projection L2 error |u - Pi u_h| = %.6e\n",
                    projection_l2_error(gm.mesh, u, exact));
    std::printf("solution written to %s\n", solution_path.c_str());
    return 0;
}

int cmd_convergence(const std::string& config_path) {
    const ExperimentConfig config = parse_config_file(config_path);
    const ConvergenceReport report = run_refinement(config);
    write_report_csv(std::cout, report);
    if (!config.out.empty()) {
        std::ofstream plot(config.out + ".dat");
        if (plot) emit_refinement_plot(plot, report);
        std::fprintf(stderr, "csv: %s, plot data: %s.dat\n", config.out.c_str(),
                     config.out.c_str());
    }
    return report.any_failed ? 2 : 0;
}

int cmd_audit(const std::string& scheme_name_s, const std::string& mesh_path,
              const std::string& epsilons, const std::string& stab_s) {
    const GeneratedMesh gm = load_mesh(mesh_path);
    const AuditReport report = run_monotonicity_audit(
        scheme_from_name(scheme_name_s), gm, parse_epsilons(epsilons), stab_from_name(stab_s));
    write_audit_report(std::cout, report);
    return 0;
}

int cmd_sweep(const std::string& epsilons, int n, const std::string& out) {
    const SweepReport report = run_epsilon_sweep(parse_epsilons(epsilons), n);
    write_sweep_csv(std::cout, report);
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw Error("cannot open " + out);
        emit_sweep_plot(os, report);
        std::fprintf(stderr, "plot data: %s\n", out.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-averaged virtual element methods for convection-diffusion "
                 "on polygonal meshes"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("mesh-gen", "generate a mesh and write it to a file");
    std::string family, gen_out, kind = "uniform-right";
    int gen_n = 8, lloyd = -1;
    std::uint64_t seed = 1;
    gen->add_option("--family", family, "tri|hexa-dual|voro-dual|voro|opti|ncvx")->required();
    gen->add_option("--n", gen_n, "resolution (nominal h = 1/n)")->required();
    gen->add_option("--seed", seed, "RNG seed for the random families");
    gen->add_option("--lloyd", lloyd, "Lloyd iterations (voro family only)");
    gen->add_option("--kind", kind, "triangle kind: uniform-right|equilateral");
    gen->add_option("--out", gen_out, "output mesh file")->required();

    auto* sol = app.add_subcommand("solve", "solve one problem on a mesh file");
    std::string scheme = "meave", mesh_path, prefix = "out", stab = "sv", problem = "layer";
    std::string edge_rule = "average";
    double epsilon = 1e-2;
    bool dump_matrix = false, project_error = false;
    sol->add_option("--scheme", scheme, "fe|supg|eafe|eave|meave")->required();
    sol->add_option("--mesh", mesh_path, "mesh file from mesh-gen")->required();
    sol->add_option("--epsilon", epsilon, "diffusion coefficient");
    sol->add_option("--stab", stab, "vem stabilization: sv|se");
    sol->add_option("--problem", problem, "layer|sine");
    sol->add_option("--edge-rule", edge_rule, "edge coefficient rule: average|midpoint");
    sol->add_option("--out", prefix, "output prefix")->required();
    sol->add_flag("--dump-matrix", dump_matrix, "write the reduced matrix in i j value form");
    sol->add_flag("--project-error", project_error,
                  "also report the L2 distance of the projected solution to the exact one");

    auto* conv = app.add_subcommand("convergence", "refinement study from a config file");
    std::string config_path;
    conv->add_option("--config", config_path, "key = value config file")->required();

    auto* aud = app.add_subcommand("audit", "m-matrix and maximum-principle audit");
    std::string audit_scheme = "meave", audit_mesh, audit_eps = "1e-2,1e-6", audit_stab = "sv";
    aud->add_option("--scheme", audit_scheme)->required();
    aud->add_option("--mesh", audit_mesh)->required();
    aud->add_option("--epsilons", audit_eps, "comma separated list");
    aud->add_option("--stab", audit_stab);

    auto* sw = app.add_subcommand("sweep", "L-inf errors of all schemes over epsilon");
    std::string sweep_eps = "1e-2,1e-3,1e-4,1e-5,1e-6", sweep_out;
    int sweep_n = 8;
    sw->add_option("--epsilons", sweep_eps, "comma separated list");
    sw->add_option("--n", sweep_n, "resolution (nominal h = 1/n)");
    sw->add_option("--out", sweep_out, "plot data file");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return cmd_mesh_gen(family, gen_n, seed, lloyd, kind, gen_out);
        if (sol->parsed())
            return cmd_solve(scheme, mesh_path, epsilon, stab, problem, prefix, dump_matrix,
                             project_error, edge_rule);
        if (conv->parsed()) return cmd_convergence(config_path);
        if (aud->parsed()) return cmd_audit(audit_scheme, audit_mesh, audit_eps, audit_stab);
        if (sw->parsed()) return cmd_sweep(sweep_eps, sweep_n, sweep_out);
        return 3;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
