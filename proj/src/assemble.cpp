#include "eave/assemble.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace eave {

namespace {

struct TriGeometry {
    std::array<Point2, 3> x;
    std::array<Point2, 3> grad;  // barycentric gradients
    double area = 0.0;
    Point2 centroid;
};

TriGeometry tri_geometry(const PolygonalMesh& mesh, int c) {
    TriGeometry t;
    for (int k = 0; k < 3; ++k) t.x[k] = mesh.vertices[mesh.cells[c][k]];
    t.area = triangle_signed_area(t.x[0], t.x[1], t.x[2]);
    if (t.area <= 0.0) throw Error("triangle cell " + std::to_string(c) + " is degenerate");
    t.centroid = (1.0 / 3.0) * (t.x[0] + t.x[1] + t.x[2]);
    for (int k = 0; k < 3; ++k) {
        const Point2 opposite = t.x[(k + 2) % 3] - t.x[(k + 1) % 3];
        t.grad[k] = (1.0 / (2.0 * t.area)) * perp(opposite);
    }
    return t;
}

void require_triangles(const PolygonalMesh& mesh, const char* scheme) {
    if (!is_triangle_mesh(mesh))
        throw Error(std::string(scheme) + " requires a triangle mesh");
}

// Scatter of the two-point edge term
//   w * (c_ij u_j - c_ji u_i) * (v_j - v_i)
// into rows row_i, row_j and columns col_i, col_j.
void scatter_edge_term(Triplets& t, double w, const EdgeCoefficients& c, int col_i, int col_j,
                       int row_i, int row_j) {
    t.add(row_j, col_j, w * c.c_ij);
    t.add(row_j, col_i, -w * c.c_ji);
    t.add(row_i, col_j, -w * c.c_ij);
    t.add(row_i, col_i, w * c.c_ji);
}

} // namespace

SchemeKind scheme_from_name(const std::string& name) {
    if (name == "fe") return SchemeKind::FE;
    if (name == "supg") return SchemeKind::SUPG;
    if (name == "eafe") return SchemeKind::EAFE;
    if (name == "eave") return SchemeKind::EAVE;
    if (name == "meave") return SchemeKind::MEAVE;
    throw ConfigError("unknown scheme: " + name);
}

std::string scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::FE: return "fe";
        case SchemeKind::SUPG: return "supg";
        case SchemeKind::EAFE: return "eafe";
        case SchemeKind::EAVE: return "eave";
        case SchemeKind::MEAVE: return "meave";
    }
    return "?";
}

AssembledOperator assemble_fe(const PolygonalMesh& mesh, const ProblemSpec& spec) {
    require_triangles(mesh, "fe");
    const int nv = mesh.num_vertices();
    AssembledOperator op{Triplets(nv, nv), rhs_fh(mesh, spec.f)};
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const TriGeometry t = tri_geometry(mesh, c);
        const double a0 = spec.alpha(t.centroid);
        const Point2 b0 = spec.beta(t.centroid);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                // int alpha grad u . grad v + int (beta . grad v) u
                const double diff = a0 * dot(t.grad[j], t.grad[i]) * t.area;
                const double conv = dot(b0, t.grad[i]) * t.area / 3.0;
                op.matrix.add(mesh.cells[c][i], mesh.cells[c][j], diff + conv);
            }
    }
    return op;
}

AssembledOperator assemble_supg(const PolygonalMesh& mesh, const ProblemSpec& spec) {
    require_triangles(mesh, "supg");
    if (!spec.has_constant_epsilon())
        throw ConfigError("supg requires a constant-epsilon problem");
    AssembledOperator op = assemble_fe(mesh, spec);
    const double eps = spec.epsilon;
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const TriGeometry t = tri_geometry(mesh, c);
        double beta_max = norm(spec.beta(t.centroid));
        for (int k = 0; k < 3; ++k) beta_max = std::max(beta_max, norm(spec.beta(t.x[k])));
        if (beta_max == 0.0) continue;
        const double h_t = std::sqrt(t.area);
        const double peclet = beta_max * h_t / (2.0 * eps);
        if (peclet <= 1.0) continue;  // the parameter formula goes nonpositive
        const double s_e = 0.25 * h_t * h_t / (eps * peclet) * (1.0 - 1.0 / peclet);
        // Convection direction of the residual form is -beta.
        const Point2 b = -1.0 * spec.beta(t.centroid);
        const double f0 = spec.f(t.centroid);
        for (int i = 0; i < 3; ++i) {
            const double bi = dot(b, t.grad[i]);
            for (int j = 0; j < 3; ++j)
                op.matrix.add(mesh.cells[c][i], mesh.cells[c][j],
                              s_e * dot(b, t.grad[j]) * bi * t.area);
            op.rhs[mesh.cells[c][i]] += s_e * f0 * bi * t.area;
        }
    }
    return op;
}

AssembledOperator assemble_eafe(const PolygonalMesh& mesh, const ProblemSpec& spec) {
    require_triangles(mesh, "eafe");
    const int nv = mesh.num_vertices();
    AssembledOperator op{Triplets(nv, nv), rhs_fh(mesh, spec.f)};
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const TriGeometry t = tri_geometry(mesh, c);
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const int opp = (i + 2) % 3;
            // omega_E^T = cot(theta_opp) / 2.
            const double w =
                dot(t.x[i] - t.x[opp], t.x[j] - t.x[opp]) / (4.0 * t.area);
            const EdgeData e = spec.edge_data(t.x[i], t.x[j]);
            const EdgeCoefficients coef = edge_coefficients(e);
            scatter_edge_term(op.matrix, w, coef, mesh.cells[c][i], mesh.cells[c][j],
                              mesh.cells[c][i], mesh.cells[c][j]);
        }
    }
    return op;
}

AssembledOperator assemble_eave(const PolygonalMesh& mesh, const ProblemSpec& spec,
                                StabChoice stab) {
    const int nv = mesh.num_vertices();
    AssembledOperator op{Triplets(nv, nv), rhs_fh(mesh, spec.f)};
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const LocalElement k = LocalElement::from_cell(mesh, c);
        const DenseMatrix a = poisson_local(k, stab);
        const int n = k.nv();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double w = -a(i, j);  // omega_ij^K
                if (w == 0.0) continue;
                const EdgeData e = spec.edge_data(k.verts[i], k.verts[j]);
                const EdgeCoefficients coef = edge_coefficients(e);
                scatter_edge_term(op.matrix, w, coef, mesh.cells[c][i], mesh.cells[c][j],
                                  mesh.cells[c][i], mesh.cells[c][j]);
            }
    }
    return op;
}

AssembledOperator assemble_meave(const DualMeshPair& pair, const ProblemSpec& spec) {
    const PolygonalMesh& mesh = pair.primary;
    const int nv = mesh.num_vertices();
    AssembledOperator op{Triplets(nv, nv), rhs_fvm(pair, spec.f)};
    // Each interior edge appears once per adjacent cell with half weight
    // |E*| / (2|E|); test rows follow the vertex <-> dual triangle bijection
    // (an interior vertex indexes its own balance row, boundary rows are
    // dropped by the Dirichlet reduction).
    for (int c = 0; c < mesh.num_cells(); ++c) {
        for (int e : mesh.cell_edges[c]) {
            const DualPairing& dp = pair.pairing[e];
            if (!dp.interior) continue;
            const MeshEdge& me = mesh.edges[e];
            const Point2 xi = mesh.vertices[me.v0];
            const Point2 xj = mesh.vertices[me.v1];
            const double w = dp.dual_length / (2.0 * dist(xi, xj));
            const EdgeData ed = spec.edge_data(xi, xj);
            const EdgeCoefficients coef = edge_coefficients(ed);
            scatter_edge_term(op.matrix, w, coef, me.v0, me.v1, me.v0, me.v1);
        }
    }
    return op;
}

AssembledOperator assemble_vem_poisson(const PolygonalMesh& mesh, StabChoice stab) {
    const int nv = mesh.num_vertices();
    AssembledOperator op{Triplets(nv, nv), std::vector<double>(nv, 0.0)};
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const LocalElement k = LocalElement::from_cell(mesh, c);
        const DenseMatrix a = poisson_local(k, stab);
        for (int i = 0; i < k.nv(); ++i)
            for (int j = 0; j < k.nv(); ++j)
                op.matrix.add(mesh.cells[c][i], mesh.cells[c][j], a(i, j));
    }
    return op;
}

AssembledOperator assemble_fvm_poisson(const DualMeshPair& pair) {
    const PolygonalMesh& mesh = pair.primary;
    const int nv = mesh.num_vertices();
    AssembledOperator op{Triplets(nv, nv), std::vector<double>(nv, 0.0)};
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const DenseMatrix a = fvm_poisson_local(pair, c);
        for (int i = 0; i < static_cast<int>(mesh.cells[c].size()); ++i)
            for (int j = 0; j < static_cast<int>(mesh.cells[c].size()); ++j)
                if (a(i, j) != 0.0)
                    op.matrix.add(mesh.cells[c][i], mesh.cells[c][j], a(i, j));
    }
    return op;
}

std::vector<double> rhs_fvm(const DualMeshPair& pair, const ScalarField& f) {
    std::vector<double> rhs(pair.primary.num_vertices(), 0.0);
    for (int t = 0; t < static_cast<int>(pair.dual_triangles.size()); ++t) {
        const auto& tri = pair.dual_triangles[t];
        const double area = pair.triangle_area(t);
        const double load = area / 3.0 *
                            (f(pair.seeds[tri[0]]) + f(pair.seeds[tri[1]]) + f(pair.seeds[tri[2]]));
        rhs[pair.triangle_to_vertex[t]] += load;
    }
    return rhs;
}

std::vector<double> rhs_fh(const PolygonalMesh& mesh, const ScalarField& f) {
    std::vector<double> rhs(mesh.num_vertices(), 0.0);
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const double load = mesh.cell_area(c) * f(mesh.cell_centroid(c)) /
                            static_cast<double>(mesh.cells[c].size());
        for (int v : mesh.cells[c]) rhs[v] += load;
    }
    return rhs;
}

LinearSystem apply_dirichlet(const AssembledOperator& op, const PolygonalMesh& mesh,
                             const ScalarField& g) {
    const int nv = mesh.num_vertices();
    LinearSystem sys;
    sys.free_of_vertex.assign(nv, -1);
    sys.boundary_value.assign(nv, 0.0);
    for (int v = 0; v < nv; ++v) {
        if (mesh.boundary_vertex[v]) {
            sys.boundary_value[v] = g(mesh.vertices[v]);
        } else {
            sys.free_of_vertex[v] = static_cast<int>(sys.vertex_of_free.size());
            sys.vertex_of_free.push_back(v);
        }
    }
    const int nf = static_cast<int>(sys.vertex_of_free.size());
    Triplets reduced(nf, nf);
    std::vector<double> b(nf, 0.0);
    for (int i = 0; i < nf; ++i) b[i] = op.rhs[sys.vertex_of_free[i]];
    for (std::size_t k = 0; k < op.matrix.values.size(); ++k) {
        const int row = sys.free_of_vertex[op.matrix.rows[k]];
        if (row < 0) continue;
        const int col_vertex = op.matrix.cols[k];
        const int col = sys.free_of_vertex[col_vertex];
        if (col >= 0)
            reduced.add(row, col, op.matrix.values[k]);
        else
            b[row] -= op.matrix.values[k] * sys.boundary_value[col_vertex];
    }
    sys.a = SparseMatrix::from_triplets(reduced);
    sys.b = std::move(b);
    return sys;
}

std::vector<double> solve_system(const LinearSystem& sys, SolveStats* stats) {
    const std::vector<double> x = solve_sparse(sys.a, sys.b, 1e-10, 0, stats);
    std::vector<double> full = sys.boundary_value;
    for (std::size_t i = 0; i < sys.vertex_of_free.size(); ++i)
        full[sys.vertex_of_free[i]] = x[i];
    return full;
}

} // namespace eave
