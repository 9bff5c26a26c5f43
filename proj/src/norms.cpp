#include "eave/norms.hpp"

#include <algorithm>
#include <cmath>

namespace eave {

namespace {

// Degree-4 triangle quadrature (6 points), barycentric weights summing to 1.
struct QuadPoint {
    double l0, l1, w;
};
constexpr QuadPoint kTriQuad[6] = {
    {0.445948490915965, 0.445948490915965, 0.223381589678011},
    {0.445948490915965, 0.108103018168070, 0.223381589678011},
    {0.108103018168070, 0.445948490915965, 0.223381589678011},
    {0.091576213509771, 0.091576213509771, 0.109951743655322},
    {0.091576213509771, 0.816847572980459, 0.109951743655322},
    {0.816847572980459, 0.091576213509771, 0.109951743655322},
};

double quad_sub_triangle(Point2 a, Point2 b, Point2 c, Point2 n_star, double g_n,
                         const VectorField& grad_u) {
    const double area = std::abs(triangle_signed_area(a, b, c));
    double acc = 0.0;
    for (const QuadPoint& q : kTriQuad) {
        const double l2 = 1.0 - q.l0 - q.l1;
        const Point2 p = q.l0 * a + q.l1 * b + l2 * c;
        const double d = dot(grad_u(p), n_star) - g_n;
        acc += q.w * d * d;
    }
    return acc * area;
}

} // namespace

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double a_norm_vem(const PolygonalMesh& mesh, const std::vector<double>& v, StabChoice stab) {
    double acc = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const LocalElement k = LocalElement::from_cell(mesh, c);
        const DenseMatrix a = poisson_local(k, stab);
        const auto& cyc = mesh.cells[c];
        for (int i = 0; i < k.nv(); ++i)
            for (int j = 0; j < k.nv(); ++j) acc += v[cyc[i]] * a(i, j) * v[cyc[j]];
    }
    return std::sqrt(std::max(0.0, acc));
}

double a_norm_fvm(const DualMeshPair& pair, const std::vector<double>& v) {
    double acc = 0.0;
    const PolygonalMesh& m = pair.primary;
    for (int c = 0; c < m.num_cells(); ++c) {
        const DenseMatrix a = fvm_poisson_local(pair, c);
        const auto& cyc = m.cells[c];
        for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
            for (int j = 0; j < static_cast<int>(cyc.size()); ++j)
                acc += v[cyc[i]] * a(i, j) * v[cyc[j]];
    }
    return std::sqrt(std::max(0.0, acc));
}

std::vector<double> nodal_interpolant(const PolygonalMesh& mesh, const ScalarField& u) {
    std::vector<double> v(mesh.num_vertices());
    for (int i = 0; i < mesh.num_vertices(); ++i) v[i] = u(mesh.vertices[i]);
    return v;
}

double projection_l2_error(const PolygonalMesh& mesh, const std::vector<double>& dofs,
                           const ScalarField& u) {
    double acc = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const LocalElement k = LocalElement::from_cell(mesh, c);
        const DenseMatrix proj = pi_nabla(k);
        double coeff[3] = {0.0, 0.0, 0.0};
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < k.nv(); ++j) coeff[a] += proj(a, j) * dofs[mesh.cells[c][j]];
        auto projected = [&](Point2 p) {
            return coeff[0] + coeff[1] * (p.x - k.centroid.x) / k.diameter +
                   coeff[2] * (p.y - k.centroid.y) / k.diameter;
        };
        for (int j = 0; j < k.nv(); ++j) {
            const Point2 a = k.verts[j];
            const Point2 b = k.verts[(j + 1) % k.nv()];
            const double signed_area = triangle_signed_area(a, b, k.centroid);
            for (const QuadPoint& q : kTriQuad) {
                const double l2 = 1.0 - q.l0 - q.l1;
                const Point2 p = q.l0 * a + q.l1 * b + l2 * k.centroid;
                const double d = u(p) - projected(p);
                acc += q.w * d * d * signed_area;
            }
        }
    }
    return std::sqrt(std::max(0.0, acc));
}

double flux_error(const DualMeshPair& pair, const std::vector<double>& dofs,
                  const VectorField& grad_u) {
    const PolygonalMesh& m = pair.primary;
    double acc = 0.0;
    for (int e = 0; e < m.num_edges(); ++e) {
        const DualPairing& dp = pair.pairing[e];
        if (!dp.interior) continue;
        const MeshEdge& me = m.edges[e];
        const Point2 a = m.vertices[me.v0];
        const Point2 b = m.vertices[me.v1];
        const double len = dist(a, b);
        const Point2 n_star = (1.0 / len) * (b - a);  // n_E* = tau_E / |E|
        const double g_n = (dofs[me.v1] - dofs[me.v0]) / len;
        acc += quad_sub_triangle(a, b, pair.seeds[me.left], n_star, g_n, grad_u);
        acc += quad_sub_triangle(a, b, pair.seeds[me.right], n_star, g_n, grad_u);
    }
    return std::sqrt(acc);
}

} // namespace eave
