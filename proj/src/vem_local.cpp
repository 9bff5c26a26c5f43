#include "eave/vem_local.hpp"

#include "eave/errors.hpp"

#include <cmath>
#include <string>

namespace eave {

LocalElement LocalElement::from_points(int cell, std::vector<Point2> pts) {
    LocalElement k;
    k.cell = cell;
    k.verts = std::move(pts);
    k.area = polygon_signed_area(k.verts);
    if (k.area < 1e-14)
        throw DegeneratePolygon("cell " + std::to_string(cell) + " has area " +
                                std::to_string(k.area));
    k.centroid = polygon_centroid(k.verts);
    k.diameter = polygon_diameter(k.verts);
    return k;
}

LocalElement LocalElement::from_cell(const PolygonalMesh& mesh, int c) {
    return from_points(c, mesh.cell_points(c));
}

DenseMatrix pi_nabla(const LocalElement& k) {
    const int n = k.nv();
    DenseMatrix proj(3, n);
    // Gradient rows: int_K grad(Pi v) . grad(m_a) = sum_E int_E v (grad m_a . n)
    // with grad m_1 = (1/h, 0), grad m_2 = (0, 1/h); the scaled monomial mass
    // int_K |grad m_a|^2 is |K|/h^2, so the h factors combine to h/|K|.
    for (int j = 0; j < n; ++j) {
        const Point2 tau = k.tangent(j);
        // Outward normal times |E|: (tau.y, -tau.x) for CCW polygons.
        const int jn = (j + 1) % n;
        proj(1, j) += 0.5 * tau.y * k.diameter / k.area;
        proj(1, jn) += 0.5 * tau.y * k.diameter / k.area;
        proj(2, j) += -0.5 * tau.x * k.diameter / k.area;
        proj(2, jn) += -0.5 * tau.x * k.diameter / k.area;
    }
    // Constant row: vertex-value average, corrected by the monomial means.
    double mean_xi = 0.0, mean_eta = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_xi += (k.verts[i].x - k.centroid.x) / k.diameter;
        mean_eta += (k.verts[i].y - k.centroid.y) / k.diameter;
    }
    mean_xi /= n;
    mean_eta /= n;
    for (int j = 0; j < n; ++j)
        proj(0, j) = 1.0 / n - mean_xi * proj(1, j) - mean_eta * proj(2, j);
    return proj;
}

DenseMatrix pi_nabla_dof_matrix(const LocalElement& k, const DenseMatrix& proj) {
    const int n = k.nv();
    DenseMatrix d(n, 3);
    for (int i = 0; i < n; ++i) {
        d(i, 0) = 1.0;
        d(i, 1) = (k.verts[i].x - k.centroid.x) / k.diameter;
        d(i, 2) = (k.verts[i].y - k.centroid.y) / k.diameter;
    }
    return d * proj;
}

DenseMatrix stab_matrix(const LocalElement& k, StabChoice choice) {
    const int n = k.nv();
    if (choice == StabChoice::None) return DenseMatrix(n, n);
    const DenseMatrix proj = pi_nabla(k);
    DenseMatrix residual = pi_nabla_dof_matrix(k, proj);  // I - Pi on the DoFs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) residual(i, j) = (i == j ? 1.0 : 0.0) - residual(i, j);

    if (choice == StabChoice::DofScalar) return residual.transposed() * residual;

    // Edge-difference stabilization: sum_E delta_E(.) delta_E(.).
    DenseMatrix diff(n, n);
    for (int e = 0; e < n; ++e) {
        diff(e, e) = -1.0;
        diff(e, (e + 1) % n) = 1.0;
    }
    const DenseMatrix dr = diff * residual;
    return dr.transposed() * dr;
}

DenseMatrix poisson_local(const LocalElement& k, StabChoice choice) {
    if (choice == StabChoice::None)
        throw Error("poisson_local: a stabilization choice is required");
    const int n = k.nv();
    const DenseMatrix proj = pi_nabla(k);
    DenseMatrix a(n, n);
    const double w = k.area / (k.diameter * k.diameter);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = w * (proj(1, i) * proj(1, j) + proj(2, i) * proj(2, j));
    const DenseMatrix s = stab_matrix(k, choice);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) += s(i, j);
    return a;
}

DenseMatrix fvm_poisson_local(const LocalElement& k, std::span<const double> dual_lengths) {
    const int n = k.nv();
    if (static_cast<int>(dual_lengths.size()) != n)
        throw MissingPairing("fvm_poisson_local: one dual length per edge required");
    DenseMatrix a(n, n);
    for (int j = 0; j < n; ++j) {
        const double len = norm(k.tangent(j));
        if (!(dual_lengths[j] > 0.0))
            throw MissingPairing("fvm_poisson_local: edge " + std::to_string(j) +
                                 " has no dual edge");
        const double w = dual_lengths[j] / (2.0 * len);
        const int jn = (j + 1) % n;
        a(j, j) += w;
        a(jn, jn) += w;
        a(j, jn) -= w;
        a(jn, j) -= w;
    }
    return a;
}

DenseMatrix fvm_poisson_local(const DualMeshPair& pair, int cell) {
    const LocalElement k = LocalElement::from_cell(pair.primary, cell);
    std::vector<double> duals(k.nv());
    for (int j = 0; j < k.nv(); ++j)
        duals[j] = pair.dual_length(pair.primary.cell_edges[cell][j]);
    return fvm_poisson_local(k, duals);
}

std::vector<double> fvm_flux(const DualMeshPair& pair, const std::vector<double>& dofs) {
    const PolygonalMesh& m = pair.primary;
    std::vector<double> flux(m.num_edges(), 0.0);
    for (int e = 0; e < m.num_edges(); ++e) {
        if (!pair.pairing[e].interior) continue;
        const MeshEdge& me = m.edges[e];
        flux[e] = (dofs[me.v1] - dofs[me.v0]) / m.edge_length(e);
    }
    return flux;
}

} // namespace eave
