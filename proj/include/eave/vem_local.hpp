#ifndef EAVE_VEM_LOCAL_HPP
#define EAVE_VEM_LOCAL_HPP

#include "eave/dense.hpp"
#include "eave/dual.hpp"
#include "eave/geometry.hpp"
#include "eave/mesh.hpp"

#include <span>
#include <vector>

namespace eave {

enum class StabChoice { DofScalar, EdgeDiff, None };

// Geometry of one polygonal element, vertices CCW.
struct LocalElement {
    int cell = -1;
    std::vector<Point2> verts;
    double area = 0.0;
    double diameter = 0.0;
    Point2 centroid;

    int nv() const { return static_cast<int>(verts.size()); }
    Point2 tangent(int j) const { return verts[(j + 1) % nv()] - verts[j]; }

    static LocalElement from_points(int cell, std::vector<Point2> pts);
    static LocalElement from_cell(const PolygonalMesh& mesh, int c);
};

// Elliptic projector onto P1: 3 x N matrix mapping vertex DoFs to the
// coefficients of {1, (x - xc)/hK, (y - yc)/hK}. The gradient rows come
// from the boundary integral with the two-point trapezoid rule (exact for
// linear traces); the constant row matches the vertex-value average.
DenseMatrix pi_nabla(const LocalElement& k);

// Vertex values of the projected basis functions: D * P, N x N.
DenseMatrix pi_nabla_dof_matrix(const LocalElement& k, const DenseMatrix& proj);

// Stabilization S^K((I - Pi)phi_i, (I - Pi)phi_j); symmetric PSD with P1
// DoF vectors in its kernel.
DenseMatrix stab_matrix(const LocalElement& k, StabChoice choice);

// Stabilized Poisson form a_h^K = consistency + S^K.
DenseMatrix poisson_local(const LocalElement& k, StabChoice choice);

// Finite volume Poisson form on a dual pair: sum_E omega_E^K delta_E delta_E
// with omega_E^K = |E*| / (2|E|); needs no stabilization.
DenseMatrix fvm_poisson_local(const LocalElement& k, std::span<const double> dual_lengths);
DenseMatrix fvm_poisson_local(const DualMeshPair& pair, int cell);

// Piecewise constant normal flux per edge patch: delta_E(u)/|E| on interior
// edges, 0 on boundary patches.
std::vector<double> fvm_flux(const DualMeshPair& pair, const std::vector<double>& dofs);

} // namespace eave

#endif
