#ifndef EAVE_NORMS_HPP
#define EAVE_NORMS_HPP

#include "eave/dual.hpp"
#include "eave/mesh.hpp"
#include "eave/problem.hpp"
#include "eave/vem_local.hpp"

#include <vector>

namespace eave {

// max_i |v_i| over the DoF vector.
double inf_norm(const std::vector<double>& v);

// Energy norm (sum_K a_h^K(v, v))^{1/2} over the full DoF vector,
// boundary entries included.
double a_norm_vem(const PolygonalMesh& mesh, const std::vector<double>& v, StabChoice stab);

// Same norm in the stabilization-free finite volume form.
double a_norm_fvm(const DualMeshPair& pair, const std::vector<double>& v);

// Nodal interpolant u_I: DoF i = u(x_i).
std::vector<double> nodal_interpolant(const PolygonalMesh& mesh, const ScalarField& u);

// Flux error (sum_E || grad u . n_E* - G_n(u_h) ||^2_{L2(D_E)})^{1/2} over
// interior edges.
double flux_error(const DualMeshPair& pair, const std::vector<double>& dofs,
                  const VectorField& grad_u);

// Diagnostic L2 distance || u - Pi_nabla u_h || using the per-cell elliptic
// projections; integrated with a signed centroid fan, so non-convex cells
// are handled too.
double projection_l2_error(const PolygonalMesh& mesh, const std::vector<double>& dofs,
                           const ScalarField& u);

} // namespace eave

#endif
