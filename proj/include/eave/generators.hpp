#ifndef EAVE_GENERATORS_HPP
#define EAVE_GENERATORS_HPP

#include "eave/dual.hpp"
#include "eave/mesh.hpp"

#include <cstdint>

namespace eave {

enum class TriangleKind { UniformRight, Equilateral };

// Conforming triangulation of the unit square with h ~ 1/n.
// UniformRight splits every grid square along the same diagonal;
// Equilateral tiles with near-equilateral rows clipped at x = 0, 1.
PolygonalMesh generate_triangle_mesh(int n, TriangleKind kind);

// Structured hexagonal Voronoi mesh dual to an equilateral triangular
// lattice (side sqrt(3)/(2n), interior hexagon diameter exactly 1/n).
DualMeshPair generate_hexa_dual(int n);

// Unstructured Voronoi mesh with an all-acute interior dual, roughly
// target_cells cells. Jittered lattice seeds are Lloyd-smoothed and
// re-perturbed on a fixed schedule until every dual invariant holds;
// throws AcutenessFailure when the schedule is exhausted.
DualMeshPair generate_voro_dual(int target_cells, std::uint64_t seed);

// Voronoi tessellation of n uniformly sampled seeds clipped to the unit
// square; lloyd_iters = 0 keeps the raw tessellation, large values give a
// centroidal (optimized) one.
PolygonalMesh generate_voronoi(int n, int lloyd_iters, std::uint64_t seed);

// Structured non-convex mesh: each macro square carries one chevron
// octagon (bottom edge midpoint pushed up by 1/4 of the cell size) plus
// the two complementary notch triangles. All vertices lie on the grid
// lines y = k/n, the half lines y = (k+1/2)/n and the quarter lines
// y = (k+1/4)/n (and analogously in x).
PolygonalMesh generate_ncvx(int n);

} // namespace eave

#endif
