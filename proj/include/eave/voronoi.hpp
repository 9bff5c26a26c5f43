#ifndef EAVE_VORONOI_HPP
#define EAVE_VORONOI_HPP

#include "eave/delaunay.hpp"
#include "eave/mesh.hpp"

#include <vector>

namespace eave {

// Voronoi diagram of the seeds clipped to the unit square; cell c of the
// returned mesh is the region of seeds[c]. Interior Voronoi vertices carry
// the canonical circumcenter coordinates of the corresponding Delaunay
// triangle, so downstream circumcenter lookups match bitwise.
PolygonalMesh clipped_voronoi(const std::vector<Point2>& seeds,
                              const DelaunayTriangulation& dt);

// Convenience: triangulate + clip in one step.
PolygonalMesh voronoi_mesh(const std::vector<Point2>& seeds);

// One Lloyd relaxation step: move every seed to the centroid of its
// clipped cell.
std::vector<Point2> lloyd_step(const std::vector<Point2>& seeds);

// Sutherland-Hodgman clip against [0,1]^2. Boundary coordinates are set
// exactly (0 or 1) on the clipped sides.
std::vector<Point2> clip_polygon_to_unit_square(std::vector<Point2> poly);

} // namespace eave

#endif
