#ifndef EAVE_DELAUNAY_HPP
#define EAVE_DELAUNAY_HPP

#include "eave/geometry.hpp"

#include <array>
#include <vector>

namespace eave {

// Delaunay triangulation of a planar point set (Bowyer-Watson with a
// remembering walk for point location). Triangles are CCW triples of input
// indices; output order is deterministic.
struct DelaunayTriangulation {
    std::vector<std::array<int, 3>> triangles;
};

DelaunayTriangulation delaunay_triangulate(const std::vector<Point2>& pts);

} // namespace eave

#endif
