#ifndef EAVE_DUAL_HPP
#define EAVE_DUAL_HPP

#include "eave/mesh.hpp"

#include <array>
#include <vector>

namespace eave {

// Dual edge data for one primary edge. Interior edges pair with the
// Delaunay edge E* between the seeds of their two cells; boundary edges
// pair with the perpendicular segment from the owning seed to the edge.
struct DualPairing {
    bool interior = false;
    double dual_length = 0.0;  // |E*|
    Point2 midpoint;           // m_{E*} = E cap E* (interior edges)
};

struct EdgePatch {
    int edge = -1;
    double area = 0.0;         // |D_E|
    double dual_length = 0.0;  // |E*|
};

// A primary Voronoi mesh bound to its dual Delaunay triangulation.
// `dual_triangles` are the interior triangles (triples of cell/seed
// indices); each one's circumcenter is a distinct interior primary vertex.
struct DualMeshPair {
    PolygonalMesh primary;
    std::vector<Point2> seeds;                       // one per primary cell
    std::vector<std::array<int, 3>> dual_triangles;
    std::vector<int> vertex_to_triangle;             // -1 for boundary vertices
    std::vector<int> triangle_to_vertex;
    std::vector<DualPairing> pairing;                // per edge id
    std::vector<EdgePatch> patches;                  // per edge id

    double dual_length(int e) const;  // throws MissingPairing when absent
    double triangle_area(int t) const;
};

// Populates pairing, patches and the vertex<->triangle bijection, and
// verifies every duality invariant (orthogonality, dual midpoint on the
// primary edge, acute interior triangles containing exactly their own
// circumcenter, bijection onto the interior vertices, |E*||E| = 2|D_E|).
// Throws DualityViolation naming the offending edge or triangle.
DualMeshPair build_dual_pairing(PolygonalMesh primary, std::vector<Point2> seeds,
                                std::vector<std::array<int, 3>> interior_triangles);

// Picks the interior triangles of a full Delaunay triangulation of the
// seeds: the ones whose circumcenter is an interior vertex of the primary
// mesh.
std::vector<std::array<int, 3>> select_interior_triangles(
    const PolygonalMesh& primary, const std::vector<Point2>& seeds,
    const std::vector<std::array<int, 3>>& all_triangles);

} // namespace eave

#endif
