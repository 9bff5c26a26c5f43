#ifndef EAVE_MESH_HPP
#define EAVE_MESH_HPP

#include "eave/geometry.hpp"

#include <string>
#include <vector>

namespace eave {

// Undirected mesh edge with a global canonical orientation: v0 < v1 and
// tau_E = x[v1] - x[v0]. `left` is the cell traversing v0 -> v1 in its
// counterclockwise cycle, `right` the cell traversing v1 -> v0; right == -1
// marks a boundary edge.
struct MeshEdge {
    int v0 = -1;
    int v1 = -1;
    int left = -1;
    int right = -1;

    bool is_boundary() const { return left < 0 || right < 0; }
    int any_cell() const { return left >= 0 ? left : right; }
};

// Conforming polygonal tiling of the unit square. Cells are CCW
// vertex-index cycles; the edge table is derived from the cells and sorted
// lexicographically by (v0, v1), which makes edge ids reproducible across
// write/read round trips.
struct PolygonalMesh {
    std::vector<Point2> vertices;
    std::vector<std::vector<int>> cells;
    std::vector<MeshEdge> edges;
    std::vector<std::vector<int>> cell_edges;  // cell_edges[c][k]: edge between cycle positions k, k+1
    std::vector<bool> boundary_vertex;
    double h = 0.0;  // max cell diameter

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_cells() const { return static_cast<int>(cells.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    std::vector<Point2> cell_points(int c) const;
    double cell_area(int c) const;
    Point2 cell_centroid(int c) const;
    double cell_diameter(int c) const;
    double edge_length(int e) const { return dist(vertices[edges[e].v0], vertices[edges[e].v1]); }
    Point2 edge_tangent(int e) const { return vertices[edges[e].v1] - vertices[edges[e].v0]; }

    double total_area() const;
    int count_interior_vertices() const;

    // Builds the edge table, boundary flags and h; validates orientation
    // (every cell CCW with positive area) and edge manifoldness. Throws
    // Error with the offending cell/edge named.
    static PolygonalMesh build(std::vector<Point2> vertices, std::vector<std::vector<int>> cells);
};

// All triangles? Convenience for scheme preconditions.
bool is_triangle_mesh(const PolygonalMesh& m);

} // namespace eave

#endif
