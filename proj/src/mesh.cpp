#include "eave/mesh.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace eave {

std::vector<Point2> PolygonalMesh::cell_points(int c) const {
    std::vector<Point2> pts;
    pts.reserve(cells[c].size());
    for (int v : cells[c]) pts.push_back(vertices[v]);
    return pts;
}

double PolygonalMesh::cell_area(int c) const {
    const auto pts = cell_points(c);
    return polygon_signed_area(pts);
}

Point2 PolygonalMesh::cell_centroid(int c) const {
    const auto pts = cell_points(c);
    return polygon_centroid(pts);
}

double PolygonalMesh::cell_diameter(int c) const {
    const auto pts = cell_points(c);
    return polygon_diameter(pts);
}

double PolygonalMesh::total_area() const {
    double acc = 0.0;
    for (int c = 0; c < num_cells(); ++c) acc += cell_area(c);
    return acc;
}

int PolygonalMesh::count_interior_vertices() const {
    int n = 0;
    for (bool b : boundary_vertex)
        if (!b) ++n;
    return n;
}

PolygonalMesh PolygonalMesh::build(std::vector<Point2> vertices,
                                   std::vector<std::vector<int>> cells) {
    PolygonalMesh m;
    m.vertices = std::move(vertices);
    m.cells = std::move(cells);
    const int nv = m.num_vertices();

    for (int c = 0; c < m.num_cells(); ++c) {
        const auto& cyc = m.cells[c];
        if (cyc.size() < 3)
            throw Error("cell " + std::to_string(c) + " has fewer than 3 vertices");
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (cyc[k] < 0 || cyc[k] >= nv)
                throw Error("cell " + std::to_string(c) + " references invalid vertex");
            if (cyc[k] == cyc[(k + 1) % cyc.size()])
                throw Error("cell " + std::to_string(c) + " repeats consecutive vertex " +
                            std::to_string(cyc[k]));
        }
        const double area = m.cell_area(c);
        if (!(area > 0.0))
            throw Error("cell " + std::to_string(c) +
                        " is not counterclockwise (signed area " + std::to_string(area) + ")");
    }

    // Undirected edge table, canonical orientation v0 < v1.
    auto key = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    std::unordered_map<std::uint64_t, int> edge_of;
    edge_of.reserve(m.num_cells() * 4);
    std::vector<MeshEdge> edges;
    for (int c = 0; c < m.num_cells(); ++c) {
        const auto& cyc = m.cells[c];
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int a = cyc[k];
            const int b = cyc[(k + 1) % cyc.size()];
            const std::uint64_t kk = key(a, b);
            auto [it, inserted] = edge_of.try_emplace(kk, static_cast<int>(edges.size()));
            if (inserted) edges.push_back({std::min(a, b), std::max(a, b), -1, -1});
            MeshEdge& e = edges[it->second];
            // Cell traverses a->b counterclockwise; it lies left of a->b.
            if (a < b) {
                if (e.left >= 0)
                    throw Error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") has two cells on the same side");
                e.left = c;
            } else {
                if (e.right >= 0)
                    throw Error("edge (" + std::to_string(b) + "," + std::to_string(a) +
                                ") has two cells on the same side");
                e.right = c;
            }
        }
    }

    // Reproducible edge ids: sort lexicographically by (v0, v1).
    std::vector<int> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (edges[a].v0 != edges[b].v0) return edges[a].v0 < edges[b].v0;
        return edges[a].v1 < edges[b].v1;
    });
    std::vector<int> rank(edges.size());
    m.edges.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        rank[order[i]] = static_cast<int>(i);
        m.edges[i] = edges[order[i]];
    }

    m.cell_edges.resize(m.num_cells());
    for (int c = 0; c < m.num_cells(); ++c) {
        const auto& cyc = m.cells[c];
        m.cell_edges[c].resize(cyc.size());
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int a = cyc[k];
            const int b = cyc[(k + 1) % cyc.size()];
            m.cell_edges[c][k] = rank[edge_of.at(key(a, b))];
        }
    }

    m.boundary_vertex.assign(nv, false);
    for (const MeshEdge& e : m.edges)
        if (e.is_boundary()) {
            m.boundary_vertex[e.v0] = true;
            m.boundary_vertex[e.v1] = true;
        }

    m.h = 0.0;
    for (int c = 0; c < m.num_cells(); ++c) m.h = std::max(m.h, m.cell_diameter(c));
    return m;
}

bool is_triangle_mesh(const PolygonalMesh& m) {
    for (const auto& c : m.cells)
        if (c.size() != 3) return false;
    return true;
}

} // namespace eave
