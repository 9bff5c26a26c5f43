#include "eave/dual.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace eave {

namespace {

// Grid lookup of mesh vertices for circumcenter matching.
class VertexLocator {
public:
    explicit VertexLocator(const std::vector<Point2>& pts) : pts_(pts) {
        for (int i = 0; i < static_cast<int>(pts.size()); ++i)
            boxes_[box_key(pts[i])].push_back(i);
    }

    // Index of the unique vertex within tol of p, or -1. Returns -2 when
    // the match is ambiguous.
    int find(Point2 p, double tol) const {
        const std::int64_t bx = static_cast<std::int64_t>(std::floor(p.x / kBox));
        const std::int64_t by = static_cast<std::int64_t>(std::floor(p.y / kBox));
        int found = -1;
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = boxes_.find(key(bx + dx, by + dy));
                if (it == boxes_.end()) continue;
                for (int idx : it->second) {
                    if (dist(pts_[idx], p) <= tol) {
                        if (found >= 0 && found != idx) return -2;
                        found = idx;
                    }
                }
            }
        return found;
    }

    // Vertices within radius r of p (for point-in-triangle scans).
    std::vector<int> near(Point2 p, double r) const {
        std::vector<int> out;
        const std::int64_t lo_x = static_cast<std::int64_t>(std::floor((p.x - r) / kBox));
        const std::int64_t hi_x = static_cast<std::int64_t>(std::floor((p.x + r) / kBox));
        const std::int64_t lo_y = static_cast<std::int64_t>(std::floor((p.y - r) / kBox));
        const std::int64_t hi_y = static_cast<std::int64_t>(std::floor((p.y + r) / kBox));
        for (std::int64_t bx = lo_x; bx <= hi_x; ++bx)
            for (std::int64_t by = lo_y; by <= hi_y; ++by) {
                const auto it = boxes_.find(key(bx, by));
                if (it == boxes_.end()) continue;
                out.insert(out.end(), it->second.begin(), it->second.end());
            }
        return out;
    }

private:
    static constexpr double kBox = 1.0 / 64.0;
    static std::uint64_t key(std::int64_t bx, std::int64_t by) {
        return static_cast<std::uint64_t>(bx) * 73856093ULL ^
               static_cast<std::uint64_t>(by) * 19349663ULL;
    }
    std::uint64_t box_key(Point2 p) const {
        return key(static_cast<std::int64_t>(std::floor(p.x / kBox)),
                   static_cast<std::int64_t>(std::floor(p.y / kBox)));
    }
    const std::vector<Point2>& pts_;
    std::unordered_map<std::uint64_t, std::vector<int>> boxes_;
};

bool point_in_triangle(Point2 p, Point2 a, Point2 b, Point2 c, double tol) {
    const double s0 = cross(b - a, p - a);
    const double s1 = cross(c - b, p - b);
    const double s2 = cross(a - c, p - c);
    return s0 > tol && s1 > tol && s2 > tol;
}

} // namespace

double DualMeshPair::dual_length(int e) const {
    if (e < 0 || e >= static_cast<int>(pairing.size()) || pairing[e].dual_length <= 0.0)
        throw MissingPairing("edge " + std::to_string(e) + " has no dual edge");
    return pairing[e].dual_length;
}

double DualMeshPair::triangle_area(int t) const {
    const auto& tri = dual_triangles[t];
    return std::abs(triangle_signed_area(seeds[tri[0]], seeds[tri[1]], seeds[tri[2]]));
}

std::vector<std::array<int, 3>> select_interior_triangles(
    const PolygonalMesh& primary, const std::vector<Point2>& seeds,
    const std::vector<std::array<int, 3>>& all_triangles) {
    VertexLocator locator(primary.vertices);
    std::vector<std::array<int, 3>> out;
    for (const auto& tri : all_triangles) {
        const Point2 cc = circumcenter(seeds[tri[0]], seeds[tri[1]], seeds[tri[2]]);
        const int v = locator.find(cc, 1e-10);
        if (v >= 0 && !primary.boundary_vertex[v]) out.push_back(tri);
    }
    return out;
}

DualMeshPair build_dual_pairing(PolygonalMesh primary, std::vector<Point2> seeds,
                                std::vector<std::array<int, 3>> interior_triangles) {
    if (seeds.size() != primary.cells.size())
        throw Error("build_dual_pairing: one seed per primary cell required");

    DualMeshPair pair;
    pair.primary = std::move(primary);
    pair.seeds = std::move(seeds);
    pair.dual_triangles = std::move(interior_triangles);
    const PolygonalMesh& m = pair.primary;

    pair.pairing.assign(m.num_edges(), {});
    pair.patches.assign(m.num_edges(), {});
    for (int e = 0; e < m.num_edges(); ++e) {
        const MeshEdge& me = m.edges[e];
        const Point2 a = m.vertices[me.v0];
        const Point2 b = m.vertices[me.v1];
        const Point2 tau = b - a;
        const double len = norm(tau);
        DualPairing& dp = pair.pairing[e];
        EdgePatch& patch = pair.patches[e];
        patch.edge = e;
        if (!me.is_boundary()) {
            const Point2 sl = pair.seeds[me.left];
            const Point2 sr = pair.seeds[me.right];
            const Point2 tau_star = sr - sl;
            dp.interior = true;
            dp.dual_length = norm(tau_star);
            dp.midpoint = 0.5 * (sl + sr);
            if (dp.dual_length <= 0.0)
                throw DualityViolation(e, "edge " + std::to_string(e) + ": coincident seeds");
            if (std::abs(dot(tau, tau_star)) > 1e-10 * len * dp.dual_length)
                throw DualityViolation(e, "edge " + std::to_string(e) +
                                              ": dual edge not orthogonal");
            if (point_segment_distance(dp.midpoint, a, b) > 1e-10)
                throw DualityViolation(e, "edge " + std::to_string(e) +
                                              ": dual midpoint misses the primary edge");
            patch.area = std::abs(triangle_signed_area(a, b, sl)) +
                         std::abs(triangle_signed_area(a, b, sr));
        } else {
            const Point2 s = pair.seeds[me.any_cell()];
            const Point2 foot = project_to_line(s, a, b);
            dp.interior = false;
            dp.dual_length = dist(s, foot);
            dp.midpoint = foot;
            if (dp.dual_length <= 0.0)
                throw DualityViolation(e, "edge " + std::to_string(e) + ": seed on boundary edge");
            if (point_segment_distance(foot, a, b) > 1e-10)
                throw DualityViolation(e, "edge " + std::to_string(e) +
                                              ": boundary foot outside the edge");
            patch.area = std::abs(triangle_signed_area(a, b, s));
        }
        patch.dual_length = dp.dual_length;
        const double product = dp.dual_length * len;
        if (std::abs(product - 2.0 * patch.area) > 1e-12 * std::max(product, 2.0 * patch.area))
            throw DualityViolation(e, "edge " + std::to_string(e) +
                                          ": |E*||E| != 2|D_E|");
    }

    // Interior triangles: acute, circumcenter at a distinct interior vertex,
    // and no other interior vertex inside.
    VertexLocator locator(m.vertices);
    pair.vertex_to_triangle.assign(m.num_vertices(), -1);
    pair.triangle_to_vertex.assign(pair.dual_triangles.size(), -1);
    for (int t = 0; t < static_cast<int>(pair.dual_triangles.size()); ++t) {
        const auto& tri = pair.dual_triangles[t];
        const Point2 pa = pair.seeds[tri[0]];
        const Point2 pb = pair.seeds[tri[1]];
        const Point2 pc = pair.seeds[tri[2]];
        if (!triangle_is_acute(pa, pb, pc))
            throw DualityViolation(-1, "dual triangle " + std::to_string(t) + " is not acute");
        const Point2 cc = circumcenter(pa, pb, pc);
        const int v = locator.find(cc, 1e-10);
        if (v == -2)
            throw DualityViolation(-1, "dual triangle " + std::to_string(t) +
                                           ": ambiguous circumcenter match");
        if (v < 0)
            throw DualityViolation(-1, "dual triangle " + std::to_string(t) +
                                           ": circumcenter is not a primary vertex");
        if (m.boundary_vertex[v])
            throw DualityViolation(-1, "dual triangle " + std::to_string(t) +
                                           ": circumcenter lies on the boundary");
        if (pair.vertex_to_triangle[v] >= 0)
            throw DualityViolation(-1, "primary vertex " + std::to_string(v) +
                                           " claimed by two dual triangles");
        pair.vertex_to_triangle[v] = t;
        pair.triangle_to_vertex[t] = v;

        const double r = std::max({dist(cc, pa), dist(cc, pb), dist(cc, pc)});
        for (int w : locator.near(cc, r)) {
            if (w == v || m.boundary_vertex[w]) continue;
            if (point_in_triangle(m.vertices[w], pa, pb, pc, 1e-12))
                throw DualityViolation(-1, "dual triangle " + std::to_string(t) +
                                               " contains a second interior vertex");
        }
    }
    for (int v = 0; v < m.num_vertices(); ++v)
        if (!m.boundary_vertex[v] && pair.vertex_to_triangle[v] < 0)
            throw DualityViolation(-1, "interior vertex " + std::to_string(v) +
                                           " has no dual triangle");
    return pair;
}

} // namespace eave
