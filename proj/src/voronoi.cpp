#include "eave/voronoi.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace eave {

namespace {

constexpr double kFar = 1e5;        // closure radius for unbounded cells
constexpr double kWeldTol = 1e-12;  // coordinates welded below this distance

// Merges near-coincident points into shared vertex ids. Canonical interior
// vertices (circumcenters) are bitwise equal across cells; clip points can
// differ by a few ulps depending on traversal direction, hence the
// quantized 3x3 box search.
class VertexWelder {
public:
    int id_of(Point2 p) {
        const std::int64_t bx = static_cast<std::int64_t>(std::floor(p.x / kWeldTol));
        const std::int64_t by = static_cast<std::int64_t>(std::floor(p.y / kWeldTol));
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = boxes_.find(key(bx + dx, by + dy));
                if (it == boxes_.end()) continue;
                for (int idx : it->second)
                    if (dist(points_[idx], p) <= kWeldTol) return idx;
            }
        const int idx = static_cast<int>(points_.size());
        points_.push_back(p);
        boxes_[key(bx, by)].push_back(idx);
        return idx;
    }

    std::vector<Point2> take_points() { return std::move(points_); }

private:
    static std::uint64_t key(std::int64_t bx, std::int64_t by) {
        return static_cast<std::uint64_t>(bx) * 73856093ULL ^
               static_cast<std::uint64_t>(by) * 19349663ULL;
    }
    std::vector<Point2> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> boxes_;
};

struct SeedFan {
    std::vector<int> chain;  // incident triangles, CCW around the seed
    bool closed = false;     // interior seed (closed loop)
    int first_other = -1;    // hull edge partner before the chain
    int last_other = -1;     // hull edge partner after the chain
};

std::uint64_t dir_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

// Orders each seed's incident triangles counterclockwise by pivoting over
// shared edges; purely combinatorial, robust to circumcenters that wander
// outside their triangles.
std::vector<SeedFan> build_fans(int n_seeds, const DelaunayTriangulation& dt) {
    std::unordered_map<std::uint64_t, int> tri_of_dir;
    tri_of_dir.reserve(dt.triangles.size() * 3);
    for (int t = 0; t < static_cast<int>(dt.triangles.size()); ++t) {
        const auto& v = dt.triangles[t];
        tri_of_dir[dir_key(v[0], v[1])] = t;
        tri_of_dir[dir_key(v[1], v[2])] = t;
        tri_of_dir[dir_key(v[2], v[0])] = t;
    }
    std::vector<int> seed_tri(n_seeds, -1);
    for (int t = 0; t < static_cast<int>(dt.triangles.size()); ++t)
        for (int k = 0; k < 3; ++k)
            if (seed_tri[dt.triangles[t][k]] < 0) seed_tri[dt.triangles[t][k]] = t;

    auto local_index = [&](int t, int s) {
        const auto& v = dt.triangles[t];
        for (int k = 0; k < 3; ++k)
            if (v[k] == s) return k;
        throw Error("voronoi: fan bookkeeping error");
    };

    std::vector<SeedFan> fans(n_seeds);
    for (int s = 0; s < n_seeds; ++s) {
        if (seed_tri[s] < 0) continue;  // isolated seed: handled by caller
        SeedFan& fan = fans[s];
        // Walk clockwise to the chain start.
        int t = seed_tri[s];
        const int start = t;
        for (;;) {
            const int k = local_index(t, s);
            const int a = dt.triangles[t][(k + 1) % 3];
            const auto it = tri_of_dir.find(dir_key(a, s));
            if (it == tri_of_dir.end()) break;  // hull edge (s, a)
            t = it->second;
            if (t == start) {
                fan.closed = true;
                break;
            }
        }
        // Collect counterclockwise.
        const int first = t;
        for (;;) {
            fan.chain.push_back(t);
            const int k = local_index(t, s);
            const int b = dt.triangles[t][(k + 2) % 3];
            const auto it = tri_of_dir.find(dir_key(s, b));
            if (it == tri_of_dir.end()) {
                fan.last_other = b;
                break;  // hull edge (s, b)
            }
            t = it->second;
            if (t == first) break;
        }
        if (!fan.closed) {
            const int k0 = local_index(fan.chain.front(), s);
            fan.first_other = dt.triangles[fan.chain.front()][(k0 + 1) % 3];
        }
    }
    return fans;
}

// Unbounded hull cells are closed by points far outside the clip square,
// stepping around the outside so the closure chord never crosses it.
void append_far_arc(std::vector<Point2>& poly, Point2 seed, Point2 dir_from, Point2 dir_to) {
    // The counterclockwise sweep from dir_from to dir_to spans the cell's
    // unbounded wedge, which is always < pi. A modular sweep beyond pi is
    // the floating-point image of a tiny negative one (a hull point sitting
    // marginally inside a hull edge, or two near-antiparallel rays across
    // the atan2 branch cut); a direct chord closes those.
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    const double a0 = std::atan2(dir_from.y, dir_from.x);
    const double a1 = std::atan2(dir_to.y, dir_to.x);
    double sweep = std::fmod(a1 - a0 + 2.0 * two_pi, two_pi);
    if (sweep > 3.2) sweep = 0.0;
    const int steps = static_cast<int>(std::ceil(sweep / 1.0));
    for (int i = 1; i < steps; ++i) {
        const double a = a0 + sweep * i / steps;
        poly.push_back({seed.x + kFar * std::cos(a), seed.y + kFar * std::sin(a)});
    }
}

std::vector<Point2> halfplane_cell(const std::vector<Point2>& seeds, int i) {
    std::vector<Point2> poly{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    for (int j = 0; j < static_cast<int>(seeds.size()); ++j) {
        if (j == i) continue;
        const Point2 mid = 0.5 * (seeds[i] + seeds[j]);
        const Point2 dir = seeds[j] - seeds[i];
        std::vector<Point2> out;
        const std::size_t n = poly.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Point2 p = poly[k];
            const Point2 q = poly[(k + 1) % n];
            const double dp = dot(p - mid, dir);
            const double dq = dot(q - mid, dir);
            if (dp <= 0.0) {
                out.push_back(p);
                if (dq > 0.0) {
                    const double t = dp / (dp - dq);
                    out.push_back(p + t * (q - p));
                }
            } else if (dq <= 0.0) {
                const double t = dp / (dp - dq);
                out.push_back(p + t * (q - p));
            }
        }
        poly = std::move(out);
        if (poly.size() < 3) break;
    }
    return poly;
}

} // namespace

std::vector<Point2> clip_polygon_to_unit_square(std::vector<Point2> poly) {
    struct Side {
        int axis;     // 0 = x, 1 = y
        double bound;
        double sign;  // keep sign * coord <= sign * bound
    };
    static const Side sides[4] = {{0, 0.0, -1.0}, {0, 1.0, 1.0}, {1, 0.0, -1.0}, {1, 1.0, 1.0}};
    for (const Side& s : sides) {
        std::vector<Point2> out;
        out.reserve(poly.size() + 4);
        const std::size_t n = poly.size();
        if (n == 0) return {};
        auto coord = [&](Point2 p) { return s.axis == 0 ? p.x : p.y; };
        auto inside = [&](Point2 p) { return s.sign * coord(p) <= s.sign * s.bound; };
        auto intersect = [&](Point2 p, Point2 q) {
            const double t = (s.bound - coord(p)) / (coord(q) - coord(p));
            Point2 r = p + t * (q - p);
            if (s.axis == 0) r.x = s.bound;  // exact boundary coordinate
            else r.y = s.bound;
            return r;
        };
        for (std::size_t k = 0; k < n; ++k) {
            const Point2 p = poly[k];
            const Point2 q = poly[(k + 1) % n];
            if (inside(p)) {
                out.push_back(p);
                if (!inside(q)) out.push_back(intersect(p, q));
            } else if (inside(q)) {
                out.push_back(intersect(p, q));
            }
        }
        poly = std::move(out);
    }
    return poly;
}

PolygonalMesh clipped_voronoi(const std::vector<Point2>& seeds,
                              const DelaunayTriangulation& dt) {
    const int n = static_cast<int>(seeds.size());
    if (n == 0) throw Error("voronoi: no seeds");

    std::vector<Point2> cc(dt.triangles.size());
    for (std::size_t t = 0; t < dt.triangles.size(); ++t) {
        const auto& v = dt.triangles[t];
        cc[t] = circumcenter(seeds[v[0]], seeds[v[1]], seeds[v[2]]);
    }
    const auto fans = build_fans(n, dt);

    VertexWelder welder;
    std::vector<std::vector<int>> cells(n);
    for (int s = 0; s < n; ++s) {
        std::vector<Point2> poly;
        if (fans[s].chain.empty()) {
            poly = halfplane_cell(seeds, s);
        } else if (fans[s].closed) {
            for (int t : fans[s].chain) poly.push_back(cc[t]);
            poly = clip_polygon_to_unit_square(std::move(poly));
        } else {
            // Outward bisector rays of the two hull edges. The directions
            // follow from the fan orientation alone: the empty cone runs
            // counterclockwise from the last neighbor ray to the first, so
            // the first hull ray is the first neighbor direction rotated
            // -90 degrees and the last one is rotated +90 degrees. No
            // third-vertex side test, which sliver hull triangles flip.
            auto ray_dir = [&](int other, bool first) {
                const Point2 u = seeds[other] - seeds[s];
                const double len = norm(u);
                return first ? Point2{u.y / len, -u.x / len} : Point2{-u.y / len, u.x / len};
            };
            const Point2 d_first = ray_dir(fans[s].first_other, true);
            const Point2 d_last = ray_dir(fans[s].last_other, false);
            poly.push_back(cc[fans[s].chain.front()] + kFar * d_first);
            for (int t : fans[s].chain) poly.push_back(cc[t]);
            poly.push_back(cc[fans[s].chain.back()] + kFar * d_last);
            append_far_arc(poly, seeds[s], d_last, d_first);
            poly = clip_polygon_to_unit_square(std::move(poly));
        }
        if (poly.size() < 3) throw Error("voronoi: degenerate cell " + std::to_string(s));

        std::vector<int>& cyc = cells[s];
        for (const Point2& p : poly) {
            const int id = welder.id_of(p);
            if (cyc.empty() || cyc.back() != id) cyc.push_back(id);
        }
        while (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
        if (cyc.size() < 3) throw Error("voronoi: collapsed cell " + std::to_string(s));
    }

    PolygonalMesh mesh = PolygonalMesh::build(welder.take_points(), std::move(cells));
    if (std::abs(mesh.total_area() - 1.0) > 1e-9)
        throw Error("voronoi: cells do not tile the unit square");
    return mesh;
}

PolygonalMesh voronoi_mesh(const std::vector<Point2>& seeds) {
    if (seeds.size() == 1) {
        std::vector<Point2> verts{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
        return PolygonalMesh::build(std::move(verts), {{0, 1, 2, 3}});
    }
    return clipped_voronoi(seeds, delaunay_triangulate(seeds));
}

std::vector<Point2> lloyd_step(const std::vector<Point2>& seeds) {
    const PolygonalMesh m = voronoi_mesh(seeds);
    std::vector<Point2> next(seeds.size());
    for (int c = 0; c < m.num_cells(); ++c) next[c] = m.cell_centroid(c);
    return next;
}

} // namespace eave
