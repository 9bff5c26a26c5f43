#include "eave/delaunay.hpp"

#include "eave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace eave {

namespace {

struct Tri {
    std::array<int, 3> v;   // CCW
    std::array<int, 3> n;   // neighbor across edge (v[k], v[k+1]); -1 = none
    bool alive = true;
};

// > 0 when p is strictly inside the circumcircle of CCW (a, b, c).
// Evaluated in long double with a relative tolerance; near-cocircular
// configurations stay out of the cavity, which still yields a valid (if
// not perfectly Delaunay) triangulation with a deterministic diagonal.
long double incircle(Point2 a, Point2 b, Point2 c, Point2 p) {
    const long double ax = static_cast<long double>(a.x) - p.x;
    const long double ay = static_cast<long double>(a.y) - p.y;
    const long double bx = static_cast<long double>(b.x) - p.x;
    const long double by = static_cast<long double>(b.y) - p.y;
    const long double cx = static_cast<long double>(c.x) - p.x;
    const long double cy = static_cast<long double>(c.y) - p.y;
    const long double a2 = ax * ax + ay * ay;
    const long double b2 = bx * bx + by * by;
    const long double c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

long double incircle_scale(Point2 a, Point2 b, Point2 c, Point2 p) {
    const long double ax = std::abs(a.x - p.x) + std::abs(a.y - p.y);
    const long double bx = std::abs(b.x - p.x) + std::abs(b.y - p.y);
    const long double cx = std::abs(c.x - p.x) + std::abs(c.y - p.y);
    const long double m = std::max({ax, bx, cx});
    return m * m * m * m;
}

class BowyerWatson {
public:
    explicit BowyerWatson(const std::vector<Point2>& pts) : pts_in_(pts) {}

    DelaunayTriangulation run() {
        const std::size_t n = pts_in_.size();
        DelaunayTriangulation out;
        if (n < 3) return out;

        pts_ = pts_in_;
        // Super-triangle generously enclosing the unit square.
        pts_.push_back({-60.0, -50.0});
        pts_.push_back({62.0, -50.0});
        pts_.push_back({0.5, 90.0});
        const int s0 = static_cast<int>(n), s1 = s0 + 1, s2 = s0 + 2;
        tris_.push_back({{s0, s1, s2}, {-1, -1, -1}, true});

        // Spatially coherent insertion order (grid snake) keeps walks short.
        std::vector<int> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
        const int g = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n) / 2.0)));
        auto cell_of = [&](int i) {
            const int cx = std::clamp(static_cast<int>(pts_[i].x * g), 0, g - 1);
            const int cy = std::clamp(static_cast<int>(pts_[i].y * g), 0, g - 1);
            const int col = (cy % 2 == 0) ? cx : (g - 1 - cx);
            return cy * g + col;
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cell_of(a) < cell_of(b); });

        int hint = 0;
        for (int idx : order) {
            hint = insert_point(idx, hint);
        }

        for (const Tri& t : tris_) {
            if (!t.alive) continue;
            if (t.v[0] >= s0 || t.v[1] >= s0 || t.v[2] >= s0) continue;
            out.triangles.push_back(t.v);
        }
        std::sort(out.triangles.begin(), out.triangles.end());
        return out;
    }

private:
    const std::vector<Point2>& pts_in_;
    std::vector<Point2> pts_;
    std::vector<Tri> tris_;

    bool in_cavity(int t, Point2 p) const {
        const Tri& tr = tris_[t];
        const Point2 a = pts_[tr.v[0]], b = pts_[tr.v[1]], c = pts_[tr.v[2]];
        const long double det = incircle(a, b, c, p);
        return det > 1e-17L * incircle_scale(a, b, c, p);
    }

    // Walk toward p from a starting triangle; returns a triangle containing
    // p (or having p on its boundary). Falls back to a linear scan.
    int locate(Point2 p, int start) const {
        int t = start;
        if (t < 0 || t >= static_cast<int>(tris_.size()) || !tris_[t].alive) t = first_alive();
        const int max_steps = static_cast<int>(tris_.size()) + 16;
        for (int step = 0; step < max_steps; ++step) {
            const Tri& tr = tris_[t];
            int next = -1;
            for (int k = 0; k < 3; ++k) {
                const Point2 a = pts_[tr.v[k]];
                const Point2 b = pts_[tr.v[(k + 1) % 3]];
                if (cross(b - a, p - a) < 0.0) {
                    if (tr.n[k] >= 0 && tris_[tr.n[k]].alive) {
                        next = tr.n[k];
                        break;
                    }
                }
            }
            if (next < 0) return t;
            t = next;
        }
        // Degenerate walk; scan for any triangle whose circumcircle holds p.
        for (int i = 0; i < static_cast<int>(tris_.size()); ++i)
            if (tris_[i].alive && in_cavity(i, p)) return i;
        throw Error("delaunay: point location failed");
    }

    int first_alive() const {
        for (int i = 0; i < static_cast<int>(tris_.size()); ++i)
            if (tris_[i].alive) return i;
        throw Error("delaunay: no triangles");
    }

    int insert_point(int pi, int hint) {
        const Point2 p = pts_[pi];
        int seed_tri = locate(p, hint);
        if (!in_cavity(seed_tri, p)) {
            // The containing triangle's circumcircle always holds an interior
            // point; if the tolerance filtered it out, look at neighbors.
            int found = -1;
            for (int k = 0; k < 3 && found < 0; ++k) {
                const int nb = tris_[seed_tri].n[k];
                if (nb >= 0 && tris_[nb].alive && in_cavity(nb, p)) found = nb;
            }
            if (found < 0) {
                for (int i = 0; i < static_cast<int>(tris_.size()) && found < 0; ++i)
                    if (tris_[i].alive && in_cavity(i, p)) found = i;
            }
            if (found < 0) throw Error("delaunay: empty cavity (duplicate point?)");
            seed_tri = found;
        }

        // Flood the cavity.
        std::vector<int> cavity;
        std::vector<int> stack{seed_tri};
        std::vector<char> visited(tris_.size(), 0);
        visited[seed_tri] = 1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            for (int k = 0; k < 3; ++k) {
                const int nb = tris_[t].n[k];
                if (nb < 0 || visited[nb] || !tris_[nb].alive) continue;
                visited[nb] = 1;
                if (in_cavity(nb, p)) stack.push_back(nb);
            }
        }

        // Boundary edges of the cavity, with the outside neighbor.
        struct BEdge {
            int a, b, outside;
        };
        std::vector<BEdge> bedges;
        std::vector<char> in_cav(tris_.size(), 0);
        for (int t : cavity) in_cav[t] = 1;
        for (int t : cavity) {
            for (int k = 0; k < 3; ++k) {
                const int nb = tris_[t].n[k];
                if (nb >= 0 && in_cav[nb]) continue;
                bedges.push_back({tris_[t].v[k], tris_[t].v[(k + 1) % 3], nb});
            }
        }
        for (int t : cavity) tris_[t].alive = false;

        // Fan the cavity boundary around p and stitch neighbor links. The
        // boundary is a closed loop around p, so every vertex starts exactly
        // one boundary edge and ends exactly one.
        std::unordered_map<int, int> tri_starting_at, tri_ending_at;
        tri_starting_at.reserve(bedges.size() * 2);
        tri_ending_at.reserve(bedges.size() * 2);
        std::vector<int> created;
        created.reserve(bedges.size());
        for (const BEdge& e : bedges) {
            Tri nt;
            nt.v = {e.a, e.b, pi};
            nt.n = {e.outside, -1, -1};
            const int id = static_cast<int>(tris_.size());
            tris_.push_back(nt);
            created.push_back(id);
            if (e.outside >= 0) {
                Tri& ot = tris_[e.outside];
                for (int k = 0; k < 3; ++k)
                    if (ot.v[k] == e.b && ot.v[(k + 1) % 3] == e.a) ot.n[k] = id;
            }
            tri_starting_at[e.a] = id;
            tri_ending_at[e.b] = id;
        }
        for (int id : created) {
            Tri& t = tris_[id];
            t.n[1] = tri_starting_at.at(t.v[1]);  // across (b, p)
            t.n[2] = tri_ending_at.at(t.v[0]);    // across (p, a)
        }
        return created.empty() ? first_alive() : created.back();
    }
};

} // namespace

DelaunayTriangulation delaunay_triangulate(const std::vector<Point2>& pts) {
    BowyerWatson bw(pts);
    return bw.run();
}

} // namespace eave
