#include "eave/generators.hpp"

#include "eave/delaunay.hpp"
#include "eave/errors.hpp"
#include "eave/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>

namespace eave {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Near-equilateral triangular lattice for nominal spacing 1/n, stretched
// so rows sit at (r + 1/2)/R and columns at (c + 1/4)/C resp. (c + 3/4)/C
// on alternating rows. Every wall keeps a margin of at least a quarter
// column pitch, and the whole construction is self-similar across n, so
// boundary-layer sampling scales cleanly under refinement.
std::vector<Point2> hex_lattice(int n) {
    const int rows = std::max(3, static_cast<int>(std::llround(1.2 * n)));
    const int cols = std::max(2, static_cast<int>(std::llround(0.6 * std::sqrt(3.0) * n)));
    const double sy = 1.0 / rows;
    const double sx = 1.0 / cols;
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        const double y = (r + 0.5) * sy;
        const double off = (r % 2 == 1) ? 0.75 : 0.25;
        for (int c = 0; c < cols; ++c) pts.push_back({(c + off) * sx, y});
    }
    return pts;
}

DualMeshPair build_pair_from_seeds(const std::vector<Point2>& seeds) {
    const DelaunayTriangulation dt = delaunay_triangulate(seeds);
    PolygonalMesh mesh = clipped_voronoi(seeds, dt);
    auto tris = select_interior_triangles(mesh, seeds, dt.triangles);
    return build_dual_pairing(std::move(mesh), seeds, std::move(tris));
}

// Cheap reject before the full Voronoi build: any triangle whose
// circumcenter falls inside the square must be acute.
bool quick_acuteness_scan(const std::vector<Point2>& seeds, const DelaunayTriangulation& dt) {
    for (const auto& tri : dt.triangles) {
        const Point2 a = seeds[tri[0]], b = seeds[tri[1]], c = seeds[tri[2]];
        const Point2 cc = circumcenter(a, b, c);
        if (cc.x <= 0.0 || cc.x >= 1.0 || cc.y <= 0.0 || cc.y >= 1.0) continue;
        if (!triangle_is_acute(a, b, c, 1e-9)) return false;
    }
    return true;
}

} // namespace

PolygonalMesh generate_triangle_mesh(int n, TriangleKind kind) {
    if (n < 1) throw Error("generate_triangle_mesh: n must be >= 1");
    if (kind == TriangleKind::UniformRight) {
        std::vector<Point2> verts;
        verts.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i)
                verts.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
        auto id = [n](int i, int j) { return j * (n + 1) + i; };
        std::vector<std::vector<int>> cells;
        cells.reserve(2 * static_cast<std::size_t>(n) * n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
                cells.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
            }
        return PolygonalMesh::build(std::move(verts), std::move(cells));
    }

    // Equilateral rows, squeezed vertically to fit and clipped at x = 0, 1.
    const int rows = std::max(2, static_cast<int>(std::llround(n * 2.0 / std::sqrt(3.0))) + 1);
    std::vector<Point2> verts;
    std::vector<std::vector<int>> row_ids(rows);
    for (int j = 0; j < rows; ++j) {
        const double y = static_cast<double>(j) / (rows - 1);
        if (j % 2 == 0) {
            for (int i = 0; i <= n; ++i) {
                row_ids[j].push_back(static_cast<int>(verts.size()));
                verts.push_back({static_cast<double>(i) / n, y});
            }
        } else {
            row_ids[j].push_back(static_cast<int>(verts.size()));
            verts.push_back({0.0, y});
            for (int i = 0; i < n; ++i) {
                row_ids[j].push_back(static_cast<int>(verts.size()));
                verts.push_back({(i + 0.5) / n, y});
            }
            row_ids[j].push_back(static_cast<int>(verts.size()));
            verts.push_back({1.0, y});
        }
    }
    std::vector<std::vector<int>> cells;
    for (int j = 0; j + 1 < rows; ++j) {
        const auto& lo = row_ids[j];
        const auto& hi = row_ids[j + 1];
        std::size_t a = 0, b = 0;
        while (a + 1 < lo.size() || b + 1 < hi.size()) {
            const bool can_lo = a + 1 < lo.size();
            const bool can_hi = b + 1 < hi.size();
            bool advance_lo;
            if (!can_hi) advance_lo = true;
            else if (!can_lo) advance_lo = false;
            else
                advance_lo = dist(verts[lo[a + 1]], verts[hi[b]]) <=
                             dist(verts[lo[a]], verts[hi[b + 1]]);
            if (advance_lo) {
                cells.push_back({lo[a], lo[a + 1], hi[b]});
                ++a;
            } else {
                cells.push_back({lo[a], hi[b + 1], hi[b]});
                ++b;
            }
        }
    }
    return PolygonalMesh::build(std::move(verts), std::move(cells));
}

DualMeshPair generate_hexa_dual(int n) {
    if (n < 2) throw Error("generate_hexa_dual: n must be >= 2");
    return build_pair_from_seeds(hex_lattice(n));
}

DualMeshPair generate_voro_dual(int target_cells, std::uint64_t seed) {
    if (target_cells < 4) throw Error("generate_voro_dual: target cell count must be >= 4");
    const int m = std::max(2, static_cast<int>(std::llround(std::sqrt(target_cells / 1.247))));
    const std::vector<Point2> base = hex_lattice(m);
    const double s = std::sqrt(3.0) / (2.0 * m);
    std::mt19937_64 rng(seed);

    const double jitters[] = {0.28, 0.20, 0.14, 0.09, 0.05, 0.02, 0.0};
    std::string last_failure = "no attempt";
    for (double j : jitters) {
        std::vector<Point2> pts = base;
        if (j > 0.0) {
            for (Point2& p : pts) {
                p.x += (uniform01(rng) - 0.5) * j * s;
                p.y += (uniform01(rng) - 0.5) * j * s;
                p.x = std::clamp(p.x, 0.15 * s, 1.0 - 0.15 * s);
                p.y = std::clamp(p.y, 0.15 * s, 1.0 - 0.15 * s);
            }
        }
        const int lloyd_batches[] = {3, 4, 6, 8};
        int applied = 0;
        for (int batch : lloyd_batches) {
            if (j == 0.0 && applied == 0) {
                batch = 0;  // exact lattice needs no smoothing
            }
            try {
                for (int it = 0; it < batch; ++it) pts = lloyd_step(pts);
                applied += batch;
                const DelaunayTriangulation dt = delaunay_triangulate(pts);
                if (!quick_acuteness_scan(pts, dt)) {
                    last_failure = "obtuse interior dual triangle";
                    if (j == 0.0) break;
                    continue;
                }
                PolygonalMesh mesh = clipped_voronoi(pts, dt);
                auto tris = select_interior_triangles(mesh, pts, dt.triangles);
                return build_dual_pairing(std::move(mesh), pts, std::move(tris));
            } catch (const Error& err) {
                last_failure = err.what();
                if (j == 0.0) break;
            }
        }
    }
    throw AcutenessFailure("generate_voro_dual: could not certify an acute dual (" +
                           last_failure + ")");
}

PolygonalMesh generate_voronoi(int n, int lloyd_iters, std::uint64_t seed) {
    if (n < 1) throw Error("generate_voronoi: n must be >= 1");
    if (lloyd_iters < 0) throw Error("generate_voronoi: lloyd_iters must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<Point2> pts;
    pts.reserve(n);
    // Reject draws closer than 1e-9 to an existing seed (grid hash lookup).
    std::unordered_map<std::uint64_t, std::vector<int>> boxes;
    auto box_key = [](std::int64_t bx, std::int64_t by) {
        return static_cast<std::uint64_t>(bx) * 73856093ULL ^
               static_cast<std::uint64_t>(by) * 19349663ULL;
    };
    constexpr double kBox = 1e-9;
    while (static_cast<int>(pts.size()) < n) {
        const Point2 p{uniform01(rng), uniform01(rng)};
        const std::int64_t bx = static_cast<std::int64_t>(std::floor(p.x / kBox));
        const std::int64_t by = static_cast<std::int64_t>(std::floor(p.y / kBox));
        bool close = false;
        for (std::int64_t dx = -1; dx <= 1 && !close; ++dx)
            for (std::int64_t dy = -1; dy <= 1 && !close; ++dy) {
                const auto it = boxes.find(box_key(bx + dx, by + dy));
                if (it == boxes.end()) continue;
                for (int idx : it->second)
                    if (dist(p, pts[idx]) < 1e-9) {
                        close = true;
                        break;
                    }
            }
        if (close) continue;
        boxes[box_key(bx, by)].push_back(static_cast<int>(pts.size()));
        pts.push_back(p);
    }
    // A deterministic re-jitter rescues the rare near-degenerate
    // configuration the incircle tolerance cannot split.
    for (int attempt = 0;; ++attempt) {
        try {
            std::vector<Point2> work = pts;
            for (int it = 0; it < lloyd_iters; ++it) work = lloyd_step(work);
            return voronoi_mesh(work);
        } catch (const Error&) {
            if (attempt >= 2) throw;
            for (Point2& p : pts) {
                p.x = std::clamp(p.x + 1e-9 * (uniform01(rng) - 0.5), 0.0, 1.0);
                p.y = std::clamp(p.y + 1e-9 * (uniform01(rng) - 0.5), 0.0, 1.0);
            }
        }
    }
}

PolygonalMesh generate_ncvx(int n) {
    if (n < 2) throw Error("generate_ncvx: n must be >= 2");
    const double hn = 1.0 / n;
    std::vector<Point2> verts;
    const int G = (n + 1) * (n + 1);
    const int H = G + n * (n + 1);
    const int P = H + n * (n + 1);
    verts.resize(P + n * n);
    auto g = [&](int i, int j) { return j * (n + 1) + i; };
    auto hmid = [&](int i, int j) { return G + j * n + i; };
    auto vmid = [&](int i, int j) { return H + j * (n + 1) + i; };
    auto push = [&](int i, int j) { return P + j * n + i; };
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) verts[g(i, j)] = {i * hn, j * hn};
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i < n; ++i) verts[hmid(i, j)] = {(i + 0.5) * hn, j * hn};
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= n; ++i) verts[vmid(i, j)] = {i * hn, (j + 0.5) * hn};
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) verts[push(i, j)] = {(i + 0.5) * hn, (j + 0.25) * hn};

    std::vector<std::vector<int>> cells;
    cells.reserve(3 * static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            cells.push_back({g(i, j), push(i, j), g(i + 1, j), vmid(i + 1, j), g(i + 1, j + 1),
                             hmid(i, j + 1), g(i, j + 1), vmid(i, j)});
            cells.push_back({g(i, j), hmid(i, j), push(i, j)});
            cells.push_back({hmid(i, j), g(i + 1, j), push(i, j)});
        }
    return PolygonalMesh::build(std::move(verts), std::move(cells));
}

} // namespace eave
