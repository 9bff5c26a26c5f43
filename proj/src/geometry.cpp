#include "eave/geometry.hpp"

#include <algorithm>
#include <limits>

namespace eave {

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    // Intersection of the perpendicular bisectors of (a,b) and (a,c),
    // written relative to a for accuracy.
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double ab2 = norm2(ab);
    const double ac2 = norm2(ac);
    const double ux = (ac.y * ab2 - ab.y * ac2) / d;
    const double uy = (ab.x * ac2 - ac.x * ab2) / d;
    return {a.x + ux, a.y + uy};
}

bool triangle_is_acute(Point2 a, Point2 b, Point2 c, double cos_margin) {
    const double da = dot(b - a, c - a);
    const double db = dot(a - b, c - b);
    const double dc = dot(a - c, b - c);
    const double scale_a = norm(b - a) * norm(c - a);
    const double scale_b = norm(a - b) * norm(c - b);
    const double scale_c = norm(a - c) * norm(b - c);
    return da > cos_margin * scale_a && db > cos_margin * scale_b && dc > cos_margin * scale_c;
}

double triangle_max_angle(Point2 a, Point2 b, Point2 c) {
    auto angle_at = [](Point2 v, Point2 p, Point2 q) {
        const Point2 u = p - v;
        const Point2 w = q - v;
        return std::atan2(std::abs(cross(u, w)), dot(u, w));
    };
    return std::max({angle_at(a, b, c), angle_at(b, a, c), angle_at(c, a, b)});
}

double polygon_signed_area(std::span<const Point2> pts) {
    double acc = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = pts[i];
        const Point2& q = pts[(i + 1) % n];
        acc += cross(p, q);
    }
    return 0.5 * acc;
}

Point2 polygon_centroid(std::span<const Point2> pts) {
    double a6 = 0.0;
    double cx = 0.0, cy = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = pts[i];
        const Point2& q = pts[(i + 1) % n];
        const double w = cross(p, q);
        a6 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    return {cx / (3.0 * a6), cy / (3.0 * a6)};
}

double polygon_diameter(std::span<const Point2> pts) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d2 = std::max(d2, norm2(pts[i] - pts[j]));
    return std::sqrt(d2);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = norm2(ab);
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * ab);
}

Point2 project_to_line(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double t = dot(p - a, ab) / norm2(ab);
    return a + t * ab;
}

} // namespace eave
