#ifndef EAVE_GEOMETRY_HPP
#define EAVE_GEOMETRY_HPP

#include <cmath>
#include <span>
#include <vector>

namespace eave {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Rotate by +90 degrees.
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline double triangle_signed_area(Point2 a, Point2 b, Point2 c) {
    return 0.5 * cross(b - a, c - a);
}

// Circumcenter of a nondegenerate triangle.
Point2 circumcenter(Point2 a, Point2 b, Point2 c);

// Largest interior angle cosine check: a triangle is acute iff every
// dot product of edge vectors at a vertex is positive.
bool triangle_is_acute(Point2 a, Point2 b, Point2 c, double cos_margin = 0.0);

// Maximum interior angle in radians.
double triangle_max_angle(Point2 a, Point2 b, Point2 c);

double polygon_signed_area(std::span<const Point2> pts);
Point2 polygon_centroid(std::span<const Point2> pts);
double polygon_diameter(std::span<const Point2> pts);

// Distance from p to the segment [a, b].
double point_segment_distance(Point2 p, Point2 a, Point2 b);

// Foot of the perpendicular from p onto the line through a and b,
// clamped to nothing (may fall outside the segment).
Point2 project_to_line(Point2 p, Point2 a, Point2 b);

} // namespace eave

#endif
