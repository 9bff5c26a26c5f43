#ifndef EAVE_TEST_UTIL_HPP
#define EAVE_TEST_UTIL_HPP

#include "eave/dense.hpp"
#include "eave/geometry.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace eave::test {

inline double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// Random simple polygon: star-shaped around a center, angles built from
// positive increments normalized to 2 pi (always counterclockwise),
// varying radii and a squash factor to break symmetry.
inline std::vector<Point2> random_polygon(std::mt19937_64& rng, int min_v = 3, int max_v = 9) {
    const int n = min_v + static_cast<int>(uniform(rng, 0, max_v - min_v + 1 - 1e-12));
    // Gap ratio at most 1:1.67 keeps every normalized gap below pi, which
    // guarantees a simple counterclockwise star polygon for any radii.
    std::vector<double> gaps(n);
    double total = 0.0;
    for (double& g : gaps) {
        g = uniform(rng, 0.6, 1.0);
        total += g;
    }
    const double cx = uniform(rng, 0.3, 0.7);
    const double cy = uniform(rng, 0.3, 0.7);
    const double squash = uniform(rng, 0.5, 1.0);
    const double phase = uniform(rng, 0.0, 6.28);
    std::vector<Point2> pts(n);
    double angle = phase;
    for (int i = 0; i < n; ++i) {
        angle += gaps[i] / total * 2.0 * 3.14159265358979323846;
        const double r = uniform(rng, 0.08, 0.28);
        pts[i] = {cx + r * std::cos(angle), cy + squash * r * std::sin(angle)};
    }
    return pts;
}

// The chevron octagon used by the ncvx family, scaled to [0,1]^2.
inline std::vector<Point2> chevron_octagon() {
    return {{0.0, 0.0}, {0.5, 0.25}, {1.0, 0.0}, {1.0, 0.5},
            {1.0, 1.0}, {0.5, 1.0},  {0.0, 1.0}, {0.0, 0.5}};
}

inline DenseMatrix dense_from(const std::vector<std::vector<double>>& rows) {
    DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace eave::test

#endif
