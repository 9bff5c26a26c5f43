#ifndef EAVE_EDGE_FLUX_HPP
#define EAVE_EDGE_FLUX_HPP

#include "eave/geometry.hpp"

#include <functional>

namespace eave {

using ScalarField = std::function<double(Point2)>;
using VectorField = std::function<Point2(Point2)>;

// Edge with constant diffusion alpha_E > 0 and constant velocity beta_E.
struct EdgeData {
    Point2 xi;
    Point2 xj;
    double alpha = 1.0;
    Point2 beta{0.0, 0.0};

    Point2 tangent() const { return xj - xi; }  // tau_E = x_j - x_i
};

// Two-point coefficients of the fitted edge flux:
//   kbar_E * delta_E(e^psi u) = c_ij * u(x_j) - c_ji * u(x_i),
// both strictly positive.
struct EdgeCoefficients {
    double c_ij = 0.0;
    double c_ji = 0.0;
};

// Linear edge potential psi_E(x) = alpha^-1 beta . x, represented by its
// gradient and a reference point. Downstream quantities are invariant to
// shifting psi_E by a constant.
struct EdgePotential {
    Point2 gradient;
    Point2 reference;
    double shift = 0.0;

    double operator()(Point2 p) const { return dot(gradient, p - reference) + shift; }
};

EdgePotential edge_potential(const EdgeData& e);

// Harmonic average of kappa_E = alpha e^-psi along the edge in the gauge
// psi(x_i) = 0; equals alpha * B(alpha^-1 beta . tau).
double harmonic_average(const EdgeData& e);

EdgeCoefficients edge_coefficients(const EdgeData& e);

// Endpoint-average rule for a variable-coefficient edge. Throws
// NonpositiveDiffusion when the averaged alpha is <= 0.
EdgeData edge_average_coefficients(const ScalarField& alpha, const VectorField& beta,
                                   Point2 xi, Point2 xj);

// Midpoint-evaluation alternative, selectable where the averaging rule
// matters for strongly varying coefficients.
EdgeData edge_midpoint_coefficients(const ScalarField& alpha, const VectorField& beta,
                                    Point2 xi, Point2 xj);

} // namespace eave

#endif
