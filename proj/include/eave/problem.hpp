#ifndef EAVE_PROBLEM_HPP
#define EAVE_PROBLEM_HPP

#include "eave/edge_flux.hpp"

#include <cmath>

namespace eave {

// How variable coefficients become the constant edge data of the fitted
// schemes: endpoint average (the default) or midpoint evaluation.
enum class EdgeAverageRule { EndpointAverage, Midpoint };

// Coefficients and data of -div(alpha grad u + beta u) = f with u = g on
// the boundary. `epsilon` is set when alpha is the constant epsilon
// (required by SUPG's stability parameter).
struct ProblemSpec {
    ScalarField alpha;
    VectorField beta;
    ScalarField f;
    ScalarField g;
    double epsilon = std::nan("");
    EdgeAverageRule edge_rule = EdgeAverageRule::EndpointAverage;

    bool has_constant_epsilon() const { return !std::isnan(epsilon); }
    EdgeData edge_data(Point2 xi, Point2 xj) const;
};

// Boundary-layer benchmark on the unit square: beta = (0, -1), f = 0,
// exact solution u = x (1 - e^{(y-1)/eps}) / (1 - e^{-2/eps}).
ScalarField exact_solution_layer(double epsilon);
ProblemSpec layer_problem(double epsilon);

// Smooth diffusion benchmark: alpha = 1, beta = 0, u = sin(pi x) sin(pi y).
ScalarField exact_solution_sine();
ProblemSpec sine_problem();

// Gradient of the sine solution, for flux error studies.
VectorField exact_gradient_sine();

} // namespace eave

#endif
