#include "eave/problem.hpp"

namespace eave {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EdgeData ProblemSpec::edge_data(Point2 xi, Point2 xj) const {
    return edge_rule == EdgeAverageRule::EndpointAverage
               ? edge_average_coefficients(alpha, beta, xi, xj)
               : edge_midpoint_coefficients(alpha, beta, xi, xj);
}

ScalarField exact_solution_layer(double epsilon) {
    // (y - 1) <= 0 on the closed square, so the exponentials never overflow
    // and the denominator tends to 1 as epsilon -> 0.
    const double denom = 1.0 - std::exp(-2.0 / epsilon);
    return [epsilon, denom](Point2 p) {
        return p.x * (1.0 - std::exp((p.y - 1.0) / epsilon)) / denom;
    };
}

ProblemSpec layer_problem(double epsilon) {
    ProblemSpec spec;
    spec.alpha = [epsilon](Point2) { return epsilon; };
    spec.beta = [](Point2) { return Point2{0.0, -1.0}; };
    spec.f = [](Point2) { return 0.0; };
    spec.g = exact_solution_layer(epsilon);
    spec.epsilon = epsilon;
    return spec;
}

ScalarField exact_solution_sine() {
    return [](Point2 p) { return std::sin(kPi * p.x) * std::sin(kPi * p.y); };
}

ProblemSpec sine_problem() {
    ProblemSpec spec;
    spec.alpha = [](Point2) { return 1.0; };
    spec.beta = [](Point2) { return Point2{0.0, 0.0}; };
    spec.f = [](Point2 p) {
        return 2.0 * kPi * kPi * std::sin(kPi * p.x) * std::sin(kPi * p.y);
    };
    spec.g = [](Point2) { return 0.0; };
    spec.epsilon = 1.0;
    return spec;
}

VectorField exact_gradient_sine() {
    return [](Point2 p) {
        return Point2{kPi * std::cos(kPi * p.x) * std::sin(kPi * p.y),
                      kPi * std::sin(kPi * p.x) * std::cos(kPi * p.y)};
    };
}

} // namespace eave
