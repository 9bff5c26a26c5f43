#include "eave/edge_flux.hpp"

#include "eave/bernoulli.hpp"
#include "eave/errors.hpp"

namespace eave {

EdgePotential edge_potential(const EdgeData& e) {
    return {(1.0 / e.alpha) * e.beta, e.xi, 0.0};
}

double harmonic_average(const EdgeData& e) {
    const double b = dot(e.beta, e.tangent()) / e.alpha;
    return e.alpha * bernoulli(b);
}

EdgeCoefficients edge_coefficients(const EdgeData& e) {
    const Point2 tau = e.tangent();
    EdgeCoefficients c;
    c.c_ij = e.alpha * bernoulli(dot(e.beta, -1.0 * tau) / e.alpha);
    c.c_ji = e.alpha * bernoulli(dot(e.beta, tau) / e.alpha);
    return c;
}

EdgeData edge_average_coefficients(const ScalarField& alpha, const VectorField& beta,
                                   Point2 xi, Point2 xj) {
    EdgeData e;
    e.xi = xi;
    e.xj = xj;
    e.alpha = 0.5 * (alpha(xi) + alpha(xj));
    const Point2 bi = beta(xi), bj = beta(xj);
    e.beta = {0.5 * (bi.x + bj.x), 0.5 * (bi.y + bj.y)};
    if (!(e.alpha > 0.0))
        throw NonpositiveDiffusion("edge diffusion average is not positive");
    return e;
}

EdgeData edge_midpoint_coefficients(const ScalarField& alpha, const VectorField& beta,
                                    Point2 xi, Point2 xj) {
    EdgeData e;
    e.xi = xi;
    e.xj = xj;
    const Point2 mid = 0.5 * (xi + xj);
    e.alpha = alpha(mid);
    e.beta = beta(mid);
    if (!(e.alpha > 0.0))
        throw NonpositiveDiffusion("edge diffusion at midpoint is not positive");
    return e;
}

} // namespace eave
