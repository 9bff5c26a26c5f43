#ifndef EAVE_BERNOULLI_HPP
#define EAVE_BERNOULLI_HPP

namespace eave {

// Bernoulli function B(z) = z / (e^z - 1), B(0) = 1.
//
// Branches: Taylor series for |z| < 1e-4, the underflow-safe form
// z e^-z / (1 - e^-z) for z > 700 (e^z overflows near 709), and
// z / expm1(z) otherwise. Positive for all finite z and satisfies
// B(-z) = e^z B(z) and B(-z) - B(z) = z.
double bernoulli(double z);

} // namespace eave

#endif
