#include "eave/bernoulli.hpp"

#include <cmath>

namespace eave {

double bernoulli(double z) {
    const double az = std::abs(z);
    if (az < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z / 2.0 + z2 / 12.0 - z2 * z2 / 720.0;
    }
    if (z > 700.0) {
        const double e = std::exp(-z);
        return z * e / (1.0 - e);
    }
    return z / std::expm1(z);
}

} // namespace eave
