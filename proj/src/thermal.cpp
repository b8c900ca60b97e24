#include "casimir/thermal.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

double planck_weight(double omega, double temperature) {
    if (!(omega > 0.0)) throw DomainError("planck_weight: omega must be positive");
    if (!(temperature > 0.0)) throw DomainError("planck_weight: temperature must be positive");
    const double x = constants::hbar * omega / (constants::kB * temperature);
    return 1.0 / std::expm1(x);
}

} // namespace casimir
