#include "casimir/quadrature.hpp"

namespace casimir {

void QuadratureSettings::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("quadrature: rel_tol must be positive");
    if (!(abs_tol >= 0.0)) throw DomainError("quadrature: abs_tol must be non-negative");
    if (max_subdivisions < 1) throw DomainError("quadrature: max_subdivisions must be at least 1");
}

} // namespace casimir
