#pragma once

namespace casimir {

/// Thermal photon occupation g(omega) = 1 / (exp(hbar omega / kB T) - 1).
/// Requires omega > 0 and temperature > 0; underflows to 0 at very large hbar omega / kB T.
double planck_weight(double omega, double temperature);

} // namespace casimir
