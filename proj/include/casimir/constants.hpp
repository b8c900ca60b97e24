#pragma once

// Gaussian-CGS physical constants (CODATA 2018 exact/recommended values).
namespace casimir::constants {

inline constexpr double c = 2.99792458e10;      // speed of light [cm/s]
inline constexpr double hbar = 1.054571817e-27; // reduced Planck constant [erg s]
inline constexpr double kB = 1.380649e-16;      // Boltzmann constant [erg/K]

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double cm_per_um = 1.0e-4;

} // namespace casimir::constants
