#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "casimir/contours.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/spectrum.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

/// hbar / (pi^2 c^3), converts \int F_omega d omega to a pressure [dyn/cm^2].
double force_prefactor();

/// Outer frequency range. The defaults cover everything that contributes at
/// room temperature and micron gaps: the evanescent TE spectrum decays only as
/// omega^{1/2} per logarithmic interval towards omega -> 0, and the plane-wave
/// spectra peak near 3 kB T / hbar.
struct IntegrationBounds {
    double omega_lo = 1e-7;
    double omega_hi = 1e16;

    void validate() const;
};

/// Integrated force per unit area with diagnostics. Positive values are attractive.
struct ForceEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
    /// Frequencies at which the inner contour integral missed tolerance.
    std::size_t inner_failures = 0;
    /// Estimated contribution from (0, omega_lo), assuming omega F_omega ~ omega^{1/2} or faster.
    double low_frequency_tail = 0.0;

    /// Tail below omega_lo is under 1e-6 of |value| (or both vanish).
    bool low_cutoff_negligible() const;
};

/// hbar/(pi^2 c^3) \int F_omega d omega, integrated over u = ln omega. Never throws on
/// non-convergence; see ForceEstimate::converged.
ForceEstimate estimate_integrated_force(Mode mode, Contour contour, const PlateSystem& system,
                                        const IntegrationBounds& bounds = {},
                                        const QuadratureSettings& settings = {});

/// Throws NonConvergenceError carrying the best value when the estimate did not converge.
double integrated_force(Mode mode, Contour contour, const PlateSystem& system,
                        const IntegrationBounds& bounds = {}, const QuadratureSettings& settings = {});

struct ForceCell {
    Mode mode;
    Contour contour;
    BoundaryModel model;
    ForceEstimate force;
};

/// Impedance vs dielectric comparison for one sector.
struct SectorComparison {
    std::string sector; // te_c1, te_c2, tm_c1, tm_c2, tm_total
    double impedance = 0.0;
    double dielectric = 0.0;
    double relative_difference = 0.0; // |imp - diel| / max(|imp|, |diel|)
};

struct ForceReport {
    PlateSystem system;
    IntegrationBounds bounds;
    QuadratureSettings settings;
    std::vector<ForceCell> cells; // every (model, mode, contour)

    /// TE C2 over TE C1 for system.model().
    double c2_over_c1_te = 0.0;
    /// (TE + TM, C1 + C2) for system.model() over perfect-conductor (TE + TM, C1).
    double total_over_perfect_conductor = 0.0;
    /// TE (C1 + C2) for system.model() over perfect-conductor TE C1.
    double te_total_over_perfect_conductor = 0.0;

    std::vector<SectorComparison> sectors;
    std::uint64_t parameter_hash = 0;

    /// Throws std::out_of_range for a cell that was not computed.
    const ForceCell& cell(Mode mode, Contour contour, BoundaryModel model) const;
    double force(Mode mode, Contour contour, BoundaryModel model) const;
    /// Sum over both modes and contours for one model.
    double total(BoundaryModel model) const;
    /// Perfect-conductor TE + TM over C1 (its C2 part vanishes identically).
    double perfect_conductor_total() const;
    bool all_converged() const;
};

/// Computes every (model, mode, contour) cell over `threads` workers (0 = default) and the
/// derived ratios for system.model().
ForceReport report(const PlateSystem& system, const IntegrationBounds& bounds = {},
                   const QuadratureSettings& settings = {}, std::size_t threads = 0);

/// FNV-1a hash of the physical and numerical parameters.
std::uint64_t parameter_hash(const PlateSystem& system, const IntegrationBounds& bounds,
                             const QuadratureSettings& settings);

} // namespace casimir
