#pragma once

#include <complex>
#include <string_view>

namespace casimir {

using Complex = std::complex<double>;

/// Free-carrier metal: sigma(omega) = sigma0 / (1 - i tau omega), e^{-i omega t} convention.
class DrudeMetal {
public:
    /// sigma0 in Gaussian units [1/s], tau in [s]. Throws DomainError unless sigma0 > 0, tau >= 0.
    DrudeMetal(double sigma0, double tau);

    /// sigma0 = 3e17 1/s, tau = 1.88e-14 s.
    static DrudeMetal gold() { return {3.0e17, 1.88e-14}; }

    double sigma0() const noexcept { return sigma0_; }
    double tau() const noexcept { return tau_; }

    friend bool operator==(const DrudeMetal&, const DrudeMetal&) = default;

private:
    double sigma0_;
    double tau_;
};

enum class BoundaryModel { Impedance, Dielectric, PerfectConductor };

std::string_view to_string(BoundaryModel model);
/// Accepts "impedance", "dielectric", "perfect". Throws DomainError otherwise.
BoundaryModel parse_boundary_model(std::string_view name);

Complex drude_conductivity(double omega, const DrudeMetal& metal);

/// Leontovich impedance (1 - i) sqrt(omega / (8 pi sigma(omega))), normal skin effect.
Complex surface_impedance(double omega, const DrudeMetal& metal);

/// eps(omega) = 1 + 4 pi i sigma(omega) / omega.
Complex dielectric_function(double omega, const DrudeMetal& metal);

/// Material quantities that depend on omega only, evaluated once per frequency.
struct MaterialResponse {
    BoundaryModel model = BoundaryModel::PerfectConductor;
    Complex zeta{0.0, 0.0};     // Impedance model only
    Complex epsilon{1.0, 0.0};  // Dielectric model only

    static MaterialResponse at(double omega, const DrudeMetal& metal, BoundaryModel model);
};

/// Reflection factor kept as numerator / denominator so that r^2 e^phi - 1 can be
/// formed without cancellation: r^2 e^phi - 1 = [num^2 expm1(phi) + (num-den)(num+den)] / den^2.
struct ReflectionFraction {
    Complex num{1.0, 0.0};
    Complex den{1.0, 0.0};
    /// num - den and num + den, computed analytically for each model.
    Complex num_minus_den{0.0, 0.0};
    Complex num_plus_den{2.0, 0.0};

    Complex value() const { return num / den; }
};

// The factors below are the inverse reflection amplitudes that appear inside
// [r^2 e^{-2 i omega p a / c} - 1]^{-1}: (1 + zeta p)/(1 - zeta p) for TE and
// (p + zeta)/(p - zeta) for TM under the impedance model. The dielectric model
// uses (s + p)/(s - p) and (eps p + s)/(eps p - s) with s = sqrt(eps - 1 + p^2),
// Re s >= 0. All equal 1 for a perfect conductor.

ReflectionFraction reflection_fraction_te(Complex p, const MaterialResponse& response);
ReflectionFraction reflection_fraction_tm(Complex p, const MaterialResponse& response);

Complex reflection_te(Complex p, double omega, const DrudeMetal& metal, BoundaryModel model);
Complex reflection_tm(Complex p, double omega, const DrudeMetal& metal, BoundaryModel model);

} // namespace casimir
