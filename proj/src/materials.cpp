#include "casimir/materials.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kPoleThreshold = 1e-14;

void require_positive_omega(double omega, const char* op) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError(std::string(op) + ": omega must be positive and finite, got " +
                          std::to_string(omega));
    }
}

void guard_pole(Complex den, Complex p, const char* what) {
    if (std::abs(den) < kPoleThreshold) {
        throw SingularityError(std::string(what) + " denominator vanishes at p = (" +
                               std::to_string(p.real()) + ", " + std::to_string(p.imag()) + ")");
    }
}

// Normal component of the wave vector inside the metal, in units of omega/c.
Complex metal_normal_wavevector(Complex p, Complex epsilon) {
    Complex s = std::sqrt(epsilon - 1.0 + p * p);
    if (s.real() < 0.0) s = -s;
    return s;
}

} // namespace

DrudeMetal::DrudeMetal(double sigma0, double tau) : sigma0_(sigma0), tau_(tau) {
    if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
        throw DomainError("DrudeMetal: sigma0 must be positive, got " + std::to_string(sigma0));
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw DomainError("DrudeMetal: tau must be non-negative, got " + std::to_string(tau));
    }
}

std::string_view to_string(BoundaryModel model) {
    switch (model) {
    case BoundaryModel::Impedance: return "impedance";
    case BoundaryModel::Dielectric: return "dielectric";
    case BoundaryModel::PerfectConductor: return "perfect";
    }
    return "unknown";
}

BoundaryModel parse_boundary_model(std::string_view name) {
    if (name == "impedance") return BoundaryModel::Impedance;
    if (name == "dielectric") return BoundaryModel::Dielectric;
    if (name == "perfect") return BoundaryModel::PerfectConductor;
    throw DomainError("unknown boundary model '" + std::string(name) +
                      "' (expected impedance, dielectric or perfect)");
}

Complex drude_conductivity(double omega, const DrudeMetal& metal) {
    if (!(omega >= 0.0)) {
        throw DomainError("drude_conductivity: omega must be non-negative");
    }
    return metal.sigma0() / Complex(1.0, -metal.tau() * omega);
}

Complex surface_impedance(double omega, const DrudeMetal& metal) {
    require_positive_omega(omega, "surface_impedance");
    const Complex sigma = drude_conductivity(omega, metal);
    return Complex(1.0, -1.0) * std::sqrt(omega / (8.0 * constants::pi * sigma));
}

Complex dielectric_function(double omega, const DrudeMetal& metal) {
    require_positive_omega(omega, "dielectric_function");
    const Complex sigma = drude_conductivity(omega, metal);
    return 1.0 + Complex(0.0, 4.0 * constants::pi) * sigma / omega;
}

MaterialResponse MaterialResponse::at(double omega, const DrudeMetal& metal, BoundaryModel model) {
    MaterialResponse response;
    response.model = model;
    switch (model) {
    case BoundaryModel::Impedance:
        response.zeta = surface_impedance(omega, metal);
        break;
    case BoundaryModel::Dielectric:
        response.epsilon = dielectric_function(omega, metal);
        break;
    case BoundaryModel::PerfectConductor:
        require_positive_omega(omega, "MaterialResponse");
        break;
    }
    return response;
}

ReflectionFraction reflection_fraction_te(Complex p, const MaterialResponse& response) {
    ReflectionFraction r;
    switch (response.model) {
    case BoundaryModel::PerfectConductor:
        return r;
    case BoundaryModel::Impedance: {
        const Complex zp = response.zeta * p;
        r.num = 1.0 + zp;
        r.den = 1.0 - zp;
        r.num_minus_den = 2.0 * zp;
        r.num_plus_den = Complex(2.0, 0.0);
        guard_pole(r.den, p, "TE impedance factor");
        return r;
    }
    case BoundaryModel::Dielectric: {
        const Complex s = metal_normal_wavevector(p, response.epsilon);
        r.num = s + p;
        r.den = s - p;
        r.num_minus_den = 2.0 * p;
        r.num_plus_den = 2.0 * s;
        guard_pole(r.den, p, "TE dielectric factor");
        return r;
    }
    }
    return r;
}

ReflectionFraction reflection_fraction_tm(Complex p, const MaterialResponse& response) {
    ReflectionFraction r;
    switch (response.model) {
    case BoundaryModel::PerfectConductor:
        return r;
    case BoundaryModel::Impedance: {
        r.num = p + response.zeta;
        r.den = p - response.zeta;
        r.num_minus_den = 2.0 * response.zeta;
        r.num_plus_den = 2.0 * p;
        guard_pole(r.den, p, "TM impedance factor");
        return r;
    }
    case BoundaryModel::Dielectric: {
        const Complex s = metal_normal_wavevector(p, response.epsilon);
        const Complex ep = response.epsilon * p;
        r.num = ep + s;
        r.den = ep - s;
        r.num_minus_den = 2.0 * s;
        r.num_plus_den = 2.0 * ep;
        guard_pole(r.den, p, "TM dielectric factor");
        return r;
    }
    }
    return r;
}

Complex reflection_te(Complex p, double omega, const DrudeMetal& metal, BoundaryModel model) {
    return reflection_fraction_te(p, MaterialResponse::at(omega, metal, model)).value();
}

Complex reflection_tm(Complex p, double omega, const DrudeMetal& metal, BoundaryModel model) {
    return reflection_fraction_tm(p, MaterialResponse::at(omega, metal, model)).value();
}

} // namespace casimir
