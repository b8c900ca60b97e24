#include "casimir/contours.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {
constexpr double kResonanceThreshold = 1e-14;
}

std::string_view to_string(Mode mode) { return mode == Mode::TE ? "te" : "tm"; }

std::string_view to_string(Contour contour) { return contour == Contour::C1 ? "c1" : "c2"; }

Mode parse_mode(std::string_view name) {
    if (name == "te") return Mode::TE;
    if (name == "tm") return Mode::TM;
    throw DomainError("unknown mode '" + std::string(name) + "' (expected te or tm)");
}

Contour parse_contour(std::string_view name) {
    if (name == "c1") return Contour::C1;
    if (name == "c2") return Contour::C2;
    throw DomainError("unknown contour '" + std::string(name) + "' (expected c1 or c2)");
}

Complex contour_point(Contour contour, double parameter) {
    return contour == Contour::C1 ? Complex(1.0 - parameter, 0.0) : Complex(0.0, parameter);
}

Complex contour_jacobian(Contour contour) {
    return contour == Contour::C1 ? Complex(-1.0, 0.0) : Complex(0.0, 1.0);
}

PlateSystem::PlateSystem(double gap_cm, double temperature_k, DrudeMetal metal, BoundaryModel model)
    : gap_(gap_cm), temperature_(temperature_k), metal_(metal), model_(model) {
    if (!(gap_cm > 0.0) || !std::isfinite(gap_cm)) {
        throw DomainError("PlateSystem: gap must be positive, got " + std::to_string(gap_cm));
    }
    if (!(temperature_k > 0.0) || !std::isfinite(temperature_k)) {
        throw DomainError("PlateSystem: temperature must be positive, got " +
                          std::to_string(temperature_k));
    }
}

PlateSystem PlateSystem::reference(BoundaryModel model) {
    return {1.0 * constants::cm_per_um, 300.0, DrudeMetal::gold(), model};
}

PlateSystem PlateSystem::with_model(BoundaryModel model) const {
    return {gap_, temperature_, metal_, model};
}

Complex expm1(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    const double em1 = std::expm1(x);
    const double s = std::sin(0.5 * y);
    // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    const double re = em1 * std::cos(y) - 2.0 * s * s;
    const double im = (em1 + 1.0) * std::sin(y);
    return {re, im};
}

IntegrandContext::IntegrandContext(Mode mode_, double omega, const PlateSystem& system)
    : mode(mode_),
      response(MaterialResponse::at(omega, system.metal(), system.model())),
      half_phase(omega * system.gap() / constants::c) {}

Complex IntegrandContext::operator()(Complex p) const {
    if (p == Complex(0.0, 0.0)) return {0.0, 0.0};
    const ReflectionFraction r =
        mode == Mode::TE ? reflection_fraction_te(p, response) : reflection_fraction_tm(p, response);
    // phi = -2 i (omega a / c) p
    const Complex phi(2.0 * half_phase * p.imag(), -2.0 * half_phase * p.real());
    const Complex oscillating = r.num * r.num * expm1(phi);
    const Complex offset = r.num_minus_den * r.num_plus_den;
    const Complex bracket = oscillating + offset;
    if (std::abs(bracket) <= kResonanceThreshold * (std::abs(oscillating) + std::abs(offset))) {
        std::ostringstream msg;
        msg << "cavity resonance: r^2 exp(-2i omega p a/c) - 1 vanishes at omega a/c = "
            << half_phase << ", p = (" << p.real() << ", " << p.imag() << ")";
        throw SingularityError(msg.str());
    }
    return p * p * (r.den * r.den) / bracket;
}

double IntegrandContext::c2_real(double q) const {
    // p^2 dp = -i q^2 dq, so the real part is -Im of the integrand at p = iq.
    return -(*this)(Complex(0.0, q)).imag();
}

Complex integrand(Mode mode, Complex p, double omega, const PlateSystem& system) {
    return IntegrandContext(mode, omega, system)(p);
}

double c2_real_form(Mode mode, double q, double omega, const PlateSystem& system) {
    if (!(q > 0.0)) throw DomainError("c2_real_form: q must be positive");
    return IntegrandContext(mode, omega, system).c2_real(q);
}

double c2_decay_rate(double omega, const PlateSystem& system) {
    return 2.0 * omega * system.gap() / constants::c;
}

double c2_truncation(double omega, const PlateSystem& system) {
    return std::max(10.0, 25.0 / c2_decay_rate(omega, system));
}

} // namespace casimir
