#pragma once

#include <string_view>

#include "casimir/materials.hpp"

namespace casimir {

enum class Mode { TE, TM };

/// C1: p = 1 - t, t in [0, 1] (plane waves, p runs 1 -> 0).
/// C2: p = i q, q in (0, inf) (evanescent waves, p runs i0 -> i inf).
enum class Contour { C1, C2 };

std::string_view to_string(Mode mode);
std::string_view to_string(Contour contour);
Mode parse_mode(std::string_view name);
Contour parse_contour(std::string_view name);

/// Point on the contour for parameter t (C1) or q (C2).
Complex contour_point(Contour contour, double parameter);
/// dp/dt (C1) or dp/dq (C2).
Complex contour_jacobian(Contour contour);

/// Two identical plates separated by a vacuum gap.
class PlateSystem {
public:
    /// gap in cm, temperature in K. Throws DomainError unless both are positive.
    PlateSystem(double gap_cm, double temperature_k, DrudeMetal metal, BoundaryModel model);

    /// Gold plates 1 um apart at 300 K.
    static PlateSystem reference(BoundaryModel model = BoundaryModel::Impedance);

    double gap() const noexcept { return gap_; }
    double temperature() const noexcept { return temperature_; }
    const DrudeMetal& metal() const noexcept { return metal_; }
    BoundaryModel model() const noexcept { return model_; }

    PlateSystem with_model(BoundaryModel model) const;

private:
    double gap_;
    double temperature_;
    DrudeMetal metal_;
    BoundaryModel model_;
};

/// Frequency-dependent part of the integrand, shared by every p at fixed omega.
struct IntegrandContext {
    Mode mode;
    MaterialResponse response;
    double half_phase; // omega a / c

    IntegrandContext(Mode mode, double omega, const PlateSystem& system);

    /// p^2 / (r(p)^2 exp(-2 i omega p a / c) - 1); the removable point p = 0 gives 0.
    Complex operator()(Complex p) const;
    /// Re[-i q^2 / (r(iq)^2 exp(2 omega q a / c) - 1)], the C2 integrand per unit q.
    double c2_real(double q) const;
};

Complex integrand(Mode mode, Complex p, double omega, const PlateSystem& system);
double c2_real_form(Mode mode, double q, double omega, const PlateSystem& system);

/// Exponential decay rate in q of the C2 integrand: 2 omega a / c.
double c2_decay_rate(double omega, const PlateSystem& system);
/// Initial truncation of C2: max(10, 25 / decay_rate), extended only for nearly cancelling integrals.
double c2_truncation(double omega, const PlateSystem& system);

/// e^z - 1 without cancellation for small |z|.
Complex expm1(Complex z);

} // namespace casimir
