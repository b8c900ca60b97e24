#include "casimir/force.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

namespace casimir {

namespace {

constexpr std::array kModels = {BoundaryModel::Impedance, BoundaryModel::Dielectric,
                                BoundaryModel::PerfectConductor};
constexpr std::array kModes = {Mode::TE, Mode::TM};
constexpr std::array kContours = {Contour::C1, Contour::C2};

double relative_difference(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double ratio(double num, double den) { return den == 0.0 ? std::nan("") : num / den; }

// Outer integrand: the force density together with its inner quadrature error and
// magnitude, so one outer pass also integrates both. Error control uses the value only.
struct Tracked {
    double value = 0.0;
    double inner_error = 0.0;
    double absolute = 0.0;

    Tracked& operator+=(const Tracked& o) {
        value += o.value;
        inner_error += o.inner_error;
        absolute += o.absolute;
        return *this;
    }
    friend Tracked operator+(Tracked a, const Tracked& b) { return a += b; }
    friend Tracked operator-(const Tracked& a, const Tracked& b) {
        return {a.value - b.value, a.inner_error - b.inner_error, a.absolute - b.absolute};
    }
    friend Tracked operator*(const Tracked& a, double k) {
        return {a.value * k, a.inner_error * k, a.absolute * k};
    }
    friend Tracked operator*(double k, const Tracked& a) { return a * k; }
};

double magnitude(const Tracked& t) { return std::abs(t.value); }

} // namespace

double force_prefactor() {
    return constants::hbar / (constants::pi * constants::pi * constants::c * constants::c * constants::c);
}

void IntegrationBounds::validate() const {
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo) || !std::isfinite(omega_hi)) {
        throw DomainError("IntegrationBounds: requires 0 < omega_lo < omega_hi");
    }
}

bool ForceEstimate::low_cutoff_negligible() const {
    if (low_frequency_tail == 0.0) return true;
    return low_frequency_tail < 1e-6 * std::abs(value);
}

ForceEstimate estimate_integrated_force(Mode mode, Contour contour, const PlateSystem& system,
                                        const IntegrationBounds& bounds,
                                        const QuadratureSettings& settings) {
    bounds.validate();
    settings.validate();

    const double prefactor = force_prefactor();
    ForceEstimate estimate;
    std::size_t inner_evaluations = 0;

    auto outer = [&](double u) {
        const double omega = std::exp(u);
        const SpectralEstimate s = estimate_spectral_density(mode, contour, omega, system, settings);
        inner_evaluations += s.evaluations;
        if (!s.converged) ++estimate.inner_failures;
        const double scale = prefactor * omega;
        return Tracked{scale * s.value, scale * s.error_estimate, scale * std::abs(s.value)};
    };

    const double u_lo = std::log(bounds.omega_lo);
    const double u_hi = std::log(bounds.omega_hi);
    std::vector<double> decades;
    for (double d = std::ceil(std::log10(bounds.omega_lo)); std::pow(10.0, d) < bounds.omega_hi; d += 1.0) {
        decades.push_back(d * std::log(10.0));
    }

    const QuadratureResult<Tracked> result = integrate_finite(outer, u_lo, u_hi, settings, decades);
    estimate.value = result.value.value;
    estimate.error_estimate = result.error_estimate + result.value.inner_error;
    // Inner tolerances are relative to the local |F_omega|, so their integrated error is
    // judged against the integral of |omega F_omega|.
    const double inner_budget =
        std::max(settings.abs_tol, settings.rel_tol * result.value.absolute);
    estimate.converged = result.converged && result.value.inner_error <= inner_budget;
    // omega F_omega falls off at least as omega^{1/2} per unit ln omega below the
    // range, so the missing piece is at most twice the integrand at omega_lo.
    estimate.low_frequency_tail = 2.0 * std::abs(outer(u_lo).value);
    estimate.evaluations = inner_evaluations;
    return estimate;
}

double integrated_force(Mode mode, Contour contour, const PlateSystem& system,
                        const IntegrationBounds& bounds, const QuadratureSettings& settings) {
    const ForceEstimate estimate = estimate_integrated_force(mode, contour, system, bounds, settings);
    if (!estimate.converged) {
        std::ostringstream msg;
        msg << "integrated force did not converge for " << to_string(mode) << " " << to_string(contour)
            << " " << to_string(system.model()) << " (best " << estimate.value << ", error "
            << estimate.error_estimate << ", inner failures " << estimate.inner_failures << ")";
        throw NonConvergenceError(msg.str(), estimate.value, estimate.error_estimate);
    }
    return estimate.value;
}

const ForceCell& ForceReport::cell(Mode mode, Contour contour, BoundaryModel model) const {
    for (const auto& c : cells) {
        if (c.mode == mode && c.contour == contour && c.model == model) return c;
    }
    throw std::out_of_range("ForceReport: no cell for " + std::string(to_string(mode)) + " " +
                            std::string(to_string(contour)) + " " + std::string(to_string(model)));
}

double ForceReport::force(Mode mode, Contour contour, BoundaryModel model) const {
    return cell(mode, contour, model).force.value;
}

double ForceReport::total(BoundaryModel model) const {
    double sum = 0.0;
    for (Mode mode : kModes) {
        for (Contour contour : kContours) sum += force(mode, contour, model);
    }
    return sum;
}

double ForceReport::perfect_conductor_total() const {
    return force(Mode::TE, Contour::C1, BoundaryModel::PerfectConductor) +
           force(Mode::TM, Contour::C1, BoundaryModel::PerfectConductor);
}

bool ForceReport::all_converged() const {
    for (const auto& c : cells) {
        if (!c.force.converged) return false;
    }
    return true;
}

ForceReport report(const PlateSystem& system, const IntegrationBounds& bounds,
                   const QuadratureSettings& settings, std::size_t threads) {
    bounds.validate();
    settings.validate();

    ForceReport out{system, bounds, settings, {}, 0.0, 0.0, 0.0, {}, 0};
    for (BoundaryModel model : kModels) {
        for (Mode mode : kModes) {
            for (Contour contour : kContours) out.cells.push_back({mode, contour, model, {}});
        }
    }
    parallel_for(out.cells.size(), threads, [&](std::size_t i) {
        ForceCell& c = out.cells[i];
        c.force = estimate_integrated_force(c.mode, c.contour, system.with_model(c.model), bounds, settings);
    });

    const BoundaryModel model = system.model();
    out.c2_over_c1_te = ratio(out.force(Mode::TE, Contour::C2, model), out.force(Mode::TE, Contour::C1, model));
    out.total_over_perfect_conductor = ratio(out.total(model), out.perfect_conductor_total());
    out.te_total_over_perfect_conductor =
        ratio(out.force(Mode::TE, Contour::C1, model) + out.force(Mode::TE, Contour::C2, model),
              out.force(Mode::TE, Contour::C1, BoundaryModel::PerfectConductor));

    const auto imp = [&](Mode m, Contour c) { return out.force(m, c, BoundaryModel::Impedance); };
    const auto diel = [&](Mode m, Contour c) { return out.force(m, c, BoundaryModel::Dielectric); };
    for (Mode mode : kModes) {
        for (Contour contour : kContours) {
            const std::string name = std::string(to_string(mode)) + "_" + std::string(to_string(contour));
            out.sectors.push_back({name, imp(mode, contour), diel(mode, contour),
                                   relative_difference(imp(mode, contour), diel(mode, contour))});
        }
    }
    const double tm_imp = imp(Mode::TM, Contour::C1) + imp(Mode::TM, Contour::C2);
    const double tm_diel = diel(Mode::TM, Contour::C1) + diel(Mode::TM, Contour::C2);
    out.sectors.push_back({"tm_total", tm_imp, tm_diel, relative_difference(tm_imp, tm_diel)});

    out.parameter_hash = parameter_hash(system, bounds, settings);
    return out;
}

std::uint64_t parameter_hash(const PlateSystem& system, const IntegrationBounds& bounds,
                             const QuadratureSettings& settings) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, "%.17g|%.17g|%.17g|%.17g|%s|%.17g|%.17g|%.17g|%.17g|%zu",
                  system.gap(), system.temperature(), system.metal().sigma0(), system.metal().tau(),
                  std::string(to_string(system.model())).c_str(), bounds.omega_lo, bounds.omega_hi,
                  settings.rel_tol, settings.abs_tol, settings.max_subdivisions);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char* p = buffer; *p != '\0'; ++p) {
        hash ^= static_cast<unsigned char>(*p);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

} // namespace casimir
