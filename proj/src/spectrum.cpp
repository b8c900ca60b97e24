#include "casimir/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

void FrequencyGrid::validate() const {
    if (!(omega_min > 0.0) || !(omega_max > omega_min) || !std::isfinite(omega_max)) {
        throw DomainError("FrequencyGrid: requires 0 < omega_min < omega_max");
    }
    if (points < 2) throw DomainError("FrequencyGrid: requires at least 2 points");
}

std::vector<double> FrequencyGrid::frequencies() const {
    validate();
    const double lo = std::log10(omega_min);
    const double hi = std::log10(omega_max);
    std::vector<double> omegas(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
        omegas[i] = std::pow(10.0, lo + (hi - lo) * frac);
    }
    omegas.front() = omega_min;
    omegas.back() = omega_max;
    return omegas;
}

SpectralEstimate estimate_spectral_density(Mode mode, Contour contour, double omega,
                                           const PlateSystem& system,
                                           const QuadratureSettings& settings) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("spectral_density: omega must be positive and finite");
    }
    const double weight = omega * omega * omega * planck_weight(omega, system.temperature());
    if (weight == 0.0) return {};

    const IntegrandContext ctx(mode, omega, system);
    QuadratureResult<double> path;
    if (contour == Contour::C1) {
        const Complex jacobian = contour_jacobian(Contour::C1);
        path = integrate_finite(
            [&](double t) { return (ctx(contour_point(Contour::C1, t)) * jacobian).real(); }, 0.0,
            1.0, settings);
    } else {
        path = integrate_semi_infinite([&](double q) { return ctx.c2_real(q); },
                                       c2_decay_rate(omega, system), settings);
    }
    return {weight * path.value, weight * path.error_estimate, path.evaluations, path.converged};
}

double spectral_density(Mode mode, Contour contour, double omega, const PlateSystem& system,
                        const QuadratureSettings& settings) {
    const SpectralEstimate estimate =
        estimate_spectral_density(mode, contour, omega, system, settings);
    if (!estimate.converged) {
        std::ostringstream msg;
        msg << "spectral density did not converge for " << to_string(mode) << " "
            << to_string(contour) << " at omega = " << omega << " (best " << estimate.value
            << ", error " << estimate.error_estimate << ")";
        throw NonConvergenceError(msg.str(), estimate.value, estimate.error_estimate);
    }
    return estimate.value;
}

std::string Channel::column_name() const {
    std::string name = "f_";
    name += to_string(mode);
    name += '_';
    name += to_string(contour);
    name += '_';
    name += to_string(model);
    return name;
}

bool SpectralSample::ok() const {
    for (const auto& c : contributions) {
        if (!c.ok) return false;
    }
    return true;
}

std::vector<Channel> make_channels(std::span<const Mode> modes, std::span<const Contour> contours,
                                   std::span<const BoundaryModel> models) {
    std::vector<Channel> channels;
    for (BoundaryModel model : models) {
        for (Mode mode : modes) {
            for (Contour contour : contours) channels.push_back({mode, contour, model});
        }
    }
    return channels;
}

std::vector<SpectralSample> sweep(const FrequencyGrid& grid, const PlateSystem& system,
                                  const QuadratureSettings& settings, std::span<const Channel> channels,
                                  std::size_t threads) {
    settings.validate();
    const std::vector<double> omegas = grid.frequencies();
    std::vector<SpectralSample> samples(omegas.size());

    parallel_for(omegas.size(), threads, [&](std::size_t i) {
        SpectralSample& sample = samples[i];
        sample.omega = omegas[i];
        sample.contributions.reserve(channels.size());
        for (const Channel& channel : channels) {
            ChannelValue cv{channel, 0.0, true, {}};
            try {
                cv.value = spectral_density(channel.mode, channel.contour, sample.omega,
                                            system.with_model(channel.model), settings);
            } catch (const std::exception& e) {
                cv.ok = false;
                cv.value = std::nan("");
                cv.error = e.what();
            }
            sample.contributions.push_back(std::move(cv));
        }
    });
    return samples;
}

std::vector<SpectralSample> sweep(const FrequencyGrid& grid, const PlateSystem& system,
                                  const QuadratureSettings& settings, std::span<const Mode> modes,
                                  std::span<const Contour> contours, std::size_t threads) {
    const BoundaryModel model = system.model();
    const auto channels = make_channels(modes, contours, std::span(&model, 1));
    return sweep(grid, system, settings, channels, threads);
}

} // namespace casimir
