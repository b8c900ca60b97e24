#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/contours.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Logarithmically spaced frequencies, endpoints included.
struct FrequencyGrid {
    double omega_min = 1e10;
    double omega_max = 1e14;
    std::size_t points = 400;

    void validate() const;
    std::vector<double> frequencies() const;
};

/// F_omega with the quadrature diagnostics of the contour integral.
struct SpectralEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// omega^3 g(omega) Re \int_C p^2 dp [r^2 e^{-2 i omega p a/c} - 1]^{-1} for one mode and contour,
/// with the boundary model taken from `system`. Never throws on non-convergence.
SpectralEstimate estimate_spectral_density(Mode mode, Contour contour, double omega,
                                           const PlateSystem& system,
                                           const QuadratureSettings& settings = {});

/// As estimate_spectral_density, but throws NonConvergenceError (with mode, contour and
/// omega in the message) when the contour integral does not reach tolerance.
double spectral_density(Mode mode, Contour contour, double omega, const PlateSystem& system,
                        const QuadratureSettings& settings = {});

/// One (mode, contour, model) spectrum column.
struct Channel {
    Mode mode;
    Contour contour;
    BoundaryModel model;

    /// e.g. "f_te_c1_impedance".
    std::string column_name() const;
};

struct ChannelValue {
    Channel channel;
    double value = 0.0;
    bool ok = true;
    std::string error; // set when ok is false
};

struct SpectralSample {
    double omega = 0.0;
    std::vector<ChannelValue> contributions;

    bool ok() const;
};

/// Channels for every combination, ordered model-major, then mode, then contour.
std::vector<Channel> make_channels(std::span<const Mode> modes, std::span<const Contour> contours,
                                   std::span<const BoundaryModel> models);

/// Evaluates every channel at every grid frequency. Material and geometry come from
/// `system`; each channel's model overrides system.model(). Failed points are recorded
/// in the sample, not thrown. Output order matches the grid regardless of `threads`
/// (0 = default_thread_count()).
std::vector<SpectralSample> sweep(const FrequencyGrid& grid, const PlateSystem& system,
                                  const QuadratureSettings& settings, std::span<const Channel> channels,
                                  std::size_t threads = 0);

/// Channels built from `modes` x `contours` with the model of `system`.
std::vector<SpectralSample> sweep(const FrequencyGrid& grid, const PlateSystem& system,
                                  const QuadratureSettings& settings, std::span<const Mode> modes,
                                  std::span<const Contour> contours, std::size_t threads = 0);

} // namespace casimir
