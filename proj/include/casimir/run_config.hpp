#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "casimir/contours.hpp"
#include "casimir/force.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/spectrum.hpp"

namespace casimir {

/// Bad configuration: parse errors (with line numbers) or range violations.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a command needs. Defaults are gold plates 1 um apart at 300 K.
struct RunConfig {
    double gap_um = 1.0;
    double temp_k = 300.0;
    double sigma0 = 3.0e17;
    double tau_s = 1.88e-14;
    std::vector<BoundaryModel> models{BoundaryModel::Impedance};
    std::vector<Mode> modes{Mode::TE};
    std::vector<Contour> contours{Contour::C1, Contour::C2};
    FrequencyGrid grid;
    IntegrationBounds bounds;
    QuadratureSettings tolerances;
    std::string out; // empty: command default

    /// Every violated constraint, one message per field. Empty when valid.
    std::vector<std::string> violations() const;
    /// Throws ConfigError listing all violations.
    void validate() const;

    /// Plates for models.front().
    PlateSystem system() const;

    /// Canonical key/value pairs; feeding them back through load_config reproduces *this.
    std::vector<std::pair<std::string, std::string>> to_key_values() const;

    friend bool operator==(const RunConfig& a, const RunConfig& b);
};

/// Applies one "key = value" setting. Throws ConfigError on unknown keys or malformed values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a line-oriented "key = value" file ('#' starts a comment), then applies
/// `overrides` on top, then validates. An empty path means defaults plus overrides.
RunConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Same, from text already in memory; `source` names it in error messages.
RunConfig parse_config(const std::string& text, const std::string& source,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

} // namespace casimir
