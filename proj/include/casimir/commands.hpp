#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir/force.hpp"
#include "casimir/run_config.hpp"
#include "casimir/spectrum.hpp"

namespace casimir {

inline constexpr const char* kToolName = "casimir-spectra";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitNonConvergence = 2,
    kExitIo = 3,
};

/// Nine significant digits, "nan" for non-finite values.
std::string format_number(double value);
/// value rounded to nine significant digits (what format_number prints).
double round9(double value);

/// Header omega_rad_s,log10_omega,<channel columns>; one LF-terminated row per sample.
void write_spectrum_csv(std::ostream& out, const std::vector<SpectralSample>& samples,
                        const std::vector<Channel>& channels);

nlohmann::ordered_json config_json(const RunConfig& config);
nlohmann::ordered_json force_report_json(const ForceReport& report, const RunConfig& config);
nlohmann::ordered_json compare_json(const ForceReport& report, const RunConfig& config);
void write_compare_csv(std::ostream& out, const ForceReport& report);

/// Each command writes its output file(s) and returns an ExitCode. Progress and
/// warnings go to `log`. Output paths default to spectrum.csv, force.json and
/// compare.json (compare also writes the same stem with a .csv extension).
int cmd_spectrum(const RunConfig& config, std::ostream& log);
int cmd_force(const RunConfig& config, std::ostream& log);
int cmd_compare(const RunConfig& config, std::ostream& log);

} // namespace casimir
