// Command-line front end: spectrum, force and compare.

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "casimir/commands.hpp"
#include "casimir/errors.hpp"
#include "casimir/run_config.hpp"

namespace {

struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> gap_um, temp_k, sigma0, tau, model, mode, contour;
    std::optional<std::string> omega_min, omega_max, points, out, rel_tol;
};

void add_flags(CLI::App& app, Flags& f) {
    app.add_option("--config", f.config, "key = value configuration file");
    app.add_option("--gap-um", f.gap_um, "plate separation [um]");
    app.add_option("--temp-k", f.temp_k, "temperature [K]");
    app.add_option("--sigma0", f.sigma0, "DC conductivity, Gaussian units [1/s]");
    app.add_option("--tau", f.tau, "Drude relaxation time [s]");
    app.add_option("--model", f.model, "impedance|dielectric|perfect (comma list for spectrum)");
    app.add_option("--mode", f.mode, "te|tm|both");
    app.add_option("--contour", f.contour, "c1|c2|both");
    app.add_option("--omega-min", f.omega_min, "lowest frequency [rad/s]: grid (spectrum) or integration bound");
    app.add_option("--omega-max", f.omega_max, "highest frequency [rad/s]: grid (spectrum) or integration bound");
    app.add_option("--points", f.points, "grid points (spectrum)");
    app.add_option("--out", f.out, "output path");
    app.add_option("--rel-tol", f.rel_tol, "relative quadrature tolerance");
}

std::vector<std::pair<std::string, std::string>> overrides(const Flags& f, bool spectrum) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto put = [&out](const char* key, const std::optional<std::string>& v) {
        if (v) out.emplace_back(key, *v);
    };
    put("gap_um", f.gap_um);
    put("temp_k", f.temp_k);
    put("sigma0", f.sigma0);
    put("tau_s", f.tau);
    put("model", f.model);
    put("mode", f.mode);
    put("contour", f.contour);
    put(spectrum ? "omega_min" : "omega_lo", f.omega_min);
    put(spectrum ? "omega_max" : "omega_hi", f.omega_max);
    put("points", f.points);
    put("out", f.out);
    put("rel_tol", f.rel_tol);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real-frequency spectra of the thermal Casimir force between metal plates"};
    app.set_version_flag("--version", std::string(casimir::kToolVersion));
    app.require_subcommand(1);

    Flags flags;
    auto* spectrum = app.add_subcommand("spectrum", "spectral densities on a log frequency grid (CSV)");
    auto* force = app.add_subcommand("force", "integrated forces and ratios (JSON)");
    auto* compare = app.add_subcommand("compare", "impedance vs dielectric per sector (JSON + CSV)");
    for (auto* sub : {spectrum, force, compare}) add_flags(*sub, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? casimir::kExitOk : casimir::kExitValidation;
    }

    try {
        const bool is_spectrum = spectrum->parsed();
        const casimir::RunConfig config = casimir::load_config(flags.config, overrides(flags, is_spectrum));
        if (is_spectrum) return casimir::cmd_spectrum(config, std::cerr);
        if (force->parsed()) return casimir::cmd_force(config, std::cerr);
        return casimir::cmd_compare(config, std::cerr);
    } catch (const casimir::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir::kExitValidation;
    } catch (const casimir::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir::kExitValidation;
    } catch (const casimir::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir::kExitIo;
    } catch (const casimir::NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir::kExitNonConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir::kExitNonConvergence;
    }
}
