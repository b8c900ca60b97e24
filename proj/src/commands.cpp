#include "casimir/commands.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

namespace casimir {

using nlohmann::ordered_json;

namespace {

constexpr std::array kModels = {BoundaryModel::Impedance, BoundaryModel::Dielectric,
                                BoundaryModel::PerfectConductor};
constexpr std::array kModes = {Mode::TE, Mode::TM};
constexpr std::array kContours = {Contour::C1, Contour::C2};

ordered_json number(double value) {
    if (!std::isfinite(value)) return nullptr;
    return round9(value);
}

std::string hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string key(Mode mode, Contour contour) {
    return std::string(to_string(mode)) + "_" + std::string(to_string(contour));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string output_path(const RunConfig& config, const char* fallback) {
    return config.out.empty() ? fallback : config.out;
}

int warn_unconverged(const ForceReport& report, std::ostream& log) {
    int code = kExitOk;
    for (const auto& c : report.cells) {
        if (!c.force.converged) {
            log << "warning: " << to_string(c.mode) << " " << to_string(c.contour) << " "
                << to_string(c.model) << " did not converge (error " << c.force.error_estimate
                << ", " << c.force.inner_failures << " inner failures)\n";
            code = kExitNonConvergence;
        }
        if (!c.force.low_cutoff_negligible()) {
            log << "warning: " << to_string(c.mode) << " " << to_string(c.contour) << " "
                << to_string(c.model) << ": contribution below omega_lo may reach "
                << c.force.low_frequency_tail << " (> 1e-6 of the total)\n";
        }
    }
    return code;
}

} // namespace

std::string format_number(double value) {
    if (!std::isfinite(value)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

double round9(double value) {
    if (!std::isfinite(value)) return value;
    return std::stod(format_number(value));
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectralSample>& samples,
                        const std::vector<Channel>& channels) {
    out << "omega_rad_s,log10_omega";
    for (const auto& c : channels) out << ',' << c.column_name();
    out << '\n';
    for (const auto& s : samples) {
        out << format_number(s.omega) << ',' << format_number(std::log10(s.omega));
        for (const auto& v : s.contributions) out << ',' << (v.ok ? format_number(v.value) : "nan");
        out << '\n';
    }
}

ordered_json config_json(const RunConfig& config) {
    ordered_json echo = ordered_json::object();
    for (const auto& [k, v] : config.to_key_values()) echo[k] = v;
    return echo;
}

ordered_json force_report_json(const ForceReport& report, const RunConfig& config) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["units"] = "dyn/cm^2, positive = attractive";
    j["config"] = config_json(config);
    j["parameter_hash"] = hex(report.parameter_hash);
    j["model"] = to_string(report.system.model());

    ordered_json forces = ordered_json::object();
    for (BoundaryModel model : kModels) {
        ordered_json per_model = ordered_json::object();
        for (Mode mode : kModes) {
            for (Contour contour : kContours) {
                const ForceEstimate& f = report.cell(mode, contour, model).force;
                per_model[key(mode, contour)] = {
                    {"force", number(f.value)},
                    {"error_estimate", number(f.error_estimate)},
                    {"converged", f.converged},
                    {"low_frequency_tail", number(f.low_frequency_tail)},
                };
            }
        }
        per_model["total"] = number(report.total(model));
        forces[std::string(to_string(model))] = per_model;
    }
    j["forces"] = forces;
    j["perfect_conductor_total"] = number(report.perfect_conductor_total());
    j["ratios"] = {
        {"c2_over_c1_te", number(report.c2_over_c1_te)},
        {"total_over_perfect_conductor", number(report.total_over_perfect_conductor)},
        {"te_total_over_perfect_conductor", number(report.te_total_over_perfect_conductor)},
    };
    j["bounds"] = {{"omega_lo", number(report.bounds.omega_lo)}, {"omega_hi", number(report.bounds.omega_hi)}};
    j["converged"] = report.all_converged();
    return j;
}

ordered_json compare_json(const ForceReport& report, const RunConfig& config) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["units"] = "dyn/cm^2, positive = attractive";
    j["config"] = config_json(config);
    j["parameter_hash"] = hex(report.parameter_hash);
    ordered_json sectors = ordered_json::array();
    for (const auto& s : report.sectors) {
        sectors.push_back({
            {"sector", s.sector},
            {"impedance", number(s.impedance)},
            {"dielectric", number(s.dielectric)},
            {"relative_difference", number(s.relative_difference)},
        });
    }
    j["sectors"] = sectors;
    const double te_c2_imp = report.force(Mode::TE, Contour::C2, BoundaryModel::Impedance);
    const double te_c2_diel = report.force(Mode::TE, Contour::C2, BoundaryModel::Dielectric);
    const auto sign = [](double v) { return v > 0.0 ? "attractive" : (v < 0.0 ? "repulsive" : "zero"); };
    j["te_c2_sign"] = {{"impedance", sign(te_c2_imp)}, {"dielectric", sign(te_c2_diel)}};
    j["te_c2_sign_flip"] = (te_c2_imp > 0.0) != (te_c2_diel > 0.0);
    j["converged"] = report.all_converged();
    return j;
}

void write_compare_csv(std::ostream& out, const ForceReport& report) {
    out << "sector,impedance,dielectric,relative_difference\n";
    for (const auto& s : report.sectors) {
        out << s.sector << ',' << format_number(s.impedance) << ',' << format_number(s.dielectric) << ','
            << format_number(s.relative_difference) << '\n';
    }
}

int cmd_spectrum(const RunConfig& config, std::ostream& log) {
    config.validate();
    const PlateSystem system = config.system();
    const auto channels = make_channels(config.modes, config.contours, config.models);
    const auto samples = sweep(config.grid, system, config.tolerances, channels, default_thread_count());

    int code = kExitOk;
    for (const auto& s : samples) {
        for (const auto& v : s.contributions) {
            if (!v.ok) {
                log << "warning: " << v.channel.column_name() << " failed at omega = " << s.omega << ": "
                    << v.error << "\n";
                code = kExitNonConvergence;
            }
        }
    }
    std::ostringstream csv;
    write_spectrum_csv(csv, samples, channels);
    const std::string path = output_path(config, "spectrum.csv");
    write_file(path, csv.str());
    log << "wrote " << samples.size() << " rows to " << path << "\n";
    return code;
}

int cmd_force(const RunConfig& config, std::ostream& log) {
    config.validate();
    const ForceReport r = report(config.system(), config.bounds, config.tolerances, default_thread_count());
    const int code = warn_unconverged(r, log);
    const std::string path = output_path(config, "force.json");
    write_file(path, force_report_json(r, config).dump(2) + "\n");
    log << "c2_over_c1_te = " << format_number(r.c2_over_c1_te)
        << ", total_over_perfect_conductor = " << format_number(r.total_over_perfect_conductor)
        << ", te_total_over_perfect_conductor = " << format_number(r.te_total_over_perfect_conductor)
        << "\nwrote " << path << "\n";
    return code;
}

int cmd_compare(const RunConfig& config, std::ostream& log) {
    config.validate();
    const ForceReport r = report(config.system(), config.bounds, config.tolerances, default_thread_count());
    const int code = warn_unconverged(r, log);
    std::filesystem::path base = output_path(config, "compare.json");
    if (base.extension() == ".csv") base.replace_extension(".json");
    const std::string json_path = base.string();
    const std::string csv_path = std::filesystem::path(base).replace_extension(".csv").string();
    write_file(json_path, compare_json(r, config).dump(2) + "\n");
    std::ostringstream csv;
    write_compare_csv(csv, r);
    write_file(csv_path, csv.str());
    for (const auto& s : r.sectors) {
        log << s.sector << ": impedance " << format_number(s.impedance) << ", dielectric "
            << format_number(s.dielectric) << ", relative difference " << format_number(s.relative_difference)
            << "\n";
    }
    log << "wrote " << json_path << " and " << csv_path << "\n";
    return code;
}

} // namespace casimir
