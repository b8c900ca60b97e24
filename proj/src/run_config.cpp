#include "casimir/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

double parse_real(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
    return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    unsigned long long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
    }
    return static_cast<std::size_t>(out);
}

template <typename T, typename Parse>
std::vector<T> parse_vocabulary(const std::string& key, const std::string& value, const Parse& parse,
                                const std::vector<T>& both) {
    const auto items = split_list(value);
    if (items.empty()) throw ConfigError(key + ": empty list");
    if (!both.empty() && items.size() == 1 && items.front() == "both") return both;
    std::vector<T> out;
    for (const auto& item : items) {
        try {
            const T parsed = parse(item);
            if (std::find(out.begin(), out.end(), parsed) == out.end()) out.push_back(parsed);
        } catch (const DomainError& e) {
            throw ConfigError(key + ": " + e.what());
        }
    }
    return out;
}

// Shortest text that reads back to the same double.
std::string exact(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

template <typename T>
std::string join(const std::vector<T>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ",";
        out += to_string(item);
    }
    return out;
}

} // namespace

std::vector<std::string> RunConfig::violations() const {
    std::vector<std::string> out;
    const auto positive = [&out](const char* name, double v) {
        if (!(v > 0.0) || !std::isfinite(v)) out.push_back(std::string(name) + " must be positive, got " + exact(v));
    };
    positive("gap_um", gap_um);
    positive("temp_k", temp_k);
    positive("sigma0", sigma0);
    if (!(tau_s >= 0.0) || !std::isfinite(tau_s)) out.push_back("tau_s must be non-negative, got " + exact(tau_s));
    if (models.empty()) out.push_back("model must name at least one boundary model");
    if (modes.empty()) out.push_back("mode must name at least one mode");
    if (contours.empty()) out.push_back("contour must name at least one contour");
    positive("omega_min", grid.omega_min);
    if (!(grid.omega_max > grid.omega_min) || !std::isfinite(grid.omega_max)) {
        out.push_back("omega_max must exceed omega_min, got " + exact(grid.omega_max));
    }
    if (grid.points < 2) out.push_back("points must be at least 2, got " + std::to_string(grid.points));
    positive("omega_lo", bounds.omega_lo);
    if (!(bounds.omega_hi > bounds.omega_lo) || !std::isfinite(bounds.omega_hi)) {
        out.push_back("omega_hi must exceed omega_lo, got " + exact(bounds.omega_hi));
    }
    positive("rel_tol", tolerances.rel_tol);
    if (!(tolerances.abs_tol >= 0.0)) out.push_back("abs_tol must be non-negative, got " + exact(tolerances.abs_tol));
    if (tolerances.max_subdivisions < 1) out.push_back("max_subdivisions must be at least 1");
    return out;
}

void RunConfig::validate() const {
    const auto problems = violations();
    if (problems.empty()) return;
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ConfigError(msg);
}

PlateSystem RunConfig::system() const {
    return {gap_um * constants::cm_per_um, temp_k, DrudeMetal(sigma0, tau_s), models.front()};
}

std::vector<std::pair<std::string, std::string>> RunConfig::to_key_values() const {
    return {
        {"gap_um", exact(gap_um)},
        {"temp_k", exact(temp_k)},
        {"sigma0", exact(sigma0)},
        {"tau_s", exact(tau_s)},
        {"model", join(models)},
        {"mode", join(modes)},
        {"contour", join(contours)},
        {"omega_min", exact(grid.omega_min)},
        {"omega_max", exact(grid.omega_max)},
        {"points", std::to_string(grid.points)},
        {"omega_lo", exact(bounds.omega_lo)},
        {"omega_hi", exact(bounds.omega_hi)},
        {"rel_tol", exact(tolerances.rel_tol)},
        {"abs_tol", exact(tolerances.abs_tol)},
        {"max_subdivisions", std::to_string(tolerances.max_subdivisions)},
        {"out", out},
    };
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.to_key_values() == b.to_key_values();
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& raw) {
    const std::string value = trim(raw);
    if (key == "gap_um") config.gap_um = parse_real(key, value);
    else if (key == "temp_k") config.temp_k = parse_real(key, value);
    else if (key == "sigma0") config.sigma0 = parse_real(key, value);
    else if (key == "tau_s") config.tau_s = parse_real(key, value);
    else if (key == "model") {
        config.models = parse_vocabulary<BoundaryModel>(
            key, value, [](const std::string& s) { return parse_boundary_model(s); }, {});
    } else if (key == "mode") {
        config.modes = parse_vocabulary<Mode>(key, value, [](const std::string& s) { return parse_mode(s); },
                                              {Mode::TE, Mode::TM});
    } else if (key == "contour") {
        config.contours = parse_vocabulary<Contour>(
            key, value, [](const std::string& s) { return parse_contour(s); }, {Contour::C1, Contour::C2});
    } else if (key == "omega_min") config.grid.omega_min = parse_real(key, value);
    else if (key == "omega_max") config.grid.omega_max = parse_real(key, value);
    else if (key == "points") config.grid.points = parse_count(key, value);
    else if (key == "omega_lo") config.bounds.omega_lo = parse_real(key, value);
    else if (key == "omega_hi") config.bounds.omega_hi = parse_real(key, value);
    else if (key == "rel_tol") config.tolerances.rel_tol = parse_real(key, value);
    else if (key == "abs_tol") config.tolerances.abs_tol = parse_real(key, value);
    else if (key == "max_subdivisions") config.tolerances.max_subdivisions = parse_count(key, value);
    else if (key == "out") config.out = value;
    else throw ConfigError("unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text, const std::string& source,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
    RunConfig config;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = source + ":" + std::to_string(number) + ": ";
        if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError(where + "missing key before '='");
        try {
            apply_setting(config, key, line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
    for (const auto& [key, value] : overrides) {
        try {
            apply_setting(config, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("command line: ") + e.what());
        }
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::pair<std::string, std::string>>& overrides) {
    if (!path) return parse_config("", "defaults", overrides);
    std::ifstream in(*path);
    if (!in) throw IoError("cannot open config file '" + *path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), *path, overrides);
}

} // namespace casimir
