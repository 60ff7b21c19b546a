#include "burgers/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/fft.hpp"

namespace burgers {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    throw config_error(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(origin, line, "field '" + key + "': not a number: '" + value + "'");
    }
}

int parse_int(const std::string& origin, int line, const std::string& key,
              const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(origin, line, "field '" + key + "': not an integer: '" + value + "'");
    }
}

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

}  // namespace

void SolverConfig::validate() const {
    make_grid(n, points_per_axis);  // grid preconditions
    if (nu <= 0.0) throw config_error("nu must be positive");
    if (steps < 1) throw config_error("steps must be >= 1");
    if (substeps_per_step < 1) throw config_error("substeps_per_step must be >= 1");
    if (delta_tol <= 0.0) throw config_error("delta_tol must be positive");
    if (max_substeps < 1) throw config_error("max_substeps must be >= 1");
    if (!(contraction_bound > 0.0 && contraction_bound < 1.0))
        throw config_error("contraction_bound must lie in (0,1)");
    if (max_retries < 0) throw config_error("max_retries must be >= 0");
    if (c_star_n_override && *c_star_n_override < 1.0)
        throw config_error("c_star_n_override must be >= 1");
    if (snapshot_stride < 1) throw config_error("snapshot_stride must be >= 1");
    if (parametrix_order < 0 || parametrix_order > 3)
        throw config_error("parametrix_order must be in [0,3]");
    if (parametrix_time_nodes < 2) throw config_error("parametrix_time_nodes must be >= 2");
}

SchemeConfig SolverConfig::scheme() const {
    SchemeConfig s;
    s.backend = backend;
    s.substeps = substeps_per_step;
    s.delta_tol = delta_tol;
    s.max_substeps = max_substeps;
    s.contraction_bound = contraction_bound;
    s.max_retries = max_retries;
    s.drift_source = drift_source;
    s.parametrix.series.truncation_order = parametrix_order;
    s.parametrix.series.quadrature_nodes_time = parametrix_time_nodes;
    s.parametrix.series.quadrature_nodes_space = points_per_axis;
    return s;
}

SolverConfig parse_config_text(const std::string& text, const std::string& origin) {
    SolverConfig cfg;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) fail(origin, line, "expected key=value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) fail(origin, line, "empty key");

        if (key == "n") cfg.n = parse_int(origin, line, key, value);
        else if (key == "points_per_axis") cfg.points_per_axis = parse_int(origin, line, key, value);
        else if (key == "nu") cfg.nu = parse_double(origin, line, key, value);
        else if (key == "steps") cfg.steps = parse_int(origin, line, key, value);
        else if (key == "backend") {
            if (value == "spectral") cfg.backend = Backend::spectral;
            else if (value == "parametrix") cfg.backend = Backend::parametrix;
            else fail(origin, line, "field 'backend': expected spectral|parametrix");
        } else if (key == "substeps_per_step") cfg.substeps_per_step = parse_int(origin, line, key, value);
        else if (key == "delta_tol") cfg.delta_tol = parse_double(origin, line, key, value);
        else if (key == "max_substeps") cfg.max_substeps = parse_int(origin, line, key, value);
        else if (key == "contraction_bound") cfg.contraction_bound = parse_double(origin, line, key, value);
        else if (key == "max_retries") cfg.max_retries = parse_int(origin, line, key, value);
        else if (key == "c_star_n_override") cfg.c_star_n_override = parse_double(origin, line, key, value);
        else if (key == "drift_source") {
            if (value == "first_substep") cfg.drift_source = DriftSource::first_substep;
            else if (value == "converged") cfg.drift_source = DriftSource::converged;
            else fail(origin, line, "field 'drift_source': expected first_substep|converged");
        } else if (key == "initial_condition") {
            try {
                cfg.initial_condition = preset_from_string(value);
            } catch (const config_error& e) {
                fail(origin, line, e.what());
            }
        } else if (key == "ic_amplitude") cfg.ic_amplitude = parse_double(origin, line, key, value);
        else if (key == "ic_value") cfg.ic_value = parse_double(origin, line, key, value);
        else if (key == "output_dir") cfg.output_dir = value;
        else if (key == "snapshot_stride") cfg.snapshot_stride = parse_int(origin, line, key, value);
        else if (key == "parametrix_order") cfg.parametrix_order = parse_int(origin, line, key, value);
        else if (key == "parametrix_time_nodes") cfg.parametrix_time_nodes = parse_int(origin, line, key, value);
        else fail(origin, line, "unknown field '" + key + "'");
    }
    try {
        cfg.validate();
    } catch (const config_error& e) {
        throw config_error(origin + ": " + e.what());
    }
    return cfg;
}

SolverConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << is.rdbuf();
    return parse_config_text(buffer.str(), path);
}

std::string to_string(Backend backend) {
    return backend == Backend::spectral ? "spectral" : "parametrix";
}

std::string to_string(DriftSource source) {
    return source == DriftSource::first_substep ? "first_substep" : "converged";
}

std::string to_string(InitialPreset preset) {
    switch (preset) {
        case InitialPreset::zero: return "zero";
        case InitialPreset::constant: return "constant";
        case InitialPreset::sine: return "sine";
        case InitialPreset::potential: return "potential";
    }
    return "zero";
}

InitialPreset preset_from_string(const std::string& name) {
    if (name == "zero") return InitialPreset::zero;
    if (name == "constant") return InitialPreset::constant;
    if (name == "sine") return InitialPreset::sine;
    if (name == "potential") return InitialPreset::potential;
    throw config_error("unknown initial-condition preset '" + name +
                       "' (expected zero|constant|sine|potential)");
}

VectorField initial_field(const SolverConfig& config) {
    const Grid grid = make_grid(config.n, config.points_per_axis);
    const double amp = config.ic_amplitude;
    const double value = config.ic_value;
    const double two_pi = 2.0 * fft::pi;
    switch (config.initial_condition) {
        case InitialPreset::zero:
            return VectorField(grid);
        case InitialPreset::constant:
            return sample(grid, [value](std::span<const double>, std::span<double> out) {
                for (auto& v : out) v = value;
            });
        case InitialPreset::sine:
            return sample(grid, [amp, two_pi](std::span<const double> x, std::span<double> out) {
                for (std::size_t i = 0; i < out.size(); ++i)
                    out[i] = amp * std::sin(two_pi * x[i]);
            });
        case InitialPreset::potential:
            // -grad of (amp/2pi) prod_j cos(2pi x_j)
            return sample(grid, [amp, two_pi](std::span<const double> x, std::span<double> out) {
                for (std::size_t i = 0; i < out.size(); ++i) {
                    double v = amp * std::sin(two_pi * x[i]);
                    for (std::size_t j = 0; j < out.size(); ++j)
                        if (j != i) v *= std::cos(two_pi * x[j]);
                    out[i] = v;
                }
            });
    }
    throw config_error("unhandled initial-condition preset");
}

PotentialData oracle_potential(InitialPreset preset, double amplitude, double value, double nu) {
    const double two_pi = 2.0 * fft::pi;
    PotentialData data;
    data.nu = nu;
    switch (preset) {
        case InitialPreset::zero:
            data.phi0 = [](std::span<const double>) { return 0.0; };
            break;
        case InitialPreset::constant:
            data.phi0 = [value](std::span<const double>) { return value; };
            break;
        case InitialPreset::sine:
            data.phi0 = [amplitude, two_pi](std::span<const double> x) {
                double s = 0.0;
                for (double xi : x) s += std::cos(two_pi * xi);
                return amplitude * s / two_pi;
            };
            break;
        case InitialPreset::potential:
            data.phi0 = [amplitude, two_pi](std::span<const double> x) {
                double p = 1.0;
                for (double xi : x) p *= std::cos(two_pi * xi);
                return amplitude * p / two_pi;
            };
            break;
    }
    return data;
}

}  // namespace burgers
