#include "burgers/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/oracles.hpp"
#include "burgers/snapshot.hpp"

namespace burgers {

namespace {

namespace fs = std::filesystem;

std::string snapshot_name(int step, int index) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "snapshot_%03d_%05d.bpfx", step, index);
    return buf;
}

void write_trace_csv(const fs::path& path, const std::vector<PicardTrace>& traces) {
    std::ofstream os(path);
    os << "step,retry,k,sup_delta,c01_delta,c12_delta,ratio\n";
    for (const auto& trace : traces) {
        for (const auto& rec : trace.records) {
            os << trace.step_index << ',' << trace.retries << ',' << rec.k << ','
               << format_double(rec.sup) << ',' << format_double(rec.c01) << ','
               << format_double(rec.c12) << ',';
            if (rec.ratio) os << format_double(*rec.ratio);
            os << '\n';
        }
    }
}

void write_schedule_csv(const fs::path& path, const GlobalSolution& sol) {
    std::ofstream os(path);
    os << "l,rho_l,C_l,T_l\n";
    double cumulative = 0.0;
    for (const auto& step : sol.steps) {
        cumulative += step.rho_used;
        const ScheduleEntry& nominal = sol.schedule.entry_for_step(step.index);
        os << (step.index + 1) << ',' << format_double(step.rho_used) << ','
           << format_double(nominal.c_l) << ',' << format_double(cumulative) << '\n';
    }
}

std::map<std::string, std::string> read_key_values(const fs::path& path) {
    std::map<std::string, std::string> kv;
    std::ifstream is(path);
    if (!is) return kv;
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

struct ScheduleRow {
    double rho = 0.0;
    double t_l = 0.0;
};

std::vector<ScheduleRow> read_schedule_csv(const fs::path& path) {
    std::vector<ScheduleRow> rows;
    std::ifstream is(path);
    if (!is) throw config_error("missing schedule.csv in run directory");
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 4) throw config_error("malformed schedule.csv row: " + line);
        ScheduleRow row;
        row.rho = std::stod(cells[1]);
        row.t_l = std::stod(cells[3]);
        rows.push_back(row);
    }
    return rows;
}

double map_tau_to_time(const std::vector<ScheduleRow>& rows, double tau) {
    // t = T_{l-1} + rho_l (tau - (l-1)) for tau in [l-1, l]
    if (rows.empty()) return 0.0;
    int l = static_cast<int>(std::floor(tau));
    l = std::max(0, std::min(l, static_cast<int>(rows.size()) - 1));
    const double t_prev = (l == 0) ? 0.0 : rows[static_cast<std::size_t>(l - 1)].t_l;
    return t_prev + rows[static_cast<std::size_t>(l)].rho * (tau - l);
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunArtifacts run_to_directory(const SolverConfig& config) {
    config.validate();
    RunArtifacts artifacts;
    artifacts.directory = config.output_dir;
    fs::create_directories(artifacts.directory);

    const VectorField h = initial_field(config);
    artifacts.result =
        run_global(h, config.nu, config.steps, config.scheme(), config.c_star_n_override);
    const RunResult& run = artifacts.result;
    const GlobalSolution& sol = run.solution;

    // snapshots: every stride-th snapshot of each step plus the step end
    for (const auto& step : sol.steps) {
        const auto& snaps = step.combined.snapshots;
        for (std::size_t m = 0; m < snaps.size(); ++m) {
            const bool keep = (m % static_cast<std::size_t>(config.snapshot_stride) == 0) ||
                              (m + 1 == snaps.size());
            if (!keep) continue;
            const fs::path file =
                artifacts.directory / snapshot_name(step.index, static_cast<int>(m));
            write_bpfx(file, snaps[m], config.nu);
            artifacts.snapshot_files.push_back(file);
        }
    }

    write_trace_csv(artifacts.directory / "trace.csv", run.traces);
    write_schedule_csv(artifacts.directory / "schedule.csv", sol);

    {
        std::ofstream os(artifacts.directory / "manifest.txt");
        os << "format=burgers-run-manifest/1\n";
        os << "n=" << config.n << '\n';
        os << "points_per_axis=" << config.points_per_axis << '\n';
        os << "nu=" << format_double(config.nu) << '\n';
        os << "steps=" << config.steps << '\n';
        os << "backend=" << to_string(config.backend) << '\n';
        os << "substeps_per_step=" << config.substeps_per_step << '\n';
        os << "delta_tol=" << format_double(config.delta_tol) << '\n';
        os << "max_substeps=" << config.max_substeps << '\n';
        os << "contraction_bound=" << format_double(config.contraction_bound) << '\n';
        os << "max_retries=" << config.max_retries << '\n';
        os << "drift_source=" << to_string(config.drift_source) << '\n';
        os << "initial_condition=" << to_string(config.initial_condition) << '\n';
        os << "ic_amplitude=" << format_double(config.ic_amplitude) << '\n';
        os << "ic_value=" << format_double(config.ic_value) << '\n';
        os << "snapshot_stride=" << config.snapshot_stride << '\n';
        os << "parametrix_order=" << config.parametrix_order << '\n';
        os << "parametrix_time_nodes=" << config.parametrix_time_nodes << '\n';
        if (config.c_star_n_override)
            os << "c_star_n_override=" << format_double(*config.c_star_n_override) << '\n';
        os << "c_star=" << format_double(run.constants.c_star) << '\n';
        os << "c_star_n=" << format_double(run.constants.c_star_n) << '\n';
        os << "c0=" << format_double(sol.schedule.c0) << '\n';
        os << "initial_sup=" << format_double(sol.initial_sup) << '\n';
        os << "running_sup=" << format_double(sol.running_sup) << '\n';
        os << "final_time=" << format_double(sol.final_physical_time()) << '\n';
        if (run.failure) {
            os << "failed_step=" << run.failed_step << '\n';
            os << "failure=" << *run.failure << '\n';
        }
        for (const auto& trace : run.traces)
            os << "step_" << trace.step_index << "=rho_used:" << format_double(trace.rho_used)
               << ",retries:" << trace.retries << ",substeps_used:" << trace.substeps_used
               << ",converged:" << (trace.converged ? 1 : 0) << '\n';
        for (std::size_t f = 0; f < artifacts.snapshot_files.size(); ++f) {
            SnapshotMeta meta;
            const VectorField snap = read_bpfx(artifacts.snapshot_files[f], &meta);
            const int step = std::min(static_cast<int>(snap.time_tag),
                                      static_cast<int>(sol.steps.size()) - 1);
            os << "snapshot=" << artifacts.snapshot_files[f].filename().string()
               << ",tau:" << format_double(snap.time_tag)
               << ",t:" << format_double(sol.physical_time(step, snap.time_tag))
               << ",sup:" << format_double(sup_norm(snap)) << '\n';
        }
    }

    {
        // wall-clock info lives outside the manifest to keep runs comparable
        std::ofstream os(artifacts.directory / "runinfo.txt");
        const auto now = std::chrono::system_clock::now();
        os << "unix_time=" << std::chrono::duration_cast<std::chrono::seconds>(
                                  now.time_since_epoch())
                                  .count()
           << '\n';
    }

    artifacts.exit_code = run.failure ? 3 : 0;
    return artifacts;
}

int command_run(const std::string& config_path, std::ostream& out, std::ostream& err) {
    SolverConfig config;
    try {
        config = parse_config_file(config_path);
    } catch (const config_error& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    }
    try {
        const RunArtifacts artifacts = run_to_directory(config);
        const GlobalSolution& sol = artifacts.result.solution;
        out << "steps_completed=" << sol.steps.size() << '\n';
        out << "final_time=" << format_double(sol.final_physical_time()) << '\n';
        out << "running_sup=" << format_double(sol.running_sup) << '\n';
        out << "output_dir=" << artifacts.directory.string() << '\n';
        if (artifacts.result.failure) {
            err << "step failure at step " << artifacts.result.failed_step << ": "
                << *artifacts.result.failure << '\n';
            err << "partial outputs retained in " << artifacts.directory.string() << '\n';
        }
        return artifacts.exit_code;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const solver_error& e) {
        err << "run failed: " << e.what() << '\n';
        return 3;
    }
}

int command_schedule(double c0, double c_star_n, int steps, std::ostream& out,
                     std::ostream& err) {
    try {
        const Schedule schedule = build_schedule(c0, c_star_n, steps);
        out << "l,rho_l,C_l,T_l\n";
        for (const auto& e : schedule.entries)
            out << e.l << ',' << format_double(e.rho) << ',' << format_double(e.c_l) << ','
                << format_double(e.t_l) << '\n';
        return 0;
    } catch (const config_error& e) {
        err << "schedule error: " << e.what() << '\n';
        return 2;
    }
}

int command_compare(const std::string& directory, const std::string& oracle_preset,
                    double threshold, std::ostream& out, std::ostream& err) {
    try {
        const fs::path dir(directory);
        const auto manifest = read_key_values(dir / "manifest.txt");
        if (manifest.empty()) {
            err << "compare: missing or empty manifest in " << directory << '\n';
            return 2;
        }
        const auto schedule_rows = read_schedule_csv(dir / "schedule.csv");
        const InitialPreset preset = preset_from_string(oracle_preset);
        const double amplitude =
            manifest.count("ic_amplitude") ? std::stod(manifest.at("ic_amplitude")) : 1.0;
        const double value = manifest.count("ic_value") ? std::stod(manifest.at("ic_value")) : 0.0;

        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".bpfx") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            err << "compare: no snapshots in " << directory << '\n';
            return 2;
        }

        out << "file,tau,t,sup_error,l2_error\n";
        double final_sup_error = 0.0;
        for (const auto& file : files) {
            SnapshotMeta meta;
            const VectorField snap = read_bpfx(file, &meta);
            const double t = map_tau_to_time(schedule_rows, snap.time_tag);
            const PotentialData oracle = oracle_potential(preset, amplitude, value, meta.nu);
            const VectorField ref = hopf_cole_solution(oracle, t, snap.grid);

            VectorField diff = snap;
            add_scaled(diff, ref, -1.0);
            const double sup_err = sup_norm(diff);
            double l2 = 0.0;
            for (const auto& comp : diff.components)
                for (double v : comp) l2 += v * v;
            const double cell = std::pow(snap.grid.spacing, snap.grid.n);
            l2 = std::sqrt(l2 * cell);

            out << file.filename().string() << ',' << format_double(snap.time_tag) << ','
                << format_double(t) << ',' << format_double(sup_err) << ','
                << format_double(l2) << '\n';
            final_sup_error = sup_err;
        }
        out << "final_sup_error=" << format_double(final_sup_error) << '\n';
        out << "threshold=" << format_double(threshold) << '\n';
        return final_sup_error <= threshold ? 0 : 1;
    } catch (const config_error& e) {
        err << "compare error: " << e.what() << '\n';
        return 2;
    } catch (const solver_error& e) {
        err << "compare failed: " << e.what() << '\n';
        return 3;
    }
}

int command_estimate_cstar(int n, double nu, int grid_points, std::ostream& out,
                           std::ostream& err) {
    try {
        KernelParams params;
        params.n = n;
        params.nu = nu;
        const Grid grid = make_grid(n, grid_points);
        const ConstantEstimate est = estimate_cstar(params, grid);
        out << "c_star=" << format_double(est.c_star) << '\n';
        out << "c_star_n=" << format_double(est.c_star_n) << '\n';
        out << "probe,amplification\n";
        for (const auto& [name, amp] : est.probe_report)
            out << name << ',' << format_double(amp) << '\n';
        return 0;
    } catch (const config_error& e) {
        err << "estimate error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace burgers
