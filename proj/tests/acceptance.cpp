// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in place.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "burgers/config.hpp"
#include "burgers/grid.hpp"
#include "burgers/oracles.hpp"
#include "burgers/outer_scheme.hpp"
#include "burgers/runner.hpp"

using namespace burgers;
namespace fs = std::filesystem;

namespace {

constexpr double two_pi = 2.0 * 3.14159265358979323846;

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VectorField sine_field(int n, int points) {
    return sample(make_grid(n, points), [](std::span<const double> x, std::span<double> out) {
        out[0] = std::sin(two_pi * x[0]);
        for (std::size_t i = 1; i < out.size(); ++i) out[i] = 0.0;
    });
}

VectorField potential_initial(int n, int points) {
    SolverConfig cfg;
    cfg.n = n;
    cfg.points_per_axis = points;
    cfg.initial_condition = n == 1 ? InitialPreset::sine : InitialPreset::potential;
    cfg.ic_amplitude = 1.0;
    return initial_field(cfg);
}

double oracle_error(const RunResult& run, double amplitude, InitialPreset preset) {
    const PotentialData data =
        oracle_potential(preset, amplitude, 0.0, run.solution.nu);
    const VectorField ref = hopf_cole_solution(data, run.solution.final_physical_time(),
                                               run.solution.grid);
    VectorField diff = run.solution.final_field();
    add_scaled(diff, ref, -1.0);
    return sup_norm(diff);
}

std::string read_file(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

struct TraceSummary {
    double worst_ratio = 0.0;
    int total_retries = 0;
    bool all_converged = true;
};

TraceSummary summarize(const std::vector<PicardTrace>& traces) {
    TraceSummary s;
    for (const auto& trace : traces) {
        s.total_retries += trace.retries;
        s.all_converged = s.all_converged && trace.converged;
        for (const auto& rec : trace.records)
            if (rec.ratio) s.worst_ratio = std::max(s.worst_ratio, *rec.ratio);
    }
    return s;
}

char buffer[512];

std::string fmt(const char* format, auto... args) {
    std::snprintf(buffer, sizeof(buffer), format, args...);
    return buffer;
}

}  // namespace

int main() {
    // ---- criteria 1, 3, 4, 9 share the 1-D sine runs -----------------------
    RunResult run_1d;
    RunResult run_1d_fine;  // grid and substeps doubled
    {
        const auto t0 = std::chrono::steady_clock::now();
        SchemeConfig config;
        config.substeps = 64;
        run_1d = run_global(sine_field(1, 128), 0.1, 4, config);

        SchemeConfig fine = config;
        fine.substeps = 128;
        run_1d_fine = run_global(sine_field(1, 256), 0.1, 4, fine);
        const double elapsed = seconds_since(t0);

        bool pass = !run_1d.failure && !run_1d_fine.failure;
        double err = 0.0;
        double err_fine = 0.0;
        double shrink = 0.0;
        if (pass) {
            err = oracle_error(run_1d, 1.0, InitialPreset::sine);
            err_fine = oracle_error(run_1d_fine, 1.0, InitialPreset::sine);
            shrink = err_fine / err;
            pass = err <= 5e-3 && shrink >= 0.35 && shrink <= 0.65 && elapsed <= 30.0;
        }
        report(1, pass, "Hopf-Cole oracle match (1-D)",
               fmt("sup error %.3e <= 5e-3; refined/base %.3f in [0.35,0.65]; %.1f s <= 30 s",
                   err, shrink, elapsed));
    }

    // ---- criterion 2: 2-D potential run ------------------------------------
    RunResult run_2d;
    {
        const auto t0 = std::chrono::steady_clock::now();
        SchemeConfig config;
        config.substeps = 64;
        run_2d = run_global(potential_initial(2, 64), 0.2, 2, config);
        const double elapsed = seconds_since(t0);

        bool pass = !run_2d.failure;
        double err = 0.0;
        double worst_curl = 0.0;
        if (pass) {
            err = oracle_error(run_2d, 1.0, InitialPreset::potential);
            for (const auto& step : run_2d.solution.steps)
                for (const auto& snap : step.combined.snapshots)
                    worst_curl = std::max(worst_curl, sup_norm(curl2d(snap)));
            pass = err <= 1e-2 && worst_curl <= 1e-3 && elapsed <= 120.0;
        }
        report(2, pass, "Hopf-Cole oracle match (2-D) with curl-free transport",
               fmt("sup error %.3e <= 1e-2; curl %.3e <= 1e-3; %.1f s <= 120 s", err,
                   worst_curl, elapsed));
    }

    // ---- criterion 3: contraction certificate ------------------------------
    {
        const TraceSummary s1 = summarize(run_1d.traces);
        const TraceSummary s2 = summarize(run_2d.traces);
        const bool pass = s1.all_converged && s2.all_converged && s1.worst_ratio <= 0.5 &&
                          s2.worst_ratio <= 0.5 && s1.total_retries == 0 &&
                          s2.total_retries == 0;
        report(3, pass, "contraction certificate with estimated C*_n",
               fmt("worst ratios %.3f / %.3f <= 0.5; retries %d / %d == 0", s1.worst_ratio,
                   s2.worst_ratio, s1.total_retries, s2.total_retries));
    }

    // ---- criterion 4: maximum principle ------------------------------------
    {
        const auto [pass1, margin1] = check_max_principle(run_1d.solution);
        const auto [pass2, margin2] = check_max_principle(run_2d.solution);
        report(4, pass1 && pass2, "maximum principle along both runs",
               fmt("excess %.2e / %.2e <= 1e-6", margin1, margin2));
    }

    // ---- criterion 5: schedule divergence ----------------------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        double worst_rel = 0.0;
        for (int n : {10, 100, 1000}) {
            const Schedule s = build_schedule(1.0, 1.0, n);
            double harmonic = 0.0;
            double comp = 0.0;
            for (int k = 1; k <= n; ++k) {  // Kahan-compensated oracle
                const double term = 1.0 / k - comp;
                const double next = harmonic + term;
                comp = (next - harmonic) - term;
                harmonic = next;
            }
            const double rel = std::abs(s.entries.back().t_l - 0.25 * harmonic) /
                               (0.25 * harmonic);
            worst_rel = std::max(worst_rel, rel);
            for (std::size_t i = 1; i < s.entries.size(); ++i)
                pass = pass && s.entries[i].t_l > s.entries[i - 1].t_l;
        }
        const Schedule s4000 = build_schedule(1.0, 1.0, 4000);
        pass = pass && worst_rel <= 1e-12 &&
               s4000.entries[3999].t_l - s4000.entries[999].t_l > 0.3;  // keeps growing
        const double elapsed = seconds_since(t0);
        report(5, pass && elapsed < 1.0, "schedule equals H_N/4 and diverges",
               fmt("worst relative gap %.2e <= 1e-12; %.2f s < 1 s", worst_rel, elapsed));
    }

    // ---- criterion 6: backend equivalence ----------------------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        const Grid g = make_grid(1, 64);

        LinearProblem drift_free;
        drift_free.rho = 0.02;
        drift_free.nu = 0.1;
        drift_free.initial = sine_field(1, 64);
        ParametrixOptions options;
        options.series.truncation_order = 1;
        const double gap0 = cross_check_backends(drift_free, 64, options);

        LinearProblem drifted = drift_free;
        const VectorField bfield =
            sample(g, [](std::span<const double> x, std::span<double> out) {
                out[0] = 0.5 * std::sin(two_pi * x[0]) + 0.3 * std::cos(2.0 * two_pi * x[0]);
            });
        const Trajectory drift = Trajectory::constant(bfield, 0.0, 1.0);
        drifted.drift = &drift;
        const double gap1 = cross_check_backends(drifted, 64, options);
        const double elapsed = seconds_since(t0);

        report(6, gap0 <= 1e-6 && gap1 <= 1e-2 && elapsed <= 60.0,
               "parametrix (M=1) vs spectral backend",
               fmt("drift-free gap %.2e <= 1e-6; band-limited drift gap %.3e <= 1e-2; %.1f s",
                   gap0, gap1, elapsed));
    }

    // ---- criterion 7: empirical uniqueness ---------------------------------
    {
        SchemeConfig base;
        base.substeps = 64;
        const VectorField h = sine_field(1, 128);
        const double gap = check_uniqueness(h, 0.1, 4, base);

        SchemeConfig refined = base;
        refined.substeps = 128;
        refined.parametrix.series.quadrature_nodes_time = 24;
        refined.parametrix.source_time_nodes = 16;
        const double gap_refined = check_uniqueness(h, 0.1, 4, refined);

        report(7, gap <= 1e-2 && gap_refined < gap, "uniqueness via backend cross-run",
               fmt("gap %.3e <= 1e-2; refined gap %.3e < base", gap, gap_refined));
    }

    // ---- criterion 8: fixed-point exactness --------------------------------
    {
        SchemeConfig config;
        config.substeps = 16;
        bool pass = true;
        std::string detail;
        for (int variant = 0; variant < 2; ++variant) {
            const Grid g = make_grid(1, 64);
            VectorField h(g);
            if (variant == 1)
                for (auto& v : h.components[0]) v = 1.5;
            const RunResult run = run_global(h, 0.1, 8, config);
            pass = pass && !run.failure;
            if (run.failure) continue;
            VectorField diff = run.solution.final_field();
            add_scaled(diff, h, -1.0);
            pass = pass && sup_norm(diff) <= 1e-12;
            for (const auto& trace : run.traces) {
                pass = pass && trace.converged;
                for (const auto& rec : trace.records)
                    if (rec.k >= 2) pass = pass && rec.sup == 0.0;
            }
            detail += fmt("%s drift %.2e; ", variant == 0 ? "zero" : "constant",
                          sup_norm(diff));
        }
        report(8, pass, "zero and constant presets are exact fixed points over 8 steps",
               detail + "all delta^{k>=2} vanish");
    }

    // ---- criterion 9: residual consistency ---------------------------------
    {
        std::vector<double> taus;
        for (int l = 0; l < 4; ++l)
            for (double f : {0.25, 0.5, 0.75}) taus.push_back(l + f);
        const double r_base = residual(run_1d.solution, taus);

        SchemeConfig doubled;
        doubled.substeps = 128;
        const RunResult run_doubled = run_global(sine_field(1, 128), 0.1, 4, doubled);
        const double r_doubled = residual(run_doubled.solution, taus);
        const double factor = r_base / r_doubled;

        // first-order halving, measured with the same +-30% convention the
        // grid-refinement criterion uses (the ratio approaches 2 from below)
        const bool pass = r_base <= 1e-3 && factor >= 2.0 / 1.3;
        report(9, pass, "residual small and halving under snapshot doubling",
               fmt("residual %.3e <= 1e-3; decrease factor %.3f >= 1.54", r_base, factor));
    }

    // ---- criterion 10: bit-exact reproducibility ---------------------------
    {
        SolverConfig cfg;
        cfg.n = 1;
        cfg.points_per_axis = 128;
        cfg.nu = 0.1;
        cfg.steps = 4;
        cfg.substeps_per_step = 64;
        cfg.initial_condition = InitialPreset::sine;
        cfg.snapshot_stride = 8;

        const fs::path base = fs::temp_directory_path() / "burgers_acceptance_repro";
        fs::remove_all(base);
        cfg.output_dir = (base / "a").string();
        const RunArtifacts a = run_to_directory(cfg);
        cfg.output_dir = (base / "b").string();
        const RunArtifacts b = run_to_directory(cfg);

        bool pass = a.snapshot_files.size() == b.snapshot_files.size() &&
                    !a.snapshot_files.empty();
        std::size_t bytes = 0;
        if (pass) {
            for (std::size_t i = 0; i < a.snapshot_files.size(); ++i) {
                const std::string left = read_file(a.snapshot_files[i]);
                pass = pass && left == read_file(b.snapshot_files[i]);
                bytes += left.size();
            }
            pass = pass && read_file(base / "a" / "manifest.txt") ==
                               read_file(base / "b" / "manifest.txt");
        }
        fs::remove_all(base);
        report(10, pass, "identical configs produce bit-identical outputs",
               fmt("%zu snapshots, %zu bytes compared byte-for-byte",
                   a.snapshot_files.size(), bytes));
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
