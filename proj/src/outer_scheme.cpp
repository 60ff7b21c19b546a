#include "burgers/outer_scheme.hpp"

#include <cmath>
#include <string>

#include "burgers/spectral_ops.hpp"

namespace burgers {

namespace {

// Space-time norms of a correction trajectory: running maxima over snapshots.
PicardRecord record_for(int k, const Trajectory& delta) {
    PicardRecord r;
    r.k = k;
    for (std::size_t m = 0; m < delta.size(); ++m) {
        r.sup = std::max(r.sup, sup_norm(delta.snapshots[m]));
        r.c01 = std::max(r.c01, c01_norm(delta.snapshots[m]));
        r.c12 = std::max(r.c12, c12_norm(delta.snapshots[m], delta.rhs_snapshots[m]));
    }
    return r;
}

// delta^1: the first substep minus the drift trajectory it was solved
// against. Subtracting the k=1 and k=2 substep equations leaves the source
// -rho (u^1 - D) grad(u^1), so this is the difference the series needs; for
// step 0 the drift is the initial data held constant and this reduces to
// u^1 - h.
Trajectory first_delta(const Trajectory& u1, const Trajectory& drift) {
    Trajectory d = u1;
    for (std::size_t m = 0; m < d.size(); ++m) {
        add_scaled(d.snapshots[m], drift.at_or_before(d.snapshots[m].time_tag), -1.0);
        add_scaled(d.rhs_snapshots[m], drift.rhs_at_or_before(d.rhs_snapshots[m].time_tag),
                   -1.0);
    }
    return d;
}

void add_into(Trajectory& sum, const Trajectory& delta) {
    for (std::size_t m = 0; m < sum.size(); ++m) {
        add_scaled(sum.snapshots[m], delta.snapshots[m], 1.0);
        add_scaled(sum.rhs_snapshots[m], delta.rhs_snapshots[m], 1.0);
    }
}

// Replace the summed trajectory's rhs by the instantaneous Burgers right-hand
// side rho (nu*Lap(u) - sum_j u_j du/dx_j); this is what c12 and residual
// consumers should see for the step solution.
void finalize_rhs(Trajectory& traj, double rho, double nu) {
    for (std::size_t m = 0; m < traj.size(); ++m) {
        const VectorField& u = traj.snapshots[m];
        VectorField rhs = zero_like(u);
        rhs.time_tag = u.time_tag;
        for (std::size_t c = 0; c < u.components.size(); ++c) {
            const auto lap = spectral::laplacian(u.grid, u.components[c]);
            for (std::size_t i = 0; i < lap.size(); ++i)
                rhs.components[c][i] = rho * nu * lap[i];
        }
        for (int axis = 0; axis < u.grid.n; ++axis) {
            const VectorField du = spectral_derivative(u, axis, 1);
            const auto& ua = u.components[static_cast<std::size_t>(axis)];
            for (std::size_t c = 0; c < u.components.size(); ++c) {
                auto& rc = rhs.components[c];
                const auto& dc = du.components[c];
                for (std::size_t i = 0; i < rc.size(); ++i) rc[i] -= rho * ua[i] * dc[i];
            }
        }
        traj.rhs_snapshots[m] = std::move(rhs);
    }
}

}  // namespace

const ScheduleEntry& Schedule::entry_for_step(int step_index) const {
    if (step_index < 0 || static_cast<std::size_t>(step_index) >= entries.size())
        throw range_error("schedule has no entry for step " + std::to_string(step_index));
    return entries[static_cast<std::size_t>(step_index)];
}

Schedule build_schedule(double c0, double c_star_n, int steps) {
    if (c0 <= 0.0) throw config_error("build_schedule needs c0 > 0");
    if (c_star_n < 1.0) throw config_error("build_schedule needs c_star_n >= 1");
    if (steps < 0) throw config_error("build_schedule needs steps >= 0");

    Schedule s;
    s.c0 = c0;
    s.c_star_n = c_star_n;
    s.entries.reserve(static_cast<std::size_t>(steps));
    double cumulative = 0.0;
    for (int l = 1; l <= steps; ++l) {
        ScheduleEntry e;
        e.l = l;
        e.rho = 1.0 / (4.0 * c_star_n * (c0 + (l - 1)));
        e.c_l = c0 + l;
        cumulative += e.rho;
        e.t_l = cumulative;
        s.entries.push_back(e);
    }
    return s;
}

double GlobalSolution::physical_time(int step_index, double tau) const {
    if (step_index < 0 || static_cast<std::size_t>(step_index) >= steps.size())
        throw range_error("physical_time: step out of range");
    const StepSolution& st = steps[static_cast<std::size_t>(step_index)];
    return st.t_start + st.rho_used * (tau - static_cast<double>(step_index));
}

double GlobalSolution::final_physical_time() const {
    if (steps.empty()) return 0.0;
    const StepSolution& st = steps.back();
    return st.t_start + st.rho_used;
}

const VectorField& GlobalSolution::final_field() const {
    if (steps.empty()) throw range_error("final_field: no completed steps");
    return steps.back().combined.snapshots.back();
}

Trajectory first_substep(int step_index, const VectorField& initial,
                         const Trajectory& prev_drift, double rho_l, double nu,
                         Backend backend, int substeps, const ParametrixOptions& options) {
    LinearProblem p;
    p.rho = rho_l;
    p.nu = nu;
    p.drift = &prev_drift;
    p.source = nullptr;
    p.initial = initial;
    p.tau_start = static_cast<double>(step_index);
    p.tau_end = static_cast<double>(step_index) + 1.0;
    return solve_linear(p, backend, substeps, options);
}

StepResult picard_step(int step_index, const VectorField& initial,
                       const Trajectory& prev_drift, const Schedule& schedule, double nu,
                       const SchemeConfig& config) {
    if (!std::isfinite(sup_norm(initial)))
        throw evaluation_error("picard_step: non-finite initial data");
    double rho = schedule.entry_for_step(step_index).rho;

    PicardTrace last_trace;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
        PicardTrace trace;
        trace.step_index = step_index;
        trace.retries = attempt;
        trace.rho_used = rho;

        Trajectory u1 = first_substep(step_index, initial, prev_drift, rho, nu,
                                      config.backend, config.substeps, config.parametrix);
        Trajectory delta = first_delta(u1, prev_drift);
        Trajectory sum = u1;

        trace.records.push_back(record_for(1, delta));
        trace.substeps_used = 1;
        double delta_sup = trace.records.back().sup;
        bool violated = false;

        if (delta_sup <= config.delta_tol) {
            trace.converged = true;
        } else {
            for (int k = 2; k <= config.max_substeps; ++k) {
                Trajectory next = solve_correction(sum, delta, rho, nu, config.backend,
                                                   config.substeps, config.parametrix);
                PicardRecord rec = record_for(k, next);
                rec.ratio = rec.sup / delta_sup;
                trace.records.push_back(rec);
                trace.substeps_used = k;

                add_into(sum, next);
                delta = std::move(next);
                delta_sup = rec.sup;

                if (delta_sup <= config.delta_tol) {
                    trace.converged = true;
                    break;
                }
                if (*rec.ratio > config.contraction_bound) {
                    violated = true;
                    break;
                }
            }
        }

        if (trace.converged) {
            finalize_rhs(sum, rho, nu);
            return StepResult{std::move(u1), std::move(sum), std::move(trace)};
        }
        last_trace = trace;
        if (violated && attempt < config.max_retries) {
            rho *= 0.5;  // retry the whole step with a smaller dilation
            continue;
        }
        break;
    }
    throw step_failure_error(
        "picard_step " + std::to_string(step_index) + " did not converge (rho " +
            std::to_string(rho) + ", " + std::to_string(last_trace.retries) + " retries)",
        last_trace);
}

RunResult run_global(const VectorField& h, double nu, int steps, const SchemeConfig& config,
                     std::optional<double> c_star_n_override) {
    if (steps < 1) throw config_error("run_global needs steps >= 1");
    if (nu <= 0.0) throw config_error("run_global needs nu > 0");

    RunResult result;
    if (c_star_n_override.has_value()) {
        if (*c_star_n_override < 1.0) throw config_error("c_star_n override must be >= 1");
        result.constants.c_star = std::cbrt(*c_star_n_override /
                                            (2.0 + h.grid.n + h.grid.n * h.grid.n));
        result.constants.c_star_n = *c_star_n_override;
        result.constants.probe_report = {{"override", *c_star_n_override}};
    } else {
        KernelParams kp;
        kp.nu = nu;
        kp.n = h.grid.n;
        // Probe battery needs >= 64 points per axis; its suprema sit on the
        // quarter lattice, so the estimate is resolution-independent anyway.
        const Grid probe_grid = make_grid(h.grid.n, std::max(64, h.grid.points_per_axis));
        result.constants = estimate_cstar(kp, probe_grid);
    }

    const double c0 = std::max(sup_norm(h), 1e-3);  // keep rho_1 finite for h = 0
    Schedule schedule = build_schedule(c0, result.constants.c_star_n, steps);

    GlobalSolution& sol = result.solution;
    sol.grid = h.grid;
    sol.nu = nu;
    sol.schedule = schedule;
    sol.initial_sup = sup_norm(h);
    sol.running_sup = sol.initial_sup;

    VectorField current = h;
    current.time_tag = 0.0;
    Trajectory drift = Trajectory::constant(h, 0.0, 1.0);
    double t_cursor = 0.0;

    for (int l = 0; l < steps; ++l) {
        StepResult step;
        try {
            step = picard_step(l, current, drift, schedule, nu, config);
        } catch (const step_failure_error& e) {
            result.traces.push_back(e.trace);
            result.failure = e.what();
            result.failed_step = l;
            return result;
        } catch (const numeric_error& e) {
            // instability or quadrature breakdown inside a substep; keep the
            // partial solution
            result.failure = e.what();
            result.failed_step = l;
            return result;
        }

        StepSolution record;
        record.index = l;
        record.rho_used = step.trace.rho_used;
        record.t_start = t_cursor;
        record.first_substep = std::move(step.first);
        record.combined = std::move(step.combined);
        t_cursor += record.rho_used;

        for (const auto& snap : record.combined.snapshots)
            sol.running_sup = std::max(sol.running_sup, sup_norm(snap));

        current = record.combined.snapshots.back();  // bit-exact seam handoff
        const Trajectory& next_drift_source =
            (config.drift_source == DriftSource::first_substep) ? record.first_substep
                                                                : record.combined;
        drift = next_drift_source.shifted(1.0);

        sol.steps.push_back(std::move(record));
        result.traces.push_back(std::move(step.trace));
    }
    return result;
}

double residual(const GlobalSolution& solution, std::span<const double> tau_samples) {
    if (solution.steps.empty()) throw range_error("residual: empty solution");
    double worst = 0.0;
    for (double tau : tau_samples) {
        const double last_tau = static_cast<double>(solution.steps.size());
        if (tau < 0.0 || tau > last_tau + 1e-12)
            throw range_error("residual sample tau outside covered span");
        int step = std::min(static_cast<int>(tau), static_cast<int>(solution.steps.size()) - 1);
        const StepSolution& st = solution.steps[static_cast<std::size_t>(step)];
        const Trajectory& traj = st.combined;
        if (traj.size() < 3) throw range_error("residual needs >= 3 snapshots per step");

        // nearest interior snapshot
        std::size_t best = 1;
        double best_dist = std::abs(traj.snapshots[1].time_tag - tau);
        for (std::size_t m = 2; m + 1 < traj.size(); ++m) {
            const double d = std::abs(traj.snapshots[m].time_tag - tau);
            if (d < best_dist) {
                best = m;
                best_dist = d;
            }
        }

        const VectorField& u = traj.snapshots[best];
        const VectorField& up = traj.snapshots[best + 1];
        const VectorField& um = traj.snapshots[best - 1];
        const double dtau = up.time_tag - um.time_tag;

        for (std::size_t c = 0; c < u.components.size(); ++c) {
            const auto lap = spectral::laplacian(u.grid, u.components[c]);
            std::vector<double> advect(lap.size(), 0.0);
            for (int axis = 0; axis < u.grid.n; ++axis) {
                const VectorField du = spectral_derivative(u, axis, 1);
                const auto& ua = u.components[static_cast<std::size_t>(axis)];
                const auto& dc = du.components[c];
                for (std::size_t i = 0; i < advect.size(); ++i) advect[i] += ua[i] * dc[i];
            }
            for (std::size_t i = 0; i < lap.size(); ++i) {
                const double dudt =
                    (up.components[c][i] - um.components[c][i]) / dtau;
                const double res =
                    dudt - st.rho_used * (solution.nu * lap[i] - advect[i]);
                worst = std::max(worst, std::abs(res));
            }
        }
    }
    return worst;
}

}  // namespace burgers
