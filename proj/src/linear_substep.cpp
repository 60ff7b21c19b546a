#include "burgers/linear_substep.hpp"

#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/spectral_ops.hpp"

namespace burgers {

namespace {

const VectorField& lookup(const std::vector<VectorField>& snaps, double tau) {
    // last snapshot with tag <= tau (+ slack for roundoff); clamps at the ends
    std::size_t pick = 0;
    for (std::size_t i = 0; i < snaps.size(); ++i) {
        if (snaps[i].time_tag <= tau + 1e-12) pick = i;
        else break;
    }
    return snaps[pick];
}

// -rho * sum_j b_j d(w_i)/dx_j accumulated into out, plus optional source.
void accumulate_explicit_terms(const LinearProblem& p, const VectorField& w, double tau,
                               VectorField& out) {
    if (p.drift != nullptr) {
        const VectorField& b = p.drift->at_or_before(tau);
        require_same_shape(w, b, "drift lookup");
        for (int axis = 0; axis < w.grid.n; ++axis) {
            const VectorField dw = spectral_derivative(w, axis, 1);
            const auto& ba = b.components[static_cast<std::size_t>(axis)];
            for (std::size_t c = 0; c < w.components.size(); ++c) {
                auto& oc = out.components[c];
                const auto& dc = dw.components[c];
                for (std::size_t i = 0; i < oc.size(); ++i) oc[i] -= p.rho * ba[i] * dc[i];
            }
        }
    }
    if (p.source != nullptr) {
        const VectorField& s = p.source->at_or_before(tau);
        add_scaled(out, s, 1.0);
    }
}

VectorField instantaneous_rhs(const LinearProblem& p, const VectorField& w, double tau) {
    VectorField rhs = zero_like(w);
    rhs.time_tag = tau;
    for (std::size_t c = 0; c < w.components.size(); ++c) {
        const auto lap = spectral::laplacian(w.grid, w.components[c]);
        for (std::size_t i = 0; i < lap.size(); ++i)
            rhs.components[c][i] = p.rho * p.nu * lap[i];
    }
    accumulate_explicit_terms(p, w, tau, rhs);
    return rhs;
}

double source_sup(const LinearProblem& p) {
    double m = 0.0;
    if (p.source != nullptr)
        for (const auto& snap : p.source->snapshots) m = std::max(m, sup_norm(snap));
    return m;
}

Trajectory solve_spectral(const LinearProblem& p, int substeps) {
    const double dt = (p.tau_end - p.tau_start) / substeps;
    const double initial_sup = sup_norm(p.initial);
    const double apriori = initial_sup + (p.tau_end - p.tau_start) * source_sup(p);

    Trajectory traj;
    traj.snapshots.reserve(static_cast<std::size_t>(substeps) + 1);
    traj.rhs_snapshots.reserve(static_cast<std::size_t>(substeps) + 1);

    VectorField w = p.initial;
    w.time_tag = p.tau_start;
    traj.snapshots.push_back(w);
    traj.rhs_snapshots.push_back(instantaneous_rhs(p, w, p.tau_start));

    for (int m = 0; m < substeps; ++m) {
        const double tau_m = p.tau_start + m * dt;
        const double prev_sup = sup_norm(w);

        VectorField terms = zero_like(w);
        accumulate_explicit_terms(p, w, tau_m, terms);
        add_scaled(w, terms, dt);
        w = spectral::heat(w, p.rho * p.nu * dt);
        w.time_tag = p.tau_start + (m + 1) * dt;

        const double new_sup = sup_norm(w);
        if (new_sup > 10.0 * prev_sup + 1e-30 && new_sup > 10.0 * apriori + 1e-30)
            throw instability_error("linear solve unstable at internal stage " +
                                    std::to_string(m) + ": sup grew to " +
                                    std::to_string(new_sup));

        traj.snapshots.push_back(w);
        traj.rhs_snapshots.push_back(instantaneous_rhs(p, w, w.time_tag));
    }
    return traj;
}

Trajectory solve_parametrix(const LinearProblem& p, int substeps, const ParametrixOptions& opt) {
    KernelParams kp;
    kp.nu = p.rho * p.nu;  // effective diffusivity of the tau-equation
    kp.n = p.initial.grid.n;

    DriftLookup drift = [&p](double sigma) -> const VectorField& {
        return p.drift->at_or_before(sigma);
    };
    DriftLookup zero_drift = [&p](double) -> const VectorField& { return p.initial; };
    const bool has_drift = p.drift != nullptr;
    ParametrixSeries series = opt.series;
    if (!has_drift) series.truncation_order = 0;  // K vanishes with b = 0
    const DriftLookup& drift_ref = has_drift ? drift : zero_drift;

    const double dt = (p.tau_end - p.tau_start) / substeps;
    Trajectory traj;
    VectorField first = p.initial;
    first.time_tag = p.tau_start;
    traj.snapshots.push_back(first);
    traj.rhs_snapshots.push_back(instantaneous_rhs(p, first, p.tau_start));

    for (int m = 1; m <= substeps; ++m) {
        const double t_m = p.tau_start + m * dt;
        VectorField w = zero_like(p.initial);
        w.time_tag = t_m;
        for (std::size_t c = 0; c < w.components.size(); ++c) {
            // homogeneous part
            w.components[c] = parametrix_apply(p.initial.grid, p.initial.components[c],
                                               drift_ref, p.rho, series, kp, p.tau_start, t_m);
            // source path integral with plain midpoint nodes (bounded integrand)
            if (p.source != nullptr) {
                const int nodes = std::max(2, opt.source_time_nodes);
                const double span = t_m - p.tau_start;
                for (int q = 0; q < nodes; ++q) {
                    const double sigma = p.tau_start + (q + 0.5) * span / nodes;
                    const double weight = span / nodes;
                    const VectorField& src = p.source->at_or_before(sigma);
                    std::vector<double> contrib;
                    if (t_m - sigma < 2e-6) {
                        // below the quadrature floor the propagator is identity
                        contrib.assign(src.components[c].begin(), src.components[c].end());
                    } else {
                        contrib = parametrix_apply(p.initial.grid, src.components[c],
                                                   drift_ref, p.rho, series, kp, sigma, t_m);
                    }
                    for (std::size_t i = 0; i < contrib.size(); ++i)
                        w.components[c][i] += weight * contrib[i];
                }
            }
        }
        traj.snapshots.push_back(w);
        traj.rhs_snapshots.push_back(instantaneous_rhs(p, w, t_m));
    }
    return traj;
}

}  // namespace

const VectorField& Trajectory::at_or_before(double tau) const {
    return lookup(snapshots, tau);
}

const VectorField& Trajectory::rhs_at_or_before(double tau) const {
    return lookup(rhs_snapshots, tau);
}

Trajectory Trajectory::constant(const VectorField& f, double tau_start, double tau_end) {
    Trajectory t;
    VectorField a = f;
    a.time_tag = tau_start;
    VectorField b = f;
    b.time_tag = tau_end;
    t.snapshots = {a, b};
    t.rhs_snapshots = {zero_like(a), zero_like(b)};
    t.rhs_snapshots[0].time_tag = tau_start;
    t.rhs_snapshots[1].time_tag = tau_end;
    return t;
}

Trajectory Trajectory::shifted(double offset) const {
    Trajectory out = *this;
    for (auto& s : out.snapshots) s.time_tag += offset;
    for (auto& s : out.rhs_snapshots) s.time_tag += offset;
    return out;
}

void Trajectory::validate() const {
    if (snapshots.empty()) throw shape_error("trajectory has no snapshots");
    if (rhs_snapshots.size() != snapshots.size())
        throw shape_error("trajectory rhs snapshot count mismatch");
    for (std::size_t i = 1; i < snapshots.size(); ++i)
        if (!(snapshots[i].time_tag > snapshots[i - 1].time_tag))
            throw shape_error("trajectory time tags must strictly increase");
}

Trajectory solve_linear(const LinearProblem& problem, Backend backend, int substeps,
                        const ParametrixOptions& options) {
    if (substeps < 1) throw config_error("solve_linear needs substeps >= 1");
    if (problem.rho <= 0.0 || problem.nu <= 0.0)
        throw config_error("solve_linear needs positive rho and nu");
    if (std::abs((problem.tau_end - problem.tau_start) - 1.0) > 1e-9)
        throw config_error("subproblem tau span must be 1");
    if (problem.drift != nullptr) problem.drift->validate();
    if (problem.source != nullptr) problem.source->validate();

    Trajectory traj = (backend == Backend::spectral)
                          ? solve_spectral(problem, substeps)
                          : solve_parametrix(problem, substeps, options);
    traj.validate();
    return traj;
}

Trajectory solve_correction(const Trajectory& u_prev, const Trajectory& delta_prev,
                            double rho, double nu, Backend backend, int substeps,
                            const ParametrixOptions& options) {
    u_prev.validate();
    delta_prev.validate();
    if (u_prev.size() != delta_prev.size())
        throw shape_error("solve_correction: trajectories have different snapshot counts");

    // source_i = -rho sum_j delta_prev_j d(u_prev_i)/dx_j, snapshot-wise
    Trajectory source;
    source.snapshots.reserve(u_prev.size());
    source.rhs_snapshots.reserve(u_prev.size());
    for (std::size_t m = 0; m < u_prev.size(); ++m) {
        const VectorField& u = u_prev.snapshots[m];
        const VectorField& d = delta_prev.snapshots[m];
        require_same_shape(u, d, "solve_correction");
        VectorField s = zero_like(u);
        s.time_tag = u.time_tag;
        for (int axis = 0; axis < u.grid.n; ++axis) {
            const VectorField du = spectral_derivative(u, axis, 1);
            const auto& da = d.components[static_cast<std::size_t>(axis)];
            for (std::size_t c = 0; c < s.components.size(); ++c) {
                auto& sc = s.components[c];
                const auto& duc = du.components[c];
                for (std::size_t i = 0; i < sc.size(); ++i) sc[i] -= rho * da[i] * duc[i];
            }
        }
        source.snapshots.push_back(std::move(s));
        VectorField z = zero_like(u);
        z.time_tag = u.time_tag;
        source.rhs_snapshots.push_back(std::move(z));
    }

    LinearProblem problem;
    problem.rho = rho;
    problem.nu = nu;
    problem.drift = &u_prev;
    problem.source = &source;
    problem.initial = zero_like(u_prev.snapshots.front());
    problem.tau_start = u_prev.tau_start();
    problem.tau_end = u_prev.tau_end();
    return solve_linear(problem, backend, substeps, options);
}

double cross_check_backends(const LinearProblem& problem, int substeps,
                            const ParametrixOptions& options) {
    if (problem.initial.grid.n != 1 || problem.initial.grid.points_per_axis > 128)
        throw config_error("cross_check_backends expects n=1 and grid <= 128");
    const Trajectory a = solve_linear(problem, Backend::spectral, substeps, options);
    const Trajectory b = solve_linear(problem, Backend::parametrix, substeps, options);
    const VectorField& fa = a.snapshots.back();
    const VectorField& fb = b.snapshots.back();
    VectorField diff = fa;
    add_scaled(diff, fb, -1.0);
    return sup_norm(diff);
}

}  // namespace burgers
