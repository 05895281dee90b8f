#include "expwell/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "expwell/errors.hpp"
#include "expwell/spectrum.hpp"

namespace expwell::oracle {

namespace odeint = boost::numeric::odeint;

namespace {

// Per-component error scaled by max(|y_i|, 1e-3 |y|_inf): psi and psi' pass
// through zero at nodes, so a purely componentwise scale would stall there.
struct MixedErrorChecker {
    using value_type = double;
    using algebra_type = odeint::array_algebra;
    using operations_type = odeint::default_operations;

    double tolerance;

    template <class Algebra, class St, class Deriv, class Err, class Time>
    double error(Algebra&, const St& x_old, const Deriv&, Err& x_err, Time) const {
        const double norm = std::max(std::abs(x_old[0]), std::abs(x_old[1]));
        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sc = tolerance * std::max({std::abs(x_old[i]), 1e-3 * norm, 1e-300});
            err = std::max(err, std::abs(x_err[i]) / sc);
        }
        return err;
    }
};

using Stepper = odeint::controlled_runge_kutta<odeint::runge_kutta_dopri5<State>, MixedErrorChecker,
                                               odeint::default_step_adjuster<double, double>,
                                               odeint::initially_resizer,
                                               odeint::explicit_error_stepper_fsal_tag>;

struct Geometry {
    double y_start, y_match, y_max, kappa;
};

Geometry geometry(const PhysParams& p, double energy, const ShootingConfig& cfg) {
    p.validate_well();
    if (!(energy < 0.0)) throw Error(ErrorKind::DomainError, "oracle: E must be negative");
    Geometry g;
    g.kappa = std::sqrt(-p.coupling() * energy);
    g.y_start = cfg.y_start.value_or(1e-6 * p.delta);
    g.y_match = cfg.y_match.value_or(p.delta);
    g.y_max = cfg.y_max.value_or(std::max(40.0 * p.delta, 40.0 / g.kappa));
    if (!(0.0 < g.y_start && g.y_start < g.y_match && g.y_match < g.y_max)) {
        throw Error(ErrorKind::DomainError, "oracle: need 0 < y_start < y_match < y_max");
    }
    return g;
}

// psi'' = -(2m/hbar^2)(E - V) psi, with V written to avoid cancellation.
std::function<State(double, const State&)> schrodinger_rhs(const PhysParams& p, double energy) {
    const double k = p.coupling();
    const double v0 = p.v0;
    const double inv_delta = 1.0 / p.delta;
    return [=](double y, const State& s) -> State {
        const double u = y * inv_delta;
        const double r = std::sqrt(-std::expm1(-u));
        const double v = v0 * std::exp(-u) / (r * (1.0 + r));
        return {s[1], -k * (energy - v) * s[0]};
    };
}

// Linear ODE: rescaling the state is harmless and keeps exponentials finite.
void renormalize(State& s) {
    const double mag = std::max(std::abs(s[0]), std::abs(s[1]));
    if (mag > 1e100) {
        s[0] *= 1e-100;
        s[1] *= 1e-100;
    }
}

struct Solutions {
    State left;   // regular at the origin, at y_match
    State right;  // decaying at infinity, at y_match
    double kappa;
};

State outward_start(const PhysParams& p, double y) {
    // Near the origin V ~ V0 sqrt(delta/y), so psi = y + a y^(5/2) with
    // a = -(4/15) (2m |V0| sqrt(delta) / hbar^2).
    const double a = -(4.0 / 15.0) * p.coupling() * std::abs(p.v0) * std::sqrt(p.delta);
    return {y + a * std::pow(y, 2.5), 1.0 + 2.5 * a * std::pow(y, 1.5)};
}

Solutions solve_both(const PhysParams& p, double energy, const ShootingConfig& cfg,
                     const std::function<void(double, State&)>& left_obs = {},
                     const std::function<void(double, State&)>& right_obs = {}) {
    const Geometry g = geometry(p, energy, cfg);
    const auto rhs = schrodinger_rhs(p, energy);
    auto obs_left = [&](double t, State& s) {
        if (left_obs) left_obs(t, s);
        renormalize(s);
    };
    auto obs_right = [&](double t, State& s) {
        if (right_obs) right_obs(t, s);
        renormalize(s);
    };
    if (left_obs) {
        State s0 = outward_start(p, g.y_start);
        left_obs(g.y_start, s0);
    }
    if (right_obs) {
        State s0{1.0, -g.kappa};
        right_obs(g.y_max, s0);
    }
    const State left =
        integrate_rk45(rhs, outward_start(p, g.y_start), g.y_start, g.y_match, cfg.tolerance, obs_left);
    const State right =
        integrate_rk45(rhs, {1.0, -g.kappa}, g.y_max, g.y_match, cfg.tolerance, obs_right);
    return {left, right, g.kappa};
}

double normalized_wronskian(const Solutions& s) {
    const double k = s.kappa;
    const double w = s.left[0] * s.right[1] - s.left[1] * s.right[0];
    const double nl = std::hypot(s.left[0], s.left[1] / k);
    const double nr = std::hypot(s.right[0], s.right[1] / k);
    return w / (k * nl * nr);
}

}  // namespace

State integrate_rk45(const std::function<State(double, const State&)>& rhs, State y, double t0,
                     double t1, double tolerance,
                     const std::function<void(double, State&)>& observer, std::size_t max_steps) {
    const double span = t1 - t0;
    if (span == 0.0) return y;
    const double dir = span > 0 ? 1.0 : -1.0;
    // The first step resolves the start region: near the singular origin that
    // is a small fraction of t0 itself.
    double h = dir * std::min(std::abs(span) * 1e-3, std::max(std::abs(t0) * 1e-2, 1e-12));
    double t = t0;
    const auto system = [&](const State& s, State& ds, double x) { ds = rhs(x, s); };
    Stepper stepper{MixedErrorChecker{tolerance}};
    State dydt = rhs(t, y);

    for (std::size_t step = 0; step < max_steps; ++step) {
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        const double t_prev = t;
        if (stepper.try_step(system, y, dydt, t, h) == odeint::success) {
            // Land on t1 exactly when the clamped step was accepted.
            if (dir * (t - t1) >= 0.0 || std::abs(t - t1) <= 1e-15 * std::abs(t1)) t = t1;
            if (observer) {
                const State before = y;
                observer(t, y);
                if (y != before) dydt = rhs(t, y);  // observer rescaled the state
            }
            if (t == t1) return y;
        } else if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t_prev))) {
            throw Error(ErrorKind::IntegrationFailure, "rk45: step size underflow");
        }
        if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
            throw Error(ErrorKind::IntegrationFailure, "rk45: state is not finite");
        }
    }
    throw Error(ErrorKind::IntegrationFailure, "rk45: step budget exhausted");
}

double mismatch(const PhysParams& p, double energy, const ShootingConfig& cfg) {
    return normalized_wronskian(solve_both(p, energy, cfg));
}

std::vector<double> sample_mismatch(const PhysParams& p, std::span<const double> energies,
                                    const ShootingConfig& cfg, Exec exec, int threads) {
    std::vector<double> out(energies.size());
    const auto n = static_cast<long>(energies.size());
    auto one = [&](long i) {
        try {
            out[i] = mismatch(p, energies[i], cfg);
        } catch (const Error&) {
            out[i] = std::nan("");
        }
    };
    if (exec == Exec::Serial) {
        for (long i = 0; i < n; ++i) one(i);
    } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_threads(threads))
        for (long i = 0; i < n; ++i) one(i);
    }
    return out;
}

std::vector<double> shoot_eigenvalues(const PhysParams& p, const ShootingConfig& cfg) {
    p.validate_well();
    const double top = cfg.e_top * p.energy_unit();
    double floor = cfg.scan_floor.value_or(default_scan_floor(p));

    std::vector<std::pair<double, double>> brackets;
    for (int extension = 0;; ++extension) {
        const auto grid = energy_grid(top, floor, cfg.points_per_decade);
        const auto values = sample_mismatch(p, grid, cfg, cfg.exec, cfg.threads);
        brackets.clear();
        long prev = -1;
        for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
            if (!std::isfinite(values[i])) continue;
            if (prev >= 0 && (std::signbit(values[prev]) != std::signbit(values[i]) ||
                              values[i] == 0.0)) {
                brackets.emplace_back(grid[prev], grid[i]);
            }
            prev = i;
        }
        const bool deep_root = std::any_of(brackets.begin(), brackets.end(),
                                           [&](const auto& b) { return b.second < floor / 10.0; });
        if (cfg.scan_floor || !deep_root || extension >= 6) break;
        floor *= 10.0;
    }

    std::vector<double> energies;
    for (auto [hi, lo] : brackets) {
        double f_hi = mismatch(p, hi, cfg);
        double root = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            root = mid;
            if (hi - lo < cfg.root_rel_tol * std::max(1.0, std::abs(mid))) break;
            const double f_mid = mismatch(p, mid, cfg);
            if (f_mid == 0.0) break;
            if (std::signbit(f_mid) == std::signbit(f_hi)) {
                hi = mid;
                f_hi = f_mid;
            } else {
                lo = mid;
            }
        }
        energies.push_back(root);
    }
    std::sort(energies.begin(), energies.end());
    return energies;
}

std::vector<Sample> stitched_wavefunction(const PhysParams& p, double energy,
                                          const ShootingConfig& cfg) {
    // Record raw states together with the running rescale factor so the
    // pieces can be put on one scale afterwards.
    struct Rec {
        double y;
        State s;
        double log_scale;
    };
    std::vector<Rec> left, right;
    double left_log = 0.0, right_log = 0.0;
    auto track = [](std::vector<Rec>& out, double& log_scale) {
        return [&out, &log_scale](double y, State& s) {
            out.push_back({y, s, log_scale});
            if (std::max(std::abs(s[0]), std::abs(s[1])) > 1e100) log_scale += 100.0;
        };
    };
    const Solutions sol =
        solve_both(p, energy, cfg, track(left, left_log), track(right, right_log));

    // Match the inward solution onto the outward one at y_match (least
    // squares over value and scaled slope).
    const double k = sol.kappa;
    const double num = sol.right[0] * sol.left[0] + sol.right[1] * sol.left[1] / (k * k);
    const double den = sol.right[0] * sol.right[0] + sol.right[1] * sol.right[1] / (k * k);
    const double factor = num / den;

    std::vector<Sample> out;
    out.reserve(left.size() + right.size());
    const double left_final = left.empty() ? 0.0 : left.back().log_scale;
    for (const Rec& r : left) {
        out.push_back({r.y, r.s[0] * std::pow(10.0, r.log_scale - left_final)});
    }
    const double right_final = right.empty() ? 0.0 : right.back().log_scale;
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
        if (!out.empty() && it->y <= out.back().y) continue;
        out.push_back({it->y, factor * it->s[0] * std::pow(10.0, it->log_scale - right_final)});
    }
    return out;
}

std::size_t count_nodes(std::span<const Sample> samples, double floor_fraction) {
    double peak = 0.0;
    for (const Sample& s : samples) peak = std::max(peak, std::abs(s.psi));
    const double floor = floor_fraction * peak;
    std::size_t nodes = 0;
    int last_sign = 0;
    for (const Sample& s : samples) {
        if (std::abs(s.psi) <= floor) continue;
        const int sign = s.psi > 0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

}  // namespace expwell::oracle
