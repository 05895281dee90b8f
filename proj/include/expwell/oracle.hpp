#pragma once

// Eigenvalues by direct integration of the Schrodinger equation. Nothing in
// here touches the hypergeometric code, so it can arbitrate the spectrum
// module's results.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "expwell/model.hpp"
#include "expwell/parallel.hpp"

namespace expwell::oracle {

struct ShootingConfig {
    std::optional<double> y_start;  ///< default 1e-6 delta
    std::optional<double> y_match;  ///< default delta
    std::optional<double> y_max;    ///< default max(40 delta, 40 hbar / sqrt(-2 m E))
    double tolerance = 1e-10;       ///< Runge-Kutta step controller tolerance
    double e_top = 1e-6;            ///< in units of hbar^2 / (m delta^2)
    int points_per_decade = 400;
    std::optional<double> scan_floor;
    double root_rel_tol = 1e-10;
    Exec exec = Exec::Parallel;
    int threads = 0;
};

using State = std::array<double, 2>;  // (psi, psi')

/// Adaptive Dormand-Prince 5(4) with a mixed per-component / state-norm error scale.
/// `observer` sees every accepted step. Throws IntegrationFailure when the
/// step size collapses or the step budget is spent.
State integrate_rk45(const std::function<State(double, const State&)>& rhs, State y0, double t0,
                     double t1, double tolerance,
                     const std::function<void(double, State&)>& observer = {},
                     std::size_t max_steps = 2'000'000);

/// Scale-free Wronskian of the regular (outward) and decaying (inward)
/// solutions at the matching point: sin of the angle between (psi, psi'/kappa)
/// vectors. Zero exactly at eigenvalues; continuous in E.
double mismatch(const PhysParams& p, double energy, const ShootingConfig& cfg = {});

/// Ascending eigenvalues found by bracketing mismatch sign changes on the
/// same geometric energy grid the spectrum scan uses.
std::vector<double> shoot_eigenvalues(const PhysParams& p, const ShootingConfig& cfg = {});

/// Mismatch sampled on a grid; Serial and Parallel give identical output.
std::vector<double> sample_mismatch(const PhysParams& p, std::span<const double> energies,
                                    const ShootingConfig& cfg, Exec exec, int threads = 0);

struct Sample {
    double y;
    double psi;
};

/// Outward and inward solutions at `energy`, joined at the matching point.
/// Returned in increasing y; unnormalized.
std::vector<Sample> stitched_wavefunction(const PhysParams& p, double energy,
                                          const ShootingConfig& cfg = {});

/// Interior sign changes of a stitched wavefunction, ignoring samples whose
/// magnitude is below `floor_fraction` of the peak (the far tail).
std::size_t count_nodes(std::span<const Sample> samples, double floor_fraction = 1e-9);

}  // namespace expwell::oracle
