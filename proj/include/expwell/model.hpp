#pragma once

// Potential, coordinate map, Heun-side parameters, the Schrodinger residual
// checker and the bound-state counting integrals for
//
//     V(y) = V0 / sqrt(1 - exp(-y/delta)) - V0,     y > 0.
//
// All quantities are carried in the caller's units.

#include <cstddef>
#include <functional>
#include <vector>

namespace expwell {

struct PhysParams {
    double m = 1.0;
    double hbar = 1.0;
    double v0 = -4.0;
    double delta = 2.0;

    /// m, hbar, delta > 0 and V0 finite and nonzero.
    void validate() const;
    /// validate() plus V0 < 0.
    void validate_well() const;

    /// 2m / hbar^2
    double coupling() const { return 2.0 * m / (hbar * hbar); }
    /// hbar^2 / (m delta^2), the natural energy unit of the well.
    double energy_unit() const { return hbar * hbar / (m * delta * delta); }

    bool operator==(const PhysParams&) const = default;
};

struct HeunParams {
    double a = 0.0;
    double b = -1.0;
    double c = 0.0;
    double beta_h = 0.0;
    double gamma_h = 0.0;
    double k = 0.0;  ///< accessory parameter
};

/// Per-point defect of a second-order ODE, sampled on a grid.
struct ResidualReport {
    std::vector<double> grid;
    std::vector<double> residuals;  ///< relative defect |D| / scale per point
    std::vector<double> scale;      ///< max of the balanced ODE terms per point
    double l2_norm = 0.0;           ///< root-mean-square of the relative defects
    double max_norm = 0.0;          ///< largest relative defect
};

/// Evaluator handed to the residual checkers. Takes and returns long double
/// so that wavefunctions with extended-precision kernels keep their digits
/// through the finite-difference stencil; plain double lambdas convert.
using Evaluator = std::function<long double(long double)>;

double potential(const PhysParams& p, double y);
double map_x(const PhysParams& p, double y);
double inverse_map_y(const PhysParams& p, double x);

/// Heun-equation parameters at trial energy E:
/// a = 1 + 2 alpha1, b = -1, c from the Fuchsian relation (= 1 + 2 alpha2),
/// (beta_h, gamma_h) = (alpha, beta) and k the (double) root of
/// k^2 + k (a - c) - beta_h gamma_h = 0.
HeunParams heun_params(const PhysParams& p, double energy);

struct ResidualOptions {
    /// Replaces V(y). Used for the free-particle sanity check.
    std::function<double(double)> potential_override;
};

/// Relative defect of psi'' + (2m/hbar^2)(E - V) psi on a geometric grid of
/// n_points in [y_lo, y_hi]. Second derivatives use the 5-point central
/// stencil with h = max(1e-5, 1e-3 y).
ResidualReport schrodinger_residual(const PhysParams& p, double energy, const Evaluator& psi,
                                    double y_lo, double y_hi, std::size_t n_points,
                                    const ResidualOptions& opts = {});

/// Geometric grid helper shared by the residual scans.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

/// (2m/hbar^2) * integral_0^inf y |V(y)| dy.
double bargmann_integral(const PhysParams& p);

/// integral_0^inf sqrt(1/sqrt(1 - e^-u) - 1) du, the shape constant of the
/// Calogero integral. Evaluated by quadrature.
double calogero_constant();

/// integral_0^inf sqrt(-V(y)) dy = sqrt|V0| * delta * calogero_constant().
double calogero_integral(const PhysParams& p);

/// 2 (sqrt 2 - 1) sqrt(m delta^2 |V0| / hbar^2), the estimated upper bound on
/// the number of bound states.
double chadan_estimate(const PhysParams& p);

/// Smallest |V0| for which chadan_estimate reaches n_levels_required.
double generation_threshold(const PhysParams& p, int n_levels_required);

}  // namespace expwell
