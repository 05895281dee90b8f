#include "expwell/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "expwell/errors.hpp"
#include "expwell/quadrature.hpp"
#include "expwell/spectrum.hpp"

namespace expwell {

void PhysParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorKind::DomainError, "m must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw Error(ErrorKind::DomainError, "hbar must be positive");
    }
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorKind::DomainError, "delta must be positive");
    }
    if (!std::isfinite(v0) || v0 == 0.0) {
        throw Error(ErrorKind::DomainError, "V0 must be finite and nonzero");
    }
}

void PhysParams::validate_well() const {
    validate();
    if (!(v0 < 0.0)) throw Error(ErrorKind::DomainError, "V0 must be negative");
}

namespace {

// 1/sqrt(1 - e^-u) - 1 without cancellation at large u.
double shape(double u) {
    const double s = std::sqrt(-std::expm1(-u));
    return std::exp(-u) / (s * (1.0 + s));
}

}  // namespace

double potential(const PhysParams& p, double y) {
    p.validate();
    if (!(y > 0.0)) throw Error(ErrorKind::DomainError, "potential: y must be positive");
    return p.v0 * shape(y / p.delta);
}

double map_x(const PhysParams& p, double y) {
    p.validate();
    if (!(y >= 0.0)) throw Error(ErrorKind::DomainError, "map_x: y must be non-negative");
    return std::sqrt(-std::expm1(-y / p.delta));
}

double inverse_map_y(const PhysParams& p, double x) {
    p.validate();
    if (!(x >= 0.0 && x < 1.0)) {
        throw Error(ErrorKind::DomainError, "inverse_map_y: x must lie in [0, 1)");
    }
    return -p.delta * std::log1p(-x * x);
}

HeunParams heun_params(const PhysParams& p, double energy) {
    const SpectralParams sp = spectral_params(p, energy);
    HeunParams h;
    h.a = 1.0 + 2.0 * sp.alpha1;
    h.b = -1.0;
    h.beta_h = sp.alpha;
    h.gamma_h = sp.beta;
    h.c = 1.0 + h.beta_h + h.gamma_h - h.a - h.b;

    // k^2 + k (a - c) - beta gamma = 0 has a double root here; rounding can
    // push the discriminant slightly negative.
    const double amc = h.a - h.c;
    const double disc = std::max(0.0, amc * amc + 4.0 * h.beta_h * h.gamma_h);
    const double r1 = 0.5 * (-amc + std::sqrt(disc));
    const double r2 = 0.5 * (-amc - std::sqrt(disc));
    h.k = std::abs(r1 - sp.q) <= std::abs(r2 - sp.q) ? r1 : r2;
    return h;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw Error(ErrorKind::DomainError, "geometric_grid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> g(n);
    const double ratio = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(ratio * static_cast<double>(i));
    g.front() = lo;
    g.back() = hi;
    return g;
}

ResidualReport schrodinger_residual(const PhysParams& p, double energy, const Evaluator& psi,
                                    double y_lo, double y_hi, std::size_t n_points,
                                    const ResidualOptions& opts) {
    p.validate();
    if (!(y_lo > 0.0)) throw Error(ErrorKind::DomainError, "residual: y_lo must be positive");
    ResidualReport rep;
    rep.grid = geometric_grid(y_lo, y_hi, n_points);
    rep.residuals.resize(n_points);
    rep.scale.resize(n_points);

    const long double coupling = p.coupling();
    std::size_t usable = 0;
    long double sum_sq = 0.0L;
    for (std::size_t i = 0; i < n_points; ++i) {
        const long double y = rep.grid[i];
        const long double h = std::max(1e-5L, 1e-3L * y);
        if (y - 2 * h <= 0.0L) {
            throw Error(ErrorKind::DomainError, "residual: stencil reaches y <= 0");
        }
        const long double f0 = psi(y);
        const long double d2 = (-psi(y + 2 * h) + 16 * psi(y + h) - 30 * f0 + 16 * psi(y - h) -
                                psi(y - 2 * h)) /
                               (12 * h * h);
        const double v = opts.potential_override ? opts.potential_override(rep.grid[i])
                                                 : potential(p, rep.grid[i]);
        const long double kinetic = coupling * (energy - static_cast<long double>(v)) * f0;
        const long double scale = std::max(std::abs(d2), std::abs(kinetic));
        const long double defect = d2 + kinetic;
        rep.scale[i] = static_cast<double>(scale);
        if (scale > 1e-300L) {
            rep.residuals[i] = static_cast<double>(std::abs(defect) / scale);
            ++usable;
        } else {
            rep.residuals[i] = 0.0;
        }
        sum_sq += static_cast<long double>(rep.residuals[i]) * rep.residuals[i];
        rep.max_norm = std::max(rep.max_norm, rep.residuals[i]);
    }
    if (usable == 0) {
        throw Error(ErrorKind::NumericalBreakdown, "residual: psi vanishes on the whole grid");
    }
    rep.l2_norm = static_cast<double>(std::sqrt(sum_sq / static_cast<long double>(n_points)));
    return rep;
}

double bargmann_integral(const PhysParams& p) {
    p.validate_well();
    // y = delta u; on [0, 1] substitute u = t^2 to tame the sqrt(u) behaviour.
    const auto near = quad::integrate_adaptive(
        [](double t) {
            if (t == 0.0) return 0.0;
            const double u = t * t;
            return u * shape(u) * 2.0 * t;
        },
        0.0, 1.0);
    // Beyond u = 80 the integrand is below u e^-u / 2 ~ 1e-33.
    const auto far =
        quad::integrate_adaptive([](double u) { return u * shape(u); }, 1.0, 80.0);
    return p.coupling() * std::abs(p.v0) * p.delta * p.delta * (near.value + far.value);
}

double calogero_constant() {
    // u = t^4 on [0, 1] turns the u^(-1/4) endpoint into a smooth 4 t^2.
    const auto near = quad::integrate_adaptive(
        [](double t) {
            if (t == 0.0) return 0.0;
            const double u = t * t * t * t;
            return std::sqrt(shape(u)) * 4.0 * t * t * t;
        },
        0.0, 1.0);
    // Tail decays like e^(-u/2)/sqrt 2; cut at u = 120.
    const auto far =
        quad::integrate_adaptive([](double u) { return std::sqrt(shape(u)); }, 1.0, 120.0);
    return near.value + far.value;
}

double calogero_integral(const PhysParams& p) {
    p.validate_well();
    return std::sqrt(std::abs(p.v0)) * p.delta * calogero_constant();
}

double chadan_estimate(const PhysParams& p) {
    p.validate_well();
    return 2.0 * (std::numbers::sqrt2 - 1.0) *
           std::sqrt(p.m * p.delta * p.delta * std::abs(p.v0) / (p.hbar * p.hbar));
}

double generation_threshold(const PhysParams& p, int n_levels_required) {
    p.validate();
    if (n_levels_required < 1) {
        throw Error(ErrorKind::DomainError, "generation_threshold: need at least one level");
    }
    const double ratio = n_levels_required / (2.0 * (std::numbers::sqrt2 - 1.0));
    return ratio * ratio * p.hbar * p.hbar / (p.m * p.delta * p.delta);
}

}  // namespace expwell
