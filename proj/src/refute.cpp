#include "expwell/refute.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "expwell/errors.hpp"
#include "expwell/specfun.hpp"
#include "expwell/spectrum.hpp"
#include "expwell/wavefunc.hpp"

namespace expwell::refute {

double wrong_u(const WrongSolutionParams& wp, double x) {
    if (!(wp.sigma > 0.0) || wp.rho < 0.0) {
        throw Error(ErrorKind::DomainError, "wrong_u: need sigma > 0 and rho >= 0");
    }
    if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "wrong_u: x must be non-negative");
    const double root2rho = std::sqrt(2.0 * wp.rho);
    const double z = (wp.sign < 0 ? -1.0 : 1.0) * std::sqrt(wp.sigma * x) + root2rho;
    double value = 0.0;
    if (wp.c1 != 0.0) value += wp.c1 * specfun::hermite_fn(wp.rho, z).value;
    if (wp.c2 != 0.0) value += wp.c2 * specfun::kummer_1f1(-wp.rho / 2.0, 0.5, z * z).value;
    return value * std::exp(-root2rho * z);
}

double wrong_energy(int n, const PhysParams& p) {
    p.validate_well();
    if (n < 1) throw Error(ErrorKind::DomainError, "wrong_energy: n must be positive");
    return std::pow(static_cast<double>(n), -2.0 / 3.0) *
           std::cbrt(-p.m * p.v0 / (p.hbar * p.hbar)) * p.v0 / 2.0;
}

double wrong_psi(int n, double sigma, double x) {
    if (n < 1 || !(sigma > 0.0)) {
        throw Error(ErrorKind::DomainError, "wrong_psi: need n >= 1 and sigma > 0");
    }
    if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "wrong_psi: x must be non-negative");
    const double r = std::sqrt(2.0 * n);
    const double z = r - std::sqrt(sigma * x);
    const double poly =
        specfun::hermite_fn(n, z).value - r * specfun::hermite_fn(n - 1, z).value;
    return -poly / r * std::exp(-r * z - sigma * x / 2.0);
}

namespace {

struct Derivs {
    std::vector<long double> f, d1, d2;
};

double singular_distance(double x) {
    return std::min({std::abs(x), std::abs(x - 1.0), std::abs(x + 1.0)});
}

Derivs heun_derivatives(const Evaluator& u, const std::vector<double>& grid) {
    Derivs d;
    for (double xd : grid) {
        const double dist = singular_distance(xd);
        if (dist < 1e-3) {
            throw Error(ErrorKind::DomainError, "heun_residual: grid point too close to a singularity");
        }
        const long double x = xd;
        const long double h = std::min(1e-4, 0.1 * dist);
        const long double fm2 = u(x - 2 * h), fm1 = u(x - h), f0 = u(x), fp1 = u(x + h),
                          fp2 = u(x + 2 * h);
        d.f.push_back(f0);
        d.d1.push_back((fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h));
        d.d2.push_back((-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h));
    }
    return d;
}

ResidualReport heun_defects(const Derivs& d, const HeunParams& hp, const std::vector<double>& grid) {
    ResidualReport rep;
    rep.grid = grid;
    long double sum_sq = 0;
    std::size_t usable = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const long double x = grid[i];
        const long double p_coef = hp.a / (x + 1) + hp.b / x + hp.c / (x - 1);
        const long double q_coef =
            -(hp.k - static_cast<long double>(hp.beta_h) * hp.gamma_h * x) / (x * (x + 1) * (x - 1));
        const long double t2 = d.d2[i], t1 = d.d1[i] * p_coef, t0 = d.f[i] * q_coef;
        const long double scale = std::max({std::abs(t2), std::abs(t1), std::abs(t0)});
        const long double defect = t2 + t1 + t0;
        rep.scale.push_back(static_cast<double>(scale));
        double rel = 0.0;
        if (scale > 1e-300L) {
            rel = static_cast<double>(std::abs(defect) / scale);
            ++usable;
        }
        rep.residuals.push_back(rel);
        rep.max_norm = std::max(rep.max_norm, rel);
        sum_sq += static_cast<long double>(rel) * rel;
    }
    if (usable == 0) {
        throw Error(ErrorKind::NumericalBreakdown, "heun_residual: u vanishes on the whole grid");
    }
    rep.l2_norm = static_cast<double>(std::sqrt(sum_sq / static_cast<long double>(grid.size())));
    return rep;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return g;
}

template <class Fn>
void for_each_index(std::size_t n, Exec exec, int threads, const Fn& fn) {
    const auto count = static_cast<long>(n);
    if (exec == Exec::Serial) {
        for (long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
        for (long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

ResidualReport heun_residual(const Evaluator& u, const HeunParams& hp,
                             const std::vector<double>& grid) {
    if (grid.empty()) throw Error(ErrorKind::DomainError, "heun_residual: empty grid");
    return heun_defects(heun_derivatives(u, grid), hp, grid);
}

bool RefuteReport::all_passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

RefuteReport refute_report(const PhysParams& p, const RefuteConfig& cfg_in) {
    p.validate_well();
    RefuteConfig cfg = cfg_in;
    if (cfg.rho_grid.empty()) cfg.rho_grid = geometric_grid(0.5, 5.0, 10);
    if (cfg.sigma_grid.empty()) cfg.sigma_grid = geometric_grid(0.5, 5.0, 10);
    if (cfg.psi_sigma_grid.empty()) cfg.psi_sigma_grid = geometric_grid(0.1, 10.0, 10);

    RefuteReport rep;
    rep.params = p;

    // Exact spectrum and the positive controls on it.
    ScanConfig scan;
    scan.exec = cfg.exec;
    scan.threads = cfg.threads;
    const LevelSet levels = find_levels(p, scan);
    rep.exact_levels = levels.energies;
    rep.chadan_bound = chadan_estimate(p);
    rep.bargmann = bargmann_integral(p);
    const auto states = bound_states(levels);

    const double y_lo = 1e-3, y_hi = 10.0 * p.delta;
    const auto heun_grid = linear_grid(0.02, 0.98, cfg.heun_points);
    for (const BoundState& s : states) {
        const auto r = schrodinger_residual(
            p, s.energy, [&](long double y) { return s.eval_ext(y); }, y_lo, y_hi,
            cfg.residual_points);
        rep.correct_schrodinger_max = std::max(rep.correct_schrodinger_max, r.max_norm);
        const auto h = heun_residual([&](long double x) { return heun_side_ext(s.sp, x); },
                                     heun_params(p, s.energy), heun_grid);
        rep.correct_heun_max = std::max(rep.correct_heun_max, h.max_norm);
    }
    {
        // Free particle: sin(k y) at E = hbar^2 k^2 / 2m with V = 0.
        const double k = 1.3 / p.delta;
        const double e = k * k / p.coupling();
        ResidualOptions free;
        free.potential_override = [](double) { return 0.0; };
        const auto r = schrodinger_residual(
            p, e, [k](long double y) { return std::sin(k * y); }, 0.05 * p.delta, 2.0 * p.delta,
            cfg.residual_points, free);
        rep.free_particle_max = r.max_norm;
    }

    // Heun residual of the Hermite/Kummer combination: for each (rho, sigma,
    // sign, c1:c2) keep the best agreement over a set of trial energies.
    std::vector<double> trial_energies = levels.energies;
    for (int n = 1; n <= 3; ++n) trial_energies.push_back(wrong_energy(n, p));
    std::vector<HeunParams> trial_params;
    for (double e : trial_energies) trial_params.push_back(heun_params(p, e));

    const std::pair<double, double> combos[] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    for (double rho : cfg.rho_grid) {
        for (double sigma : cfg.sigma_grid) {
            for (int sign : {-1, 1}) {
                for (const auto& [c1, c2] : combos) {
                    rep.heun_cells.push_back({rho, sigma, sign, c1, c2, 0.0});
                }
            }
        }
    }
    for_each_index(rep.heun_cells.size(), cfg.exec, cfg.threads, [&](std::size_t i) {
        HeunCell& cell = rep.heun_cells[i];
        const WrongSolutionParams wp{cell.rho, cell.sigma, cell.c1, cell.c2, 1, cell.sign};
        double best = std::numeric_limits<double>::infinity();
        try {
            const Derivs d = heun_derivatives([&](long double x) { return wrong_u(wp, x); },
                                              heun_grid);
            for (const HeunParams& hp : trial_params) {
                best = std::min(best, heun_defects(d, hp, heun_grid).max_norm);
            }
        } catch (const Error&) {
            best = std::numeric_limits<double>::quiet_NaN();
        }
        cell.defect = best;
    });

    // Schrodinger residual of the polynomial reductions at the claimed
    // energies, under both readings of their coordinate.
    for (int n = 1; n <= cfg.psi_levels; ++n) {
        for (double sigma : cfg.psi_sigma_grid) {
            for (const char* reading : {"x=y", "x=map_x(y)"}) {
                rep.psi_cells.push_back({n, sigma, reading, wrong_energy(n, p), 0.0});
            }
        }
    }
    for_each_index(rep.psi_cells.size(), cfg.exec, cfg.threads, [&](std::size_t i) {
        PsiCell& cell = rep.psi_cells[i];
        const bool mapped = cell.reading != std::string("x=y");
        try {
            const auto r = schrodinger_residual(
                p, cell.energy,
                [&](long double y) {
                    const double x = mapped ? map_x(p, static_cast<double>(y)) : static_cast<double>(y);
                    return wrong_psi(cell.n, cell.sigma, x);
                },
                y_lo, y_hi, cfg.residual_points);
            cell.defect = r.max_norm;
        } catch (const Error&) {
            cell.defect = std::numeric_limits<double>::quiet_NaN();
        }
    });

    auto min_defect = [](const auto& cells) {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& c : cells) m = std::isnan(c.defect) ? -1.0 : std::min(m, c.defect);
        return m;
    };
    rep.heun_min_defect = min_defect(rep.heun_cells);
    rep.psi_min_defect = min_defect(rep.psi_cells);

    // Origin values.
    for (double sigma : cfg.psi_sigma_grid) {
        rep.origin_sigma.push_back(sigma);
        rep.origin_ground.push_back(wrong_psi(1, sigma, 0.0));
    }
    for (int n = 1; n <= cfg.origin_levels; ++n) rep.origin_by_level.push_back(wrong_psi(n, 1.0, 0.0));

    // Claimed spectrum versus the exact finite one.
    const double shallowest = levels.count() ? levels.energies.back() : 0.0;
    for (int n = 1; n <= cfg.claimed_levels; ++n) {
        const double e = wrong_energy(n, p);
        rep.claimed_levels.push_back(e);
        double s;
        try {
            s = std::abs(s_of_e(p, e));
        } catch (const Error&) {
            s = std::numeric_limits<double>::infinity();
        }
        rep.claimed_s_values.push_back(s);
        if (levels.count() && e > shallowest) ++rep.claimed_above_shallowest;
    }

    // Negative control: the decaying solution at an energy between two levels
    // satisfies the ODE but not the origin condition.
    if (levels.count() >= 2) {
        rep.off_root_energy = 0.5 * (levels.energies[0] + levels.energies[1]);
    } else {
        rep.off_root_energy = 0.5 * (levels.count() ? levels.energies[0] : -p.energy_unit());
    }
    {
        const SpectralParams sp = spectral_params(p, rep.off_root_energy);
        const auto r = schrodinger_residual(
            p, rep.off_root_energy, [&](long double y) { return psi_raw_ext(p, sp, y); }, y_lo, y_hi,
            cfg.residual_points);
        rep.off_root_residual = r.max_norm;
        double peak = 0.0;
        for (double y : geometric_grid(1e-3, y_hi, 400)) {
            peak = std::max(peak, std::abs(static_cast<double>(psi_raw_ext(p, sp, y))));
        }
        rep.off_root_origin = std::abs(static_cast<double>(psi_raw_ext(p, sp, 0.0L))) / peak;
        try {
            normalize(p, rep.off_root_energy);
        } catch (const Error& e) {
            rep.off_root_flagged = e.kind() == ErrorKind::NotAnEigenvalue;
        }
    }

    // Verdicts.
    const double controls_max = std::max(rep.correct_schrodinger_max, rep.free_particle_max);
    rep.checks.push_back(
        {"positive_controls",
         rep.correct_schrodinger_max < 1e-4 && rep.correct_heun_max < 1e-3 &&
             rep.free_particle_max < 1e-6,
         "exact-solution Schrodinger defect " + fmt(rep.correct_schrodinger_max) +
             ", Heun defect " + fmt(rep.correct_heun_max) + ", free particle " +
             fmt(rep.free_particle_max)});
    rep.checks.push_back(
        {"heun_solution_refuted",
         rep.heun_min_defect > 0.05 && rep.heun_min_defect >= 100.0 * rep.correct_heun_max,
         "smallest Hermite/Kummer Heun defect over " + std::to_string(rep.heun_cells.size()) +
             " cells: " + fmt(rep.heun_min_defect)});
    rep.checks.push_back(
        {"wavefunctions_refuted",
         rep.psi_min_defect > 0.1 && rep.psi_min_defect >= 100.0 * controls_max,
         "smallest polynomial-reduction Schrodinger defect over " +
             std::to_string(rep.psi_cells.size()) + " cells: " + fmt(rep.psi_min_defect)});
    {
        bool exact = true;
        for (double v : rep.origin_ground) exact = exact && std::abs(v + std::exp(-2.0)) < 1e-15;
        bool nonzero = true;
        for (double v : rep.origin_by_level) nonzero = nonzero && std::abs(v) > 0.01;
        rep.checks.push_back({"origin_nonvanishing", exact && nonzero,
                              "wrong ground state at origin " + fmt(rep.origin_ground.front()) +
                                  " (sigma-independent: " + (exact ? "yes" : "no") + ")"});
    }
    {
        bool not_eigen = true;
        for (double s : rep.claimed_s_values) not_eigen = not_eigen && s > 1e-3;
        const bool finite = std::isfinite(rep.bargmann) && levels.count() >= 1 &&
                            levels.count() <= static_cast<std::size_t>(std::ceil(rep.chadan_bound));
        rep.checks.push_back(
            {"finite_spectrum", finite && not_eigen &&
                                    rep.claimed_levels.size() > levels.count(),
             "exact count " + std::to_string(levels.count()) + " (bound " + fmt(rep.chadan_bound) +
                 "), claimed sequence has " + std::to_string(rep.claimed_levels.size()) +
                 "+ levels, none of which solve S(E) = 0"});
    }
    rep.checks.push_back(
        {"off_root_flagged",
         rep.off_root_flagged && rep.off_root_residual < 1e-4 && rep.off_root_origin > 1e-3,
         "decaying solution at E = " + fmt(rep.off_root_energy) + " solves the ODE (defect " +
             fmt(rep.off_root_residual) + ") but psi(0)/peak = " + fmt(rep.off_root_origin)});
    return rep;
}

}  // namespace expwell::refute
