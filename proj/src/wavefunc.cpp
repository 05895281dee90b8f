#include "expwell/wavefunc.hpp"

#include <algorithm>
#include <cmath>

#include "expwell/errors.hpp"
#include "expwell/quadrature.hpp"
#include "expwell/specfun.hpp"

namespace expwell {

namespace {

const specfun::SeriesOptions kExtSeries{1e-18, 10000, 1e-6};

long double combination_coefficient(const SpectralParams& sp) {
    const long double a1 = sp.alpha1, a2 = sp.alpha2;
    const long double ab = static_cast<long double>(sp.alpha) * sp.beta;
    return 2.0L * a2 * (a1 - a2) / (ab - 2.0L * a2 * (a1 - a2));
}

long double bracket(const SpectralParams& sp, long double w) {
    const long double a = sp.alpha, b = sp.beta, a2 = sp.alpha2;
    const auto f1 = specfun::gauss_2f1_ext(a, b, 1.0L + 2.0L * a2, w, kExtSeries);
    const auto f2 = specfun::gauss_2f1_ext(a, b, 2.0L * a2, w, kExtSeries);
    return f1.value + combination_coefficient(sp) * f2.value;
}

}  // namespace

long double heun_side_ext(const SpectralParams& sp, long double x) {
    if (!(x >= 0.0L && x < 1.0L)) {
        throw Error(ErrorKind::DomainError, "heun_side: x must lie in [0, 1)");
    }
    return bracket(sp, (1.0L - x) / 2.0L);
}

long double psi_raw_ext(const PhysParams& p, const SpectralParams& sp, long double y) {
    if (!(y >= 0.0L)) throw Error(ErrorKind::DomainError, "psi_raw: y must be non-negative");
    const long double u = y / p.delta;
    const long double z = std::sqrt(-std::expm1(-u));
    const long double one_minus_z = std::exp(-u) / (1.0L + z);
    const long double envelope =
        std::pow(1.0L + z, static_cast<long double>(sp.alpha1)) *
        std::pow(one_minus_z, static_cast<long double>(sp.alpha2));
    return envelope * bracket(sp, one_minus_z / 2.0L);
}

double psi_raw(const PhysParams& p, const SpectralParams& sp, double y) {
    if (!(y > 0.0)) throw Error(ErrorKind::DomainError, "psi_raw: y must be positive");
    return static_cast<double>(psi_raw_ext(p, sp, y));
}

long double BoundState::eval_ext(long double y) const {
    return norm_constant * psi_raw_ext(params, sp, y);
}

double BoundState::decay_rate() const { return std::sqrt(-params.coupling() * energy); }

namespace {

double cutoff(const PhysParams& p, double kappa) { return std::max(50.0 * p.delta, 40.0 / kappa); }

// integral_0^inf weight(y) f(y) g(y) dy for two unnormalized evaluators.
template <class F, class G, class W>
double split_integral(const PhysParams& p, const F& f, const G& g, const W& weight, double y_max,
                      double decay_sum) {
    const quad::AdaptiveOptions opts{1e-12, 18};
    const double root_delta = std::sqrt(p.delta);
    const auto near = quad::integrate_adaptive(
        [&](double t) {
            if (t == 0.0) return 0.0;
            const double y = t * t;
            return weight(y) * f(y) * g(y) * 2.0 * t;
        },
        0.0, root_delta, opts);
    // Break the outer range into pieces so each Kronrod panel sees only a few
    // oscillations of the integrand.
    double far = 0.0;
    const int pieces = 8;
    double lo = p.delta;
    for (int i = 1; i <= pieces; ++i) {
        const double hi = p.delta * std::pow(y_max / p.delta, static_cast<double>(i) / pieces);
        far += quad::integrate_adaptive([&](double y) { return weight(y) * f(y) * g(y); }, lo, hi,
                                        opts)
                   .value;
        lo = hi;
    }
    // Exponential tail past y_max, leading order.
    const double tail = weight(y_max) * f(y_max) * g(y_max) / decay_sum;
    return near.value + far + tail;
}

}  // namespace

BoundState normalize(const PhysParams& p, double energy, const NormalizeOptions& opts) {
    p.validate_well();
    double residual;
    try {
        residual = std::abs(s_of_e(p, energy));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DivisionDegenerate) throw;
        residual = std::abs(origin_amplitude(p, energy));
    }
    if (!(residual < opts.root_tolerance)) {
        throw Error(ErrorKind::NotAnEigenvalue,
                    "|S(E)| = " + std::to_string(residual) + " at E = " + std::to_string(energy));
    }

    BoundState s;
    s.params = p;
    s.energy = energy;
    s.sp = spectral_params(p, energy);
    const double kappa = s.decay_rate();
    s.y_max = cutoff(p, kappa);

    const auto raw = [&](double y) { return static_cast<double>(psi_raw_ext(p, s.sp, y)); };
    const double norm2 =
        split_integral(p, raw, raw, [](double) { return 1.0; }, s.y_max, 2.0 * kappa);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw Error(ErrorKind::QuadratureFailure, "normalization integral is not positive");
    }
    const double sign = psi_raw_ext(p, s.sp, 1e-4L * p.delta) >= 0.0L ? 1.0 : -1.0;
    s.norm_constant = sign / std::sqrt(norm2);
    return s;
}

std::vector<BoundState> bound_states(const LevelSet& levels) {
    std::vector<BoundState> out;
    const std::size_t n = levels.count();
    for (std::size_t i = 0; i < n; ++i) {
        BoundState s = normalize(levels.params, levels.energies[i]);
        s.ground_index = i;
        s.paper_index = n - i;
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

template <class W>
double weighted_overlap(const BoundState& s1, const BoundState& s2, const W& weight) {
    if (!(s1.params == s2.params)) {
        throw Error(ErrorKind::ParamMismatch, "states belong to different parameter sets");
    }
    const double y_max = std::max(s1.y_max, s2.y_max);
    return split_integral(s1.params, s1, s2, weight, y_max, s1.decay_rate() + s2.decay_rate());
}

}  // namespace

double overlap(const BoundState& s1, const BoundState& s2) {
    return weighted_overlap(s1, s2, [](double) { return 1.0; });
}

double matrix_element(const BoundState& s1, const BoundState& s2) {
    return weighted_overlap(s1, s2, [](double y) { return y; });
}

std::vector<double> energy_intervals(const LevelSet& levels) {
    if (levels.count() < 2) {
        throw Error(ErrorKind::TooFewLevels, "energy intervals need at least two levels");
    }
    std::vector<double> e = levels.energies;
    std::sort(e.begin(), e.end());
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) out.push_back(e[i + 1] - e[i]);
    return out;
}

std::size_t SweepTable::failed() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok; }));
}

namespace {

SweepRow sweep_point(const PhysParams& base, double v0, const SweepOptions& opts) {
    SweepRow row;
    row.v0 = v0;
    try {
        PhysParams p = base;
        p.v0 = v0;
        ScanConfig scan = opts.scan;
        scan.exec = Exec::Serial;
        const LevelSet ls = find_levels(p, scan);
        row.levels = ls.energies;
        if (ls.count() >= 2) {
            row.intervals = energy_intervals(ls);
            if (opts.matrix_elements) {
                const auto states = bound_states(ls);
                const std::size_t n = states.size();
                row.m12 = matrix_element(states[n - 1], states[n - 2]);
                row.m12_ground = matrix_element(states[0], states[1]);
            }
        }
        row.ok = true;
    } catch (const Error& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

}  // namespace

SweepTable sweep_v0(const PhysParams& base, const std::vector<double>& v0_values,
                    const SweepOptions& opts) {
    base.validate();
    for (double v : v0_values) {
        if (!(v < 0.0)) throw Error(ErrorKind::DomainError, "sweep: every V0 must be negative");
    }
    SweepTable table;
    table.rows.resize(v0_values.size());
    const auto n = static_cast<long>(v0_values.size());
    if (opts.exec == Exec::Serial) {
        for (long i = 0; i < n; ++i) table.rows[i] = sweep_point(base, v0_values[i], opts);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(opts.threads))
        for (long i = 0; i < n; ++i) table.rows[i] = sweep_point(base, v0_values[i], opts);
    }

    // Emergence points along increasing |V0|.
    std::vector<const SweepRow*> ok;
    for (const auto& r : table.rows) {
        if (r.ok) ok.push_back(&r);
    }
    std::sort(ok.begin(), ok.end(),
              [](const SweepRow* a, const SweepRow* b) { return std::abs(a->v0) < std::abs(b->v0); });
    ScanConfig scan = opts.scan;
    scan.exec = Exec::Serial;
    auto count_at = [&](double magnitude) {
        PhysParams p = base;
        p.v0 = -magnitude;
        return count_levels(p, scan);
    };
    for (std::size_t i = 0; i + 1 < ok.size(); ++i) {
        const std::size_t c_lo = ok[i]->levels.size();
        const std::size_t c_hi = ok[i + 1]->levels.size();
        for (std::size_t k = c_lo + 1; k <= c_hi; ++k) {
            double lo = std::abs(ok[i]->v0), hi = std::abs(ok[i + 1]->v0);
            while (hi - lo > opts.emergence_tol) {
                const double mid = 0.5 * (lo + hi);
                (count_at(mid) >= k ? hi : lo) = mid;
            }
            table.emergence_points.push_back({-0.5 * (lo + hi), k});
        }
    }
    return table;
}

}  // namespace expwell
