#include "expwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expwell/errors.hpp"
#include "expwell/specfun.hpp"

namespace expwell {

SpectralParams spectral_params(const PhysParams& p, double energy) {
    p.validate_well();
    if (!(energy < 0.0)) throw Error(ErrorKind::DomainError, "spectral_params: E must be negative");
    const double scale = p.coupling() * p.delta * p.delta;  // 2 m delta^2 / hbar^2
    SpectralParams sp;
    sp.alpha1 = std::sqrt(scale * (-energy - 2.0 * p.v0));
    sp.alpha2 = std::sqrt(scale * -energy);
    const double s = std::sqrt(4.0 * scale * (-energy - p.v0));
    sp.alpha = sp.alpha1 + sp.alpha2 + s;
    // alpha * beta = -(a1 - a2)^2; this form avoids the cancellation in
    // a1 + a2 - s when |V0| is large.
    const double diff = sp.alpha1 - sp.alpha2;
    sp.beta = -(diff * diff) / sp.alpha;
    sp.q = sp.alpha2 - sp.alpha1;
    return sp;
}

namespace {

struct OriginParts {
    double f_upper;  // 2F1(alpha, beta; 1 + 2 a2; 1/2)
    double f_lower;  // 2F1(alpha, beta; 2 a2; 1/2)
    double f_lower_err;
    SpectralParams sp;
};

OriginParts origin_parts(const PhysParams& p, double energy) {
    const SpectralParams sp = spectral_params(p, energy);
    const auto f1 = specfun::gauss_2f1(sp.alpha, sp.beta, 1.0 + 2.0 * sp.alpha2, 0.5);
    const auto f2 = specfun::gauss_2f1(sp.alpha, sp.beta, 2.0 * sp.alpha2, 0.5);
    return {f1.value, f2.value, f2.error_estimate, sp};
}

double s_from_parts(const OriginParts& o) {
    if (std::abs(o.f_lower) <= o.f_lower_err) {
        throw Error(ErrorKind::DivisionDegenerate, "s_of_e: denominator 2F1 vanishes");
    }
    const SpectralParams& sp = o.sp;
    const double two_a2q = 2.0 * sp.alpha2 * sp.q;
    const double coef = (sp.alpha * sp.beta + two_a2q) / two_a2q;
    return 1.0 - coef * o.f_upper / o.f_lower;
}

double origin_from_parts(const OriginParts& o) {
    const SpectralParams& sp = o.sp;
    return o.f_upper - 2.0 * sp.alpha2 / (sp.alpha1 + sp.alpha2) * o.f_lower;
}

}  // namespace

double s_of_e(const PhysParams& p, double energy) { return s_from_parts(origin_parts(p, energy)); }

double origin_amplitude(const PhysParams& p, double energy) {
    return origin_from_parts(origin_parts(p, energy));
}

double s3f2_of_e(const PhysParams& p, double energy) {
    const SpectralParams sp = spectral_params(p, energy);
    const double ratio = -sp.alpha * sp.beta / sp.q;
    return specfun::clausen_3f2(sp.alpha, sp.beta, 1.0 + ratio, ratio, 1.0 + 2.0 * sp.alpha2, 0.5)
        .value;
}

std::vector<double> energy_grid(double e_top_abs, double e_floor, int points_per_decade) {
    if (!(e_top_abs > 0.0) || !(e_floor < -e_top_abs) || points_per_decade < 1) {
        throw Error(ErrorKind::DomainError, "energy_grid: need 0 < e_top < |e_floor|");
    }
    const double decades = std::log10(-e_floor / e_top_abs);
    const auto n = static_cast<std::size_t>(std::ceil(decades * points_per_decade)) + 1;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        g[i] = -e_top_abs * std::pow(10.0, t * decades);
    }
    g.front() = -e_top_abs;
    g.back() = e_floor;
    return g;
}

namespace {

SpectrumSample sample_one(const PhysParams& p, double energy, double pole_guard) {
    SpectrumSample s;
    s.energy = energy;
    s.s = std::numeric_limits<double>::quiet_NaN();
    try {
        const SpectralParams sp = spectral_params(p, energy);
        if (specfun::near_nonpositive_integer(2.0 * sp.alpha2, pole_guard)) return s;
        const OriginParts o = origin_parts(p, energy);
        s.origin = origin_from_parts(o);
        s.valid = std::isfinite(s.origin);
        try {
            s.s = s_from_parts(o);
        } catch (const Error&) {
        }
    } catch (const Error&) {
        s.valid = false;
    }
    return s;
}

std::vector<SpectrumSample> sample_spectrum_impl(const PhysParams& p,
                                                 std::span<const double> energies, Exec exec,
                                                 int threads, double pole_guard) {
    std::vector<SpectrumSample> out(energies.size());
    const auto n = static_cast<long>(energies.size());
    if (exec == Exec::Serial) {
        for (long i = 0; i < n; ++i) out[i] = sample_one(p, energies[i], pole_guard);
    } else {
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
        for (long i = 0; i < n; ++i) out[i] = sample_one(p, energies[i], pole_guard);
    }
    return out;
}

struct Bracket {
    double shallow, deep;
};

struct ScanOutcome {
    std::vector<Bracket> brackets;
    std::size_t spurious = 0;
    double floor = 0.0;
};

ScanOutcome scan_brackets(const PhysParams& p, const ScanConfig& scan) {
    p.validate_well();
    const double top = scan.e_top * p.energy_unit();
    double floor = scan.scan_floor.value_or(default_scan_floor(p));
    if (!(floor < -top)) {
        throw Error(ErrorKind::DomainError, "find_levels: scan floor must lie below e_top");
    }
    for (int extension = 0;; ++extension) {
        const auto grid = energy_grid(top, floor, scan.points_per_decade);
        const auto samples = sample_spectrum_impl(p, grid, scan.exec, scan.threads, scan.pole_guard);

        ScanOutcome out;
        out.floor = floor;
        const SpectrumSample* prev = nullptr;
        for (const auto& s : samples) {
            if (!s.valid) continue;
            if (prev) {
                const bool origin_flip = std::signbit(prev->origin) != std::signbit(s.origin) ||
                                         s.origin == 0.0;
                if (origin_flip) {
                    out.brackets.push_back({prev->energy, s.energy});
                } else if (std::isfinite(prev->s) && std::isfinite(s.s) &&
                           std::signbit(prev->s) != std::signbit(s.s)) {
                    ++out.spurious;
                }
            }
            prev = &s;
        }

        // A root in the deepest decade means the floor may be too shallow.
        const bool deep_root = std::any_of(out.brackets.begin(), out.brackets.end(),
                                           [&](const Bracket& b) { return b.deep < floor / 10.0; });
        if (scan.scan_floor || !deep_root || extension >= 6) return out;
        floor *= 10.0;
    }
}

double refine(const PhysParams& p, Bracket b, double rel_tol) {
    double hi = b.shallow, lo = b.deep;
    double f_hi;
    try {
        f_hi = origin_amplitude(p, hi);
    } catch (const Error& e) {
        throw Error(ErrorKind::ScanIncomplete, std::string("bracket endpoint failed: ") + e.what());
    }
    if (f_hi == 0.0) return hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo < rel_tol * std::max(1.0, std::abs(mid))) return mid;
        double f_mid;
        try {
            f_mid = origin_amplitude(p, mid);
        } catch (const Error& e) {
            throw Error(ErrorKind::ScanIncomplete, std::string("bisection failed: ") + e.what());
        }
        if (f_mid == 0.0) return mid;
        if (std::signbit(f_mid) == std::signbit(f_hi)) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<SpectrumSample> sample_spectrum(const PhysParams& p, std::span<const double> energies,
                                            Exec exec, int threads) {
    p.validate_well();
    return sample_spectrum_impl(p, energies, exec, threads, ScanConfig{}.pole_guard);
}

double default_scan_floor(const PhysParams& p) {
    p.validate_well();
    const double g = std::abs(p.v0) * std::sqrt(p.delta);
    return -std::cbrt(p.coupling() * g * g * g * g);
}

LevelSet find_levels(const PhysParams& p, const ScanConfig& scan) {
    const ScanOutcome outcome = scan_brackets(p, scan);
    LevelSet ls;
    ls.params = p;
    ls.estimate = chadan_estimate(p);
    ls.scan_floor = outcome.floor;
    ls.spurious_brackets = outcome.spurious;
    for (const Bracket& b : outcome.brackets) ls.energies.push_back(refine(p, b, scan.root_rel_tol));
    std::sort(ls.energies.begin(), ls.energies.end());
    return ls;
}

std::size_t count_levels(const PhysParams& p, const ScanConfig& scan) {
    return scan_brackets(p, scan).brackets.size();
}

}  // namespace expwell
