#pragma once

// Exact spectrum of the well. The decaying solution is
//
//   psi = (1+z)^a1 (1-z)^a2 [ 2F1(alpha, beta; 1+2a2; w) + C 2F1(alpha, beta; 2a2; w) ],
//   z = sqrt(1 - e^(-y/delta)),  w = (1 - z)/2,
//
// and bound states are the energies where psi(0) = 0. S(E) below is that
// condition divided through by the second 2F1, so it has poles wherever the
// denominator vanishes; the scanners bracket the pole-free origin amplitude
// instead and use S only for reporting.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "expwell/model.hpp"
#include "expwell/parallel.hpp"

namespace expwell {

struct SpectralParams {
    double alpha1 = 0.0;  ///< sqrt(2 m delta^2 (-E - 2 V0)) / hbar
    double alpha2 = 0.0;  ///< sqrt(-2 m delta^2 E) / hbar
    double alpha = 0.0;
    double beta = 0.0;
    double q = 0.0;       ///< alpha2 - alpha1
};

SpectralParams spectral_params(const PhysParams& p, double energy);

/// S(E) = 1 - [(alpha beta + 2 a2 q)/(2 a2 q)] 2F1(..;1+2a2;1/2) / 2F1(..;2a2;1/2).
double s_of_e(const PhysParams& p, double energy);

/// 3F2(alpha, beta, 1 - alpha beta/q; -alpha beta/q, 1 + 2 a2; 1/2). Vanishes
/// exactly where s_of_e does.
double s3f2_of_e(const PhysParams& p, double energy);

/// psi(y -> 0) of the unnormalized decaying solution:
/// 2F1(..;1+2a2;1/2) - 2 a2/(a1 + a2) 2F1(..;2a2;1/2). Continuous in E < 0.
double origin_amplitude(const PhysParams& p, double energy);

struct ScanConfig {
    /// Shallowest energy examined, in units of hbar^2/(m delta^2).
    double e_top = 1e-6;
    int points_per_decade = 400;
    /// Deepest energy examined (absolute, negative). Defaults to a lower bound
    /// on the ground state from the -|V0| sqrt(delta/y) comparison well.
    std::optional<double> scan_floor;
    double pole_guard = 1e-4;
    double root_rel_tol = 1e-10;
    Exec exec = Exec::Parallel;
    int threads = 0;
};

struct LevelSet {
    PhysParams params;
    std::vector<double> energies;  ///< ascending (deepest first)
    double estimate = 0.0;         ///< chadan_estimate(params)
    double scan_floor = 0.0;
    std::size_t spurious_brackets = 0;  ///< S sign flips caused by its poles

    std::size_t count() const { return energies.size(); }
};

struct SpectrumSample {
    double energy = 0.0;
    double origin = 0.0;  ///< origin_amplitude
    double s = 0.0;       ///< s_of_e (NaN where the denominator is degenerate)
    bool valid = false;
};

/// Geometric energy grid from -e_top_abs down to e_floor (< 0), ordered from
/// shallow to deep.
std::vector<double> energy_grid(double e_top_abs, double e_floor, int points_per_decade);

/// Evaluates the origin amplitude and S on each energy. Serial and Parallel
/// produce identical output.
std::vector<SpectrumSample> sample_spectrum(const PhysParams& p, std::span<const double> energies,
                                            Exec exec, int threads = 0);

/// Default deepest scan energy: -(2m g^4/hbar^2)^(1/3) with g = |V0| sqrt(delta).
/// The ground state of the comparison well -g/sqrt(y) sits near 0.45 of this.
double default_scan_floor(const PhysParams& p);

LevelSet find_levels(const PhysParams& p, const ScanConfig& scan = {});

/// Number of sign changes of the origin amplitude on the scan grid, without
/// refining roots.
std::size_t count_levels(const PhysParams& p, const ScanConfig& scan = {});

}  // namespace expwell
