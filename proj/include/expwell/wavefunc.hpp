#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "expwell/model.hpp"
#include "expwell/parallel.hpp"
#include "expwell/spectrum.hpp"

namespace expwell {

/// Unnormalized decaying solution at any E < 0, evaluated in extended
/// precision:
///   (1+z)^a1 (1-z)^a2 [ 2F1(alpha, beta; 1+2a2; w) + C 2F1(alpha, beta; 2a2; w) ]
/// with z = map_x(y), w = (1-z)/2 and C = 2a2(a1-a2) / (alpha beta - 2a2(a1-a2)).
/// The (z-1)^a2 of the textbook form is taken as (1-z)^a2; the constant phase
/// drops out on normalization.
long double psi_raw_ext(const PhysParams& p, const SpectralParams& sp, long double y);
double psi_raw(const PhysParams& p, const SpectralParams& sp, double y);

/// The bracketed 2F1 combination alone, as a function of the Heun variable x:
/// psi divided by (1+x)^a1 (1-x)^a2.
long double heun_side_ext(const SpectralParams& sp, long double x);

struct BoundState {
    PhysParams params;
    double energy = 0.0;
    SpectralParams sp;
    double norm_constant = 1.0;  ///< includes the sign convention
    std::size_t ground_index = 0;  ///< 0 = deepest; equals the node count
    std::size_t paper_index = 1;   ///< 1 = shallowest
    double y_max = 0.0;            ///< quadrature cut; the tail beyond is analytic

    /// Normalized wavefunction, positive on the lobe nearest the origin.
    long double eval_ext(long double y) const;
    double operator()(double y) const { return static_cast<double>(eval_ext(y)); }
    /// sqrt(-2 m E) / hbar
    double decay_rate() const;
};

struct NormalizeOptions {
    double root_tolerance = 1e-6;  ///< on |S(E)|
};

/// Normalizes the decaying solution at an eigenvalue. Throws NotAnEigenvalue
/// when |S(E)| exceeds the root tolerance.
BoundState normalize(const PhysParams& p, double energy, const NormalizeOptions& opts = {});

/// Normalized states for every level, with ground/paper indices filled in.
std::vector<BoundState> bound_states(const LevelSet& levels);

/// Quadrature of f(y) psi_1(y) psi_2(y) over (0, inf) using the same splits
/// as the normalization (y = t^2 on [0, delta], adaptive beyond, analytic
/// tail past y_max).
double overlap(const BoundState& s1, const BoundState& s2);

/// <psi_1 | y | psi_2>, the dipole matrix element.
double matrix_element(const BoundState& s1, const BoundState& s2);

/// Consecutive differences of the ascending energies.
std::vector<double> energy_intervals(const LevelSet& levels);

struct SweepRow {
    double v0 = 0.0;
    bool ok = false;
    std::string error;
    std::vector<double> levels;     ///< ascending
    std::vector<double> intervals;  ///< consecutive differences
    std::optional<double> m12;        ///< between the two shallowest states
    std::optional<double> m12_ground; ///< between ground and first excited state
};

struct Emergence {
    double v0 = 0.0;        ///< where the count first reaches `level_count`
    std::size_t level_count = 0;
};

struct SweepTable {
    std::vector<SweepRow> rows;  ///< one per grid value, in grid order
    std::vector<Emergence> emergence_points;

    std::size_t failed() const;
};

struct SweepOptions {
    ScanConfig scan;
    bool matrix_elements = true;
    double emergence_tol = 1e-3;  ///< bisection tolerance on |V0|
    Exec exec = Exec::Parallel;
    int threads = 0;
};

/// Levels, intervals and M12 over a grid of V0 values (all negative, sorted
/// monotonically), plus bisection-refined points where the count increments.
SweepTable sweep_v0(const PhysParams& base, const std::vector<double>& v0_values,
                    const SweepOptions& opts = {});

}  // namespace expwell
