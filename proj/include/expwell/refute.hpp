#pragma once

// Numerical evidence against the Hermite/Kummer "solution" of the Heun form
// of this problem, its polynomial reductions, and the claimed unbounded
// n^(-2/3) spectrum. Every refutation is paired with a positive control run
// through the same residual operator.

#include <cstddef>
#include <string>
#include <vector>

#include "expwell/model.hpp"
#include "expwell/parallel.hpp"

namespace expwell::refute {

struct WrongSolutionParams {
    double rho = 1.0;    ///< order of the Hermite function
    double sigma = 1.0;  ///< scale in z = sgn sqrt(sigma x) + sqrt(2 rho)
    double c1 = 1.0;
    double c2 = 0.0;
    int n = 1;
    int sign = -1;       ///< sgn(V0); -1 for a well, +1 scans the |V0| reading
};

/// (c1 H_rho(z) + c2 1F1(-rho/2; 1/2; z^2)) exp(-sqrt(2 rho) z),
/// z = sign sqrt(sigma x) + sqrt(2 rho).
double wrong_u(const WrongSolutionParams& wp, double x);

/// n^(-2/3) (-m V0 / hbar^2)^(1/3) V0 / 2.
double wrong_energy(int n, const PhysParams& p);

/// Polynomial reduction -(H_n(z) - sqrt(2n) H_{n-1}(z)) exp(-sqrt(2n) z - sigma x/2) / sqrt(2n)
/// with z = sqrt(2n) - sqrt(sigma x). The -1/sqrt(2n) factor makes n = 1
/// coincide with (1 - sqrt2 z) exp(-sqrt2 z - sigma x/2), whose origin value is -e^-2.
double wrong_psi(int n, double sigma, double x);

/// Relative defect of
///   u'' + u' (a/(x+1) + b/x + c/(x-1)) - u (k - beta gamma x) / (x (x+1) (x-1))
/// at each grid point. Grid points must stay at least 1e-3 away from -1, 0, 1.
ResidualReport heun_residual(const Evaluator& u, const HeunParams& hp,
                             const std::vector<double>& grid);

struct RefuteConfig {
    std::vector<double> rho_grid;        ///< default: 10 values in [0.5, 5]
    std::vector<double> sigma_grid;      ///< default: 10 values in [0.5, 5]
    std::vector<double> psi_sigma_grid;  ///< default: 10 values in [0.1, 10]
    int psi_levels = 3;                  ///< wrong_psi levels checked against Eq.-8 energies
    int origin_levels = 5;
    int claimed_levels = 10;
    std::size_t residual_points = 200;
    std::size_t heun_points = 64;
    Exec exec = Exec::Parallel;
    int threads = 0;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct HeunCell {
    double rho, sigma;
    int sign;
    double c1, c2;
    double defect;  ///< min over trial energies of the max relative defect
};

struct PsiCell {
    int n;
    double sigma;
    std::string reading;  ///< "x=y" or "x=map_x(y)"
    double energy;
    double defect;        ///< max relative Schrodinger defect
};

struct RefuteReport {
    PhysParams params;

    double correct_schrodinger_max = 0.0;
    double correct_heun_max = 0.0;
    double free_particle_max = 0.0;

    std::vector<HeunCell> heun_cells;
    double heun_min_defect = 0.0;
    std::vector<PsiCell> psi_cells;
    double psi_min_defect = 0.0;

    std::vector<double> origin_sigma;        ///< sigma values probed
    std::vector<double> origin_ground;       ///< wrong_psi(1, sigma, 0)
    std::vector<double> origin_by_level;     ///< wrong_psi(n, 1, 0), n = 1..origin_levels

    std::vector<double> exact_levels;
    double chadan_bound = 0.0;
    double bargmann = 0.0;
    std::vector<double> claimed_levels;      ///< wrong_energy(n), n = 1..claimed_levels
    std::vector<double> claimed_s_values;    ///< |S(E_n)| at the claimed energies
    std::size_t claimed_above_shallowest = 0;

    double off_root_energy = 0.0;
    double off_root_residual = 0.0;
    double off_root_origin = 0.0;
    bool off_root_flagged = false;

    std::vector<Check> checks;
    bool all_passed() const;
};

RefuteReport refute_report(const PhysParams& p, const RefuteConfig& cfg = {});

}  // namespace expwell::refute
