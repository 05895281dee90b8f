#pragma once

#include <cstddef>
#include <functional>

namespace expwell::quad {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;  ///< integral of |f|, the scale the tolerance refers to
};

using Integrand = std::function<double(double)>;

struct AdaptiveOptions {
    double tolerance = 1e-12;  ///< relative to the L1 norm of the integrand
    unsigned max_depth = 15;   ///< bisection levels
};

/// Adaptive 21-point Gauss-Kronrod on a finite [a, b]. Throws
/// QuadratureFailure when the integrand is not finite or the estimated error
/// stays above tolerance * L1 at max_depth.
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const AdaptiveOptions& opts = {});

/// Composite 30-point Gauss-Legendre rule on `panels` equal panels. No error
/// estimate; used as an independent second route.
QuadResult integrate_gauss_legendre(const Integrand& f, double a, double b, int panels);

}  // namespace expwell::quad
