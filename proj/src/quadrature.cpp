#include "expwell/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "expwell/errors.hpp"

namespace expwell::quad {

QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const AdaptiveOptions& opts) {
    if (a == b) return {};
    QuadResult r;
    r.value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
        f, a, b, opts.max_depth, opts.tolerance, &r.error, &r.l1);
    if (!std::isfinite(r.value)) {
        throw Error(ErrorKind::QuadratureFailure, "integrand is not finite on the interval");
    }
    if (r.error > opts.tolerance * r.l1) {
        throw Error(ErrorKind::QuadratureFailure,
                    "adaptive refinement exceeded the depth budget (error " +
                        std::to_string(r.error) + ")");
    }
    return r;
}

QuadResult integrate_gauss_legendre(const Integrand& f, double a, double b, int panels) {
    if (panels < 1) throw Error(ErrorKind::DomainError, "gauss_legendre: need panels >= 1");
    const double width = (b - a) / panels;
    QuadResult r;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        double l1 = 0.0;
        r.value += boost::math::quadrature::gauss<double, 30>::integrate(f, lo, lo + width, &l1);
        r.l1 += l1;
    }
    return r;
}

}  // namespace expwell::quad
