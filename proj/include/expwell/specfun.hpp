#pragma once

// Hypergeometric series with explicit error control.
//
// Everything here is a direct power series. The callers only ever need
// arguments inside |w| <= 3/4 (the wavefunction and spectrum code evaluates
// at (1 - z)/2 in [0, 1/2]), so no transformation formulas are attempted.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "expwell/errors.hpp"

namespace expwell::specfun {

struct SeriesOptions {
    double tolerance = 1e-13;         ///< hybrid abs/rel: |tail| < tolerance * max(1, |sum|)
    std::size_t max_terms = 10000;
    double exclusion_radius = 1e-6;   ///< distance from 0, -1, -2, ... treated as a pole
};

template <class T>
struct BasicSeriesResult {
    T value{};
    std::size_t terms_used = 0;
    T error_estimate{};
};

using SeriesResult = BasicSeriesResult<double>;

SeriesResult gauss_2f1(double a, double b, double c, double w, const SeriesOptions& opts = {});
SeriesResult clausen_3f2(double a1, double a2, double a3, double b1, double b2, double w,
                         const SeriesOptions& opts = {});
SeriesResult kummer_1f1(double a, double b, double w, const SeriesOptions& opts = {});

/// Hermite function of arbitrary real order, normalized so that integer
/// orders give the physicists' polynomials (H_2(z) = 4z^2 - 2).
SeriesResult hermite_fn(double nu, double z, const SeriesOptions& opts = {});

/// Extended-precision variants, used where finite differences of the result
/// need more digits than double provides.
BasicSeriesResult<long double> gauss_2f1_ext(long double a, long double b, long double c,
                                             long double w, const SeriesOptions& opts = {});
BasicSeriesResult<long double> kummer_1f1_ext(long double a, long double b, long double w,
                                              const SeriesOptions& opts = {});

/// 1/Gamma(x), exactly zero at the non-positive integers.
long double reciprocal_gamma(long double x);

/// True when x lies within `radius` of one of 0, -1, -2, ...
bool near_nonpositive_integer(double x, double radius);

namespace detail {

/// Neumaier-compensated sum of a generalized hypergeometric series
/// pFq(upper; lower; w).
///
/// Stopping rule: the last three terms must each be below
/// tolerance * max(1, |sum|), and the geometric tail bound built from the
/// ratio of the last two terms must be below the same threshold. A term that
/// is exactly zero (terminating series) stops immediately.
template <class T, std::size_t P, std::size_t Q>
BasicSeriesResult<T> pfq_series(const std::array<T, P>& upper, const std::array<T, Q>& lower,
                                T w, const SeriesOptions& opts, const char* name) {
    for (const T& b : lower) {
        if (near_nonpositive_integer(static_cast<double>(b), opts.exclusion_radius)) {
            throw Error(ErrorKind::PoleInParameter,
                        std::string(name) + ": lower parameter " +
                            std::to_string(static_cast<double>(b)) +
                            " is at a non-positive integer");
        }
    }

    const T eps = std::numeric_limits<T>::epsilon();
    const T tol = static_cast<T>(opts.tolerance);

    T sum = 1;
    T comp = 0;
    T term = 1;
    T abs_weighted = 1;  // sum of (k + 2)|t_k|, drives the rounding bound
    T prev_abs = 1;
    int small_run = 0;
    std::size_t n = 0;

    auto finish = [&](T tail) {
        BasicSeriesResult<T> r;
        r.value = sum + comp;
        r.terms_used = n + 1;
        r.error_estimate = tail + 4 * eps * abs_weighted;
        return r;
    };

    for (n = 0; n + 1 < opts.max_terms; ++n) {
        T num = w;
        T den = static_cast<T>(n + 1);
        for (const T& a : upper) num *= a + static_cast<T>(n);
        for (const T& b : lower) den *= b + static_cast<T>(n);
        term *= num / den;

        // Neumaier summation.
        const T t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;

        const T aterm = std::abs(term);
        abs_weighted += static_cast<T>(n + 3) * aterm;

        if (term == T(0)) {
            return finish(T(0));
        }

        const T threshold = tol * std::max(T(1), std::abs(sum + comp));
        small_run = aterm < threshold ? small_run + 1 : 0;
        if (small_run >= 3) {
            const T ratio = aterm / prev_abs;
            if (ratio < 1) {
                const T tail = aterm * ratio / (1 - ratio);
                if (tail < threshold) {
                    ++n;
                    return finish(tail);
                }
            }
        }
        prev_abs = aterm;
    }
    throw Error(ErrorKind::NoConvergence,
                std::string(name) + ": series did not converge within max_terms");
}

}  // namespace detail

}  // namespace expwell::specfun
