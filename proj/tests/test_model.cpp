#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "expwell/errors.hpp"
#include "expwell/model.hpp"
#include "expwell/quadrature.hpp"
#include "expwell/spectrum.hpp"
#include "test_rng.hpp"

using namespace expwell;
using expwell::testing::Rng;

namespace {

const PhysParams kRef{};  // (1, 1, -4, 2)

PhysParams random_params(Rng& rng) {
    PhysParams p;
    p.m = rng.log_uniform(0.2, 5);
    p.hbar = rng.log_uniform(0.2, 5);
    p.v0 = -rng.log_uniform(0.1, 20);
    p.delta = rng.log_uniform(0.2, 5);
    return p;
}

}  // namespace

TEST_CASE("parameter validation") {
    PhysParams p;
    p.v0 = 4;
    CHECK_NOTHROW(p.validate());
    CHECK_THROWS_WITH(p.validate_well(), "DomainError: V0 must be negative");
    p.v0 = -4;
    p.delta = 0;
    CHECK_THROWS_AS(p.validate(), Error);
    p.delta = 2;
    p.m = -1;
    CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("potential values") {
    CHECK(potential(kRef, 2 * std::log(4.0 / 3.0)) == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(std::abs(potential(kRef, 200)) < 1e-10);
    // Small-y expansion: V0 sqrt(delta/y) (1 + y/(4 delta)) - V0.
    const double y = 0.01;
    const double series = -4 * std::sqrt(2 / y) * (1 + y / 8) + 4;
    CHECK(potential(kRef, y) == doctest::Approx(series).epsilon(1e-5));
    CHECK_THROWS_AS(potential(kRef, 0.0), Error);
    CHECK_THROWS_AS(potential(kRef, -1.0), Error);
}

TEST_CASE("property: potential shape") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const PhysParams p = random_params(rng);
        const auto grid = geometric_grid(1e-4 * p.delta, 30 * p.delta, 200);
        double prev = -INFINITY;
        for (double y : grid) {
            const double v = potential(p, y);
            CHECK(v < 0);
            CHECK(v > prev);
            prev = v;
            if (y >= 2 * p.delta) CHECK(std::abs(v) <= std::abs(p.v0) * std::exp(-y / p.delta));
        }
    }
}

TEST_CASE("coordinate map") {
    CHECK(map_x(kRef, 0) == 0.0);
    CHECK(map_x(kRef, 2 * std::log(2.0)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(map_x(kRef, -1e-3), Error);
    // y -> x -> y loses digits as x -> 1: one ulp of x moves y by about
    // 4 eps delta e^(y/delta). The opposite direction is well conditioned.
    Rng rng(12);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 1000; ++i) {
        const double y = rng.log_uniform(1e-6, 50);
        const double back = inverse_map_y(kRef, map_x(kRef, y));
        const double conditioning = 4 * eps * kRef.delta * std::exp(y / kRef.delta);
        CHECK(std::abs(back - y) <= 1e-12 * std::max(1.0, y) + conditioning);
        const double x = rng.uniform(0, 0.999);
        CHECK(std::abs(map_x(kRef, inverse_map_y(kRef, x)) - x) <= 1e-15);
        const double y2 = y * (1 + rng.uniform(1e-6, 1));
        CHECK(map_x(kRef, y2) > map_x(kRef, y));
    }
}

TEST_CASE("Heun parameters") {
    const HeunParams h = heun_params(kRef, -0.4166327);
    CHECK(h.b == -1.0);
    CHECK(h.c == doctest::Approx(1 + 2 * std::sqrt(2 * 4 * 0.4166327)).epsilon(1e-12));
    CHECK(h.c == doctest::Approx(4.6514).epsilon(1e-4));

    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const PhysParams p = random_params(rng);
        const double e = -rng.uniform(1e-3, 3) * std::abs(p.v0);
        const HeunParams hp = heun_params(p, e);
        const SpectralParams sp = spectral_params(p, e);
        CHECK(hp.b == -1.0);
        CHECK(hp.a == doctest::Approx(1 + 2 * sp.alpha1).epsilon(1e-14));
        CHECK(std::abs(hp.c - (1 + hp.beta_h + hp.gamma_h - hp.a - hp.b)) <=
              1e-12 * std::max(1.0, std::abs(hp.c)));
        const double scale = std::max({1.0, hp.k * hp.k, std::abs(hp.beta_h * hp.gamma_h)});
        CHECK(std::abs(hp.k * hp.k + hp.k * (hp.a - hp.c) - hp.beta_h * hp.gamma_h) <= 1e-12 * scale);
    }
    CHECK_THROWS_AS(heun_params(kRef, 0.5), Error);
}

TEST_CASE("residual operator controls") {
    // Free particle: sin(k y) at E = k^2/2.
    ResidualOptions free;
    free.potential_override = [](double) { return 0.0; };
    const double k = 1.3;
    const auto r = schrodinger_residual(
        kRef, k * k / 2, [&](long double y) { return std::sin(static_cast<long double>(k) * y); },
        0.05, 2.0, 100, free);
    CHECK(r.max_norm < 1e-6);
    CHECK(r.l2_norm <= r.max_norm);
    for (std::size_t i = 1; i < r.grid.size(); ++i) CHECK(r.grid[i] > r.grid[i - 1]);

    // y exp(-y) is not a solution.
    const auto bad = schrodinger_residual(
        kRef, -1.0, [](long double y) { return y * std::exp(-y); }, 0.01, 10, 100);
    CHECK(bad.max_norm > 0.1);

    CHECK_THROWS_AS(schrodinger_residual(kRef, -1.0, [](long double) { return 0.0L; }, 0.1, 1, 10),
                    Error);
    CHECK_THROWS_AS(schrodinger_residual(kRef, -1.0, [](long double y) { return y; }, 0.0, 1, 10),
                    Error);
}

TEST_CASE("Bargmann integral: dual quadrature and scaling") {
    const double adaptive = bargmann_integral(kRef);
    // Fixed high-order rule on the same split: y = t^2 near the origin.
    const auto near = [](double t) {
        return t == 0.0 ? 0.0 : 2.0 * t * t * t * std::abs(potential(kRef, t * t));
    };
    const auto far = [](double y) { return y * std::abs(potential(kRef, y)); };
    const double fixed =
        2.0 * (quad::integrate_gauss_legendre(near, 0, 1, 40).value +
               quad::integrate_gauss_legendre(far, 1, 200, 400).value);
    CHECK(std::isfinite(adaptive));
    CHECK(std::abs(adaptive - fixed) < 1e-8 * adaptive);

    PhysParams doubled = kRef;
    doubled.v0 *= 2;
    CHECK(bargmann_integral(doubled) == doctest::Approx(2 * adaptive).epsilon(1e-9));
}

TEST_CASE("Calogero integral and Chadan estimate") {
    const double c = calogero_constant();
    CHECK(c == doctest::Approx(std::numbers::pi * (2 - std::sqrt(2.0))).epsilon(1e-9));
    CHECK(calogero_integral(kRef) == doctest::Approx(4 * c).epsilon(1e-12));
    CHECK(chadan_estimate(kRef) == doctest::Approx(3.3137).epsilon(3e-5));
    CHECK(chadan_estimate({1, 1, -1, 1}) == doctest::Approx(2 * (std::sqrt(2.0) - 1)).epsilon(1e-15));

    PhysParams q = kRef;
    q.v0 *= 4;
    CHECK(chadan_estimate(q) == doctest::Approx(2 * chadan_estimate(kRef)).epsilon(1e-15));
    CHECK(calogero_integral(q) == doctest::Approx(2 * calogero_integral(kRef)).epsilon(1e-9));
    PhysParams d = kRef;
    d.delta *= 3;
    CHECK(calogero_integral(d) == doctest::Approx(3 * calogero_integral(kRef)).epsilon(1e-9));

    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        const PhysParams p = random_params(rng);
        const double via_calogero =
            std::sqrt(p.coupling()) * calogero_integral(p) / std::numbers::pi;
        CHECK(std::abs(chadan_estimate(p) - via_calogero) <= 1e-6 * chadan_estimate(p));
    }
}

TEST_CASE("generation thresholds") {
    for (double delta : {0.5, 1.0, 2.0, 3.7}) {
        PhysParams p = kRef;
        p.delta = delta;
        CHECK(generation_threshold(p, 4) ==
              doctest::Approx(4 * (3 + 2 * std::sqrt(2.0)) / (delta * delta)).epsilon(1e-14));
    }
    CHECK(generation_threshold(kRef, 4) == doctest::Approx(5.8284).epsilon(2e-5));
    CHECK(generation_threshold(kRef, 3) == doctest::Approx(3.2785).epsilon(1e-4));
    PhysParams at = kRef;
    at.v0 = -generation_threshold(kRef, 3);
    CHECK(chadan_estimate(at) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK_THROWS_AS(generation_threshold(kRef, 0), Error);
}
