#include <doctest.h>

#include <cmath>

#include "expwell/errors.hpp"
#include "expwell/model.hpp"
#include "expwell/quadrature.hpp"
#include "expwell/spectrum.hpp"
#include "expwell/wavefunc.hpp"

using namespace expwell;

namespace {

const PhysParams kRef{};

// Regression baselines for <psi|y|psi'> at the reference parameters, agreed
// by the adaptive Kronrod route and the fixed Gauss-Legendre route below.
constexpr double kM12Shallow = -0.663920662372;
constexpr double kM12Ground = -0.305255310377;

const std::vector<BoundState>& states() {
    static const std::vector<BoundState> s = bound_states(find_levels(kRef));
    return s;
}

// Composite Gauss-Legendre with y = t^2 on [0, delta] and equal panels beyond.
double fixed_rule(const BoundState& a, const BoundState& b, bool dipole) {
    const auto w = [&](double y) { return dipole ? y : 1.0; };
    const double root = std::sqrt(kRef.delta);
    const double near = quad::integrate_gauss_legendre(
        [&](double t) { return t == 0.0 ? 0.0 : 2 * t * w(t * t) * a(t * t) * b(t * t); }, 0, root,
        40).value;
    const double y_max = std::max(a.y_max, b.y_max);
    const double far = quad::integrate_gauss_legendre(
        [&](double y) { return w(y) * a(y) * b(y); }, kRef.delta, y_max, 600).value;
    return near + far;
}

}  // namespace

TEST_CASE("normalization, orthogonality and paper indexing") {
    const auto& s = states();
    REQUIRE(s.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(overlap(s[i], s[i]) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s[i].ground_index == i);
        CHECK(s[i].paper_index == 3 - i);
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(std::abs(overlap(s[i], s[j])) < 1e-8);
    }
}

TEST_CASE("shape: origin, sign, tail and residual") {
    for (const auto& st : states()) {
        double peak = 0;
        for (double y = 0.01; y < 40; y += 0.01) peak = std::max(peak, std::abs(st(y)));
        CHECK(std::abs(static_cast<double>(st.eval_ext(0.0L))) < 1e-5 * peak);
        CHECK(st(1e-3) > 0);

        const double y1 = 30, y2 = 40;
        const double slope = (std::log(std::abs(st(y2))) - std::log(std::abs(st(y1)))) / (y2 - y1);
        CHECK(slope == doctest::Approx(-st.decay_rate()).epsilon(0.01));

        const auto r = schrodinger_residual(
            kRef, st.energy, [&](long double y) { return st.eval_ext(y); }, 1e-3, 10 * kRef.delta, 200);
        CHECK(r.max_norm < 1e-4);
    }
}

TEST_CASE("dipole matrix elements: two quadrature routes and frozen baselines") {
    const auto& s = states();
    const double m12 = matrix_element(s[2], s[1]);
    const double m12g = matrix_element(s[0], s[1]);
    CHECK(std::abs(m12 - fixed_rule(s[2], s[1], true)) < 1e-8);
    CHECK(std::abs(m12g - fixed_rule(s[0], s[1], true)) < 1e-8);
    CHECK(std::abs(overlap(s[1], s[1]) - fixed_rule(s[1], s[1], false)) < 1e-8);
    CHECK(m12 == doctest::Approx(kM12Shallow).epsilon(1e-9));
    CHECK(m12g == doctest::Approx(kM12Ground).epsilon(1e-9));
    CHECK(matrix_element(s[1], s[2]) == doctest::Approx(m12).epsilon(1e-12));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(normalize(kRef, -1.0), Error);
    try {
        normalize(kRef, -1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAnEigenvalue);
    }
    PhysParams p = kRef;
    p.v0 = -1;
    try {
        energy_intervals(find_levels(p));
        FAIL("expected TooFewLevels");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooFewLevels);
    }
    const BoundState other = bound_states(find_levels(p)).front();
    try {
        overlap(states()[0], other);
        FAIL("expected ParamMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParamMismatch);
    }
}

TEST_CASE("energy intervals") {
    const auto gaps = energy_intervals(find_levels(kRef));
    REQUIRE(gaps.size() == 2);
    CHECK(gaps[0] == doctest::Approx(-0.416632743181 + 2.168051138629).epsilon(1e-9));
    CHECK(gaps[1] == doctest::Approx(-0.029469505318 + 0.416632743181).epsilon(1e-9));
}

TEST_CASE("sweep: structure, bookkeeping and serial/parallel identity") {
    std::vector<double> grid;
    for (double v = -0.5; v >= -4.0 - 1e-9; v -= 0.25) grid.push_back(v);
    SweepOptions serial;
    serial.exec = Exec::Serial;
    SweepOptions parallel;
    parallel.threads = 4;
    const SweepTable a = sweep_v0(kRef, grid, serial);
    const SweepTable b = sweep_v0(kRef, grid, parallel);
    REQUIRE(a.rows.size() == grid.size());
    CHECK(a.failed() == 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(a.rows[i].v0 == grid[i]);
        CHECK(a.rows[i].levels == b.rows[i].levels);
        CHECK(a.rows[i].m12 == b.rows[i].m12);
        CHECK(a.rows[i].m12.has_value() == (a.rows[i].levels.size() >= 2));
    }
    CHECK(a.emergence_points.size() ==
          a.rows.back().levels.size() - a.rows.front().levels.size());
    REQUIRE(a.emergence_points.size() == 2);
    CHECK(a.emergence_points[0].level_count == 2);
    CHECK(std::abs(a.emergence_points[0].v0 + 1.2676) < 2e-3);
    CHECK(std::abs(a.emergence_points[1].v0 + 2.9762) < 2e-3);

    CHECK_THROWS_AS(sweep_v0(kRef, {-1.0, 0.5}), Error);
}
