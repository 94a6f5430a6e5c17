// Copyright 2026 The QKR-OTOC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qkr/error.h"
#include "qkr/operator.h"
#include "qkr/wavefunction.h"
#include "test_util.h"

using namespace qkr;
using qkr::testing::evaluate_series;
using qkr::testing::random_state;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qkr::Error";
    return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(lattice, indices_and_momenta) {
    auto lat = make_lattice(8, 4 * kPi);
    ASSERT_EQ(lat.min_index(), -4);
    ASSERT_EQ(lat.max_index(), 3);
    ASSERT_DOUBLE_EQ(lat.momentum_at(0), -16 * kPi);

    auto small = make_lattice(4, 1);
    ASSERT_EQ(small.index_at(0), -2);
    ASSERT_EQ(small.index_at(3), 1);

    auto six = make_lattice(6, 4 * kPi);
    ASSERT_NEAR(six.momentum_at(six.slot_of(1)), 12.566, 1e-3);

    for (size_t i = 1; i < 8; ++i) {
        ASSERT_LT(lat.momentum_at(i - 1), lat.momentum_at(i));
    }
}

TEST(lattice, rejects_bad_parameters) {
    ASSERT_EQ(code_of([] { make_lattice(7, 1); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([] { make_lattice(2, 1); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([] { make_lattice(8, 0); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([] { make_lattice(8, -1); }), ErrorCode::kInvalidArgument);
}

TEST(init_state, cosine_plane_custom) {
    auto lat = make_lattice(8, 4 * kPi);
    auto cosine = init_state(CosineState{}, lat);
    ASSERT_TRUE(cosine.normalized);
    for (int n = -4; n <= 3; ++n) {
        double want = (n == 1 || n == -1) ? 1 / std::sqrt(2.0) : 0;
        ASSERT_NEAR(std::abs(cosine.amp(n) - want), 0, 1e-15) << n;
    }

    auto plane = init_state(PlaneState{0}, lat);
    ASSERT_EQ(plane.amp(0), Complex(1));
    ASSERT_DOUBLE_EQ(norm_sq(plane), 1);

    CustomState custom;
    custom.coefficients[2] = 1;
    custom.coefficients[-2] = 1;
    auto c = init_state(custom, lat);
    ASSERT_NEAR(c.amp(2).real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(c.amp(-2).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(init_state, errors) {
    auto lat = make_lattice(8, 1);
    ASSERT_EQ(code_of([&] { init_state(PlaneState{4}, lat); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([&] { init_state(CustomState{}, lat); }), ErrorCode::kInvalidArgument);
    CustomState zero;
    zero.coefficients[1] = 0;
    ASSERT_EQ(code_of([&] { init_state(zero, lat); }), ErrorCode::kInvalidArgument);
}

TEST(init_state, parse) {
    ASSERT_TRUE(std::holds_alternative<CosineState>(parse_initial_state("cosine")));
    ASSERT_EQ(std::get<PlaneState>(parse_initial_state("plane:-3")).n0, -3);
    ASSERT_EQ(code_of([] { parse_initial_state("plane:x"); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([] { parse_initial_state("gauss"); }), ErrorCode::kInvalidArgument);
}

TEST(transform, plane_and_cosine_samples) {
    auto lat = make_lattice(16, 1);
    auto flat = to_angle(init_state(PlaneState{0}, lat));
    for (const auto &v : flat.values) {
        ASSERT_NEAR(std::abs(v - 1 / std::sqrt(2 * kPi)), 0, 1e-15);
    }
    ASSERT_NEAR(1 / std::sqrt(2 * kPi), 0.39894, 1e-5);

    auto cos_samples = to_angle(init_state(CosineState{}, lat));
    for (size_t j = 0; j < cos_samples.size(); ++j) {
        double theta = 2 * kPi * j / 16;
        ASSERT_NEAR(std::abs(cos_samples.values[j] - std::cos(theta) / std::sqrt(kPi)), 0, 1e-15);
    }
}

TEST(transform, round_trip_unitarity_property) {
    std::mt19937_64 rng(1);
    auto lat = make_lattice(256, 1.7);
    for (int trial = 0; trial < 100; ++trial) {
        std::normal_distribution<double> gauss;
        std::vector<Complex> amps(256);
        for (auto &a : amps) {
            a = Complex(gauss(rng), gauss(rng));
        }
        double scale = 0;
        for (auto &a : amps) {
            scale += std::norm(a);
        }
        for (auto &a : amps) {
            a /= std::sqrt(scale);
        }
        WaveFunction psi(lat, amps, true);
        auto samples = to_angle(psi);
        ASSERT_NEAR(samples.norm_sq(), 1, 1e-12);
        auto back = to_momentum(samples, lat);
        ASSERT_LT(std::abs(norm_sq(back) - 1), 1e-12);
        ASSERT_LT(qkr::testing::max_abs_diff(back.amps, psi.amps), 1e-12);
    }
}

TEST(transform, zero_padded_grid_matches_series) {
    std::mt19937_64 rng(2);
    auto lat = make_lattice(32, 1);
    auto psi = random_state(lat, 6, rng);
    auto fine = to_angle(psi, 128);
    for (size_t j = 0; j < fine.size(); j += 7) {
        ASSERT_NEAR(std::abs(fine.values[j] - evaluate_series(psi, 2 * kPi * j / 128)), 0, 1e-13);
    }
}

TEST(transform, size_mismatch) {
    auto lat = make_lattice(16, 1);
    AngleSamples s;
    s.values.resize(8);
    ASSERT_EQ(code_of([&] { to_momentum(s, lat); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([&] { to_angle(init_state(CosineState{}, lat), 8); }), ErrorCode::kInvalidArgument);
}

TEST(apply_operator, momentum_multiply_on_cosine) {
    auto lat = make_lattice(16, 4 * kPi);
    auto p_psi = apply_operator(momentum_operator(lat), init_state(CosineState{}, lat));
    ASSERT_FALSE(p_psi.normalized);
    ASSERT_NEAR(p_psi.amp(-1).real(), -4 * kPi / std::sqrt(2.0), 1e-13);
    ASSERT_NEAR(p_psi.amp(1).real(), 4 * kPi / std::sqrt(2.0), 1e-13);
}

TEST(apply_operator, translation_phases) {
    std::mt19937_64 rng(3);
    auto lat = make_lattice(64, 1);
    auto psi = random_state(lat, 10, rng);
    auto same = apply_operator(translation(lat, 2 * kPi), psi);
    ASSERT_LT(qkr::testing::max_abs_diff(same.amps, psi.amps), 1e-15);

    auto plane = apply_operator(translation(lat, kPi), init_state(PlaneState{1}, lat));
    ASSERT_NEAR(std::abs(plane.amp(1) - Complex(-1)), 0, 1e-15);

    // psi(theta) -> psi(theta - eps)
    const double eps = 0.7;
    auto shifted = apply_operator(translation(lat, eps), psi);
    for (double theta : {0.1, 1.9, 4.4}) {
        ASSERT_NEAR(std::abs(evaluate_series(shifted, theta) - evaluate_series(psi, theta - eps)), 0, 1e-13);
    }
}

TEST(apply_operator, projector_and_mismatch) {
    auto lat = make_lattice(16, 1);
    auto chi = init_state(CosineState{}, lat);
    auto out = apply_operator(projector(chi), init_state(PlaneState{1}, lat));
    ASSERT_FALSE(out.normalized);
    ASSERT_NEAR(out.amp(1).real(), 0.5, 1e-15);
    ASSERT_NEAR(out.amp(-1).real(), 0.5, 1e-15);

    auto other = make_lattice(32, 1);
    ASSERT_EQ(
        code_of([&] { apply_operator(momentum_operator(other), chi); }), ErrorCode::kLatticeMismatch);
}

TEST(apply_operator, leakage_guard_after_momentum_multiply) {
    auto lat = make_lattice(16, 1);
    auto edge = init_state(PlaneState{7}, lat);
    ASSERT_EQ(code_of([&] { apply_operator(momentum_operator(lat), edge); }), ErrorCode::kLeakage);
}

TEST(apply_operator, rejects_non_unit_phase) {
    auto lat = make_lattice(8, 1);
    ASSERT_EQ(code_of([&] { momentum_phase(lat, [](int) { return Complex(1.0 + 1e-9); }); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([&] { angle_phase(lat, [](double) { return Complex(0.5); }); }), ErrorCode::kInvalidArgument);
}

TEST(apply_operator, phase_unitarity_property) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-10, 10);
    auto lat = make_lattice(128, 2.3);
    for (int trial = 0; trial < 50; ++trial) {
        auto psi = random_state(lat, 20, rng);
        const double a = u(rng), b = u(rng);
        auto m = apply_operator(momentum_phase(lat, [&](int n) { return std::polar(1.0, a * n * n + b); }), psi);
        auto g = apply_operator(angle_phase(lat, [&](double th) { return std::polar(1.0, a * std::cos(th) + b * th); }), psi);
        ASSERT_LT(std::abs(norm_sq(m) - 1), 1e-12);
        ASSERT_LT(std::abs(norm_sq(g) - 1), 1e-12);
        ASSERT_TRUE(m.normalized);
        ASSERT_TRUE(g.normalized);
    }
}

TEST(observables, cosine_state) {
    auto lat = make_lattice(16, 4 * kPi);
    auto psi = init_state(CosineState{}, lat);
    ASSERT_NEAR(expectation_p2(psi), 16 * kPi * kPi, 1e-12);
    ASSERT_NEAR(expectation_p2(psi), 157.914, 1e-3);
    ASSERT_NEAR(expectation_p(psi), 0, 1e-15);
    ASSERT_DOUBLE_EQ(norm_sq(init_state(PlaneState{0}, lat)), 1);
}

TEST(observables, errors) {
    auto lat = make_lattice(16, 1);
    auto psi = init_state(CosineState{}, lat);
    auto p_psi = apply_operator(momentum_operator(lat), psi);
    ASSERT_EQ(code_of([&] { expectation_p2(p_psi); }), ErrorCode::kUnnormalized);
    ASSERT_EQ(code_of([&] { inner(psi, init_state(CosineState{}, make_lattice(16, 2))); }), ErrorCode::kLatticeMismatch);
    ASSERT_EQ(code_of([&] { expectation_p(init_state(PlaneState{-8}, lat)); }), ErrorCode::kLeakage);
}

TEST(observables, inner_is_conjugate_linear_in_bra) {
    std::mt19937_64 rng(5);
    auto lat = make_lattice(64, 1);
    auto a = random_state(lat, 8, rng);
    auto b = random_state(lat, 8, rng);
    WaveFunction scaled = a;
    for (auto &x : scaled.amps) {
        x *= Complex(0, 2);
    }
    Complex lhs = inner(scaled, b);
    Complex rhs = std::conj(Complex(0, 2)) * inner(a, b);
    ASSERT_NEAR(std::abs(lhs - rhs), 0, 1e-14);
}

TEST(observables, momentum_hermiticity_property) {
    std::mt19937_64 rng(6);
    auto lat = make_lattice(128, 4 * kPi);
    auto p = momentum_operator(lat);
    for (int trial = 0; trial < 100; ++trial) {
        auto psi = random_state(lat, 16, rng);
        auto chi = random_state(lat, 16, rng);
        Complex lhs = inner(psi, apply_operator(p, chi));
        Complex rhs = std::conj(inner(chi, apply_operator(p, psi)));
        ASSERT_LT(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(spectral_derivative, analytic_cases) {
    auto lat = make_lattice(32, 1);
    auto d = spectral_derivative(to_angle(init_state(CosineState{}, lat)), 1);
    for (size_t j = 0; j < d.size(); ++j) {
        double theta = 2 * kPi * j / 32;
        ASSERT_NEAR(std::abs(d.values[j] + std::sin(theta) / std::sqrt(kPi)), 0, 1e-14);
    }
    const int n0 = 5;
    auto plane = to_angle(init_state(PlaneState{n0}, lat));
    auto d2 = spectral_derivative(plane, 2);
    for (size_t j = 0; j < d2.size(); ++j) {
        ASSERT_NEAR(std::abs(d2.values[j] - double(-n0 * n0) * plane.values[j]), 0, 1e-13);
    }
    ASSERT_EQ(code_of([&] { spectral_derivative(plane, 0); }), ErrorCode::kInvalidArgument);
    ASSERT_EQ(code_of([&] { spectral_derivative(plane, 4); }), ErrorCode::kInvalidArgument);
}

// Oracle: fourth-order central differences of the directly summed series.
// The step h is independent of the grid so the stencil error stays far below
// the tolerance for the whole band.
TEST(spectral_derivative, first_order_matches_finite_differences_on_band) {
    std::mt19937_64 rng(7);
    const int size = 256;
    auto lat = make_lattice(size, 1);
    for (int trial = 0; trial < 5; ++trial) {
        auto psi = random_state(lat, size / 8, rng);
        auto d = spectral_derivative(to_angle(psi), 1);
        const double h = 1e-4;
        double worst = 0;
        for (int j = 0; j < size; ++j) {
            double th = 2 * kPi * j / size;
            Complex fd = (-evaluate_series(psi, th + 2 * h) + 8.0 * evaluate_series(psi, th + h) -
                          8.0 * evaluate_series(psi, th - h) + evaluate_series(psi, th - 2 * h)) /
                         (12 * h);
            worst = std::max(worst, std::abs(fd - d.values[j]));
        }
        ASSERT_LT(worst, 1e-6);
    }
}

TEST(spectral_derivative, higher_orders_match_finite_differences) {
    std::mt19937_64 rng(8);
    const int size = 64;
    auto lat = make_lattice(size, 1);
    auto psi2 = random_state(lat, 8, rng);
    auto d2 = spectral_derivative(to_angle(psi2), 2);
    auto psi3 = random_state(lat, 4, rng);
    auto d3 = spectral_derivative(to_angle(psi3), 3);
    double worst2 = 0, worst3 = 0;
    for (int j = 0; j < size; ++j) {
        double th = 2 * kPi * j / size;
        auto f2 = [&](double x) { return evaluate_series(psi2, x); };
        auto f3 = [&](double x) { return evaluate_series(psi3, x); };
        const double h2 = 1e-3;
        Complex fd2 = (-f2(th + 2 * h2) + 16.0 * f2(th + h2) - 30.0 * f2(th) + 16.0 * f2(th - h2) - f2(th - 2 * h2)) /
                      (12 * h2 * h2);
        const double h3 = 2e-3;
        Complex fd3 = (-f3(th + 3 * h3) + 8.0 * f3(th + 2 * h3) - 13.0 * f3(th + h3) + 13.0 * f3(th - h3) -
                       8.0 * f3(th - 2 * h3) + f3(th - 3 * h3)) /
                      (8 * h3 * h3 * h3);
        worst2 = std::max(worst2, std::abs(fd2 - d2.values[j]));
        worst3 = std::max(worst3, std::abs(fd3 - d3.values[j]));
    }
    ASSERT_LT(worst2, 1e-6);
    ASSERT_LT(worst3, 1e-6);
}
