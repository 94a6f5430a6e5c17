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
#include "qkr/floquet.h"
#include "qkr/oracle.h"
#include "qkr/otoc.h"
#include "test_util.h"

using namespace qkr;
using qkr::testing::max_abs_diff;
using qkr::testing::random_state;
using qkr::testing::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;
const oracle::QuadratureGrid kGrid{4096};

AngleSamples cosine_samples() {
    return oracle::sample_on_grid(init_state(CosineState{}, make_lattice(64, kResonantHbar)), kGrid);
}

double scaled_diff(const AngleSamples &got, const AngleSamples &want) {
    double scale = 0;
    for (const Complex &v : want.values) {
        scale = std::max(scale, std::abs(v));
    }
    return max_abs_diff(got.values, want.values) / scale;
}

double component_err(const oracle::Components &got, const OtocSample &want) {
    const double scale = std::max({1.0, *want.c1, *want.c2, std::abs(*want.c3)});
    return std::max({std::abs(got.c1 - *want.c1), std::abs(got.c2 - *want.c2), std::abs(got.c3 - *want.c3),
                     std::abs(got.c - want.c)}) /
           scale;
}

}  // namespace

TEST(closed_forms, values) {
    ASSERT_NEAR(oracle::cp_closed(1, 1), 12 * kPi * kPi, 1e-12);
    ASSERT_EQ(oracle::cp_closed(3, 0), 0);
    ASSERT_NEAR(oracle::cp_closed(5, 10), 30000 * kPi * kPi, 1e-8);
    ASSERT_NEAR(oracle::cp_closed(5, 10), 2.9608e5, 10);

    ASSERT_NEAR(oracle::ct_closed(1, 3, kPi), 9, 1e-12);
    ASSERT_NEAR(oracle::ct_closed(2, 1, kPi / 2), 4, 1e-12);
    ASSERT_EQ(oracle::ct_closed(2, 5, 0), 0);

    ASSERT_NEAR(oracle::fotoc_small_eps(5, 100, 0.01, kResonantHbar), std::pow(5 / (8 * kPi), 2), 1e-15);
    ASSERT_NEAR(oracle::fotoc_small_eps(5, 100, 0.01, kResonantHbar), 0.03958, 1e-5);
    ASSERT_EQ(oracle::fotoc_small_eps(5, 0, 0.01, kResonantHbar), 0);
    ASSERT_NEAR(oracle::fotoc_small_eps(2, 7, 0.02, 1.5) / oracle::fotoc_small_eps(2, 7, 0.01, 1.5), 4, 1e-12);
}

TEST(analytic_state_fns, cosine_derivatives) {
    oracle::AnalyticStateFns f(cosine_samples());
    const auto big = f.big_psi();
    double worst = 0;
    for (int j = 0; j < kGrid.size; ++j) {
        const double th = kGrid.node(j);
        const double s = 1 / std::sqrt(kPi);
        worst = std::max(worst, std::abs(big[j] - std::cos(2 * th) * s));
        worst = std::max(worst, std::abs(f.psi(1)[j] + std::sin(th) * s));
        worst = std::max(worst, std::abs(f.psi(2)[j] + std::cos(th) * s));
        worst = std::max(worst, std::abs(f.psi(3)[j] - std::sin(th) * s));
    }
    ASSERT_LT(worst, 1e-13);
    ASSERT_NEAR(std::abs(kGrid.integrate(f.big_upsilon()).imag()), 0, 1e-13);

    oracle::AnalyticStateFns shifted(cosine_samples(), 0.7);
    for (int j = 0; j < kGrid.size; j += 97) {
        ASSERT_NEAR(shifted.psi(0)[j].real(), std::cos(kGrid.node(j) - 0.7) / std::sqrt(kPi), 1e-13);
    }
}

TEST(oracle_states, examples) {
    const auto psi0 = cosine_samples();
    auto same = oracle::resonant_state(psi0, 3, 0, kResonantHbar);
    ASSERT_LT(max_abs_diff(same.values, psi0.values), 1e-15);
    auto later = oracle::resonant_state(psi0, 3, 17, kResonantHbar);
    for (size_t j = 0; j < psi0.size(); ++j) {
        ASSERT_NEAR(std::abs(later.values[j]), std::abs(psi0.values[j]), 1e-14);
    }

    auto pr = oracle::psi_r_cp(psi0, 1, 0);
    for (int j = 0; j < kGrid.size; j += 31) {
        const Complex want(0, 4 * kPi * std::sin(kGrid.node(j)) / std::sqrt(kPi));
        ASSERT_LT(std::abs(pr.values[j] - want), 1e-12);
    }
    auto back = oracle::psi_r_ct(psi0, 2, 5, 2 * kPi);
    ASSERT_LT(max_abs_diff(back.values, psi0.values), 1e-12);
    auto flipped = oracle::psi_r_ct(psi0, 1, 0, kPi);
    for (size_t j = 0; j < psi0.size(); ++j) {
        ASSERT_LT(std::abs(flipped.values[j] + psi0.values[j]), 1e-13);
    }
}

TEST(oracle_states, match_heisenberg_evolution) {
    const auto lat = make_lattice(128, kResonantHbar);
    std::mt19937_64 rng(5);
    const auto p = momentum_operator(lat);
    for (const WaveFunction &psi0 : {init_state(CosineState{}, lat), random_state(lat, 8, rng)}) {
        const auto samples = oracle::sample_on_grid(psi0, kGrid);
        const WaveFunction p_psi0 = apply_operator(p, psi0);
        for (auto [kick, t] : {std::pair{1.0, 3L}, std::pair{2.5, 10L}}) {
            const auto ops = build_floquet(kick, lat);
            auto engine_psi = to_angle(heisenberg_apply(ops, p, t, psi0), kGrid.size);
            auto engine_phi = to_angle(heisenberg_apply(ops, p, t, p_psi0), kGrid.size);
            ASSERT_LT(scaled_diff(engine_psi, oracle::psi_r_cp(samples, kick, t)), 1e-12);
            ASSERT_LT(scaled_diff(engine_phi, oracle::phi_r_cp(samples, kick, t)), 1e-12);

            const auto tr = translation(lat, 1.3);
            engine_psi = to_angle(heisenberg_apply(ops, tr, t, psi0), kGrid.size);
            engine_phi = to_angle(heisenberg_apply(ops, tr, t, p_psi0), kGrid.size);
            ASSERT_LT(scaled_diff(engine_psi, oracle::psi_r_ct(samples, kick, t, 1.3)), 1e-12);
            ASSERT_LT(scaled_diff(engine_phi, oracle::phi_r_ct(samples, kick, t, 1.3)), 1e-12);
        }
    }
}

TEST(quadrature, cosine_reproduces_closed_forms) {
    const auto psi0 = cosine_samples();
    for (double kick : {1.0, 2.0, 3.0, 5.0}) {
        for (int t = 1; t <= 10; ++t) {
            auto cp = oracle::cp_components_quadrature(psi0, kick, t);
            ASSERT_LT(rel_err(cp.c, oracle::cp_closed(kick, t)), 1e-10);
            for (double eps : {kPi / 4, kPi / 2, kPi}) {
                auto ct = oracle::ct_components_quadrature(psi0, kick, t, eps);
                ASSERT_LT(rel_err(ct.c, oracle::ct_closed(kick, t, eps)), 1e-10);
                ASSERT_NEAR(ct.c2, 16 * kPi * kPi, 1e-10);
            }
        }
    }
    auto two = oracle::cp_components_quadrature(psi0, 1, 2);
    ASSERT_LT(rel_err(two.c1, 64 * kPi * kPi + 256 * std::pow(kPi, 4)), 1e-12);

    auto none = oracle::ct_components_quadrature(psi0, 4, 9, 0);
    ASSERT_NEAR(none.c, 0, 1e-9);
    ASSERT_NEAR(none.c1, none.c2, 1e-9);
}

TEST(quadrature, random_states_match_engine) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> kick_dist(0.2, 4);
    std::uniform_real_distribution<double> eps_dist(0, 2 * kPi);
    std::uniform_int_distribution<int> time_dist(1, 12);
    for (int trial = 0; trial < 30; ++trial) {
        const double kick = kick_dist(rng);
        const int t = time_dist(rng);
        const double eps = eps_dist(rng);
        const auto lat = make_lattice(auto_lattice_size(kick, kResonantHbar, t) * 2, kResonantHbar);
        const auto ops = build_floquet(kick, lat);
        const auto psi0 = random_state(lat, 16, rng);
        const auto samples = oracle::sample_on_grid(psi0, kGrid);

        auto cp = oracle::cp_components_quadrature(samples, kick, t);
        ASSERT_LT(component_err(cp, otoc_decomposition(ops, OtocKind::pp(), t, psi0)), 1e-8) << trial;
        auto ct = oracle::ct_components_quadrature(samples, kick, t, eps);
        ASSERT_LT(component_err(ct, otoc_decomposition(ops, OtocKind::tp(eps), t, psi0)), 1e-8) << trial;
    }
}

TEST(quadrature, grid_converged) {
    std::mt19937_64 rng(3);
    const auto lat = make_lattice(128, kResonantHbar);
    const auto psi0 = random_state(lat, 16, rng);
    const auto coarse = oracle::sample_on_grid(psi0, kGrid);
    const auto fine = oracle::sample_on_grid(psi0, oracle::QuadratureGrid{8192});
    auto check = [](const oracle::Components &a, const oracle::Components &b) {
        const double scale = std::max({a.c1, a.c2, std::abs(a.c3)});
        ASSERT_LT(std::abs(a.c1 - b.c1) / scale, 1e-12);
        ASSERT_LT(std::abs(a.c2 - b.c2) / scale, 1e-12);
        ASSERT_LT(std::abs(a.c3 - b.c3) / scale, 1e-12);
    };
    check(oracle::cp_components_quadrature(coarse, 2, 7), oracle::cp_components_quadrature(fine, 2, 7));
    check(oracle::ct_components_quadrature(coarse, 2, 7, 2.2), oracle::ct_components_quadrature(fine, 2, 7, 2.2));
}

// Oracle: with Psi = cos(2 theta)/sqrt(pi) the legacy Phi integrates to 7/8
// and Gamma to -1/2, so the legacy total is -2 pi^2 K^2 t^2.
TEST(legacy_formulas, cp_total_disagrees_on_cosine) {
    const auto psi0 = cosine_samples();
    for (double kick : {1.0, 3.0}) {
        auto pub = oracle::cp_components_legacy(psi0, kick, 4);
        auto fixed = oracle::cp_components_quadrature(psi0, kick, 4);
        ASSERT_LT(rel_err(pub.c, -2 * kPi * kPi * kick * kick * 16), 1e-10);
        ASSERT_LT(rel_err(pub.c1, fixed.c1), 1e-12);
        ASSERT_LT(rel_err(pub.c2, fixed.c2), 1e-12);
        ASSERT_LT(std::abs(pub.c3 - fixed.c3), 1e-9);
    }
    auto ct_pub = oracle::ct_components_legacy(psi0, 2, 3, 1.1);
    ASSERT_LT(rel_err(ct_pub.c, oracle::ct_closed(2, 3, 1.1)), 1e-10);
}

TEST(legacy_formulas, cross_terms_matter_for_complex_states) {
    std::mt19937_64 rng(11);
    const auto lat = make_lattice(128, kResonantHbar);
    int differing = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto samples = oracle::sample_on_grid(random_state(lat, 8, rng), kGrid);
        auto pub = oracle::ct_components_legacy(samples, 2, 5, 1.0);
        auto fixed = oracle::ct_components_quadrature(samples, 2, 5, 1.0);
        auto pub_p = oracle::cp_components_legacy(samples, 2, 5);
        auto fixed_p = oracle::cp_components_quadrature(samples, 2, 5);
        if (rel_err(pub.c, fixed.c) > 1e-6 && rel_err(pub_p.c1, fixed_p.c1) > 1e-6) {
            ++differing;
        }
    }
    ASSERT_EQ(differing, 10);
}

TEST(oracle, refusals) {
    const auto psi0 = cosine_samples();
    ASSERT_THROW(oracle::resonant_state(psi0, 1, 1, 1.0), Error);
    ASSERT_THROW(oracle::require_resonant(std::nextafter(kResonantHbar, 20.0)), Error);
    ASSERT_NO_THROW(oracle::require_resonant(kResonantHbar));

    std::mt19937_64 rng(1);
    const auto wide = random_state(make_lattice(64, kResonantHbar), 16, rng);
    try {
        oracle::cp_components_quadrature(oracle::sample_on_grid(wide, oracle::QuadratureGrid{64}), 1, 1);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::kResolution);
    }
}
