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


#include "qkr/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qkr/error.h"
#include "qkr/lattice.h"

namespace qkr::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * kPi;
constexpr double kSpectralFloor = 1e-13;

// Returns the spectrum with the transform noise floor removed: modes outside
// |n| <= m/8 or below kSpectralFloor * peak are zeroed, since derivatives
// amplify their roundoff by n^order.
std::vector<Complex> resolved_spectrum(std::vector<Complex> coefficients) {
    const int m = static_cast<int>(coefficients.size());
    double peak = 0;
    double tail = 0;
    for (int i = 0; i < m; ++i) {
        const int n = i - m / 2;
        const double mag = std::abs(coefficients[i]);
        peak = std::max(peak, mag);
        if (std::abs(n) > m / 8) {
            tail = std::max(tail, mag);
        }
    }
    if (tail > kSpectralFloor * peak) {
        throw Error(
            ErrorCode::kResolution,
            "quadrature grid of " + std::to_string(m) + " nodes does not resolve the initial state; use a finer grid");
    }
    for (int i = 0; i < m; ++i) {
        if (std::abs(i - m / 2) > m / 8 || std::abs(coefficients[i]) <= kSpectralFloor * peak) {
            coefficients[i] = 0;
        }
    }
    return coefficients;
}

std::vector<Complex> shifted_derivative(const std::vector<Complex> &coefficients, double shift, int order) {
    const int m = static_cast<int>(coefficients.size());
    std::vector<Complex> out(m);
    for (int i = 0; i < m; ++i) {
        const double n = i - m / 2;
        Complex factor = std::polar(1.0, -shift * n);
        for (int k = 0; k < order; ++k) {
            factor *= Complex(0, n);
        }
        out[i] = coefficients[i] * factor;
    }
    return coefficients_to_angle(out).values;
}

double theta_at(int j, int m) {
    return kTwoPi * static_cast<double>(j) / m;
}

AngleSamples map_samples(int m, const auto &fn) {
    AngleSamples out;
    out.values.resize(m);
    for (int j = 0; j < m; ++j) {
        out.values[j] = fn(j, theta_at(j, m));
    }
    return out;
}

Complex integrate_fn(int m, const auto &fn) {
    Complex total = 0;
    for (int j = 0; j < m; ++j) {
        total += fn(j, theta_at(j, m));
    }
    return total * (kTwoPi / m);
}

// Phase accumulated by the translated state after kick reversal, engine convention.
double ct_phase(double kick_strength, double t, double epsilon, double theta) {
    return -kick_strength * t / kTwoPi * std::sin(epsilon / 2) * std::sin(theta - epsilon / 2);
}

}  // namespace

double QuadratureGrid::node(int j) const {
    return theta_at(j, size);
}

Complex QuadratureGrid::integrate(const std::vector<Complex> &integrand) const {
    Complex total = 0;
    for (const auto &v : integrand) {
        total += v;
    }
    return total * (kTwoPi / static_cast<double>(integrand.size()));
}

double QuadratureGrid::integrate(const std::vector<double> &integrand) const {
    double total = 0;
    for (double v : integrand) {
        total += v;
    }
    return total * (kTwoPi / static_cast<double>(integrand.size()));
}

AngleSamples sample_on_grid(const WaveFunction &psi0, const QuadratureGrid &grid) {
    return to_angle(psi0, grid.size);
}

AnalyticStateFns::AnalyticStateFns(const AngleSamples &psi0, double shift) : shift_(shift) {
    if (psi0.size() < 16 || psi0.size() % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "quadrature grid must be even and at least 16 nodes");
    }
    const auto coefficients = resolved_spectrum(angle_to_coefficients(psi0));
    for (int k = 0; k < 4; ++k) {
        derivs_[k] = shifted_derivative(coefficients, shift, k);
    }
}

std::vector<Complex> AnalyticStateFns::big_psi() const {
    return map_samples(size(), [&](int j, double th) {
               return derivs_[0][j] * std::cos(th) + derivs_[1][j] * std::sin(th);
           }).values;
}

std::vector<Complex> AnalyticStateFns::gamma() const {
    return map_samples(size(), [&](int j, double th) {
               const double s = std::sin(th);
               return std::conj(derivs_[0][j]) * (s * s * derivs_[2][j] + 0.5 * std::sin(2 * th) * derivs_[1][j]);
           }).values;
}

std::vector<Complex> AnalyticStateFns::big_upsilon() const {
    return map_samples(size(), [&](int j, double th) {
               return std::sin(th) * (std::conj(derivs_[0][j]) * derivs_[3][j] -
                                      std::conj(derivs_[1][j]) * derivs_[2][j]) -
                      std::cos(th) * std::norm(derivs_[1][j]);
           }).values;
}

std::vector<double> AnalyticStateFns::phi() const {
    const auto big = big_psi();
    std::vector<double> out(size());
    for (int j = 0; j < size(); ++j) {
        const double s = std::sin(theta_at(j, size()));
        out[j] = 0.5 * (std::norm(derivs_[1][j]) * s * s + std::norm(big[j]));
    }
    return out;
}

std::vector<Complex> AnalyticStateFns::small_upsilon() const {
    return map_samples(size(), [&](int j, double th) {
               return std::conj(derivs_[0][j]) * derivs_[1][j] * std::cos(th - shift_ / 2);
           }).values;
}

double cp_closed(double kick_strength, double t) {
    return 12 * kPi * kPi * kick_strength * kick_strength * t * t;
}

double ct_closed(double kick_strength, double t, double epsilon) {
    const double s = std::sin(epsilon / 2);
    return s * s * (2 + std::cos(epsilon)) * kick_strength * kick_strength * t * t;
}

double fotoc_small_eps(double kick_strength, double t, double epsilon, double hbar) {
    const double x = epsilon * kick_strength * t / (2 * hbar);
    return x * x;
}

void require_resonant(double hbar) {
    if (hbar != kResonantHbar) {
        throw Error(ErrorCode::kInvalidArgument, "analytic formulas hold only at hbar = 4*pi");
    }
}

AngleSamples resonant_state(const AngleSamples &psi0, double kick_strength, double t, double hbar) {
    require_resonant(hbar);
    const int m = static_cast<int>(psi0.size());
    return map_samples(m, [&](int j, double th) {
        return psi0.values[j] * std::polar(1.0, -kick_strength * t * std::cos(th) / hbar);
    });
}

AngleSamples psi_r_cp(const AngleSamples &psi0, double kick_strength, double t) {
    const AnalyticStateFns f(psi0);
    const double a = kick_strength * t;
    return map_samples(f.size(), [&](int j, double th) {
        return a * std::sin(th) * f.psi(0)[j] - Complex(0, 4 * kPi) * f.psi(1)[j];
    });
}

AngleSamples phi_r_cp(const AngleSamples &psi0, double kick_strength, double t) {
    const AnalyticStateFns f(psi0);
    const double a = kick_strength * t;
    const Complex minus_i4pi(0, -4 * kPi);
    return map_samples(f.size(), [&](int j, double th) {
        const Complex phi = minus_i4pi * f.psi(1)[j];
        const Complex phi1 = minus_i4pi * f.psi(2)[j];
        return a * std::sin(th) * phi + minus_i4pi * phi1;
    });
}

AngleSamples psi_r_ct(const AngleSamples &psi0, double kick_strength, double t, double epsilon) {
    const AnalyticStateFns f(psi0, epsilon);
    return map_samples(f.size(), [&](int j, double th) {
        return f.psi(0)[j] * std::polar(1.0, ct_phase(kick_strength, t, epsilon, th));
    });
}

AngleSamples phi_r_ct(const AngleSamples &psi0, double kick_strength, double t, double epsilon) {
    const AnalyticStateFns f(psi0, epsilon);
    return map_samples(f.size(), [&](int j, double th) {
        return Complex(0, -4 * kPi) * f.psi(1)[j] * std::polar(1.0, ct_phase(kick_strength, t, epsilon, th));
    });
}

Components cp_components_quadrature(const AngleSamples &psi0, double kick_strength, double t) {
    const AnalyticStateFns f(psi0);
    const QuadratureGrid grid = f.grid();
    const int m = f.size();
    const double a = kick_strength * t;
    const double pi2 = kPi * kPi;
    const double pi3 = pi2 * kPi;
    const double pi4 = pi2 * pi2;
    const auto big = f.big_psi();
    const auto &d1 = f.psi(1);
    const auto &d2 = f.psi(2);
    const auto &d3 = f.psi(3);

    const double int_big = integrate_fn(m, [&](int j, double) { return std::norm(big[j]); }).real();
    const double int_d2 = integrate_fn(m, [&](int j, double) { return std::norm(d2[j]); }).real();
    const double cross1 = integrate_fn(m, [&](int j, double) { return (std::conj(big[j]) * d2[j]).imag(); }).real();
    const double int_sd1 = integrate_fn(m, [&](int j, double th) {
                               const double s = std::sin(th);
                               return s * s * std::norm(d1[j]);
                           }).real();
    const double cross2 = integrate_fn(m, [&](int j, double th) {
                              return std::sin(th) * (std::conj(d1[j]) * d2[j]).imag();
                          }).real();
    const Complex int_gamma = grid.integrate(f.gamma());
    const Complex int_upsilon = grid.integrate(f.big_upsilon());
    const Complex int_d1d3 = integrate_fn(m, [&](int j, double) { return std::conj(d1[j]) * d3[j]; });

    Components out;
    out.c1 = 16 * pi2 * a * a * int_big + 256 * pi4 * int_d2 + 128 * pi3 * a * cross1;
    out.c2 = 16 * pi2 * a * a * int_sd1 + 256 * pi4 * int_d2 + 128 * pi3 * a * cross2;
    out.c3 = -16 * pi2 * a * a * int_gamma + Complex(0, 64 * pi3 * a) * int_upsilon - 256 * pi4 * int_d1d3;
    out.c = out.c1 + out.c2 - 2 * out.c3.real();
    return out;
}

Components ct_components_quadrature(const AngleSamples &psi0, double kick_strength, double t, double epsilon) {
    const AnalyticStateFns f(psi0, epsilon);
    const QuadratureGrid grid = f.grid();
    const int m = f.size();
    const double a = kick_strength * t;
    const double sigma = std::sin(epsilon / 2);
    const double pi2 = kPi * kPi;
    const auto &d0 = f.psi(0);
    const auto &d1 = f.psi(1);
    const auto &d2 = f.psi(2);

    const double int_cos = integrate_fn(m, [&](int j, double th) {
                               const double c = std::cos(th - epsilon / 2);
                               return c * c * std::norm(d0[j]);
                           }).real();
    const double int_d1 = integrate_fn(m, [&](int j, double) { return std::norm(d1[j]); }).real();
    const Complex int_ups = grid.integrate(f.small_upsilon());
    const Complex int_d0d2 = integrate_fn(m, [&](int j, double) { return std::conj(d0[j]) * d2[j]; });

    Components out;
    out.c1 = 4 * a * a * sigma * sigma * int_cos + 16 * pi2 * int_d1 - 16 * kPi * a * sigma * int_ups.imag();
    out.c2 = 16 * pi2 * int_d1;
    out.c3 = Complex(0, 8 * kPi * sigma * a) * int_ups - 16 * pi2 * int_d0d2;
    out.c = out.c1 + out.c2 - 2 * out.c3.real();
    return out;
}

Components cp_components_legacy(const AngleSamples &psi0, double kick_strength, double t) {
    const AnalyticStateFns f(psi0);
    const QuadratureGrid grid = f.grid();
    const int m = f.size();
    const double a = kick_strength * t;
    const double pi2 = kPi * kPi;
    const double pi3 = pi2 * kPi;
    const double pi4 = pi2 * pi2;
    const auto big = f.big_psi();
    const auto &d1 = f.psi(1);
    const auto &d2 = f.psi(2);
    const auto &d3 = f.psi(3);

    const double int_big = integrate_fn(m, [&](int j, double) { return std::norm(big[j]); }).real();
    const double int_d2 = integrate_fn(m, [&](int j, double) { return std::norm(d2[j]); }).real();
    const double int_sd1 = integrate_fn(m, [&](int j, double th) {
                               const double s = std::sin(th);
                               return s * s * std::norm(d1[j]);
                           }).real();
    const Complex int_gamma = grid.integrate(f.gamma());
    const Complex int_upsilon = grid.integrate(f.big_upsilon());
    const Complex int_d1d3 = integrate_fn(m, [&](int j, double) { return std::conj(d1[j]) * d3[j]; });
    const double int_phi = grid.integrate(f.phi());

    Components out;
    out.c1 = 16 * pi2 * a * a * int_big + 256 * pi4 * int_d2;
    out.c2 = 16 * pi2 * a * a * int_sd1 + 256 * pi4 * int_d2;
    out.c3 = -16 * pi2 * a * a * int_gamma + Complex(0, 64 * pi3 * a) * int_upsilon - 256 * pi4 * int_d1d3;
    out.c = 16 * pi2 * a * a * (int_phi + 2 * int_gamma.real()) + 128 * pi3 * a * int_upsilon.imag() +
            512 * pi4 * int_d1d3.real() + 512 * pi4 * int_d2;
    return out;
}

Components ct_components_legacy(const AngleSamples &psi0, double kick_strength, double t, double epsilon) {
    // The legacy form evaluates psi(theta + eps) and cos(theta + eps/2).
    const AnalyticStateFns f(psi0, -epsilon);
    const QuadratureGrid grid = f.grid();
    const int m = f.size();
    const double a = kick_strength * t;
    const double sigma = std::sin(epsilon / 2);
    const double pi2 = kPi * kPi;
    const auto &d0 = f.psi(0);
    const auto &d1 = f.psi(1);
    const auto &d2 = f.psi(2);

    const double int_cos = integrate_fn(m, [&](int j, double th) {
                               const double c = std::cos(th + epsilon / 2);
                               return c * c * std::norm(d0[j]);
                           }).real();
    const double int_d1 = integrate_fn(m, [&](int j, double) { return std::norm(d1[j]); }).real();
    const Complex int_ups = grid.integrate(f.small_upsilon());
    const Complex int_d0d2 = integrate_fn(m, [&](int j, double) { return std::conj(d0[j]) * d2[j]; });

    Components out;
    out.c1 = 4 * a * a * sigma * sigma * int_cos + 16 * pi2 * int_d1;
    out.c2 = 16 * pi2 * int_d1;
    out.c3 = Complex(0, 8 * kPi * sigma * a) * int_ups - 16 * pi2 * int_d0d2;
    out.c = 4 * a * a * sigma * sigma * int_cos - 16 * kPi * sigma * a * int_ups.imag() + 32 * pi2 * int_d0d2.real() +
            32 * pi2 * int_d1;
    return out;
}

}  // namespace qkr::oracle
