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


#pragma once

#include <complex>
#include <map>
#include <string_view>
#include <variant>
#include <vector>

#include "qkr/lattice.h"

namespace qkr {

using Complex = std::complex<double>;

/// Momentum-basis state. amps[i] is the coefficient of <theta|phi_n> =
/// exp(i n theta) / sqrt(2 pi) with n = lattice.index_at(i).
///
/// `normalized` records whether the state is a unit vector. Operators that
/// are not unitary clear it instead of renormalizing.
struct WaveFunction {
    MomentumLattice lattice;
    std::vector<Complex> amps;
    bool normalized = false;

    explicit WaveFunction(const MomentumLattice &lat) : lattice(lat), amps(lat.size()) {
    }
    WaveFunction(const MomentumLattice &lat, std::vector<Complex> a, bool is_normalized);

    Complex amp(int n) const {
        return amps[lattice.slot_of(n)];
    }
};

/// Samples psi(theta_j) at theta_j = 2 pi j / M, j = 0..M-1.
struct AngleSamples {
    std::vector<Complex> values;

    size_t size() const {
        return values.size();
    }
    /// Trapezoidal approximation of the integral of |psi|^2 over [0, 2 pi).
    double norm_sq() const;
};

struct CosineState {};
struct PlaneState {
    int n0 = 0;
};
struct CustomState {
    std::map<int, Complex> coefficients;
};
using InitialState = std::variant<CosineState, PlaneState, CustomState>;

/// Parses "cosine", "plane:<n0>". Custom states come from files, see the CLI.
InitialState parse_initial_state(std::string_view text);

WaveFunction init_state(const InitialState &spec, const MomentumLattice &lattice);

/// psi(theta_j) = (1/sqrt(2 pi)) sum_n amps_n exp(i n theta_j) on the N-point grid.
AngleSamples to_angle(const WaveFunction &psi);
/// Same convention on an M-point grid with M >= N (zero padded in momentum).
AngleSamples to_angle(const WaveFunction &psi, int grid_size);
/// Inverse of to_angle; samples.size() must equal lattice.size().
WaveFunction to_momentum(const AngleSamples &samples, const MomentumLattice &lattice);

/// Conjugate-linear in the first argument.
Complex inner(const WaveFunction &bra, const WaveFunction &ket);
double norm_sq(const WaveFunction &psi);
double expectation_p(const WaveFunction &psi);
double expectation_p2(const WaveFunction &psi);

/// Fraction of the total weight sitting in the outer 10% of lattice slots.
double leakage_fraction(const WaveFunction &psi);
/// Throws ErrorCode::kLeakage when leakage_fraction(psi) >= kLeakageLimit.
void check_leakage(const WaveFunction &psi, std::string_view context);
inline constexpr double kLeakageLimit = 1e-12;

/// d^k psi / d theta^k by multiplying momentum coefficients by (i n)^k.
AngleSamples spectral_derivative(const AngleSamples &samples, int order);

/// Momentum coefficients of an arbitrary M-point sample set, indexed like a
/// lattice of size M (n = i - M/2).
std::vector<Complex> angle_to_coefficients(const AngleSamples &samples);
AngleSamples coefficients_to_angle(const std::vector<Complex> &coefficients);

}  // namespace qkr
