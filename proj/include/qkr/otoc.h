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

#include <cstdint>
#include <optional>
#include <vector>

#include "qkr/floquet.h"

namespace qkr {

enum class OtocTag { kMomentumMomentum, kTranslationMomentum, kFidelity };

/// Operator pair (A, B):
///   kMomentumMomentum   A = p,          B = p
///   kTranslationMomentum A = T(epsilon), B = p
///   kFidelity           A = T(epsilon), B = |psi0><psi0|
struct OtocKind {
    OtocTag tag;
    double epsilon = 0;

    static OtocKind pp();
    static OtocKind tp(double epsilon);
    static OtocKind fidelity(double epsilon);
};

/// epsilon reduced into [0, 2 pi).
double canonical_epsilon(double epsilon);

enum class OtocMethod { kDecomposition, kCommutatorNorm };

struct OtocSample {
    int64_t t = 0;
    double c = 0;
    /// Set only by the decomposition method.
    std::optional<double> c1;
    std::optional<double> c2;
    std::optional<Complex> c3;
    OtocMethod method = OtocMethod::kDecomposition;
    /// |<psi0| T(t) |psi0>|^2 for the fidelity kind.
    std::optional<double> fidelity;
    /// <p^2> of the forward-evolved initial state at time t.
    std::optional<double> p2;
};

/// C = C1 + C2 - 2 Re C3 with
///   C1 = <psi_R|B^2|psi_R>, C2 = <phi_R|phi_R>, C3 = <psi_R|B|phi_R>,
///   psi_R = U^dagger(t) A U(t) psi0, phi_R = U^dagger(t) A U(t) B psi0.
OtocSample otoc_decomposition(const FloquetOps &ops, const OtocKind &kind, int64_t t, const WaveFunction &psi0);

/// C = || A(t) B psi0 - B A(t) psi0 ||^2.
OtocSample otoc_commutator_norm(const FloquetOps &ops, const OtocKind &kind, int64_t t, const WaveFunction &psi0);

/// F_O = |<psi0| U^dagger(t) T(epsilon) U(t) |psi0>|^2 and C = 1 - F_O.
OtocSample fotoc(const FloquetOps &ops, double epsilon, int64_t t, const WaveFunction &psi0);

/// One sample per scheduled time. Forward states are carried from one
/// schedule point to the next instead of being recomputed from t = 0.
std::vector<OtocSample> run_series(
    const FloquetOps &ops, const OtocKind &kind, const std::vector<int64_t> &schedule, const WaveFunction &psi0,
    OtocMethod method);

struct EnergySample {
    int64_t t = 0;
    double p2 = 0;
    double p_mean = 0;
};

std::vector<EnergySample> energy_series(
    const FloquetOps &ops, const std::vector<int64_t> &schedule, const WaveFunction &psi0);

/// Smallest power of two >= 64 + 8 * ceil(K t_max / hbar).
int auto_lattice_size(double kick_strength, double hbar, int64_t t_max);

}  // namespace qkr
