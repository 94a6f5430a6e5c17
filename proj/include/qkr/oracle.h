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

#include <vector>

#include "qkr/wavefunction.h"

namespace qkr::oracle {

/// Periodic trapezoidal rule on theta_j = 2 pi j / size.
struct QuadratureGrid {
    int size = 4096;

    double node(int j) const;
    Complex integrate(const std::vector<Complex> &integrand) const;
    double integrate(const std::vector<double> &integrand) const;
};

/// psi0 sampled on the quadrature grid (zero padded in momentum).
AngleSamples sample_on_grid(const WaveFunction &psi0, const QuadratureGrid &grid);

/// Samples of psi(theta - shift) and its first three angle derivatives, all
/// computed spectrally from the samples of psi0. The spectrum of psi0 must
/// vanish beyond |n| = size/8 so that every product formed here stays
/// resolved by the trapezoidal rule.
class AnalyticStateFns {
   public:
    explicit AnalyticStateFns(const AngleSamples &psi0, double shift = 0);

    int size() const {
        return static_cast<int>(derivs_[0].size());
    }
    QuadratureGrid grid() const {
        return {size()};
    }
    /// order 0..3
    const std::vector<Complex> &psi(int order) const {
        return derivs_[order];
    }

    /// Psi = psi cos(theta) + psi' sin(theta)
    std::vector<Complex> big_psi() const;
    /// Gamma = psi^* [ sin^2(theta) psi'' + sin(2 theta) psi' / 2 ]
    std::vector<Complex> gamma() const;
    /// Upsilon = sin(theta) [psi^* psi''' - psi'^* psi''] - cos(theta) |psi'|^2
    std::vector<Complex> big_upsilon() const;
    /// Legacy Phi: [ |psi'|^2 sin^2(theta) + |Psi|^2 ] / 2
    std::vector<double> phi() const;
    /// upsilon = psi^* psi' cos(theta - shift/2) for the shifted samples.
    std::vector<Complex> small_upsilon() const;

   private:
    double shift_;
    std::vector<Complex> derivs_[4];
};

struct Components {
    double c1 = 0;
    double c2 = 0;
    Complex c3;
    double c = 0;
};

/// 12 pi^2 K^2 t^2
double cp_closed(double kick_strength, double t);
/// sin^2(eps/2) (2 + cos eps) K^2 t^2
double ct_closed(double kick_strength, double t, double epsilon);
/// (eps K t / (2 hbar))^2
double fotoc_small_eps(double kick_strength, double t, double epsilon, double hbar);

/// Throws unless hbar is bit-equal to kResonantHbar.
void require_resonant(double hbar);

/// psi0(theta) exp(-i K t cos(theta) / hbar). Valid at resonance only.
AngleSamples resonant_state(const AngleSamples &psi0, double kick_strength, double t, double hbar);

/// Time-reversed states for A = B = p at hbar = 4 pi:
///   psi_R = K t sin(theta) psi - i 4 pi psi'
///   phi_R = K t sin(theta) phi - i 4 pi phi',  phi = -i 4 pi psi'
AngleSamples psi_r_cp(const AngleSamples &psi0, double kick_strength, double t);
AngleSamples phi_r_cp(const AngleSamples &psi0, double kick_strength, double t);

/// Time-reversed states for A = T(eps) = exp(-i eps p / hbar), B = p at
/// hbar = 4 pi. T(eps) maps psi(theta) to psi(theta - eps), so
///   psi_R = psi(theta - eps) exp[-i K t / (2 pi) sin(eps/2) sin(theta - eps/2)]
///   phi_R = -i 4 pi psi'(theta - eps) exp[same phase]
AngleSamples psi_r_ct(const AngleSamples &psi0, double kick_strength, double t, double epsilon);
AngleSamples phi_r_ct(const AngleSamples &psi0, double kick_strength, double t, double epsilon);

/// Components of C_p for an arbitrary band-limited psi0, by quadrature.
/// Includes the K t cross terms of C1 and C2 that vanish for real psi0.
Components cp_components_quadrature(const AngleSamples &psi0, double kick_strength, double t);
/// Components of C_T, same conventions as psi_r_ct.
Components ct_components_quadrature(const AngleSamples &psi0, double kick_strength, double t, double epsilon);

/// Legacy closed-form bookkeeping: no K t cross terms in C1 and C2, Phi with
/// the extra factor 1/2, and the shift written as psi(theta + eps). Kept to
/// report its disagreement with the engine; not used for verification.
Components cp_components_legacy(const AngleSamples &psi0, double kick_strength, double t);
Components ct_components_legacy(const AngleSamples &psi0, double kick_strength, double t, double epsilon);

}  // namespace qkr::oracle
