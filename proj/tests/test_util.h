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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qkr/wavefunction.h"

namespace qkr::testing {

/// Random normalized state with support on |n| <= band (complex Gaussian amplitudes).
inline WaveFunction random_state(const MomentumLattice &lattice, int band, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CustomState custom;
    for (int n = -band; n <= band; ++n) {
        custom.coefficients[n] = Complex(gauss(rng), gauss(rng));
    }
    return init_state(custom, lattice);
}

/// psi(theta) evaluated by direct summation of the momentum series.
inline Complex evaluate_series(const WaveFunction &psi, double theta) {
    Complex total = 0;
    for (size_t i = 0; i < psi.amps.size(); ++i) {
        if (psi.amps[i] != Complex(0)) {
            total += psi.amps[i] * std::polar(1.0, psi.lattice.index_at(i) * theta);
        }
    }
    return total / std::sqrt(2 * M_PI);
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), std::abs(got));
    return scale == 0 ? 0.0 : std::abs(got - want) / scale;
}

inline double max_abs_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double worst = 0;
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return a.size() == b.size() ? worst : INFINITY;
}

}  // namespace qkr::testing
