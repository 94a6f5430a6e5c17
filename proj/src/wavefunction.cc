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


#include "qkr/wavefunction.h"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.h"
#include "leakage_message.h"
#include "qkr/error.h"

namespace qkr {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kNormTolerance = 1e-10;

// Position of momentum n inside an M-point DFT buffer.
size_t dft_slot(int n, int m) {
    return static_cast<size_t>(((n % m) + m) % m);
}

void require_same_lattice(const WaveFunction &a, const WaveFunction &b) {
    if (!(a.lattice == b.lattice)) {
        throw Error(ErrorCode::kLatticeMismatch, "states live on different lattices");
    }
}

void require_normalized(const WaveFunction &psi, std::string_view what) {
    if (!psi.normalized) {
        throw Error(ErrorCode::kUnnormalized, std::string(what) + " requires a normalized state");
    }
}

}  // namespace

WaveFunction::WaveFunction(const MomentumLattice &lat, std::vector<Complex> a, bool is_normalized)
    : lattice(lat), amps(std::move(a)), normalized(is_normalized) {
    if (amps.size() != static_cast<size_t>(lattice.size())) {
        throw Error(ErrorCode::kInvalidArgument, "amplitude count does not match lattice size");
    }
    if (normalized && std::abs(norm_sq(*this) - 1) > kNormTolerance) {
        throw Error(ErrorCode::kUnnormalized, "state flagged normalized but norm differs from 1");
    }
}

double AngleSamples::norm_sq() const {
    double total = 0;
    for (const auto &v : values) {
        total += std::norm(v);
    }
    return total * kTwoPi / static_cast<double>(values.size());
}

InitialState parse_initial_state(std::string_view text) {
    if (text == "cosine") {
        return CosineState{};
    }
    constexpr std::string_view plane = "plane:";
    if (text.substr(0, plane.size()) == plane) {
        std::string rest(text.substr(plane.size()));
        size_t used = 0;
        int n0 = 0;
        try {
            n0 = std::stoi(rest, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != rest.size()) {
            throw Error(ErrorCode::kInvalidArgument, "bad plane-wave index: " + rest);
        }
        return PlaneState{n0};
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown initial state: " + std::string(text));
}

WaveFunction init_state(const InitialState &spec, const MomentumLattice &lattice) {
    std::vector<Complex> amps(lattice.size());
    if (std::holds_alternative<CosineState>(spec)) {
        amps[lattice.slot_of(-1)] = std::numbers::sqrt2 / 2;
        amps[lattice.slot_of(1)] = std::numbers::sqrt2 / 2;
    } else if (const auto *plane = std::get_if<PlaneState>(&spec)) {
        if (!lattice.contains(plane->n0)) {
            throw Error(
                ErrorCode::kInvalidArgument, "plane-wave index " + std::to_string(plane->n0) + " outside lattice");
        }
        amps[lattice.slot_of(plane->n0)] = 1;
    } else {
        const auto &custom = std::get<CustomState>(spec);
        double total = 0;
        for (const auto &[n, c] : custom.coefficients) {
            if (!lattice.contains(n)) {
                throw Error(ErrorCode::kInvalidArgument, "custom coefficient index " + std::to_string(n) + " outside lattice");
            }
            amps[lattice.slot_of(n)] = c;
            total += std::norm(c);
        }
        if (!(total > 0) || !std::isfinite(total)) {
            throw Error(ErrorCode::kInvalidArgument, "custom initial state has zero norm");
        }
        double scale = 1 / std::sqrt(total);
        for (auto &a : amps) {
            a *= scale;
        }
    }
    return WaveFunction(lattice, std::move(amps), true);
}

AngleSamples to_angle(const WaveFunction &psi) {
    return to_angle(psi, psi.lattice.size());
}

AngleSamples to_angle(const WaveFunction &psi, int grid_size) {
    const int n_size = psi.lattice.size();
    if (grid_size < n_size) {
        throw Error(ErrorCode::kInvalidArgument, "angle grid smaller than the lattice");
    }
    std::vector<Complex> buffer(grid_size);
    for (size_t i = 0; i < psi.amps.size(); ++i) {
        buffer[dft_slot(psi.lattice.index_at(i), grid_size)] = psi.amps[i];
    }
    AngleSamples out;
    out.values.resize(grid_size);
    detail::dft(buffer, out.values, +1);
    const double scale = 1 / std::sqrt(kTwoPi);
    for (auto &v : out.values) {
        v *= scale;
    }
    return out;
}

std::vector<Complex> angle_to_coefficients(const AngleSamples &samples) {
    const int m = static_cast<int>(samples.size());
    std::vector<Complex> spectrum(m);
    detail::dft(samples.values, spectrum, -1);
    std::vector<Complex> coefficients(m);
    const double scale = std::sqrt(kTwoPi) / m;
    for (int i = 0; i < m; ++i) {
        int n = i - m / 2;
        coefficients[i] = spectrum[dft_slot(n, m)] * scale;
    }
    return coefficients;
}

AngleSamples coefficients_to_angle(const std::vector<Complex> &coefficients) {
    const int m = static_cast<int>(coefficients.size());
    std::vector<Complex> buffer(m);
    for (int i = 0; i < m; ++i) {
        buffer[dft_slot(i - m / 2, m)] = coefficients[i];
    }
    AngleSamples out;
    out.values.resize(m);
    detail::dft(buffer, out.values, +1);
    const double scale = 1 / std::sqrt(kTwoPi);
    for (auto &v : out.values) {
        v *= scale;
    }
    return out;
}

WaveFunction to_momentum(const AngleSamples &samples, const MomentumLattice &lattice) {
    if (samples.size() != static_cast<size_t>(lattice.size())) {
        throw Error(ErrorCode::kInvalidArgument, "angle grid size does not match lattice");
    }
    return WaveFunction(lattice, angle_to_coefficients(samples), false);
}

Complex inner(const WaveFunction &bra, const WaveFunction &ket) {
    require_same_lattice(bra, ket);
    Complex total = 0;
    for (size_t i = 0; i < bra.amps.size(); ++i) {
        total += std::conj(bra.amps[i]) * ket.amps[i];
    }
    return total;
}

double norm_sq(const WaveFunction &psi) {
    double total = 0;
    for (const auto &a : psi.amps) {
        total += std::norm(a);
    }
    return total;
}

double expectation_p(const WaveFunction &psi) {
    require_normalized(psi, "expectation_p");
    check_leakage(psi, "expectation_p");
    double total = 0;
    for (size_t i = 0; i < psi.amps.size(); ++i) {
        total += psi.lattice.momentum_at(i) * std::norm(psi.amps[i]);
    }
    return total;
}

double expectation_p2(const WaveFunction &psi) {
    require_normalized(psi, "expectation_p2");
    check_leakage(psi, "expectation_p2");
    double total = 0;
    for (size_t i = 0; i < psi.amps.size(); ++i) {
        double p = psi.lattice.momentum_at(i);
        total += p * p * std::norm(psi.amps[i]);
    }
    return total;
}

double leakage_fraction(const WaveFunction &psi) {
    const size_t width = psi.lattice.edge_width();
    const size_t size = psi.amps.size();
    double edge = 0;
    for (size_t i = 0; i < width; ++i) {
        edge += std::norm(psi.amps[i]) + std::norm(psi.amps[size - 1 - i]);
    }
    double total = norm_sq(psi);
    return total > 0 ? edge / total : 0.0;
}

void check_leakage(const WaveFunction &psi, std::string_view context) {
    double leak = leakage_fraction(psi);
    if (!(leak < kLeakageLimit)) {
        throw Error(
            ErrorCode::kLeakage, detail::leakage_message(context, leak, psi.lattice.size()));
    }
}

AngleSamples spectral_derivative(const AngleSamples &samples, int order) {
    if (order < 1 || order > 3) {
        throw Error(ErrorCode::kInvalidArgument, "spectral derivative order must be 1, 2 or 3");
    }
    auto coefficients = angle_to_coefficients(samples);
    const int m = static_cast<int>(coefficients.size());
    for (int i = 0; i < m; ++i) {
        const double n = i - m / 2;
        switch (order) {
            case 1:
                coefficients[i] *= Complex(0, n);
                break;
            case 2:
                coefficients[i] *= -n * n;
                break;
            default:
                coefficients[i] *= Complex(0, -n * n * n);
                break;
        }
    }
    return coefficients_to_angle(coefficients);
}

}  // namespace qkr
