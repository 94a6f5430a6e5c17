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


#include "qkr/floquet.h"

#include <cmath>
#include <string>

#include "fft.h"
#include "leakage_message.h"
#include "qkr/error.h"

namespace qkr {

namespace {

OperatorSpec make_kick(double kick_strength, const MomentumLattice &lattice) {
    const double scale = kick_strength / lattice.hbar();
    return angle_phase(lattice, [scale](double theta) { return std::polar(1.0, -scale * std::cos(theta)); });
}

OperatorSpec make_free(const MomentumLattice &lattice, bool resonant) {
    if (resonant) {
        return identity_operator(lattice);
    }
    const double hbar = lattice.hbar();
    return momentum_phase(lattice, [hbar](int n) {
        const double nn = static_cast<double>(n) * n;
        return std::polar(1.0, -hbar * nn / 2);
    });
}

// Holds a state in DFT slot order (slot k <-> n = k mod N) so a run of kicks
// needs no reordering between steps.
class Propagator {
   public:
    Propagator(const FloquetOps &ops, const WaveFunction &psi)
        : ops_(ops),
          size_(ops.lattice().size()),
          kick_(std::get<AnglePhase>(ops.kick().kind()).phases),
          free_(size_),
          coefficients_(size_),
          angle_(size_) {
        const auto &free_table = std::get<MomentumPhase>(ops.free().kind()).phases;
        for (size_t i = 0; i < psi.amps.size(); ++i) {
            coefficients_[slot(psi.lattice.index_at(i))] = psi.amps[i];
            free_[slot(psi.lattice.index_at(i))] = free_table[i];
        }
    }

    void advance(Direction direction) {
        const double inv_n = 1.0 / size_;
        if (direction == Direction::kForward) {
            detail::dft(coefficients_, angle_, +1);
            for (size_t j = 0; j < angle_.size(); ++j) {
                angle_[j] *= kick_[j];
            }
            detail::dft(angle_, coefficients_, -1);
            for (size_t k = 0; k < coefficients_.size(); ++k) {
                coefficients_[k] *= inv_n;
            }
            if (!ops_.resonant()) {
                for (size_t k = 0; k < coefficients_.size(); ++k) {
                    coefficients_[k] *= free_[k];
                }
            }
        } else {
            if (!ops_.resonant()) {
                for (size_t k = 0; k < coefficients_.size(); ++k) {
                    coefficients_[k] *= std::conj(free_[k]);
                }
            }
            detail::dft(coefficients_, angle_, +1);
            for (size_t j = 0; j < angle_.size(); ++j) {
                angle_[j] *= std::conj(kick_[j]);
            }
            detail::dft(angle_, coefficients_, -1);
            for (size_t k = 0; k < coefficients_.size(); ++k) {
                coefficients_[k] *= inv_n;
            }
        }
    }

    // Edge band of the natural ordering is the contiguous block around N/2.
    void check_leakage(int64_t kick) const {
        const size_t width = ops_.lattice().edge_width();
        const size_t half = size_ / 2;
        double edge = 0;
        double total = 0;
        for (size_t k = 0; k < coefficients_.size(); ++k) {
            total += std::norm(coefficients_[k]);
        }
        for (size_t k = half - width; k < half + width; ++k) {
            edge += std::norm(coefficients_[k]);
        }
        const double leak = total > 0 ? edge / total : 0.0;
        if (!(leak < kLeakageLimit)) {
            throw Error(
                ErrorCode::kLeakage, detail::leakage_message("evolve, kick " + std::to_string(kick), leak, size_));
        }
    }

    WaveFunction state(bool normalized) const {
        WaveFunction out(ops_.lattice());
        for (size_t i = 0; i < out.amps.size(); ++i) {
            out.amps[i] = coefficients_[slot(out.lattice.index_at(i))];
        }
        out.normalized = normalized;
        return out;
    }

   private:
    size_t slot(int n) const {
        return static_cast<size_t>(((n % size_) + size_) % size_);
    }

    const FloquetOps &ops_;
    int size_;
    const std::vector<Complex> &kick_;
    std::vector<Complex> free_;
    std::vector<Complex> coefficients_;
    std::vector<Complex> angle_;
};

void require_lattice(const FloquetOps &ops, const WaveFunction &psi) {
    if (!(ops.lattice() == psi.lattice)) {
        throw Error(ErrorCode::kLatticeMismatch, "state and Floquet operator live on different lattices");
    }
}

}  // namespace

FloquetOps::FloquetOps(double kick_strength, const MomentumLattice &lattice, bool resonant)
    : kick_strength_(kick_strength),
      lattice_(lattice),
      resonant_(resonant),
      kick_(make_kick(kick_strength, lattice)),
      free_(make_free(lattice, resonant)) {
}

FloquetOps build_floquet(double kick_strength, const MomentumLattice &lattice, std::optional<bool> resonant_hint) {
    if (!(kick_strength >= 0) || !std::isfinite(kick_strength)) {
        throw Error(ErrorCode::kInvalidArgument, "kick strength must be finite and >= 0");
    }
    const bool exact = lattice.hbar() == kResonantHbar;
    if (resonant_hint.value_or(false) && !exact) {
        throw Error(ErrorCode::kInvalidArgument, "resonant flag requested but hbar is not 4*pi");
    }
    return FloquetOps(kick_strength, lattice, resonant_hint.value_or(exact));
}

WaveFunction step(const FloquetOps &ops, const WaveFunction &psi, Direction direction) {
    return evolve(ops, psi, 1, direction);
}

WaveFunction evolve(const FloquetOps &ops, const WaveFunction &psi, int64_t kicks, Direction direction) {
    require_lattice(ops, psi);
    if (kicks < 0) {
        throw Error(ErrorCode::kInvalidArgument, "kick count must be non-negative");
    }
    if (kicks == 0) {
        return psi;
    }
    Propagator propagator(ops, psi);
    for (int64_t k = 1; k <= kicks; ++k) {
        propagator.advance(direction);
        propagator.check_leakage(k);
    }
    return propagator.state(psi.normalized);
}

WaveFunction heisenberg_apply(const FloquetOps &ops, const OperatorSpec &a, int64_t kicks, const WaveFunction &psi) {
    WaveFunction forward = evolve(ops, psi, kicks, Direction::kForward);
    WaveFunction acted = apply_operator(a, forward);
    return evolve(ops, acted, kicks, Direction::kBackward);
}

}  // namespace qkr
