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

#include "qkr/operator.h"

namespace qkr {

enum class Direction { kForward, kBackward };

/// One-period propagator U = U_f U_K of the kicked rotor on a fixed lattice.
///
/// kick is the angle phase exp(-i K cos(theta) / hbar); free is the momentum
/// phase exp(-i hbar n^2 / 2). When resonant, the free phases are the exact
/// constant 1 and are skipped during propagation. Immutable once built.
class FloquetOps {
   public:
    FloquetOps(double kick_strength, const MomentumLattice &lattice, bool resonant);

    double kick_strength() const {
        return kick_strength_;
    }
    double hbar() const {
        return lattice_.hbar();
    }
    bool resonant() const {
        return resonant_;
    }
    const MomentumLattice &lattice() const {
        return lattice_;
    }
    const OperatorSpec &kick() const {
        return kick_;
    }
    const OperatorSpec &free() const {
        return free_;
    }

   private:
    double kick_strength_;
    MomentumLattice lattice_;
    bool resonant_;
    OperatorSpec kick_;
    OperatorSpec free_;
};

/// The resonant flag is set when the hint is true or when no hint is given and
/// lattice.hbar() is bit-equal to kResonantHbar. A true hint on any other
/// hbar is rejected; a false hint forces evaluated free phases.
FloquetOps build_floquet(double kick_strength, const MomentumLattice &lattice, std::optional<bool> resonant_hint = {});

/// Forward applies U_K then U_f. Backward applies the exact adjoint
/// U^dagger = U_K^dagger U_f^dagger (conjugated phases in reverse order).
WaveFunction step(const FloquetOps &ops, const WaveFunction &psi, Direction direction);

/// `kicks` repeated steps. The leakage guard is checked after every step.
WaveFunction evolve(const FloquetOps &ops, const WaveFunction &psi, int64_t kicks, Direction direction);

/// U^dagger(t) A U(t) psi: forward t kicks, apply A, backward t kicks.
WaveFunction heisenberg_apply(const FloquetOps &ops, const OperatorSpec &a, int64_t kicks, const WaveFunction &psi);

}  // namespace qkr
