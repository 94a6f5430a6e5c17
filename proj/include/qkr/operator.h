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

#include <functional>
#include <variant>

#include "qkr/wavefunction.h"

namespace qkr {

/// Diagonal phase in the momentum basis, tabulated per lattice slot.
struct MomentumPhase {
    std::vector<Complex> phases;
};

/// Diagonal phase on the N-point angle grid.
struct AnglePhase {
    std::vector<Complex> phases;
};

/// The momentum operator p = -i hbar d/dtheta.
struct MomentumMultiply {};

/// |chi><chi|
struct Projector {
    WaveFunction chi;
};

class OperatorSpec {
   public:
    using Kind = std::variant<MomentumPhase, AnglePhase, MomentumMultiply, Projector>;

    OperatorSpec(const MomentumLattice &lattice, Kind kind);

    const MomentumLattice &lattice() const {
        return lattice_;
    }
    const Kind &kind() const {
        return kind_;
    }
    bool unitary() const;

   private:
    MomentumLattice lattice_;
    Kind kind_;
};

/// Phase tables are checked for unit modulus within this tolerance.
inline constexpr double kUnitModulusTolerance = 1e-12;

OperatorSpec momentum_phase(const MomentumLattice &lattice, const std::function<Complex(int)> &f);
OperatorSpec angle_phase(const MomentumLattice &lattice, const std::function<Complex(double)> &g);
OperatorSpec momentum_operator(const MomentumLattice &lattice);
OperatorSpec projector(const WaveFunction &chi);
/// T(epsilon) = exp(-i epsilon p / hbar), i.e. exp(-i epsilon n) per mode.
/// Acting on angle samples it maps psi(theta) to psi(theta - epsilon).
OperatorSpec translation(const MomentumLattice &lattice, double epsilon);
OperatorSpec identity_operator(const MomentumLattice &lattice);

WaveFunction apply_operator(const OperatorSpec &op, const WaveFunction &psi);

}  // namespace qkr
