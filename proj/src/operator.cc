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


#include "qkr/operator.h"

#include <cmath>
#include <numbers>

#include "qkr/error.h"

namespace qkr {

namespace {

void require_unit_modulus(const std::vector<Complex> &phases, std::string_view what) {
    for (const auto &p : phases) {
        if (std::abs(std::abs(p) - 1) > kUnitModulusTolerance) {
            throw Error(ErrorCode::kInvalidArgument, std::string(what) + " entries must have unit modulus");
        }
    }
}

}  // namespace

OperatorSpec::OperatorSpec(const MomentumLattice &lattice, Kind kind) : lattice_(lattice), kind_(std::move(kind)) {
    if (const auto *m = std::get_if<MomentumPhase>(&kind_)) {
        if (m->phases.size() != static_cast<size_t>(lattice_.size())) {
            throw Error(ErrorCode::kInvalidArgument, "momentum phase table size does not match lattice");
        }
        require_unit_modulus(m->phases, "momentum phase");
    } else if (const auto *a = std::get_if<AnglePhase>(&kind_)) {
        if (a->phases.size() != static_cast<size_t>(lattice_.size())) {
            throw Error(ErrorCode::kInvalidArgument, "angle phase table size does not match lattice");
        }
        require_unit_modulus(a->phases, "angle phase");
    } else if (const auto *p = std::get_if<Projector>(&kind_)) {
        if (!(p->chi.lattice == lattice_)) {
            throw Error(ErrorCode::kLatticeMismatch, "projector state lives on a different lattice");
        }
    }
}

bool OperatorSpec::unitary() const {
    return std::holds_alternative<MomentumPhase>(kind_) || std::holds_alternative<AnglePhase>(kind_);
}

OperatorSpec momentum_phase(const MomentumLattice &lattice, const std::function<Complex(int)> &f) {
    MomentumPhase table;
    table.phases.resize(lattice.size());
    for (size_t i = 0; i < table.phases.size(); ++i) {
        table.phases[i] = f(lattice.index_at(i));
    }
    return OperatorSpec(lattice, std::move(table));
}

OperatorSpec angle_phase(const MomentumLattice &lattice, const std::function<Complex(double)> &g) {
    AnglePhase table;
    table.phases.resize(lattice.size());
    for (size_t j = 0; j < table.phases.size(); ++j) {
        table.phases[j] = g(2 * std::numbers::pi * static_cast<double>(j) / lattice.size());
    }
    return OperatorSpec(lattice, std::move(table));
}

OperatorSpec momentum_operator(const MomentumLattice &lattice) {
    return OperatorSpec(lattice, MomentumMultiply{});
}

OperatorSpec projector(const WaveFunction &chi) {
    return OperatorSpec(chi.lattice, Projector{chi});
}

OperatorSpec translation(const MomentumLattice &lattice, double epsilon) {
    const double shift = std::fmod(epsilon, 2 * std::numbers::pi);
    return momentum_phase(lattice, [shift](int n) { return std::polar(1.0, -shift * n); });
}

OperatorSpec identity_operator(const MomentumLattice &lattice) {
    return OperatorSpec(lattice, MomentumPhase{std::vector<Complex>(lattice.size(), Complex(1))});
}

WaveFunction apply_operator(const OperatorSpec &op, const WaveFunction &psi) {
    if (!(op.lattice() == psi.lattice)) {
        throw Error(ErrorCode::kLatticeMismatch, "operator and state live on different lattices");
    }
    WaveFunction out = psi;
    const auto &kind = op.kind();
    if (const auto *m = std::get_if<MomentumPhase>(&kind)) {
        for (size_t i = 0; i < out.amps.size(); ++i) {
            out.amps[i] *= m->phases[i];
        }
    } else if (const auto *a = std::get_if<AnglePhase>(&kind)) {
        AngleSamples samples = to_angle(psi);
        for (size_t j = 0; j < samples.values.size(); ++j) {
            samples.values[j] *= a->phases[j];
        }
        out = to_momentum(samples, psi.lattice);
        out.normalized = psi.normalized;
    } else if (std::holds_alternative<MomentumMultiply>(kind)) {
        for (size_t i = 0; i < out.amps.size(); ++i) {
            out.amps[i] *= psi.lattice.momentum_at(i);
        }
        out.normalized = false;
        check_leakage(out, "momentum operator");
    } else {
        const auto &chi = std::get<Projector>(kind).chi;
        const Complex overlap = inner(chi, psi);
        for (size_t i = 0; i < out.amps.size(); ++i) {
            out.amps[i] = overlap * chi.amps[i];
        }
        out.normalized = false;
    }
    return out;
}

}  // namespace qkr
