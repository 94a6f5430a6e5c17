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


#include "qkr/otoc.h"

#include <cmath>
#include <numbers>

#include "qkr/error.h"

namespace qkr {

namespace {

constexpr double kNormTolerance = 1e-10;

void require_initial_state(const FloquetOps &ops, const WaveFunction &psi0) {
    if (!(ops.lattice() == psi0.lattice)) {
        throw Error(ErrorCode::kLatticeMismatch, "initial state and Floquet operator live on different lattices");
    }
    if (!psi0.normalized || std::abs(norm_sq(psi0) - 1) > kNormTolerance) {
        throw Error(ErrorCode::kUnnormalized, "OTOC initial state must be normalized");
    }
    check_leakage(psi0, "initial state");
}

OperatorSpec operator_a(const OtocKind &kind, const MomentumLattice &lattice) {
    if (kind.tag == OtocTag::kMomentumMomentum) {
        return momentum_operator(lattice);
    }
    return translation(lattice, kind.epsilon);
}

OperatorSpec operator_b(const OtocKind &kind, const WaveFunction &psi0) {
    if (kind.tag == OtocTag::kFidelity) {
        return projector(psi0);
    }
    return momentum_operator(psi0.lattice);
}

// Evaluates one OTOC sample from the forward states U(t)|psi0> and U(t)B|psi0>.
class OtocEvaluator {
   public:
    OtocEvaluator(const FloquetOps &ops, const OtocKind &kind, const WaveFunction &psi0)
        : validated_((require_initial_state(ops, psi0), true)),
          ops_(ops),
          kind_{kind.tag, canonical_epsilon(kind.epsilon)},
          psi0_(psi0),
          a_(operator_a(kind_, psi0.lattice)),
          b_(operator_b(kind_, psi0)),
          psi_t_(psi0),
          b_psi_t_(apply_operator(b_, psi0)) {
    }

    void advance_to(int64_t t) {
        if (t < time_) {
            throw Error(ErrorCode::kInvalidArgument, "schedule must be strictly increasing and non-negative");
        }
        psi_t_ = evolve(ops_, psi_t_, t - time_, Direction::kForward);
        b_psi_t_ = evolve(ops_, b_psi_t_, t - time_, Direction::kForward);
        time_ = t;
    }

    OtocSample sample(OtocMethod method) const {
        const WaveFunction psi_r = evolve(ops_, apply_operator(a_, psi_t_), time_, Direction::kBackward);
        const WaveFunction phi_r = evolve(ops_, apply_operator(a_, b_psi_t_), time_, Direction::kBackward);
        const WaveFunction b_psi_r = apply_operator(b_, psi_r);

        OtocSample s;
        s.t = time_;
        s.method = method;
        if (method == OtocMethod::kDecomposition) {
            const double c1 = norm_sq(b_psi_r);
            const double c2 = norm_sq(phi_r);
            const Complex c3 = inner(psi_r, apply_operator(b_, phi_r));
            s.c1 = c1;
            s.c2 = c2;
            s.c3 = c3;
            s.c = c1 + c2 - 2 * c3.real();
        } else {
            WaveFunction chi = phi_r;
            for (size_t i = 0; i < chi.amps.size(); ++i) {
                chi.amps[i] -= b_psi_r.amps[i];
            }
            s.c = norm_sq(chi);
        }
        if (kind_.tag == OtocTag::kFidelity) {
            s.fidelity = std::norm(inner(psi0_, psi_r));
        }
        s.p2 = expectation_p2(psi_t_);
        return s;
    }

   private:
    bool validated_;
    const FloquetOps &ops_;
    OtocKind kind_;
    const WaveFunction &psi0_;
    OperatorSpec a_;
    OperatorSpec b_;
    WaveFunction psi_t_;
    WaveFunction b_psi_t_;
    int64_t time_ = 0;
};

void require_time(int64_t t) {
    if (t < 0) {
        throw Error(ErrorCode::kInvalidArgument, "time must be non-negative");
    }
}

}  // namespace

OtocKind OtocKind::pp() {
    return {OtocTag::kMomentumMomentum, 0};
}

OtocKind OtocKind::tp(double epsilon) {
    return {OtocTag::kTranslationMomentum, canonical_epsilon(epsilon)};
}

OtocKind OtocKind::fidelity(double epsilon) {
    return {OtocTag::kFidelity, canonical_epsilon(epsilon)};
}

double canonical_epsilon(double epsilon) {
    constexpr double two_pi = 2 * std::numbers::pi;
    if (!std::isfinite(epsilon)) {
        throw Error(ErrorCode::kInvalidArgument, "epsilon must be finite");
    }
    double r = std::fmod(epsilon, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    return r >= two_pi ? 0.0 : r;
}

OtocSample otoc_decomposition(const FloquetOps &ops, const OtocKind &kind, int64_t t, const WaveFunction &psi0) {
    require_time(t);
    OtocEvaluator evaluator(ops, kind, psi0);
    evaluator.advance_to(t);
    return evaluator.sample(OtocMethod::kDecomposition);
}

OtocSample otoc_commutator_norm(const FloquetOps &ops, const OtocKind &kind, int64_t t, const WaveFunction &psi0) {
    require_time(t);
    OtocEvaluator evaluator(ops, kind, psi0);
    evaluator.advance_to(t);
    return evaluator.sample(OtocMethod::kCommutatorNorm);
}

OtocSample fotoc(const FloquetOps &ops, double epsilon, int64_t t, const WaveFunction &psi0) {
    require_time(t);
    OtocEvaluator evaluator(ops, OtocKind::fidelity(epsilon), psi0);
    evaluator.advance_to(t);
    OtocSample s = evaluator.sample(OtocMethod::kDecomposition);
    s.c = 1 - *s.fidelity;
    return s;
}

std::vector<OtocSample> run_series(
    const FloquetOps &ops, const OtocKind &kind, const std::vector<int64_t> &schedule, const WaveFunction &psi0,
    OtocMethod method) {
    std::vector<OtocSample> out;
    if (schedule.empty()) {
        return out;
    }
    for (size_t i = 0; i < schedule.size(); ++i) {
        require_time(schedule[i]);
        if (i > 0 && schedule[i] <= schedule[i - 1]) {
            throw Error(ErrorCode::kInvalidArgument, "schedule must be strictly increasing");
        }
    }
    OtocEvaluator evaluator(ops, kind, psi0);
    out.reserve(schedule.size());
    for (int64_t t : schedule) {
        evaluator.advance_to(t);
        out.push_back(evaluator.sample(method));
    }
    return out;
}

std::vector<EnergySample> energy_series(
    const FloquetOps &ops, const std::vector<int64_t> &schedule, const WaveFunction &psi0) {
    std::vector<EnergySample> out;
    if (schedule.empty()) {
        return out;
    }
    if (!(ops.lattice() == psi0.lattice)) {
        throw Error(ErrorCode::kLatticeMismatch, "initial state and Floquet operator live on different lattices");
    }
    WaveFunction psi = psi0;
    int64_t now = 0;
    for (size_t i = 0; i < schedule.size(); ++i) {
        require_time(schedule[i]);
        if (i > 0 && schedule[i] <= schedule[i - 1]) {
            throw Error(ErrorCode::kInvalidArgument, "schedule must be strictly increasing");
        }
        psi = evolve(ops, psi, schedule[i] - now, Direction::kForward);
        now = schedule[i];
        out.push_back({now, expectation_p2(psi), expectation_p(psi)});
    }
    return out;
}

int auto_lattice_size(double kick_strength, double hbar, int64_t t_max) {
    if (!(hbar > 0) || !(kick_strength >= 0) || t_max < 0) {
        throw Error(ErrorCode::kInvalidArgument, "auto lattice size needs K >= 0, hbar > 0, t_max >= 0");
    }
    const double spread = std::ceil(kick_strength * static_cast<double>(t_max) / hbar);
    const double needed = 64 + 8 * spread;
    if (needed > (1 << 24)) {
        throw Error(ErrorCode::kInvalidArgument, "requested run needs an unreasonably large lattice");
    }
    int n = 64;
    while (n < needed) {
        n *= 2;
    }
    return n;
}

}  // namespace qkr
