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


#include "qkr/qkr_c.h"

#include <exception>
#include <memory>
#include <string>

#include "qkr/error.h"
#include "qkr/floquet.h"
#include "qkr/oracle.h"
#include "qkr/otoc.h"

struct qkr_state {
    qkr::WaveFunction psi;
};

struct qkr_floquet {
    qkr::FloquetOps ops;
};

namespace {

thread_local std::string last_error;

qkr_status to_status(qkr::ErrorCode code) {
    switch (code) {
        case qkr::ErrorCode::kInvalidArgument:
            return QKR_ERR_INVALID_ARGUMENT;
        case qkr::ErrorCode::kLatticeMismatch:
            return QKR_ERR_LATTICE_MISMATCH;
        case qkr::ErrorCode::kLeakage:
            return QKR_ERR_LEAKAGE;
        case qkr::ErrorCode::kUnnormalized:
            return QKR_ERR_UNNORMALIZED;
        case qkr::ErrorCode::kResolution:
            return QKR_ERR_RESOLUTION;
    }
    return QKR_ERR_INTERNAL;
}

template <typename Fn>
qkr_status guarded(Fn &&fn) {
    try {
        last_error.clear();
        fn();
        return QKR_OK;
    } catch (const qkr::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception &e) {
        last_error = e.what();
        return QKR_ERR_INTERNAL;
    }
}

qkr_status null_argument() {
    last_error = "null argument";
    return QKR_ERR_INVALID_ARGUMENT;
}

qkr::OtocKind make_kind(qkr_otoc_kind kind, double epsilon) {
    switch (kind) {
        case QKR_OTOC_PP:
            return qkr::OtocKind::pp();
        case QKR_OTOC_TP:
            return qkr::OtocKind::tp(epsilon);
        case QKR_OTOC_FOTOC:
            return qkr::OtocKind::fidelity(epsilon);
    }
    throw qkr::Error(qkr::ErrorCode::kInvalidArgument, "unknown OTOC kind");
}

qkr_status make_state(int size, double hbar, const qkr::InitialState &spec, qkr_state **out) {
    if (out == nullptr) {
        return null_argument();
    }
    return guarded([&] {
        auto lattice = qkr::make_lattice(size, hbar);
        *out = new qkr_state{qkr::init_state(spec, lattice)};
    });
}

void fill_components(const qkr::oracle::Components &c, qkr_components *out) {
    out->c1 = c.c1;
    out->c2 = c.c2;
    out->re_c3 = c.c3.real();
    out->im_c3 = c.c3.imag();
    out->c = c.c;
}

}  // namespace

extern "C" {

const char *qkr_last_error(void) {
    return last_error.c_str();
}

double qkr_resonant_hbar(void) {
    return qkr::kResonantHbar;
}

qkr_status qkr_auto_lattice_size(double kick_strength, double hbar, int64_t t_max, int *out_size) {
    if (out_size == nullptr) {
        return null_argument();
    }
    return guarded([&] { *out_size = qkr::auto_lattice_size(kick_strength, hbar, t_max); });
}

qkr_status qkr_state_cosine(int size, double hbar, qkr_state **out) {
    return make_state(size, hbar, qkr::CosineState{}, out);
}

qkr_status qkr_state_plane(int size, double hbar, int n0, qkr_state **out) {
    return make_state(size, hbar, qkr::PlaneState{n0}, out);
}

qkr_status qkr_state_custom(
    int size, double hbar, const int *indices, const double *re, const double *im, size_t count, qkr_state **out) {
    if (count > 0 && (indices == nullptr || re == nullptr || im == nullptr)) {
        return null_argument();
    }
    qkr::CustomState custom;
    for (size_t i = 0; i < count; ++i) {
        custom.coefficients[indices[i]] += qkr::Complex(re[i], im[i]);
    }
    return make_state(size, hbar, custom, out);
}

void qkr_state_destroy(qkr_state *state) {
    delete state;
}

int qkr_state_size(const qkr_state *state) {
    return state == nullptr ? 0 : state->psi.lattice.size();
}

qkr_status qkr_state_amplitudes(const qkr_state *state, double *re, double *im, size_t capacity) {
    if (state == nullptr || re == nullptr || im == nullptr) {
        return null_argument();
    }
    if (capacity < state->psi.amps.size()) {
        last_error = "amplitude buffer too small";
        return QKR_ERR_INVALID_ARGUMENT;
    }
    for (size_t i = 0; i < state->psi.amps.size(); ++i) {
        re[i] = state->psi.amps[i].real();
        im[i] = state->psi.amps[i].imag();
    }
    return QKR_OK;
}

qkr_status qkr_floquet_create(double kick_strength, double hbar, int size, int resonant_hint, qkr_floquet **out) {
    if (out == nullptr) {
        return null_argument();
    }
    return guarded([&] {
        std::optional<bool> hint;
        if (resonant_hint == QKR_RESONANT_ON) {
            hint = true;
        } else if (resonant_hint == QKR_RESONANT_OFF) {
            hint = false;
        } else if (resonant_hint != QKR_RESONANT_AUTO) {
            throw qkr::Error(qkr::ErrorCode::kInvalidArgument, "bad resonance hint");
        }
        auto lattice = qkr::make_lattice(size, hbar);
        *out = new qkr_floquet{qkr::build_floquet(kick_strength, lattice, hint)};
    });
}

void qkr_floquet_destroy(qkr_floquet *ops) {
    delete ops;
}

int qkr_floquet_is_resonant(const qkr_floquet *ops) {
    return ops != nullptr && ops->ops.resonant() ? 1 : 0;
}

qkr_status qkr_otoc_series(
    const qkr_floquet *ops, qkr_otoc_kind kind, double epsilon, const qkr_state *psi0, const int64_t *times,
    size_t count, qkr_method method, qkr_otoc_sample *out) {
    if (ops == nullptr || psi0 == nullptr || (count > 0 && (times == nullptr || out == nullptr))) {
        return null_argument();
    }
    return guarded([&] {
        if (method != QKR_METHOD_DECOMPOSITION && method != QKR_METHOD_COMMUTATOR_NORM) {
            throw qkr::Error(qkr::ErrorCode::kInvalidArgument, "unknown OTOC method");
        }
        const auto m =
            method == QKR_METHOD_DECOMPOSITION ? qkr::OtocMethod::kDecomposition : qkr::OtocMethod::kCommutatorNorm;
        std::vector<int64_t> schedule(times, times + count);
        const auto samples = qkr::run_series(ops->ops, make_kind(kind, epsilon), schedule, psi0->psi, m);
        for (size_t i = 0; i < samples.size(); ++i) {
            const auto &s = samples[i];
            qkr_otoc_sample r{};
            r.t = s.t;
            r.c = s.c;
            r.has_components = s.c1.has_value() ? 1 : 0;
            if (r.has_components) {
                r.c1 = *s.c1;
                r.c2 = *s.c2;
                r.re_c3 = s.c3->real();
                r.im_c3 = s.c3->imag();
            }
            r.has_fidelity = s.fidelity.has_value() ? 1 : 0;
            r.fidelity = s.fidelity.value_or(0.0);
            r.p2 = s.p2.value_or(0.0);
            out[i] = r;
        }
    });
}

qkr_status qkr_energy_series(
    const qkr_floquet *ops, const qkr_state *psi0, const int64_t *times, size_t count, qkr_energy_sample *out) {
    if (ops == nullptr || psi0 == nullptr || (count > 0 && (times == nullptr || out == nullptr))) {
        return null_argument();
    }
    return guarded([&] {
        std::vector<int64_t> schedule(times, times + count);
        const auto samples = qkr::energy_series(ops->ops, schedule, psi0->psi);
        for (size_t i = 0; i < samples.size(); ++i) {
            out[i] = {samples[i].t, samples[i].p2, samples[i].p_mean};
        }
    });
}

double qkr_cp_closed(double kick_strength, double t) {
    return qkr::oracle::cp_closed(kick_strength, t);
}

double qkr_ct_closed(double kick_strength, double t, double epsilon) {
    return qkr::oracle::ct_closed(kick_strength, t, epsilon);
}

double qkr_fotoc_small_eps(double kick_strength, double t, double epsilon, double hbar) {
    return qkr::oracle::fotoc_small_eps(kick_strength, t, epsilon, hbar);
}

qkr_status qkr_oracle_cp_components(
    const qkr_state *psi0, double kick_strength, double t, int grid_size, qkr_components *out) {
    if (psi0 == nullptr || out == nullptr) {
        return null_argument();
    }
    return guarded([&] {
        qkr::oracle::require_resonant(psi0->psi.lattice.hbar());
        const auto samples = qkr::oracle::sample_on_grid(psi0->psi, {grid_size});
        fill_components(qkr::oracle::cp_components_quadrature(samples, kick_strength, t), out);
    });
}

qkr_status qkr_oracle_ct_components(
    const qkr_state *psi0, double kick_strength, double t, double epsilon, int grid_size, qkr_components *out) {
    if (psi0 == nullptr || out == nullptr) {
        return null_argument();
    }
    return guarded([&] {
        qkr::oracle::require_resonant(psi0->psi.lattice.hbar());
        const auto samples = qkr::oracle::sample_on_grid(psi0->psi, {grid_size});
        fill_components(qkr::oracle::ct_components_quadrature(samples, kick_strength, t, epsilon), out);
    });
}

}  // extern "C"
