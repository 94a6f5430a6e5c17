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


/* C interface to the kicked-rotor OTOC library.
 *
 * Every fallible call returns a qkr_status; on failure the message is
 * available from qkr_last_error() on the same thread until the next call.
 * Handles are opaque and owned by the caller (release with *_destroy).
 */
#ifndef QKR_QKR_C_H_
#define QKR_QKR_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QKR_API __declspec(dllexport)
#else
#define QKR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qkr_status {
    QKR_OK = 0,
    QKR_ERR_INVALID_ARGUMENT = 1,
    QKR_ERR_LATTICE_MISMATCH = 2,
    QKR_ERR_LEAKAGE = 3,
    QKR_ERR_UNNORMALIZED = 4,
    QKR_ERR_RESOLUTION = 5,
    QKR_ERR_INTERNAL = 6
} qkr_status;

typedef struct qkr_state qkr_state;
typedef struct qkr_floquet qkr_floquet;

typedef enum qkr_otoc_kind { QKR_OTOC_PP = 0, QKR_OTOC_TP = 1, QKR_OTOC_FOTOC = 2 } qkr_otoc_kind;

typedef enum qkr_method { QKR_METHOD_DECOMPOSITION = 0, QKR_METHOD_COMMUTATOR_NORM = 1 } qkr_method;

/* Resonance hint for qkr_floquet_create. */
enum { QKR_RESONANT_AUTO = -1, QKR_RESONANT_OFF = 0, QKR_RESONANT_ON = 1 };

typedef struct qkr_otoc_sample {
    int64_t t;
    double c;
    int has_components; /* c1, c2, re_c3, im_c3 valid */
    double c1;
    double c2;
    double re_c3;
    double im_c3;
    int has_fidelity; /* fidelity valid */
    double fidelity;
    double p2; /* <p^2> of U(t)|psi0> */
} qkr_otoc_sample;

typedef struct qkr_energy_sample {
    int64_t t;
    double p2;
    double p_mean;
} qkr_energy_sample;

typedef struct qkr_components {
    double c1;
    double c2;
    double re_c3;
    double im_c3;
    double c;
} qkr_components;

QKR_API const char *qkr_last_error(void);

QKR_API double qkr_resonant_hbar(void);
QKR_API qkr_status qkr_auto_lattice_size(double kick_strength, double hbar, int64_t t_max, int *out_size);

QKR_API qkr_status qkr_state_cosine(int size, double hbar, qkr_state **out);
QKR_API qkr_status qkr_state_plane(int size, double hbar, int n0, qkr_state **out);
/* Normalizes the given coefficients; indices are momentum quantum numbers n. */
QKR_API qkr_status qkr_state_custom(
    int size, double hbar, const int *indices, const double *re, const double *im, size_t count, qkr_state **out);
QKR_API void qkr_state_destroy(qkr_state *state);
QKR_API int qkr_state_size(const qkr_state *state);
/* Copies amplitudes in increasing n order; capacity must be >= size. */
QKR_API qkr_status qkr_state_amplitudes(const qkr_state *state, double *re, double *im, size_t capacity);

QKR_API qkr_status qkr_floquet_create(
    double kick_strength, double hbar, int size, int resonant_hint, qkr_floquet **out);
QKR_API void qkr_floquet_destroy(qkr_floquet *ops);
QKR_API int qkr_floquet_is_resonant(const qkr_floquet *ops);

/* Fills out[0..count) with one sample per scheduled time. */
QKR_API qkr_status qkr_otoc_series(
    const qkr_floquet *ops, qkr_otoc_kind kind, double epsilon, const qkr_state *psi0, const int64_t *times,
    size_t count, qkr_method method, qkr_otoc_sample *out);
QKR_API qkr_status qkr_energy_series(
    const qkr_floquet *ops, const qkr_state *psi0, const int64_t *times, size_t count, qkr_energy_sample *out);

QKR_API double qkr_cp_closed(double kick_strength, double t);
QKR_API double qkr_ct_closed(double kick_strength, double t, double epsilon);
QKR_API double qkr_fotoc_small_eps(double kick_strength, double t, double epsilon, double hbar);

/* Quadrature components on a grid of grid_size nodes; the state must be on a resonant lattice. */
QKR_API qkr_status qkr_oracle_cp_components(
    const qkr_state *psi0, double kick_strength, double t, int grid_size, qkr_components *out);
QKR_API qkr_status qkr_oracle_ct_components(
    const qkr_state *psi0, double kick_strength, double t, double epsilon, int grid_size, qkr_components *out);

#ifdef __cplusplus
}
#endif

#endif /* QKR_QKR_C_H_ */
