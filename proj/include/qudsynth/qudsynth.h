// Copyright 2026 The qudsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to the qudsynth library. All objects are opaque handles owned
// by the caller and released with the matching *_free function. Every call
// returns a qs_status; on failure qs_last_error() describes the cause for the
// calling thread. Strings returned through char** are released with
// qs_string_free.

#ifndef QUDSYNTH_QUDSYNTH_H_
#define QUDSYNTH_QUDSYNTH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QS_API __declspec(dllexport)
#else
#define QS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
    QS_OK = 0,
    QS_ERR_PARSE = 1,
    QS_ERR_SHAPE = 2,
    QS_ERR_NOT_UNITARY = 3,
    QS_ERR_VERIFY = 4,
    QS_ERR_ARGUMENT = 5,
    QS_ERR_OVERFLOW = 6,
    QS_ERR_INTERNAL = 7
} qs_status;

typedef struct qs_matrix qs_matrix;
typedef struct qs_circuit qs_circuit;

typedef struct qs_gate_counts {
    int64_t gcx;
    int64_t rot;
    int64_t phase;
    int64_t high_level;
    int64_t total;
} qs_gate_counts;

typedef enum qs_tree_shape { QS_TREE_BALANCED = 0, QS_TREE_CHAIN = 1 } qs_tree_shape;

typedef struct qs_synth_options {
    int prune;  // drop vanishing sub-circuits; changes counts
    qs_tree_shape shape;
} qs_synth_options;

typedef struct qs_report {
    int64_t gcx_count;
    int64_t rot_count;
    int64_t phase_count;
    double reconstruction_error;
    int verified;
    int depth;
} qs_report;

QS_API const char* qs_version(void);
QS_API const char* qs_last_error(void);
QS_API const char* qs_status_string(qs_status status);
QS_API void qs_string_free(char* s);

// Matrices. Entries are row-major interleaved (re, im) pairs.
QS_API qs_status qs_matrix_create(int dim, const double* re_im, qs_matrix** out);
QS_API qs_status qs_matrix_identity(int dim, qs_matrix** out);
QS_API qs_status qs_matrix_random_unitary(int dim, uint64_t seed, qs_matrix** out);
QS_API qs_status qs_matrix_from_json(const char* text, qs_matrix** out);
QS_API qs_status qs_matrix_to_json(const qs_matrix* m, int indent, char** out);
QS_API qs_status qs_matrix_dim(const qs_matrix* m, int* dim);
QS_API qs_status qs_matrix_get(const qs_matrix* m, int row, int col, double* re, double* im);
QS_API qs_status qs_matrix_unitarity_defect(const qs_matrix* m, double* defect);
QS_API void qs_matrix_free(qs_matrix* m);

// Circuits.
QS_API qs_status qs_circuit_from_json(const char* text, qs_circuit** out);
QS_API qs_status qs_circuit_to_json(const qs_circuit* c, int indent, char** out);
QS_API qs_status qs_circuit_shape(const qs_circuit* c, int* d, int* n);
QS_API qs_status qs_circuit_counts(const qs_circuit* c, qs_gate_counts* out);
QS_API qs_status qs_circuit_evaluate(const qs_circuit* c, qs_matrix** out);
// Applies the circuit to the basis state spelled by `digits` (n entries) and
// writes d^n interleaved amplitudes to `amps`, which holds `len` doubles.
QS_API qs_status qs_circuit_apply_basis(const qs_circuit* c, const int* digits, int n, double* amps, size_t len);
// Expands any high-level nodes into elementary gates.
QS_API qs_status qs_circuit_lower(const qs_circuit* c, const qs_synth_options* opts, qs_circuit** out);
QS_API void qs_circuit_free(qs_circuit* c);

// Synthesis and verification.
QS_API void qs_synth_options_default(qs_synth_options* opts);
QS_API qs_status qs_synthesize(const qs_matrix* u, int d, int n, const qs_synth_options* opts, qs_circuit** out,
                               qs_report* report);
// *equivalent is 1 when the circuit matches u up to global phase within tol.
QS_API qs_status qs_verify(const qs_circuit* c, const qs_matrix* u, double tol, double* error, int* equivalent);

// Gate library. Two-qudit gates act on (control 0, target 1); k-control gates
// put control s on qudit s and the target on qudit k.
QS_API qs_status qs_build_swap(int d, qs_circuit** out);
QS_API qs_status qs_build_root_swap(int d, qs_circuit** out);
QS_API qs_status qs_build_sum(int d, qs_circuit** out);
QS_API qs_status qs_build_gxor(int d, qs_circuit** out);
QS_API qs_status qs_build_cinc(int d, int m, qs_circuit** out);
QS_API qs_status qs_build_p_toffoli(int d, int m, int m2, int i, int j, int minus, qs_circuit** out);
QS_API qs_status qs_build_toffoli(int d, int m, int m2, int i, int j, qs_circuit** out);
QS_API qs_status qs_build_lambda2_inc(int d, int m, int m2, qs_circuit** out);
QS_API qs_status qs_build_ctrl_u(int d, int m, const qs_matrix* u, qs_circuit** out);
QS_API qs_status qs_build_lambda_k_u(int d, const int* levels, int k, const qs_matrix* u, qs_circuit** out);
QS_API qs_status qs_build_p_lambda_k_x(int d, const int* levels, int k, int i, int j, int minus, qs_circuit** out);

// Cost models. Counts are returned as decimal strings since they can exceed
// 64 bits. Models: qsd, spectral, cinc, ququart, qubit-l1, qubit-l2,
// qubit-l2-optimal.
QS_API qs_status qs_count(const char* model, int d, int n, char** out);
// format is "csv" or "md".
QS_API qs_status qs_compare(int d_lo, int d_hi, int n_lo, int n_hi, const char* format, char** out);
QS_API qs_status qs_ququart_table(int n_lo, int n_hi, char** out);

#ifdef __cplusplus
}
#endif

#endif  // QUDSYNTH_QUDSYNTH_H_
