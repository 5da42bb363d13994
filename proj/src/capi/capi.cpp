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

#include "qudsynth/qudsynth.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "common/error.hpp"
#include "cost/cost.hpp"
#include "forge/forge.hpp"
#include "ir/circuit.hpp"
#include "numeric/linalg.hpp"
#include "numeric/matrix_json.hpp"
#include "shannon/qsd.hpp"

struct qs_matrix {
    qs::num::ComplexMatrix m;
};

struct qs_circuit {
    qs::ir::Circuit c;
};

namespace {

thread_local std::string g_last_error;

qs_status set_error(qs_status status, const std::string& what) {
    g_last_error = what;
    return status;
}

// Runs f, mapping library exceptions to status codes.
template <typename F>
qs_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return QS_OK;
    } catch (const qs::Error& e) {
        return set_error(static_cast<qs_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(QS_ERR_OVERFLOW, "out of memory");
    } catch (const std::exception& e) {
        return set_error(QS_ERR_INTERNAL, e.what());
    }
}

void need(const void* p, const char* what) {
    qs::require(p != nullptr, qs::ErrorCode::Argument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qs_status emit_circuit(qs_circuit** out, const std::function<qs::ir::Circuit()>& build) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        auto* h = new qs_circuit{build()};
        *out = h;
    });
}

qs::shannon::QsdOptions to_options(const qs_synth_options* opts) {
    qs::shannon::QsdOptions o;
    if (opts != nullptr) {
        o.prune = opts->prune != 0;
        o.shape = opts->shape == QS_TREE_CHAIN ? qs::shannon::TreeShape::Chain : qs::shannon::TreeShape::Balanced;
    }
    return o;
}

std::vector<int> levels_of(const int* levels, int k) {
    qs::require(k >= 1, qs::ErrorCode::Argument, "need at least one control");
    need(levels, "levels");
    return std::vector<int>(levels, levels + k);
}

qs::forge::Orientation orientation_of(int minus) {
    return minus ? qs::forge::Orientation::Minus : qs::forge::Orientation::Plus;
}

}  // namespace

extern "C" {

const char* qs_version(void) { return "0.1.0"; }

const char* qs_last_error(void) { return g_last_error.c_str(); }

const char* qs_status_string(qs_status status) {
    switch (status) {
        case QS_OK: return "ok";
        case QS_ERR_PARSE: return "parse error";
        case QS_ERR_SHAPE: return "shape mismatch";
        case QS_ERR_NOT_UNITARY: return "matrix is not unitary";
        case QS_ERR_VERIFY: return "verification failed";
        case QS_ERR_ARGUMENT: return "invalid argument";
        case QS_ERR_OVERFLOW: return "size overflow";
        case QS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void qs_string_free(char* s) { std::free(s); }

qs_status qs_matrix_create(int dim, const double* re_im, qs_matrix** out) {
    return guarded([&] {
        need(out, "out");
        need(re_im, "re_im");
        qs::require(dim > 0, qs::ErrorCode::Argument, "dimension must be positive");
        qs::num::ComplexMatrix m(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                const std::size_t at = 2 * (static_cast<std::size_t>(r) * dim + c);
                m(r, c) = {re_im[at], re_im[at + 1]};
            }
        qs::require(qs::num::all_finite(m), qs::ErrorCode::Parse, "matrix has non-finite entries");
        *out = new qs_matrix{std::move(m)};
    });
}

qs_status qs_matrix_identity(int dim, qs_matrix** out) {
    return guarded([&] {
        need(out, "out");
        qs::require(dim > 0, qs::ErrorCode::Argument, "dimension must be positive");
        *out = new qs_matrix{qs::num::ComplexMatrix::Identity(dim, dim)};
    });
}

qs_status qs_matrix_random_unitary(int dim, uint64_t seed, qs_matrix** out) {
    return guarded([&] {
        need(out, "out");
        *out = new qs_matrix{qs::num::random_unitary(dim, seed)};
    });
}

qs_status qs_matrix_from_json(const char* text, qs_matrix** out) {
    return guarded([&] {
        need(out, "out");
        need(text, "text");
        *out = new qs_matrix{qs::num::matrix_from_json(text)};
    });
}

qs_status qs_matrix_to_json(const qs_matrix* m, int indent, char** out) {
    return guarded([&] {
        need(m, "matrix");
        need(out, "out");
        *out = copy_string(qs::num::matrix_to_json(m->m, indent));
    });
}

qs_status qs_matrix_dim(const qs_matrix* m, int* dim) {
    return guarded([&] {
        need(m, "matrix");
        need(dim, "dim");
        *dim = static_cast<int>(m->m.rows());
    });
}

qs_status qs_matrix_get(const qs_matrix* m, int row, int col, double* re, double* im) {
    return guarded([&] {
        need(m, "matrix");
        need(re, "re");
        need(im, "im");
        qs::require(row >= 0 && col >= 0 && row < m->m.rows() && col < m->m.cols(), qs::ErrorCode::Argument,
                    "index out of range");
        *re = m->m(row, col).real();
        *im = m->m(row, col).imag();
    });
}

qs_status qs_matrix_unitarity_defect(const qs_matrix* m, double* defect) {
    return guarded([&] {
        need(m, "matrix");
        need(defect, "defect");
        *defect = qs::num::unitarity_defect(m->m);
    });
}

void qs_matrix_free(qs_matrix* m) { delete m; }

qs_status qs_circuit_from_json(const char* text, qs_circuit** out) {
    return guarded([&] {
        need(out, "out");
        need(text, "text");
        *out = new qs_circuit{qs::ir::circuit_from_json(text)};
    });
}

qs_status qs_circuit_to_json(const qs_circuit* c, int indent, char** out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        *out = copy_string(qs::ir::circuit_to_json(c->c, indent));
    });
}

qs_status qs_circuit_shape(const qs_circuit* c, int* d, int* n) {
    return guarded([&] {
        need(c, "circuit");
        need(d, "d");
        need(n, "n");
        *d = c->c.d();
        *n = c->c.n();
    });
}

qs_status qs_circuit_counts(const qs_circuit* c, qs_gate_counts* out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        const auto k = qs::ir::count_gates(c->c);
        *out = {k.gcx, k.rot, k.phase, k.high_level, static_cast<int64_t>(c->c.size())};
    });
}

qs_status qs_circuit_evaluate(const qs_circuit* c, qs_matrix** out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        *out = new qs_matrix{qs::ir::evaluate(c->c)};
    });
}

qs_status qs_circuit_apply_basis(const qs_circuit* c, const int* digits, int n, double* amps, size_t len) {
    return guarded([&] {
        need(c, "circuit");
        need(digits, "digits");
        need(amps, "amps");
        const auto& shape = c->c.shape();
        qs::require(n == shape.n, qs::ErrorCode::Shape, "basis state needs one digit per qudit");
        const std::int64_t dim = shape.dim();
        qs::require(dim > 0 && len >= 2 * static_cast<std::size_t>(dim), qs::ErrorCode::Shape,
                    "amplitude buffer is too small");
        std::int64_t index = 0;
        for (int q = 0; q < n; ++q) {
            qs::require(digits[q] >= 0 && digits[q] < shape.d, qs::ErrorCode::Argument, "digit out of range");
            index = index * shape.d + digits[q];
        }
        qs::num::ComplexMatrix state = qs::num::ComplexMatrix::Zero(dim, 1);
        state(index, 0) = 1.0;
        for (const auto& g : c->c.gates()) qs::ir::apply_gate(g, shape, state);
        for (std::int64_t x = 0; x < dim; ++x) {
            amps[2 * x] = state(x, 0).real();
            amps[2 * x + 1] = state(x, 0).imag();
        }
    });
}

qs_status qs_circuit_lower(const qs_circuit* c, const qs_synth_options* opts, qs_circuit** out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        *out = new qs_circuit{qs::shannon::lower(c->c, to_options(opts))};
    });
}

void qs_circuit_free(qs_circuit* c) { delete c; }

void qs_synth_options_default(qs_synth_options* opts) {
    if (opts == nullptr) return;
    opts->prune = 0;
    opts->shape = QS_TREE_BALANCED;
}

qs_status qs_synthesize(const qs_matrix* u, int d, int n, const qs_synth_options* opts, qs_circuit** out,
                        qs_report* report) {
    return guarded([&] {
        need(u, "matrix");
        need(out, "out");
        auto r = qs::shannon::qsd_synth(u->m, d, n, to_options(opts));
        if (report != nullptr) {
            *report = {r.report.gcx_count, r.report.rot_count,          r.report.phase_count,
                       r.report.reconstruction_error, r.report.verified ? 1 : 0, r.report.depth};
        }
        *out = new qs_circuit{std::move(r.circuit)};
    });
}

qs_status qs_verify(const qs_circuit* c, const qs_matrix* u, double tol, double* error, int* equivalent) {
    return guarded([&] {
        need(c, "circuit");
        need(u, "matrix");
        qs::require(c->c.shape().dim() == u->m.rows(), qs::ErrorCode::Shape,
                    "circuit and matrix dimensions differ");
        const auto cmp = qs::ir::equivalent_up_to_phase(qs::ir::evaluate(c->c), u->m, tol);
        if (error != nullptr) *error = cmp.error;
        if (equivalent != nullptr) *equivalent = cmp.equivalent ? 1 : 0;
    });
}

qs_status qs_build_swap(int d, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_swap(d); });
}

qs_status qs_build_root_swap(int d, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_root_swap(d); });
}

qs_status qs_build_sum(int d, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_sum(d); });
}

qs_status qs_build_gxor(int d, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_gxor(d); });
}

qs_status qs_build_cinc(int d, int m, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_cinc(d, m); });
}

qs_status qs_build_p_toffoli(int d, int m, int m2, int i, int j, int minus, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_p_toffoli(d, m, m2, i, j, orientation_of(minus)); });
}

qs_status qs_build_toffoli(int d, int m, int m2, int i, int j, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_toffoli(d, m, m2, i, j); });
}

qs_status qs_build_lambda2_inc(int d, int m, int m2, qs_circuit** out) {
    return emit_circuit(out, [&] { return qs::forge::build_lambda2_inc(d, m, m2); });
}

qs_status qs_build_ctrl_u(int d, int m, const qs_matrix* u, qs_circuit** out) {
    return emit_circuit(out, [&] {
        need(u, "matrix");
        return qs::forge::build_ctrl_u(d, m, u->m);
    });
}

qs_status qs_build_lambda_k_u(int d, const int* levels, int k, const qs_matrix* u, qs_circuit** out) {
    return emit_circuit(out, [&] {
        need(u, "matrix");
        return qs::forge::build_lambda_k_u(d, levels_of(levels, k), u->m);
    });
}

qs_status qs_build_p_lambda_k_x(int d, const int* levels, int k, int i, int j, int minus, qs_circuit** out) {
    return emit_circuit(out, [&] {
        return qs::forge::build_p_lambda_k_x(d, levels_of(levels, k), i, j, orientation_of(minus));
    });
}

qs_status qs_count(const char* model, int d, int n, char** out) {
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        const std::string name = model;
        std::string text;
        if (name == "qsd") {
            text = qs::cost::qsd_count(d, n).str();
        } else if (name == "spectral") {
            text = qs::cost::spectral_count(d, n).str();
        } else if (name == "cinc") {
            text = qs::cost::format_sig6(qs::cost::cinc_count(d, n));
        } else if (name == "ququart") {
            text = qs::cost::ququart_closed_form(n).str();
        } else if (name == "qubit-l1") {
            text = qs::cost::qubit_baselines(n).l1.str();
        } else if (name == "qubit-l2") {
            text = qs::cost::qubit_baselines(n).l2.str();
        } else if (name == "qubit-l2-optimal") {
            text = qs::cost::qubit_baselines(n).l2_optimal.str();
        } else {
            qs::fail(qs::ErrorCode::Argument, "unknown count model '" + name + "'");
        }
        *out = copy_string(text);
    });
}

qs_status qs_compare(int d_lo, int d_hi, int n_lo, int n_hi, const char* format, char** out) {
    return guarded([&] {
        need(format, "format");
        need(out, "out");
        const std::string f = format;
        qs::require(f == "csv" || f == "md", qs::ErrorCode::Argument, "format must be csv or md");
        const auto t = qs::cost::comparison_table(d_lo, d_hi, n_lo, n_hi);
        *out = copy_string(f == "csv" ? qs::cost::to_csv(t) : qs::cost::to_markdown(t));
    });
}

qs_status qs_ququart_table(int n_lo, int n_hi, char** out) {
    return guarded([&] {
        need(out, "out");
        *out = copy_string(qs::cost::to_markdown(qs::cost::ququart_vs_qubit(n_lo, n_hi)));
    });
}

}  // extern "C"
