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

#pragma once

#include <vector>

#include "ir/circuit.hpp"
#include "numeric/linalg.hpp"

namespace qs::forge {

using num::ComplexMatrix;

// Control qudit that enables a gate when it is in |level>.
struct Control {
    int qudit = 0;
    int level = 0;
};

// Controls of a pseudo-controlled gate. A miss on a pseudo control leaves a
// Z^(ij) or Z^(ji) side effect on the target instead of the identity.
struct ControlSpec {
    std::vector<Control> positive;
    std::vector<Control> pseudo;
};

// Which level the Z side effect of a pseudo-controlled X flips: Plus gives
// Z^(ij) (sign on |j>), Minus gives Z^(ji) (sign on |i>).
enum class Orientation { Plus, Minus };

// Two-qudit gates on register (d, 2); qudit 0 is the control or first operand.
ir::Circuit build_swap(int d);
ir::Circuit build_root_swap(int d);
ir::Circuit build_sum(int d);
ir::Circuit build_gxor(int d);
ir::Circuit build_cinc(int d, int m);
ir::Circuit build_ctrl_rz(int d, int m, int i, int j, double theta);
ir::Circuit build_ctrl_diag(int d, int m, const std::vector<double>& phases);
ir::Circuit build_ctrl_u(int d, int m, const ComplexMatrix& u);

// Three-qudit gates on register (d, 3): controls on qudits 0 and 1, target 2.
// For the pseudo Toffoli qudit 0 is the positive control and qudit 1 the pseudo one.
ir::Circuit build_p_toffoli(int d, int m, int m2, int i, int j, Orientation orientation = Orientation::Plus);
ir::Circuit build_toffoli(int d, int m, int m2, int i, int j);
ir::Circuit build_lambda2_inc(int d, int m, int m2);

// k-controlled gates on register (d, k + 1): control s on qudit s at levels[s], target k.
// The pseudo-controlled X takes its positive control on qudit 0.
ir::Circuit build_p_lambda_k_x(int d, const std::vector<int>& levels, int i, int j,
                               Orientation orientation = Orientation::Plus);
ir::Circuit build_lambda_k_x(int d, const std::vector<int>& levels, int i, int j);
ir::Circuit build_lambda_k_rz(int d, const std::vector<int>& levels, int i, int j, double theta);
ir::Circuit build_lambda_k_diag(int d, const std::vector<int>& levels, const std::vector<double>& phases);
ir::Circuit build_lambda_k_u(int d, const std::vector<int>& levels, const ComplexMatrix& u);

// Appenders used by the builders; qudit indices refer to `out`.
void append_swap_block(ir::Circuit& out, int q0, int q1, int a, int b);
void append_root_swap_block(ir::Circuit& out, int q0, int q1, int a, int b);
void append_controlled_permutation(ir::Circuit& out, Control control, int target, const std::vector<int>& perm);
void append_p_toffoli(ir::Circuit& out, Control positive, Control pseudo, int target, int i, int j,
                      Orientation orientation);
void append_p_lambda_k_x(ir::Circuit& out, const ControlSpec& spec, int target, int i, int j,
                         Orientation orientation);
void append_toffoli(ir::Circuit& out, Control c1, Control c2, int target, int i, int j);
void append_lambda_k_rz(ir::Circuit& out, const std::vector<Control>& controls, int target, int i, int j,
                        double theta);
void append_lambda_k_diag(ir::Circuit& out, const std::vector<Control>& controls, int target,
                          const std::vector<double>& phases);
void append_lambda_k_u(ir::Circuit& out, const std::vector<Control>& controls, int target, const ComplexMatrix& u);

// GCX count of the pseudo-controlled X with k controls as built here (2^k - 1).
long long p_lambda_k_gcx(int k);

}  // namespace qs::forge
