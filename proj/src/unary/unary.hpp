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

namespace qs::unary {

using num::ComplexMatrix;

enum class EulerMode { ZYZ, XYX };

// Which level pairs the one-qudit rotations may use.
//   Star:     (0,1), (0,2), ..., (0,d-1)
//   Adjacent: (0,1), (1,2), ..., (d-2,d-1)
enum class Ladder { Star, Adjacent };

struct UnaryOptions {
    EulerMode mode = EulerMode::ZYZ;
    Ladder ladder = Ladder::Star;
};

// u = e^{i phase} R(alpha1) R_y(beta) R(alpha2) on levels (j, k), with R = R_z
// for ZYZ and R = R_x for XYX.
struct EulerTriple {
    EulerMode mode = EulerMode::ZYZ;
    double alpha1 = 0.0;
    double beta = 0.0;
    double alpha2 = 0.0;
    int j = 0;
    int k = 1;
    double phase = 0.0;
};

EulerTriple euler_two_level(const ComplexMatrix& u, int j, int k, EulerMode mode = EulerMode::ZYZ);
// 2x2 matrix described by the triple, including its phase.
ComplexMatrix euler_matrix(const EulerTriple& t);

// m = e^{i phase} k1 * R_y^{(a, d-1)}(2 theta) * k2 with k1, k2 in U(d-1) + 1.
// The middle pair is (0, d-1) for the star ladder and (d-2, d-1) for the adjacent one.
struct AIIIStep {
    ComplexMatrix k1;
    ComplexMatrix middle;
    ComplexMatrix k2;
    double phase = 0.0;
    double theta = 0.0;
    int low = 0;  // lower level of the middle pair; the upper one is d-1
};

AIIIStep cartan_aiii_step(const ComplexMatrix& m, Ladder ladder = Ladder::Star);
ComplexMatrix recompose(const AIIIStep& s);

inline constexpr int kMaxUnaryDim = 16;

ir::Circuit synth_one_qutrit(const ComplexMatrix& m, EulerMode mode = EulerMode::ZYZ);
ir::Circuit synth_one_qudit(const ComplexMatrix& m, int d, const UnaryOptions& opts = {});

// Appends the synthesized gates for m acting on `qudit` of an existing circuit.
void append_one_qudit(ir::Circuit& out, int qudit, const ComplexMatrix& m, const UnaryOptions& opts = {});

}  // namespace qs::unary
