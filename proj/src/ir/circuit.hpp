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

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "numeric/linalg.hpp"

namespace qs::ir {

using num::ComplexMatrix;

// Largest register dimension the dense evaluator accepts.
inline constexpr std::int64_t kMaxEvalDim = 4096;

struct RegisterShape {
    int d = 2;  // radix
    int n = 1;  // qudit count

    // d^n, or -1 when it does not fit in 63 bits.
    std::int64_t dim() const;
};

enum class Axis { X, Y, Z };

// Two-level rotation exp(-i theta sigma_axis / 2) on levels (j, k), j < k.
struct Rot {
    int qudit = 0;
    Axis axis = Axis::Y;
    int j = 0;
    int k = 1;
    double theta = 0.0;
};

// Phase e^{i phi} on one level of one qudit.
struct LevelPhase {
    int qudit = 0;
    int level = 0;
    double phi = 0.0;
};

struct GlobalPhase {
    double phi = 0.0;
};

// Applies X^(ij) to the target iff the control is in |level>.
struct GCX {
    int control = 0;
    int level = 0;
    int target = 1;
    int i = 0;
    int j = 1;
};

// Unsynthesized unitary on an ordered list of qudits (first is most significant).
struct Opaque {
    std::vector<int> qudits;
    ComplexMatrix matrix;
};

// Applies blocks[v] to the targets when the control is in |v>.
struct UCGate {
    int control = 0;
    std::vector<int> targets;
    std::vector<ComplexMatrix> blocks;
};

// Diagonal on the targets, applied iff the control is in |level>.
struct CtrlDiag {
    int control = 0;
    int level = 0;
    std::vector<int> targets;
    std::vector<double> phases;  // indexed by target word
};

// Multiplexed rotation: angles[w] is used when the controls spell the word w.
struct UCRot {
    std::vector<int> controls;
    int target = 0;
    Axis axis = Axis::Y;
    int i = 0;
    int j = 1;
    std::vector<double> angles;
};

// Cosine-sine layer on the levels of one qudit, multiplexed over the controls.
// Pair s rotates levels pairs[s] by R_y(2 theta[s][w]) under control word w.
struct CSLayer {
    int target = 0;
    std::vector<int> controls;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<double>> theta;
};

using Gate = std::variant<Rot, LevelPhase, GlobalPhase, GCX, Opaque, UCGate, CtrlDiag, UCRot, CSLayer>;

bool is_elementary(const Gate& g);
const char* gate_kind(const Gate& g);

// Angle canonicalization: rotation angles to (-2pi, 2pi], phases to (-pi, pi].
double normalize_theta(double theta);
double normalize_phi(double phi);

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(RegisterShape shape);
    Circuit(int d, int n) : Circuit(RegisterShape{d, n}) {}

    const RegisterShape& shape() const { return shape_; }
    int d() const { return shape_.d; }
    int n() const { return shape_.n; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    // Validates the gate against the shape and appends it.
    void add(Gate g);
    void rot(int qudit, Axis axis, int j, int k, double theta);
    void phase(int qudit, int level, double phi);
    void global_phase(double phi);
    void gcx(int control, int level, int target, int i, int j);

    // Appends another circuit on the same radix; qudit q of `other` lands on map[q].
    void append(const Circuit& other, const std::vector<int>& map);
    void append(const Circuit& other);

    bool elementary() const;

private:
    RegisterShape shape_{};
    std::vector<Gate> gates_;
};

struct GateCounts {
    std::int64_t gcx = 0;
    std::int64_t rot = 0;
    std::int64_t phase = 0;
    std::int64_t high_level = 0;
};

GateCounts count_gates(const Circuit& c);
std::int64_t count_gcx(const Circuit& c);

// Dense unitary of a single gate acting on its own qudits (local dimension).
ComplexMatrix local_matrix(const Gate& g, int d);

// Dense d^n x d^n unitary of the circuit, qudit 0 most significant.
ComplexMatrix evaluate(const Circuit& c);
// Left-multiplies `state` (d^n rows) by the gate.
void apply_gate(const Gate& g, const RegisterShape& shape, ComplexMatrix& state);

struct PhaseComparison {
    bool equivalent = false;
    double error = 0.0;  // ||a - e^{i phi} b||_F
    double phase = 0.0;  // phi
    bool indeterminate = false;
};

PhaseComparison equivalent_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// Gate sequences implementing X^(ab) on one qudit and a level permutation
// (perm[x] is the image of level x) using only Rot and LevelPhase.
std::vector<Gate> level_swap_gates(int qudit, int a, int b);
std::vector<Gate> level_permutation_gates(int qudit, const std::vector<int>& perm);

struct Rewrite {
    std::vector<Gate> gates;  // chronological replacement
    // Phases attached to the R_y(pi) conjugators so that they equal bare X.
    std::vector<LevelPhase> corrections;
};

// GCX(level m) == X^(m m') . GCX(level m') . X^(m m') on the control.
Rewrite rewrite_control_level(const GCX& g, int new_level, int d);
// GCX(i, j) == P^dagger . GCX(i', j') . P on the target, with P mapping {i, j} onto {i', j'}.
Rewrite rewrite_target_levels(const GCX& g, int new_i, int new_j, const std::vector<int>& conj, int d);

// JSON serialization (elementary gates only).
std::string circuit_to_json(const Circuit& c, int indent = -1);
Circuit circuit_from_json(const std::string& text);

}  // namespace qs::ir
