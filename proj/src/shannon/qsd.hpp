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
#include <vector>

#include "ir/circuit.hpp"
#include "shannon/walks.hpp"
#include "unary/unary.hpp"

namespace qs::shannon {

using num::ComplexMatrix;

enum class TreeShape {
    Balanced,  // left child gets floor(size / 2) levels
    Chain,     // left child gets one level
};

// Binary tree over the levels of the split qudit. An internal node partitions
// its levels into (p, q) = (left.size, right.size) blocks of d^{n-1}.
struct LevelTree {
    int lo = 0;
    int size = 1;
    std::vector<LevelTree> children;  // empty for a leaf, otherwise {left, right}

    static LevelTree build(int d, TreeShape shape = TreeShape::Balanced);

    bool leaf() const { return children.empty(); }
    int p() const { return leaf() ? 0 : children[0].size; }
    int q() const { return leaf() ? 0 : children[1].size; }
    std::vector<int> leaves() const;
    // Length of the alternating block-diagonal / cosine-sine layer sequence.
    int layer_count() const;
    int ucr_count() const;
};

// Per-level expansion used by the synthesizer.
struct QsdStructure {
    int bd_layers = 0;
    int cs_layers = 0;
    int ucr_nodes = 0;
    int ctrl_diag_nodes = 0;
};

QsdStructure qsd_structure(int d, int n, TreeShape shape = TreeShape::Balanced);

struct QsdOptions {
    TreeShape shape = TreeShape::Balanced;
    // Skip sub-circuits whose angles or phases vanish. Off by default so the
    // GCX count depends only on (d, n).
    bool prune = false;
    unary::UnaryOptions unary;
};

// One decomposition step of an opaque block on >= 2 qudits: uniformly
// controlled gates (UCGate) interleaved with multiplexed R_y rotations (UCRot).
std::vector<ir::Gate> expand_opaque(const ir::Opaque& node, int d, TreeShape shape = TreeShape::Balanced);
// One demultiplexing step: opaque blocks interleaved with controlled diagonals.
std::vector<ir::Gate> expand_ucgate(const ir::UCGate& node);

// Depth-first lowering of every high-level node to elementary gates.
class Lowerer {
public:
    explicit Lowerer(QsdOptions opts = {}) : opts_(opts) {}

    ir::Circuit lower(const ir::Circuit& c);
    void lower_into(const ir::Gate& g, ir::Circuit& out, int depth = 0);
    int max_depth() const { return max_depth_; }

private:
    QsdOptions opts_;
    PlanCache plans_;
    int max_depth_ = 0;
};

ir::Circuit lower(const ir::Circuit& c, const QsdOptions& opts = {});

struct SynthesisReport {
    std::int64_t gcx_count = 0;
    std::int64_t rot_count = 0;
    std::int64_t phase_count = 0;
    double reconstruction_error = 0.0;  // Frobenius, after removing the best global phase
    bool verified = false;              // false when the register is too large to evaluate
    int depth = 0;                      // deepest opaque-block recursion
};

struct QsdResult {
    ir::Circuit circuit;
    SynthesisReport report;
};

QsdResult qsd_synth(const ComplexMatrix& u, int d, int n, const QsdOptions& opts = {});

}  // namespace qs::shannon
