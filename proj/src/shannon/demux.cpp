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

#include "shannon/demux.hpp"

#include "common/error.hpp"

namespace qs::shannon {

DemuxResult demux_uc_gate(const std::vector<ComplexMatrix>& blocks) {
    require(!blocks.empty(), ErrorCode::Shape, "demux: need at least one block");
    const Eigen::Index size = blocks.front().rows();
    for (const ComplexMatrix& b : blocks) {
        require(b.rows() == size && b.cols() == size, ErrorCode::Shape, "demux: blocks must share one square size");
        num::require_unitary(b, "demux");
    }
    const int d = static_cast<int>(blocks.size());
    DemuxResult r;
    if (d == 1) {
        r.gates.push_back(blocks.front());
        return r;
    }

    const ComplexMatrix u0_inv = blocks[0].adjoint();
    std::vector<ComplexMatrix> p(d);
    r.diagonals.resize(d - 1);
    for (int i = 1; i < d; ++i) {
        const num::EigResult e = num::eig_unitary(num::polar_unitary(blocks[i] * u0_inv));
        p[i] = e.vectors;
        r.diagonals[i - 1] = e.phases;
    }
    r.gates.resize(d);
    r.gates[0] = p[1].adjoint() * blocks[0];
    for (int i = 1; i < d - 1; ++i) r.gates[i] = p[i + 1].adjoint() * p[i];
    r.gates[d - 1] = p[d - 1];
    return r;
}

ComplexMatrix recompose(const DemuxResult& r) {
    const int d = static_cast<int>(r.gates.size());
    require(d >= 1 && static_cast<int>(r.diagonals.size()) == d - 1, ErrorCode::Shape, "demux: malformed result");
    const Eigen::Index b = r.gates.front().rows();
    ComplexMatrix out = ComplexMatrix::Zero(d * b, d * b);
    for (int v = 0; v < d; ++v) {
        ComplexMatrix acc = r.gates[0];
        for (int i = 1; i < d; ++i) {
            if (i == v) {
                for (Eigen::Index row = 0; row < b; ++row) acc.row(row) *= std::polar(1.0, r.diagonals[i - 1][row]);
            }
            acc = r.gates[i] * acc;
        }
        out.block(v * b, v * b, b, b) = acc;
    }
    return out;
}

}  // namespace qs::shannon
