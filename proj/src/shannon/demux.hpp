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

#include "numeric/linalg.hpp"

namespace qs::shannon {

using num::ComplexMatrix;

// diag(U_0, ..., U_{d-1}) = (I x G_{d-1}) D_{d-1} ... (I x G_1) D_1 (I x G_0),
// where D_i applies diag(e^{i diagonals[i-1]}) when the control is |i>.
struct DemuxResult {
    std::vector<ComplexMatrix> gates;
    std::vector<std::vector<double>> diagonals;
};

DemuxResult demux_uc_gate(const std::vector<ComplexMatrix>& blocks);

// Block-diagonal matrix described by a demultiplexing.
ComplexMatrix recompose(const DemuxResult& r);

}  // namespace qs::shannon
