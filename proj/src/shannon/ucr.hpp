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
#include "shannon/walks.hpp"

namespace qs::shannon {

// Multiplexed rotation lowered to 2 (d-1) d^{k-1} GCX interleaved with
// rotations on the node's level pair. With `prune` an all-zero node emits nothing.
void append_ucr(ir::Circuit& out, PlanCache& plans, const ir::UCRot& node, bool prune);
ir::Circuit synth_ucr(const ir::RegisterShape& shape, const ir::UCRot& node, bool prune = false);

// Diagonal on r target qudits conditioned on one control level, lowered to
// 2 (d^r - 1) GCX. With `prune` factors with vanishing angles are skipped.
void append_ctrl_diag(ir::Circuit& out, PlanCache& plans, const ir::CtrlDiag& node, bool prune);
ir::Circuit synth_ctrl_diag_multi(const ir::RegisterShape& shape, const ir::CtrlDiag& node, bool prune = true);

}  // namespace qs::shannon
