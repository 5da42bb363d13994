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

#include "shannon/ucr.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace qs::shannon {

namespace {

// Angles and phases below this are treated as zero when pruning.
constexpr double kPruneTol = 1e-12;

bool all_small(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::abs(x) < kPruneTol; });
}

std::size_t word_count(int d, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<std::size_t>(d);
    return r;
}

// Rotation before every GCX of the walk; the walk's local qudit q is `qudits[q]`.
void emit_walk(ir::Circuit& out, const SignPlan& plan, const std::vector<int>& qudits, int target, ir::Axis axis,
               int i, int j, const std::vector<double>& angles) {
    const std::vector<Toggle>& walk = plan.walk();
    for (std::size_t t = 0; t < walk.size(); ++t) {
        if (std::abs(ir::normalize_theta(angles[t])) >= 1e-14) out.rot(target, axis, i, j, angles[t]);
        out.gcx(qudits[walk[t].qudit], walk[t].level, target, i, j);
    }
}

}  // namespace

void append_ucr(ir::Circuit& out, PlanCache& plans, const ir::UCRot& node, bool prune) {
    const int d = out.d();
    require(node.axis != ir::Axis::X, ErrorCode::Argument, "uniformly controlled rotation: axis must be y or z");
    require(node.angles.size() == word_count(d, node.controls.size()), ErrorCode::Shape,
            "uniformly controlled rotation: angle count must be d^k");
    if (prune && all_small(node.angles)) return;
    const int k = static_cast<int>(node.controls.size());
    if (k == 0) {
        if (std::abs(ir::normalize_theta(node.angles[0])) >= 1e-14)
            out.rot(node.target, node.axis, node.i, node.j, node.angles[0]);
        return;
    }
    const SignPlan& plan = plans.ucr(d, k);
    emit_walk(out, plan, node.controls, node.target, node.axis, node.i, node.j, plan.solve(node.angles));
}

ir::Circuit synth_ucr(const ir::RegisterShape& shape, const ir::UCRot& node, bool prune) {
    PlanCache plans;
    ir::Circuit out(shape);
    append_ucr(out, plans, node, prune);
    return out;
}

void append_ctrl_diag(ir::Circuit& out, PlanCache& plans, const ir::CtrlDiag& node, bool prune) {
    const int d = out.d();
    const std::size_t r = node.targets.size();
    require(node.phases.size() == word_count(d, r), ErrorCode::Shape, "controlled diagonal: phase count must be d^r");
    if (r == 0) {
        const double phi = ir::normalize_phi(node.phases[0]);
        if (std::abs(phi) >= 1e-14) out.phase(node.control, node.level, phi);
        return;
    }

    // Split off the common phase of every group of d entries that differ only
    // in the last target; the remainder is a product of R_z^{(0j)} rotations.
    const int last = node.targets.back();
    const std::vector<int> prefix(node.targets.begin(), node.targets.end() - 1);
    const std::size_t groups = word_count(d, r - 1);
    std::vector<double> psi(groups, 0.0);
    for (std::size_t u = 0; u < groups; ++u) {
        for (int j = 0; j < d; ++j) psi[u] += node.phases[u * d + j];
        psi[u] /= d;
    }

    const int kp = static_cast<int>(r - 1);
    std::vector<int> qudits{node.control};
    qudits.insert(qudits.end(), prefix.begin(), prefix.end());
    for (int j = 1; j < d; ++j) {
        std::vector<double> beta(groups);
        for (std::size_t u = 0; u < groups; ++u) beta[u] = 2 * (node.phases[u * d + j] - psi[u]);
        if (prune && all_small(beta)) continue;
        const SignPlan& plan = plans.controlled(d, kp, node.level);
        // Target over words (control digit, prefix word): beta when the control matches.
        std::vector<double> target(word_count(d, r), 0.0);
        for (std::size_t u = 0; u < groups; ++u) target[node.level * groups + u] = beta[u];
        emit_walk(out, plan, qudits, last, ir::Axis::Z, 0, j, plan.solve(target));
    }

    ir::CtrlDiag rest{node.control, node.level, prefix, psi};
    append_ctrl_diag(out, plans, rest, prune);
}

ir::Circuit synth_ctrl_diag_multi(const ir::RegisterShape& shape, const ir::CtrlDiag& node, bool prune) {
    PlanCache plans;
    ir::Circuit out(shape);
    append_ctrl_diag(out, plans, node, prune);
    return out;
}

}  // namespace qs::shannon
