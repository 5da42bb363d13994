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

#include "forge/forge.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "common/error.hpp"
#include "unary/unary.hpp"

namespace qs::forge {

namespace {

using ir::Axis;
using num::kPi;

// Rotations and phases below this are not emitted.
constexpr double kDropTol = 1e-12;

void require_radix(int d) {
    require(d >= 2, ErrorCode::Argument, "gate builder: radix must be at least 2");
}

void require_level(int d, int level, const char* what) {
    require(level >= 0 && level < d, ErrorCode::Argument,
            std::string("gate builder: ") + what + " level out of range");
}

void require_pair(int d, int i, int j) {
    require_level(d, i, "target");
    require_level(d, j, "target");
    require(i < j, ErrorCode::Argument, "gate builder: target levels must satisfy i < j");
}

void require_controls(int d, const std::vector<Control>& controls, int target) {
    std::set<int> seen{target};
    for (const Control& c : controls) {
        require_level(d, c.level, "control");
        require(seen.insert(c.qudit).second, ErrorCode::Argument,
                "gate builder: control qudits must be distinct and differ from the target");
    }
}

void rot_if(ir::Circuit& out, int qudit, Axis axis, int i, int j, double theta) {
    if (std::abs(ir::normalize_theta(theta)) >= kDropTol) out.rot(qudit, axis, i, j, theta);
}

void phase_if(ir::Circuit& out, int qudit, int level, double phi) {
    if (std::abs(ir::normalize_phi(phi)) >= kDropTol) out.phase(qudit, level, phi);
}

std::vector<Control> controls_from_levels(int d, const std::vector<int>& levels) {
    std::vector<Control> controls;
    for (std::size_t s = 0; s < levels.size(); ++s) {
        require_level(d, levels[s], "control");
        controls.push_back({static_cast<int>(s), levels[s]});
    }
    return controls;
}

ir::Circuit k_register(int d, std::size_t k) {
    require_radix(d);
    const ir::RegisterShape shape{d, static_cast<int>(k) + 1};
    require(shape.dim() > 0, ErrorCode::Overflow, "gate builder: register dimension overflows");
    return ir::Circuit(shape);
}

// Controlled R_z^(ij)(theta) around an involutive pseudo-controlled X (or a bare GCX).
template <typename EmitX>
void sandwich_rz(ir::Circuit& out, int target, int i, int j, double theta, EmitX emit_x) {
    emit_x();
    rot_if(out, target, Axis::Z, i, j, -theta / 2);
    emit_x();
    rot_if(out, target, Axis::Z, i, j, theta / 2);
}

}  // namespace

void append_swap_block(ir::Circuit& out, int q0, int q1, int a, int b) {
    if (a > b) std::swap(a, b);
    out.gcx(q0, b, q1, a, b);
    out.gcx(q1, b, q0, a, b);
    out.gcx(q0, b, q1, a, b);
}

void append_controlled_permutation(ir::Circuit& out, Control control, int target, const std::vector<int>& perm) {
    const int d = out.d();
    require(static_cast<int>(perm.size()) == d, ErrorCode::Shape, "controlled permutation: size must equal the radix");
    std::vector<bool> used(d, false);
    for (int x : perm) {
        require(x >= 0 && x < d && !used[x], ErrorCode::Argument, "controlled permutation: not a bijection");
        used[x] = true;
    }
    // Cycle (c0 c1 ... c_{L-1}) as X^(c0 c_{L-1}) ... X^(c0 c1), applied right to left.
    std::vector<bool> done(d, false);
    for (int start = 0; start < d; ++start) {
        if (done[start]) continue;
        done[start] = true;
        for (int x = perm[start]; x != start; x = perm[x]) {
            done[x] = true;
            out.gcx(control.qudit, control.level, target, std::min(start, x), std::max(start, x));
        }
    }
}

ir::Circuit build_swap(int d) {
    require_radix(d);
    ir::Circuit out(d, 2);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) append_swap_block(out, 0, 1, a, b);
    return out;
}

void append_root_swap_block(ir::Circuit& out, int q0, int q1, int a, int b) {
    if (a > b) std::swap(a, b);
    const int d = out.d();
    // Conjugating a controlled sqrt(X^(ab)) by the swap block's outer GCX.
    ComplexMatrix v = ComplexMatrix::Identity(d, d);
    v(a, a) = v(b, b) = num::Complex(0.5, 0.5);
    v(a, b) = v(b, a) = num::Complex(0.5, -0.5);
    out.gcx(q1, b, q0, a, b);
    append_lambda_k_u(out, {Control{q0, b}}, q1, v);
    out.gcx(q1, b, q0, a, b);
}

ir::Circuit build_root_swap(int d) {
    require_radix(d);
    ir::Circuit out(d, 2);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) append_root_swap_block(out, 0, 1, a, b);
    return out;
}

ir::Circuit build_sum(int d) {
    require_radix(d);
    ir::Circuit out(d, 2);
    for (int m = 1; m < d; ++m) {
        std::vector<int> perm(d);
        for (int b = 0; b < d; ++b) perm[b] = (b + m) % d;
        append_controlled_permutation(out, {0, m}, 1, perm);
    }
    return out;
}

ir::Circuit build_gxor(int d) {
    require_radix(d);
    ir::Circuit out(d, 2);
    for (int m = 0; m < d; ++m) {
        std::vector<int> perm(d);
        for (int b = 0; b < d; ++b) perm[b] = ((m - b) % d + d) % d;
        append_controlled_permutation(out, {0, m}, 1, perm);
    }
    return out;
}

ir::Circuit build_cinc(int d, int m) {
    require_radix(d);
    require_level(d, m, "control");
    ir::Circuit out(d, 2);
    for (int k = 1; k < d; ++k) out.gcx(0, m, 1, 0, k);
    return out;
}

ir::Circuit build_ctrl_rz(int d, int m, int i, int j, double theta) {
    require_radix(d);
    require_level(d, m, "control");
    require_pair(d, i, j);
    ir::Circuit out(d, 2);
    sandwich_rz(out, 1, i, j, theta, [&] { out.gcx(0, m, 1, i, j); });
    return out;
}

ir::Circuit build_ctrl_diag(int d, int m, const std::vector<double>& phases) {
    require_radix(d);
    ir::Circuit out(d, 2);
    append_lambda_k_diag(out, {Control{0, m}}, 1, phases);
    return out;
}

ir::Circuit build_ctrl_u(int d, int m, const ComplexMatrix& u) {
    require_radix(d);
    ir::Circuit out(d, 2);
    append_lambda_k_u(out, {Control{0, m}}, 1, u);
    return out;
}

void append_p_toffoli(ir::Circuit& out, Control positive, Control pseudo, int target, int i, int j,
                      Orientation orientation) {
    const int d = out.d();
    require_pair(d, i, j);
    require_controls(d, {positive, pseudo}, target);
    const double a = orientation == Orientation::Plus ? kPi / 4 : -kPi / 4;
    out.rot(target, Axis::Y, i, j, a);
    out.gcx(pseudo.qudit, pseudo.level, target, i, j);
    out.rot(target, Axis::Y, i, j, a);
    out.gcx(positive.qudit, positive.level, target, i, j);
    out.rot(target, Axis::Y, i, j, -a);
    out.gcx(pseudo.qudit, pseudo.level, target, i, j);
    out.rot(target, Axis::Y, i, j, -a);
}

ir::Circuit build_p_toffoli(int d, int m, int m2, int i, int j, Orientation orientation) {
    require_radix(d);
    ir::Circuit out(d, 3);
    append_p_toffoli(out, {0, m}, {1, m2}, 2, i, j, orientation);
    return out;
}

long long p_lambda_k_gcx(int k) {
    require(k >= 1 && k < 62, ErrorCode::Argument, "pseudo-controlled X: control count out of range");
    return (1LL << k) - 1;
}

void append_p_lambda_k_x(ir::Circuit& out, const ControlSpec& spec, int target, int i, int j,
                         Orientation orientation) {
    const int d = out.d();
    require(spec.positive.size() == 1, ErrorCode::Argument, "pseudo-controlled X: exactly one positive control");
    require(!spec.pseudo.empty(), ErrorCode::Argument, "pseudo-controlled X: needs k >= 2 controls");
    require(spec.pseudo.size() < 20, ErrorCode::Overflow, "pseudo-controlled X: too many controls");
    require_pair(d, i, j);
    std::vector<Control> controls{spec.positive.front()};
    controls.insert(controls.end(), spec.pseudo.begin(), spec.pseudo.end());
    require_controls(d, controls, target);

    // Toggle order: reflected Gray code over the pseudo controls, the positive
    // control, then the same code backwards. Every control word is visited once.
    const int r = static_cast<int>(spec.pseudo.size());
    const int k = r + 1;
    std::vector<int> gray;
    for (unsigned long n = 1; n < (1UL << r); ++n) gray.push_back(1 + __builtin_ctzl(n));
    std::vector<int> toggles(gray);
    toggles.push_back(0);
    toggles.insert(toggles.end(), gray.rbegin(), gray.rend());

    // Branch x (bit s = control s matches) applies X^{x_0} R_y(f(x)) on the
    // target, where slot t contributes with sign (-1)^{toggles fired before t}.
    // The slot characters are the 2^k distinct Gray-code vertices, so the
    // angles follow from one Hadamard transform.
    const unsigned long words = 1UL << k;
    const unsigned long pseudo_all = (words - 1) & ~1UL;
    const double side = orientation == Orientation::Plus ? kPi : -kPi;
    std::vector<double> angles(toggles.size() + 1, 0.0);
    for (unsigned long x = 0; x < words; ++x) {
        const bool hit = (x & 1UL) && (x & pseudo_all) != pseudo_all;
        if (!hit) continue;
        unsigned long fired = 0;
        for (std::size_t t = 0; t <= toggles.size(); ++t) {
            angles[t] += (fired % 2 ? -side : side);
            if (t < toggles.size() && ((x >> toggles[t]) & 1UL)) ++fired;
        }
    }
    for (double& a : angles) a /= static_cast<double>(words);

    for (std::size_t t = 0; t <= toggles.size(); ++t) {
        rot_if(out, target, Axis::Y, i, j, angles[t]);
        if (t < toggles.size()) {
            const Control& c = controls[toggles[t]];
            out.gcx(c.qudit, c.level, target, i, j);
        }
    }
}

ir::Circuit build_p_lambda_k_x(int d, const std::vector<int>& levels, int i, int j, Orientation orientation) {
    require(levels.size() >= 2, ErrorCode::Argument, "pseudo-controlled X: needs k >= 2 controls");
    ir::Circuit out = k_register(d, levels.size());
    std::vector<Control> controls = controls_from_levels(d, levels);
    ControlSpec spec{{controls.front()}, {controls.begin() + 1, controls.end()}};
    append_p_lambda_k_x(out, spec, static_cast<int>(levels.size()), i, j, orientation);
    return out;
}

void append_toffoli(ir::Circuit& out, Control c1, Control c2, int target, int i, int j) {
    const int d = out.d();
    require_pair(d, i, j);
    require_controls(d, {c1, c2}, target);
    if (d > 2) {
        append_lambda_k_u(out, {c1, c2}, target, num::level_swap(d, i, j));
        return;
    }
    // X^(ij) = R_y(pi/2) Z^(ij) R_y(-pi/2); the phase on |m, m', j> comes from
    // the seven-term parity expansion of x1 x2 y.
    const double t = kPi / 4;
    const int other = 1 - c2.level;
    out.rot(target, Axis::Y, i, j, -kPi / 2);
    out.gcx(c2.qudit, c2.level, target, i, j);
    out.phase(target, j, -t);
    out.gcx(c1.qudit, c1.level, target, i, j);
    out.phase(target, j, t);
    out.gcx(c2.qudit, c2.level, target, i, j);
    out.phase(target, j, -t);
    out.gcx(c1.qudit, c1.level, target, i, j);
    out.phase(target, j, t);
    out.phase(c2.qudit, c2.level, t);
    out.gcx(c1.qudit, c1.level, c2.qudit, std::min(c2.level, other), std::max(c2.level, other));
    out.phase(c2.qudit, c2.level, -t);
    out.phase(c1.qudit, c1.level, t);
    out.gcx(c1.qudit, c1.level, c2.qudit, std::min(c2.level, other), std::max(c2.level, other));
    out.rot(target, Axis::Y, i, j, kPi / 2);
}

ir::Circuit build_toffoli(int d, int m, int m2, int i, int j) {
    require_radix(d);
    ir::Circuit out(d, 3);
    append_toffoli(out, {0, m}, {1, m2}, 2, i, j);
    return out;
}

ir::Circuit build_lambda2_inc(int d, int m, int m2) {
    require_radix(d);
    ir::Circuit out(d, 3);
    const Control c1{0, m}, c2{1, m2};
    require_controls(d, {c1, c2}, 2);
    // INC = X^(0,d-1) ... X^(0,1). Each pseudo block flips the sign of |0> when
    // the second control misses; an even number of them cancels, so for even d
    // the last transposition is an exact Toffoli.
    const int pseudo_blocks = d % 2 ? d - 1 : d - 2;
    for (int k = 1; k <= pseudo_blocks; ++k) append_p_toffoli(out, c1, c2, 2, 0, k, Orientation::Minus);
    if (d % 2 == 0) append_toffoli(out, c1, c2, 2, 0, d - 1);
    return out;
}

void append_lambda_k_rz(ir::Circuit& out, const std::vector<Control>& controls, int target, int i, int j,
                        double theta) {
    const int d = out.d();
    require_pair(d, i, j);
    require_controls(d, controls, target);
    if (controls.empty()) {
        rot_if(out, target, Axis::Z, i, j, theta);
        return;
    }
    if (controls.size() == 1) {
        const Control c = controls.front();
        sandwich_rz(out, target, i, j, theta, [&] { out.gcx(c.qudit, c.level, target, i, j); });
        return;
    }
    // The pseudo side effect Z^(ij) commutes with R_z^(ij) and cancels in pairs.
    const ControlSpec spec{{controls.front()}, {controls.begin() + 1, controls.end()}};
    sandwich_rz(out, target, i, j, theta,
                [&] { append_p_lambda_k_x(out, spec, target, i, j, Orientation::Plus); });
}

ir::Circuit build_lambda_k_rz(int d, const std::vector<int>& levels, int i, int j, double theta) {
    ir::Circuit out = k_register(d, levels.size());
    append_lambda_k_rz(out, controls_from_levels(d, levels), static_cast<int>(levels.size()), i, j, theta);
    return out;
}

void append_lambda_k_diag(ir::Circuit& out, const std::vector<Control>& controls, int target,
                          const std::vector<double>& phases) {
    const int d = out.d();
    require(static_cast<int>(phases.size()) == d, ErrorCode::Shape,
            "controlled diagonal: phase count must equal the radix");
    for (double p : phases) require(std::isfinite(p), ErrorCode::Argument, "controlled diagonal: non-finite phase");
    require_controls(d, controls, target);
    if (controls.empty()) {
        for (int l = 0; l < d; ++l) phase_if(out, target, l, phases[l]);
        return;
    }
    // diag(e^{i phi}) = e^{i psi} prod_j R_z^(0j)(beta_j) with psi the mean phase.
    double psi = 0.0;
    for (double p : phases) psi += p;
    psi /= d;
    for (int l = 1; l < d; ++l) {
        const double beta = 2 * (phases[l] - psi);
        if (std::abs(ir::normalize_theta(beta)) >= kDropTol) append_lambda_k_rz(out, controls, target, 0, l, beta);
    }
    if (std::abs(ir::normalize_phi(psi)) < kDropTol) return;
    const Control last = controls.back();
    std::vector<double> rest(d, 0.0);
    rest[last.level] = psi;
    append_lambda_k_diag(out, {controls.begin(), controls.end() - 1}, last.qudit, rest);
}

ir::Circuit build_lambda_k_diag(int d, const std::vector<int>& levels, const std::vector<double>& phases) {
    ir::Circuit out = k_register(d, levels.size());
    append_lambda_k_diag(out, controls_from_levels(d, levels), static_cast<int>(levels.size()), phases);
    return out;
}

void append_lambda_k_u(ir::Circuit& out, const std::vector<Control>& controls, int target, const ComplexMatrix& u) {
    const int d = out.d();
    require(u.rows() == d && u.cols() == d, ErrorCode::Shape, "controlled unitary: matrix size must equal the radix");
    require(num::all_finite(u), ErrorCode::Parse, "controlled unitary: non-finite entry");
    num::require_unitary(u, "controlled unitary");
    require_controls(d, controls, target);
    if (controls.empty()) {
        unary::append_one_qudit(out, target, u);
        return;
    }
    num::EigResult e = num::eig_unitary(u);
    // A unimodular u keeps its eigenphases summing to zero so no controlled phase remains.
    double sum = 0.0;
    for (double p : e.phases) sum += p;
    const double turns = std::round(sum / (2 * kPi));
    if (std::abs(sum - 2 * kPi * turns) < 1e-9) e.phases[0] -= 2 * kPi * turns;

    unary::append_one_qudit(out, target, e.vectors.adjoint());
    append_lambda_k_diag(out, controls, target, e.phases);
    unary::append_one_qudit(out, target, e.vectors);
}

ir::Circuit build_lambda_k_u(int d, const std::vector<int>& levels, const ComplexMatrix& u) {
    ir::Circuit out = k_register(d, levels.size());
    append_lambda_k_u(out, controls_from_levels(d, levels), static_cast<int>(levels.size()), u);
    return out;
}

ir::Circuit build_lambda_k_x(int d, const std::vector<int>& levels, int i, int j) {
    require(!levels.empty(), ErrorCode::Argument, "controlled X: needs k >= 1 controls");
    ir::Circuit out = k_register(d, levels.size());
    require_pair(d, i, j);
    const std::vector<Control> controls = controls_from_levels(d, levels);
    const int target = static_cast<int>(levels.size());
    if (controls.size() == 1)
        out.gcx(0, levels[0], target, i, j);
    else if (controls.size() == 2)
        append_toffoli(out, controls[0], controls[1], target, i, j);
    else
        append_lambda_k_u(out, controls, target, num::level_swap(d, i, j));
    return out;
}

}  // namespace qs::forge
