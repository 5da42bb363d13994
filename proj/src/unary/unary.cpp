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

#include "unary/unary.hpp"

#include <cmath>
#include <utility>

#include "common/error.hpp"

namespace qs::unary {

using num::Complex;
using num::kPi;

namespace {

// Rotation angles below this are dropped from emitted circuits.
constexpr double kDropAngle = 1e-14;
// Below this an Euler off-diagonal or diagonal modulus counts as zero.
constexpr double kGimbalTol = 1e-13;

ComplexMatrix ry2(double theta) {
    ComplexMatrix r(2, 2);
    r << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
    return r;
}

ComplexMatrix rz2(double theta) {
    ComplexMatrix r = ComplexMatrix::Zero(2, 2);
    r(0, 0) = std::polar(1.0, -theta / 2);
    r(1, 1) = std::polar(1.0, theta / 2);
    return r;
}

EulerTriple zyz(const ComplexMatrix& u) {
    EulerTriple t;
    const Complex det = u.determinant();
    t.phase = std::arg(det) / 2;
    const ComplexMatrix v = std::polar(1.0, -t.phase) * u;
    const double c = std::abs(v(0, 0));
    const double s = std::abs(v(1, 0));
    t.beta = 2 * std::atan2(s, c);
    if (s < kGimbalTol) {
        t.beta = 0.0;
        t.alpha1 = -2 * std::arg(v(0, 0));
    } else if (c < kGimbalTol) {
        t.beta = kPi;
        t.alpha1 = 2 * std::arg(v(1, 0));
    } else {
        const double sum = -2 * std::arg(v(0, 0));
        const double diff = 2 * std::arg(v(1, 0));
        t.alpha1 = (sum + diff) / 2;
        t.alpha2 = (sum - diff) / 2;
    }
    return t;
}

void emit_rot(ir::Circuit& out, int qudit, ir::Axis axis, int j, int k, double theta) {
    if (std::abs(ir::normalize_theta(theta)) < kDropAngle) return;
    out.rot(qudit, axis, j, k, theta);
}

void emit_phase(ir::Circuit& out, int qudit, int level, double phi) {
    if (std::abs(ir::normalize_phi(phi)) < kDropAngle) return;
    out.phase(qudit, level, phi);
}

// Emits u (2x2, on levels j < k) chronologically and returns its phase.
double emit_two_level(ir::Circuit& out, int qudit, const ComplexMatrix& u, int j, int k, EulerMode mode) {
    const EulerTriple t = euler_two_level(u, j, k, mode);
    const ir::Axis outer = mode == EulerMode::ZYZ ? ir::Axis::Z : ir::Axis::X;
    emit_rot(out, qudit, outer, j, k, t.alpha2);
    emit_rot(out, qudit, ir::Axis::Y, j, k, t.beta);
    emit_rot(out, qudit, outer, j, k, t.alpha1);
    return t.phase;
}

// Recursive Cartan step over an increasing list of levels; returns the phase to
// be added to the global phase.
double emit_recursive(ir::Circuit& out, int qudit, const ComplexMatrix& m, const std::vector<int>& levels,
                      const UnaryOptions& opts) {
    const int s = static_cast<int>(levels.size());
    if (s == 1) return std::arg(m(0, 0));
    if (s == 2) return emit_two_level(out, qudit, m, levels[0], levels[1], opts.mode);

    const AIIIStep step = cartan_aiii_step(m, opts.ladder);
    const std::vector<int> sub(levels.begin(), levels.end() - 1);
    const int last = levels[s - 1];
    // A sub-block phase e^{i psi} on every level but `last` is a global phase
    // psi together with e^{-i psi} on `last`.
    double phase = step.phase;
    const double psi2 = emit_recursive(out, qudit, step.k2.topLeftCorner(s - 1, s - 1), sub, opts);
    emit_phase(out, qudit, last, -psi2);
    emit_rot(out, qudit, ir::Axis::Y, levels[step.low], last, 2 * step.theta);
    const double psi1 = emit_recursive(out, qudit, step.k1.topLeftCorner(s - 1, s - 1), sub, opts);
    emit_phase(out, qudit, last, -psi1);
    return phase + psi1 + psi2;
}

}  // namespace

EulerTriple euler_two_level(const ComplexMatrix& u, int j, int k, EulerMode mode) {
    require(u.rows() == 2 && u.cols() == 2, ErrorCode::Shape, "euler_two_level: need a 2x2 matrix");
    require(j < k, ErrorCode::Argument, "euler_two_level: levels must satisfy j < k");
    num::require_unitary(u, "euler_two_level");
    EulerTriple t;
    if (mode == EulerMode::ZYZ) {
        t = zyz(u);
    } else {
        // R_y(pi/2) maps the z axis onto x and fixes y.
        const ComplexMatrix w = ry2(kPi / 2);
        t = zyz(w.adjoint() * u * w);
    }
    t.mode = mode;
    t.j = j;
    t.k = k;
    return t;
}

ComplexMatrix euler_matrix(const EulerTriple& t) {
    ComplexMatrix outer1 = rz2(t.alpha1);
    ComplexMatrix outer2 = rz2(t.alpha2);
    if (t.mode == EulerMode::XYX) {
        const ComplexMatrix w = ry2(kPi / 2);
        outer1 = w * outer1 * w.adjoint();
        outer2 = w * outer2 * w.adjoint();
    }
    return std::polar(1.0, t.phase) * outer1 * ry2(t.beta) * outer2;
}

AIIIStep cartan_aiii_step(const ComplexMatrix& m, Ladder ladder) {
    require(m.rows() == m.cols() && m.rows() >= 2, ErrorCode::Shape, "cartan_aiii_step: need a square matrix");
    num::require_unitary(m, "cartan_aiii_step");
    const int d = static_cast<int>(m.rows());
    const int low = (ladder == Ladder::Adjacent) ? d - 2 : 0;

    // Swapping local levels 0 and `low` moves the middle pair onto (0, d-1),
    // which is where the (d-1, 1) CSD puts its single angle.
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(d);
    perm.setIdentity();
    std::swap(perm.indices()[0], perm.indices()[low]);
    const ComplexMatrix mp = perm * m * perm.transpose();

    const num::CSDResult r = num::csd(mp, d - 1, 1);
    const Complex l2 = r.u2(0, 0);
    const Complex r2 = r.v2(0, 0);

    AIIIStep out;
    out.low = low;
    out.theta = r.theta.empty() ? 0.0 : r.theta[0];
    out.phase = std::arg(l2 * std::conj(r2));
    out.k1 = ComplexMatrix::Identity(d, d);
    out.k2 = ComplexMatrix::Identity(d, d);
    if (out.theta == 0.0) {
        // The input is block diagonal; put the whole upper block into k1.
        out.k1.topLeftCorner(d - 1, d - 1) = r.u1 * r.v1.adjoint() / (l2 * std::conj(r2));
    } else {
        out.k1.topLeftCorner(d - 1, d - 1) = r.u1 / l2;
        out.k2.topLeftCorner(d - 1, d - 1) = (r.v1 / r2).adjoint();
    }
    // Diagonal phases on the unpaired levels 1..d-2 commute with the middle
    // factor; fix them so that k2 has a real nonnegative diagonal there.
    for (int i = 1; i < d - 1; ++i) {
        const Complex w = out.k2(i, i);
        if (std::abs(w) < kGimbalTol) continue;
        const Complex z = w / std::abs(w);
        out.k2.row(i) *= std::conj(z);
        out.k1.col(i) *= z;
    }
    out.middle = num::cs_matrix(r.theta, d - 1, 1);

    out.k1 = perm.transpose() * out.k1 * perm;
    out.k2 = perm.transpose() * out.k2 * perm;
    out.middle = perm.transpose() * out.middle * perm;
    return out;
}

ComplexMatrix recompose(const AIIIStep& s) { return std::polar(1.0, s.phase) * s.k1 * s.middle * s.k2; }

void append_one_qudit(ir::Circuit& out, int qudit, const ComplexMatrix& m, const UnaryOptions& opts) {
    const int d = out.d();
    require(m.rows() == d && m.cols() == d, ErrorCode::Shape, "synth_one_qudit: matrix size must equal the radix");
    require(d <= kMaxUnaryDim, ErrorCode::Argument,
            "synth_one_qudit: radix above " + std::to_string(kMaxUnaryDim) + " is not supported");
    num::require_unitary(m, "synth_one_qudit");
    std::vector<int> levels(d);
    for (int l = 0; l < d; ++l) levels[l] = l;
    const double phase = ir::normalize_phi(emit_recursive(out, qudit, m, levels, opts));
    if (std::abs(phase) > kDropAngle) out.global_phase(phase);
}

ir::Circuit synth_one_qudit(const ComplexMatrix& m, int d, const UnaryOptions& opts) {
    require(d >= 2, ErrorCode::Argument, "synth_one_qudit: radix must be at least 2");
    require(d <= kMaxUnaryDim, ErrorCode::Argument,
            "synth_one_qudit: radix above " + std::to_string(kMaxUnaryDim) + " is not supported");
    ir::Circuit out(d, 1);
    append_one_qudit(out, 0, m, opts);
    return out;
}

ir::Circuit synth_one_qutrit(const ComplexMatrix& m, EulerMode mode) {
    UnaryOptions opts;
    opts.mode = mode;
    return synth_one_qudit(m, 3, opts);
}

}  // namespace qs::unary
