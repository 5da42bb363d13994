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

#include "shannon/qsd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "common/error.hpp"
#include "shannon/demux.hpp"
#include "shannon/ucr.hpp"

namespace qs::shannon {

namespace {

LevelTree build_tree(int lo, int size, TreeShape shape) {
    LevelTree t;
    t.lo = lo;
    t.size = size;
    if (size > 1) {
        const int left = shape == TreeShape::Chain ? 1 : size / 2;
        t.children.push_back(build_tree(lo, left, shape));
        t.children.push_back(build_tree(lo + left, size - left, shape));
    }
    return t;
}

// Chronological alternation BD, CS, BD, ..., BD for one tree node.
struct Layer {
    bool block_diagonal = true;
    std::vector<ComplexMatrix> blocks;  // one per level of the node
    std::vector<ir::UCRot> rots;
};
using Layers = std::vector<Layer>;

struct Split {
    int top = 0;
    std::vector<int> lower;
    Eigen::Index block = 1;  // d^{n-1}
};

Layers merge(const Layers& x, int x_size, const Layers& y, int y_size, Eigen::Index block) {
    const std::size_t len = std::max(x.size(), y.size());
    const std::size_t xo = len - x.size();
    const std::size_t yo = len - y.size();
    Layers out(len);
    for (std::size_t i = 0; i < len; ++i) {
        Layer& l = out[i];
        l.block_diagonal = i % 2 == 0;
        auto take = [&](const Layers& src, std::size_t offset, int size) {
            if (i >= offset) {
                const Layer& s = src[i - offset];
                l.blocks.insert(l.blocks.end(), s.blocks.begin(), s.blocks.end());
                l.rots.insert(l.rots.end(), s.rots.begin(), s.rots.end());
            } else if (l.block_diagonal) {
                for (int k = 0; k < size; ++k) l.blocks.push_back(ComplexMatrix::Identity(block, block));
            }
        };
        take(x, xo, x_size);
        take(y, yo, y_size);
    }
    return out;
}

Layers decompose(const ComplexMatrix& w, const LevelTree& node, const Split& sp) {
    if (node.leaf()) return {Layer{true, {w}, {}}};
    const LevelTree& left = node.children[0];
    const LevelTree& right = node.children[1];
    const auto p = static_cast<int>(left.size * sp.block);
    const auto q = static_cast<int>(right.size * sp.block);
    const num::CSDResult r = num::csd(w, p, q);

    Layers out = merge(decompose(r.v1.adjoint(), left, sp), left.size, decompose(r.v2.adjoint(), right, sp),
                       right.size, sp.block);

    Layer cs;
    cs.block_diagonal = false;
    for (int s = 0; s < std::min(left.size, right.size); ++s) {
        ir::UCRot rot;
        rot.controls = sp.lower;
        rot.target = sp.top;
        rot.axis = ir::Axis::Y;
        rot.i = node.lo + s;
        rot.j = node.lo + left.size + s;
        rot.angles.resize(sp.block);
        for (Eigen::Index x = 0; x < sp.block; ++x) rot.angles[x] = 2 * r.theta[s * sp.block + x];
        cs.rots.push_back(std::move(rot));
    }
    out.push_back(std::move(cs));

    const Layers tail =
        merge(decompose(r.u1, left, sp), left.size, decompose(r.u2, right, sp), right.size, sp.block);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

bool near_scalar(const ComplexMatrix& m, double* phase) {
    const num::Complex z = m(0, 0);
    if (std::abs(std::abs(z) - 1.0) > 1e-12) return false;
    const ComplexMatrix diff = m - z * ComplexMatrix::Identity(m.rows(), m.cols());
    if (diff.cwiseAbs().maxCoeff() > 1e-12) return false;
    *phase = std::arg(z);
    return true;
}

}  // namespace

LevelTree LevelTree::build(int d, TreeShape shape) {
    require(d >= 1, ErrorCode::Argument, "level tree: need at least one level");
    return build_tree(0, d, shape);
}

std::vector<int> LevelTree::leaves() const {
    if (leaf()) return {lo};
    std::vector<int> out = children[0].leaves();
    const std::vector<int> r = children[1].leaves();
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

int LevelTree::layer_count() const {
    if (leaf()) return 1;
    return 2 * std::max(children[0].layer_count(), children[1].layer_count()) + 1;
}

int LevelTree::ucr_count() const {
    if (leaf()) return 0;
    return 2 * (children[0].ucr_count() + children[1].ucr_count()) + std::min(p(), q());
}

QsdStructure qsd_structure(int d, int n, TreeShape shape) {
    require(d >= 2, ErrorCode::Argument, "qsd_structure: radix must be at least 2");
    QsdStructure s;
    if (n < 2) return s;
    const LevelTree t = LevelTree::build(d, shape);
    const int layers = t.layer_count();
    s.bd_layers = (layers + 1) / 2;
    s.cs_layers = layers / 2;
    s.ucr_nodes = t.ucr_count();
    s.ctrl_diag_nodes = s.bd_layers * (d - 1);
    return s;
}

std::vector<ir::Gate> expand_opaque(const ir::Opaque& node, int d, TreeShape shape) {
    const int n = static_cast<int>(node.qudits.size());
    require(n >= 2, ErrorCode::Argument, "expand_opaque: need at least two qudits");
    Split sp;
    sp.top = node.qudits[0];
    sp.lower.assign(node.qudits.begin() + 1, node.qudits.end());
    sp.block = 1;
    for (int k = 1; k < n; ++k) sp.block *= d;
    require(node.matrix.rows() == d * sp.block, ErrorCode::Shape, "expand_opaque: matrix size must be d^n");

    std::vector<ir::Gate> out;
    for (Layer& l : decompose(node.matrix, LevelTree::build(d, shape), sp)) {
        if (l.block_diagonal) {
            out.push_back(ir::UCGate{sp.top, sp.lower, std::move(l.blocks)});
        } else {
            for (ir::UCRot& r : l.rots) out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<ir::Gate> expand_ucgate(const ir::UCGate& node) {
    const DemuxResult r = demux_uc_gate(node.blocks);
    std::vector<ir::Gate> out;
    const int d = static_cast<int>(r.gates.size());
    for (int i = 0; i < d; ++i) {
        if (i > 0) out.push_back(ir::CtrlDiag{node.control, i, node.targets, r.diagonals[i - 1]});
        out.push_back(ir::Opaque{node.targets, r.gates[i]});
    }
    return out;
}

ir::Circuit Lowerer::lower(const ir::Circuit& c) {
    ir::Circuit out(c.shape());
    for (const ir::Gate& g : c.gates()) lower_into(g, out, 0);
    return out;
}

void Lowerer::lower_into(const ir::Gate& g, ir::Circuit& out, int depth) {
    if (ir::is_elementary(g)) {
        out.add(g);
        return;
    }
    if (const auto* o = std::get_if<ir::Opaque>(&g)) {
        max_depth_ = std::max(max_depth_, depth + 1);
        num::require_unitary(o->matrix, "synthesis");
        double phase = 0.0;
        if (opts_.prune && near_scalar(o->matrix, &phase)) {
            if (std::abs(phase) >= 1e-14) out.global_phase(phase);
            return;
        }
        if (o->qudits.size() == 1) {
            unary::append_one_qudit(out, o->qudits[0], o->matrix, opts_.unary);
            return;
        }
        for (const ir::Gate& sub : expand_opaque(*o, out.d(), opts_.shape)) lower_into(sub, out, depth + 1);
    } else if (const auto* u = std::get_if<ir::UCGate>(&g)) {
        for (const ir::Gate& sub : expand_ucgate(*u)) lower_into(sub, out, depth);
    } else if (const auto* cd = std::get_if<ir::CtrlDiag>(&g)) {
        append_ctrl_diag(out, plans_, *cd, opts_.prune);
    } else if (const auto* ur = std::get_if<ir::UCRot>(&g)) {
        append_ucr(out, plans_, *ur, opts_.prune);
    } else if (const auto* cs = std::get_if<ir::CSLayer>(&g)) {
        for (std::size_t s = 0; s < cs->pairs.size(); ++s) {
            std::vector<double> angles(cs->theta[s].size());
            for (std::size_t w = 0; w < angles.size(); ++w) angles[w] = 2 * cs->theta[s][w];
            ir::UCRot r{cs->controls, cs->target, ir::Axis::Y, cs->pairs[s].first, cs->pairs[s].second, angles};
            append_ucr(out, plans_, r, opts_.prune);
        }
    }
}

ir::Circuit lower(const ir::Circuit& c, const QsdOptions& opts) {
    Lowerer l(opts);
    return l.lower(c);
}

QsdResult qsd_synth(const ComplexMatrix& u, int d, int n, const QsdOptions& opts) {
    require(d >= 2 && n >= 1, ErrorCode::Argument, "qsd_synth: need d >= 2 and n >= 1");
    const ir::RegisterShape shape{d, n};
    const std::int64_t dim = shape.dim();
    require(dim > 0 && u.rows() == dim && u.cols() == dim, ErrorCode::Shape,
            "qsd_synth: matrix size must be d^n");
    require(num::all_finite(u), ErrorCode::Parse, "qsd_synth: matrix has non-finite entries");
    num::require_unitary(u, "qsd_synth");

    std::vector<int> qudits(n);
    for (int q = 0; q < n; ++q) qudits[q] = q;
    ir::Circuit top(shape);
    top.add(ir::Opaque{qudits, u});

    Lowerer lowerer(opts);
    QsdResult res{lowerer.lower(top), {}};
    const ir::GateCounts counts = ir::count_gates(res.circuit);
    res.report.gcx_count = counts.gcx;
    res.report.rot_count = counts.rot;
    res.report.phase_count = counts.phase;
    res.report.depth = lowerer.max_depth();
    if (dim <= ir::kMaxEvalDim) {
        res.report.reconstruction_error =
            ir::equivalent_up_to_phase(ir::evaluate(res.circuit), u, 0.0).error;
        res.report.verified = true;
    } else {
        res.report.reconstruction_error = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

}  // namespace qs::shannon
