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

#include "ir/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "common/error.hpp"

namespace qs::ir {

using num::Complex;
using num::kPi;

std::int64_t RegisterShape::dim() const {
    std::int64_t out = 1;
    for (int q = 0; q < n; ++q) {
        if (out > (std::int64_t{1} << 62) / d) return -1;
        out *= d;
    }
    return out;
}

namespace {

std::int64_t ipow(int base, int exp) {
    std::int64_t out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 2x2 block of a two-level rotation in the (j, k) basis.
void rot_block(Axis axis, double theta, Complex m[2][2]) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const Complex i(0.0, 1.0);
    switch (axis) {
        case Axis::X:
            m[0][0] = c;
            m[0][1] = -i * s;
            m[1][0] = -i * s;
            m[1][1] = c;
            break;
        case Axis::Y:
            m[0][0] = c;
            m[0][1] = -s;
            m[1][0] = s;
            m[1][1] = c;
            break;
        case Axis::Z:
            m[0][0] = std::polar(1.0, -theta / 2);
            m[0][1] = 0.0;
            m[1][0] = 0.0;
            m[1][1] = std::polar(1.0, theta / 2);
            break;
    }
}

struct Layout {
    int d;
    int n;
    std::int64_t dim;
    std::vector<std::int64_t> stride;

    explicit Layout(const RegisterShape& s) : d(s.d), n(s.n), dim(s.dim()), stride(s.n) {
        for (int q = 0; q < n; ++q) stride[q] = ipow(d, n - 1 - q);
    }
    int digit(std::int64_t idx, int q) const { return static_cast<int>((idx / stride[q]) % d); }
    std::int64_t word(std::int64_t idx, const std::vector<int>& qs) const {
        std::int64_t w = 0;
        for (int q : qs) w = w * d + digit(idx, q);
        return w;
    }
};

void apply_pair(ComplexMatrix& st, std::int64_t r1, std::int64_t r2, const Complex m[2][2]) {
    for (Eigen::Index col = 0; col < st.cols(); ++col) {
        const Complex a = st(r1, col);
        const Complex b = st(r2, col);
        st(r1, col) = m[0][0] * a + m[0][1] * b;
        st(r2, col) = m[1][0] * a + m[1][1] * b;
    }
}

void apply_local(const Layout& lay, const std::vector<int>& qudits, const ComplexMatrix& m, ComplexMatrix& st) {
    const int k = static_cast<int>(qudits.size());
    const std::int64_t local = ipow(lay.d, k);
    require(m.rows() == local && m.cols() == local, ErrorCode::Shape,
            "local operator size does not match its qudit list");
    std::vector<std::int64_t> offset(local, 0);
    for (std::int64_t l = 0; l < local; ++l) {
        std::int64_t rem = l;
        for (int p = k - 1; p >= 0; --p) {
            offset[l] += (rem % lay.d) * lay.stride[qudits[p]];
            rem /= lay.d;
        }
    }
    ComplexMatrix tmp(local, st.cols());
    for (std::int64_t base = 0; base < lay.dim; ++base) {
        bool zero = true;
        for (int q : qudits) {
            if (lay.digit(base, q) != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) continue;
        for (std::int64_t l = 0; l < local; ++l) tmp.row(l) = st.row(base + offset[l]);
        tmp = m * tmp;
        for (std::int64_t l = 0; l < local; ++l) st.row(base + offset[l]) = tmp.row(l);
    }
}

void apply_multiplexed_rot(const Layout& lay, int target, const std::vector<int>& controls, Axis axis, int i,
                           int j, const std::vector<double>& angles, double scale, ComplexMatrix& st) {
    for (std::int64_t idx = 0; idx < lay.dim; ++idx) {
        if (lay.digit(idx, target) != i) continue;
        Complex m[2][2];
        rot_block(axis, scale * angles[lay.word(idx, controls)], m);
        apply_pair(st, idx, idx + (j - i) * lay.stride[target], m);
    }
}

std::vector<int> gate_qudits(const Gate& g) {
    return std::visit(overloaded{
                          [](const Rot& r) { return std::vector<int>{r.qudit}; },
                          [](const LevelPhase& p) { return std::vector<int>{p.qudit}; },
                          [](const GlobalPhase&) { return std::vector<int>{}; },
                          [](const GCX& x) { return std::vector<int>{x.control, x.target}; },
                          [](const Opaque& o) { return o.qudits; },
                          [](const UCGate& u) {
                              std::vector<int> v{u.control};
                              v.insert(v.end(), u.targets.begin(), u.targets.end());
                              return v;
                          },
                          [](const CtrlDiag& c) {
                              std::vector<int> v{c.control};
                              v.insert(v.end(), c.targets.begin(), c.targets.end());
                              return v;
                          },
                          [](const UCRot& u) {
                              std::vector<int> v = u.controls;
                              v.push_back(u.target);
                              return v;
                          },
                          [](const CSLayer& c) {
                              std::vector<int> v = c.controls;
                              v.push_back(c.target);
                              return v;
                          },
                      },
                      g);
}

Gate remap(Gate g, const std::vector<int>& map) {
    auto m = [&](int q) {
        require(q >= 0 && q < static_cast<int>(map.size()), ErrorCode::Argument, "qudit map too short");
        return map[q];
    };
    auto mv = [&](std::vector<int>& v) {
        for (int& q : v) q = m(q);
    };
    std::visit(overloaded{
                   [&](Rot& r) { r.qudit = m(r.qudit); },
                   [&](LevelPhase& p) { p.qudit = m(p.qudit); },
                   [](GlobalPhase&) {},
                   [&](GCX& x) {
                       x.control = m(x.control);
                       x.target = m(x.target);
                   },
                   [&](Opaque& o) { mv(o.qudits); },
                   [&](UCGate& u) {
                       u.control = m(u.control);
                       mv(u.targets);
                   },
                   [&](CtrlDiag& c) {
                       c.control = m(c.control);
                       mv(c.targets);
                   },
                   [&](UCRot& u) {
                       mv(u.controls);
                       u.target = m(u.target);
                   },
                   [&](CSLayer& c) {
                       mv(c.controls);
                       c.target = m(c.target);
                   },
               },
               g);
    return g;
}

void validate(const Gate& g, const RegisterShape& s) {
    const int d = s.d;
    auto qok = [&](int q) { return q >= 0 && q < s.n; };
    auto lok = [&](int l) { return l >= 0 && l < d; };
    const std::vector<int> qs = gate_qudits(g);
    for (int q : qs) require(qok(q), ErrorCode::Argument, std::string(gate_kind(g)) + ": qudit index out of range");
    require(std::set<int>(qs.begin(), qs.end()).size() == qs.size(), ErrorCode::Argument,
            std::string(gate_kind(g)) + ": repeated qudit");
    auto count_words = [&](std::size_t k) { return static_cast<std::size_t>(ipow(d, static_cast<int>(k))); };
    std::visit(overloaded{
                   [&](const Rot& r) {
                       require(lok(r.j) && lok(r.k) && r.j < r.k, ErrorCode::Argument, "rot: levels must satisfy j < k < d");
                       require(std::isfinite(r.theta), ErrorCode::Argument, "rot: non-finite angle");
                   },
                   [&](const LevelPhase& p) {
                       require(lok(p.level), ErrorCode::Argument, "phase: level out of range");
                       require(std::isfinite(p.phi), ErrorCode::Argument, "phase: non-finite angle");
                   },
                   [&](const GlobalPhase& p) {
                       require(std::isfinite(p.phi), ErrorCode::Argument, "gphase: non-finite angle");
                   },
                   [&](const GCX& x) {
                       require(lok(x.level), ErrorCode::Argument, "gcx: control level out of range");
                       require(lok(x.i) && lok(x.j) && x.i < x.j, ErrorCode::Argument, "gcx: levels must satisfy i < j < d");
                   },
                   [&](const Opaque& o) {
                       const auto local = static_cast<Eigen::Index>(count_words(o.qudits.size()));
                       require(o.matrix.rows() == local && o.matrix.cols() == local, ErrorCode::Shape,
                               "opaque: matrix size does not match qudit count");
                   },
                   [&](const UCGate& u) {
                       const auto local = static_cast<Eigen::Index>(count_words(u.targets.size()));
                       require(static_cast<int>(u.blocks.size()) == d, ErrorCode::Shape, "ucgate: need d blocks");
                       for (const auto& b : u.blocks)
                           require(b.rows() == local && b.cols() == local, ErrorCode::Shape, "ucgate: block size mismatch");
                   },
                   [&](const CtrlDiag& c) {
                       require(lok(c.level), ErrorCode::Argument, "ctrldiag: level out of range");
                       require(c.phases.size() == count_words(c.targets.size()), ErrorCode::Shape,
                               "ctrldiag: phase count must be d^targets");
                   },
                   [&](const UCRot& u) {
                       require(lok(u.i) && lok(u.j) && u.i < u.j, ErrorCode::Argument, "ucrot: levels must satisfy i < j < d");
                       require(u.angles.size() == count_words(u.controls.size()), ErrorCode::Shape,
                               "ucrot: angle count must be d^controls");
                   },
                   [&](const CSLayer& c) {
                       require(c.pairs.size() == c.theta.size(), ErrorCode::Shape, "cs: one angle list per pair");
                       std::set<int> seen;
                       for (const auto& [a, b] : c.pairs) {
                           require(lok(a) && lok(b) && a < b, ErrorCode::Argument, "cs: invalid level pair");
                           require(seen.insert(a).second && seen.insert(b).second, ErrorCode::Argument,
                                   "cs: level pairs must be disjoint");
                       }
                       for (const auto& t : c.theta)
                           require(t.size() == count_words(c.controls.size()), ErrorCode::Shape,
                                   "cs: angle count must be d^controls");
                   },
               },
               g);
}

}  // namespace

bool is_elementary(const Gate& g) {
    return std::holds_alternative<Rot>(g) || std::holds_alternative<LevelPhase>(g) ||
           std::holds_alternative<GlobalPhase>(g) || std::holds_alternative<GCX>(g);
}

const char* gate_kind(const Gate& g) {
    static const char* names[] = {"rot", "phase", "gphase", "gcx", "opaque", "ucgate", "ctrldiag", "ucrot", "cs"};
    return names[g.index()];
}

double normalize_theta(double theta) {
    double t = std::remainder(theta, 4.0 * kPi);
    if (t <= -2.0 * kPi) t += 4.0 * kPi;
    return t;
}

double normalize_phi(double phi) { return num::wrap_phase(phi); }

Circuit::Circuit(RegisterShape shape) : shape_(shape) {
    require(shape.d >= 2, ErrorCode::Argument, "circuit: radix must be at least 2");
    require(shape.n >= 1, ErrorCode::Argument, "circuit: need at least one qudit");
}

void Circuit::add(Gate g) {
    validate(g, shape_);
    std::visit(overloaded{
                   [](Rot& r) { r.theta = normalize_theta(r.theta); },
                   [](LevelPhase& p) { p.phi = normalize_phi(p.phi); },
                   [](GlobalPhase& p) { p.phi = normalize_phi(p.phi); },
                   [](auto&) {},
               },
               g);
    gates_.push_back(std::move(g));
}

void Circuit::rot(int qudit, Axis axis, int j, int k, double theta) { add(Rot{qudit, axis, j, k, theta}); }

void Circuit::phase(int qudit, int level, double phi) { add(LevelPhase{qudit, level, phi}); }

void Circuit::global_phase(double phi) { add(GlobalPhase{phi}); }

void Circuit::gcx(int control, int level, int target, int i, int j) { add(GCX{control, level, target, i, j}); }

void Circuit::append(const Circuit& other, const std::vector<int>& map) {
    require(other.d() == d(), ErrorCode::Argument, "append: radix mismatch");
    for (const Gate& g : other.gates()) add(remap(g, map));
}

void Circuit::append(const Circuit& other) {
    std::vector<int> id(other.n());
    for (int q = 0; q < other.n(); ++q) id[q] = q;
    append(other, id);
}

bool Circuit::elementary() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return is_elementary(g); });
}

GateCounts count_gates(const Circuit& c) {
    GateCounts out;
    for (const Gate& g : c.gates()) {
        if (std::holds_alternative<GCX>(g)) {
            ++out.gcx;
        } else if (std::holds_alternative<Rot>(g)) {
            ++out.rot;
        } else if (std::holds_alternative<LevelPhase>(g) || std::holds_alternative<GlobalPhase>(g)) {
            ++out.phase;
        } else {
            ++out.high_level;
        }
    }
    return out;
}

std::int64_t count_gcx(const Circuit& c) { return count_gates(c).gcx; }

void apply_gate(const Gate& g, const RegisterShape& shape, ComplexMatrix& st) {
    const Layout lay(shape);
    require(st.rows() == lay.dim, ErrorCode::Shape, "apply_gate: state has the wrong number of rows");
    std::visit(overloaded{
                   [&](const Rot& r) {
                       Complex m[2][2];
                       rot_block(r.axis, r.theta, m);
                       for (std::int64_t idx = 0; idx < lay.dim; ++idx)
                           if (lay.digit(idx, r.qudit) == r.j) apply_pair(st, idx, idx + (r.k - r.j) * lay.stride[r.qudit], m);
                   },
                   [&](const LevelPhase& p) {
                       const Complex z = std::polar(1.0, p.phi);
                       for (std::int64_t idx = 0; idx < lay.dim; ++idx)
                           if (lay.digit(idx, p.qudit) == p.level) st.row(idx) *= z;
                   },
                   [&](const GlobalPhase& p) { st *= std::polar(1.0, p.phi); },
                   [&](const GCX& x) {
                       for (std::int64_t idx = 0; idx < lay.dim; ++idx) {
                           if (lay.digit(idx, x.control) == x.level && lay.digit(idx, x.target) == x.i)
                               st.row(idx).swap(st.row(idx + (x.j - x.i) * lay.stride[x.target]));
                       }
                   },
                   [&](const Opaque& o) { apply_local(lay, o.qudits, o.matrix, st); },
                   [&](const UCGate& u) {
                       const Eigen::Index b = u.blocks.front().rows();
                       ComplexMatrix bd = ComplexMatrix::Zero(b * lay.d, b * lay.d);
                       for (int v = 0; v < lay.d; ++v) bd.block(v * b, v * b, b, b) = u.blocks[v];
                       std::vector<int> qs{u.control};
                       qs.insert(qs.end(), u.targets.begin(), u.targets.end());
                       apply_local(lay, qs, bd, st);
                   },
                   [&](const CtrlDiag& c) {
                       for (std::int64_t idx = 0; idx < lay.dim; ++idx)
                           if (lay.digit(idx, c.control) == c.level)
                               st.row(idx) *= std::polar(1.0, c.phases[lay.word(idx, c.targets)]);
                   },
                   [&](const UCRot& u) {
                       apply_multiplexed_rot(lay, u.target, u.controls, u.axis, u.i, u.j, u.angles, 1.0, st);
                   },
                   [&](const CSLayer& c) {
                       for (std::size_t s = 0; s < c.pairs.size(); ++s)
                           apply_multiplexed_rot(lay, c.target, c.controls, Axis::Y, c.pairs[s].first, c.pairs[s].second,
                                                 c.theta[s], 2.0, st);
                   },
               },
               g);
}

ComplexMatrix evaluate(const Circuit& c) {
    const std::int64_t dim = c.shape().dim();
    require(dim > 0 && dim <= kMaxEvalDim, ErrorCode::Overflow,
            "evaluate: register dimension exceeds " + std::to_string(kMaxEvalDim));
    ComplexMatrix st = ComplexMatrix::Identity(dim, dim);
    for (const Gate& g : c.gates()) apply_gate(g, c.shape(), st);
    return st;
}

ComplexMatrix local_matrix(const Gate& g, int d) {
    const std::vector<int> qs = gate_qudits(g);
    if (qs.empty()) {
        Circuit c(d, 1);
        c.add(g);
        return evaluate(c).topLeftCorner(1, 1);
    }
    std::vector<int> map(*std::max_element(qs.begin(), qs.end()) + 1, -1);
    for (int p = 0; p < static_cast<int>(qs.size()); ++p) map[qs[p]] = p;
    Circuit c(d, static_cast<int>(qs.size()));
    c.add(remap(g, map));
    return evaluate(c);
}

PhaseComparison equivalent_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::Shape,
            "equivalent_up_to_phase: dimensions differ");
    PhaseComparison out;
    const Complex tr = (b.conjugate().cwiseProduct(a)).sum();
    if (std::abs(tr) > 1e-12 * std::max<double>(1.0, static_cast<double>(a.rows()))) {
        out.phase = std::arg(tr);
    } else {
        out.indeterminate = true;
        Eigen::Index r = 0;
        Eigen::Index col = 0;
        b.cwiseAbs().maxCoeff(&r, &col);
        const Complex br = b(r, col);
        const Complex ar = a(r, col);
        out.phase = (std::abs(br) > 0.0 && std::abs(ar) > 0.0) ? std::arg(ar / br) : 0.0;
    }
    out.error = (a - std::polar(1.0, out.phase) * b).norm();
    out.equivalent = out.error <= tol;
    return out;
}

std::vector<Gate> level_swap_gates(int qudit, int a, int b) {
    if (a > b) std::swap(a, b);
    // R_y(pi) = [[0, -1], [1, 0]] on (a, b); the phase on b turns it into X^(ab).
    return {LevelPhase{qudit, b, kPi}, Rot{qudit, Axis::Y, a, b, kPi}};
}

std::vector<Gate> level_permutation_gates(int qudit, const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    std::vector<int> seen(d, 0);
    for (int x : perm) {
        require(x >= 0 && x < d && !seen[x], ErrorCode::Argument, "level permutation is not a bijection");
        seen[x] = 1;
    }
    // pos[x] is the level currently holding the amplitude that started on x.
    std::vector<int> pos(d);
    for (int x = 0; x < d; ++x) pos[x] = x;
    std::vector<Gate> out;
    for (int t = 0; t < d; ++t) {
        const int x = static_cast<int>(std::find(perm.begin(), perm.end(), t) - perm.begin());
        if (pos[x] == t) continue;
        const int from = pos[x];
        for (int y = 0; y < d; ++y) {
            if (pos[y] == t) pos[y] = from;
        }
        pos[x] = t;
        for (const Gate& g : level_swap_gates(qudit, from, t)) out.push_back(g);
    }
    return out;
}

Rewrite rewrite_control_level(const GCX& g, int new_level, int d) {
    require(new_level >= 0 && new_level < d, ErrorCode::Argument, "rewrite_control_level: level out of range");
    require(new_level != g.level, ErrorCode::Argument, "rewrite_control_level: new level equals the old one");
    Rewrite out;
    const std::vector<Gate> x = level_swap_gates(g.control, g.level, new_level);
    GCX moved = g;
    moved.level = new_level;
    out.gates = x;
    out.gates.push_back(moved);
    out.gates.insert(out.gates.end(), x.begin(), x.end());
    out.corrections = {std::get<LevelPhase>(x[0])};
    return out;
}

Rewrite rewrite_target_levels(const GCX& g, int new_i, int new_j, const std::vector<int>& conj, int d) {
    require(static_cast<int>(conj.size()) == d, ErrorCode::Argument, "rewrite_target_levels: conjugator has wrong size");
    if (new_i > new_j) std::swap(new_i, new_j);
    const int a = conj.at(g.i);
    const int b = conj.at(g.j);
    require((a == new_i && b == new_j) || (a == new_j && b == new_i), ErrorCode::Argument,
            "rewrite_target_levels: conjugator does not map {i, j} onto the new levels");
    Rewrite out;
    const std::vector<Gate> p = level_permutation_gates(g.target, conj);
    GCX moved = g;
    moved.i = new_i;
    moved.j = new_j;
    out.gates = p;
    out.gates.push_back(moved);
    // P^dagger: the transpositions in reverse order (each is its own inverse).
    for (std::size_t k = p.size(); k >= 2; k -= 2) {
        out.gates.push_back(p[k - 2]);
        out.gates.push_back(p[k - 1]);
    }
    for (std::size_t k = 0; k < p.size(); k += 2) out.corrections.push_back(std::get<LevelPhase>(p[k]));
    return out;
}

namespace {

using nlohmann::json;

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X:
            return "x";
        case Axis::Y:
            return "y";
        case Axis::Z:
            return "z";
    }
    return "y";
}

Axis parse_axis(const std::string& s) {
    if (s == "x") return Axis::X;
    if (s == "y") return Axis::Y;
    if (s == "z") return Axis::Z;
    fail(ErrorCode::Parse, "circuit json: unknown axis '" + s + "'");
}

int get_int(const json& o, const char* key) {
    auto it = o.find(key);
    require(it != o.end() && it->is_number_integer(), ErrorCode::Parse,
            std::string("circuit json: missing integer field '") + key + "'");
    return it->get<int>();
}

double get_real(const json& o, const char* key) {
    auto it = o.find(key);
    require(it != o.end() && it->is_number(), ErrorCode::Parse,
            std::string("circuit json: missing numeric field '") + key + "'");
    const double v = it->get<double>();
    require(std::isfinite(v), ErrorCode::Parse, std::string("circuit json: non-finite field '") + key + "'");
    return v;
}

}  // namespace

std::string circuit_to_json(const Circuit& c, int indent) {
    json gates = json::array();
    for (const Gate& g : c.gates()) {
        json o;
        if (const auto* x = std::get_if<GCX>(&g)) {
            o = {{"kind", "gcx"}, {"control", x->control}, {"level", x->level},
                 {"target", x->target}, {"i", x->i}, {"j", x->j}};
        } else if (const auto* r = std::get_if<Rot>(&g)) {
            o = {{"kind", "rot"}, {"qudit", r->qudit}, {"axis", axis_name(r->axis)},
                 {"j", r->j}, {"k", r->k}, {"theta", r->theta}};
        } else if (const auto* p = std::get_if<LevelPhase>(&g)) {
            o = {{"kind", "phase"}, {"qudit", p->qudit}, {"level", p->level}, {"phi", p->phi}};
        } else if (const auto* gp = std::get_if<GlobalPhase>(&g)) {
            o = {{"kind", "gphase"}, {"phi", gp->phi}};
        } else {
            fail(ErrorCode::Argument, std::string("circuit json: cannot serialize high-level gate '") +
                                          gate_kind(g) + "'; lower it first");
        }
        gates.push_back(std::move(o));
    }
    json doc = {{"radix", c.d()}, {"qudits", c.n()}, {"gates", std::move(gates)}};
    return doc.dump(indent);
}

Circuit circuit_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("circuit json: ") + e.what());
    }
    require(doc.is_object(), ErrorCode::Parse, "circuit json: top level must be an object");
    const int d = get_int(doc, "radix");
    const int n = get_int(doc, "qudits");
    require(d >= 2 && n >= 1, ErrorCode::Parse, "circuit json: need radix >= 2 and qudits >= 1");
    auto it = doc.find("gates");
    require(it != doc.end() && it->is_array(), ErrorCode::Parse, "circuit json: 'gates' must be an array");
    Circuit c(d, n);
    for (const json& o : *it) {
        require(o.is_object(), ErrorCode::Parse, "circuit json: gate must be an object");
        auto kit = o.find("kind");
        require(kit != o.end() && kit->is_string(), ErrorCode::Parse, "circuit json: gate without 'kind'");
        const std::string kind = kit->get<std::string>();
        Gate g;
        if (kind == "gcx") {
            g = GCX{get_int(o, "control"), get_int(o, "level"), get_int(o, "target"), get_int(o, "i"), get_int(o, "j")};
        } else if (kind == "rot") {
            auto ait = o.find("axis");
            require(ait != o.end() && ait->is_string(), ErrorCode::Parse, "circuit json: rot without 'axis'");
            g = Rot{get_int(o, "qudit"), parse_axis(ait->get<std::string>()), get_int(o, "j"), get_int(o, "k"),
                    get_real(o, "theta")};
        } else if (kind == "phase") {
            g = LevelPhase{get_int(o, "qudit"), get_int(o, "level"), get_real(o, "phi")};
        } else if (kind == "gphase") {
            g = GlobalPhase{get_real(o, "phi")};
        } else {
            fail(ErrorCode::Parse, "circuit json: unknown gate kind '" + kind + "'");
        }
        try {
            c.add(std::move(g));
        } catch (const Error& e) {
            fail(ErrorCode::Parse, std::string("circuit json: ") + e.what());
        }
    }
    return c;
}

}  // namespace qs::ir
