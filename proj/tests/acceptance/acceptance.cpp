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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "cost/cost.hpp"
#include "forge/forge.hpp"
#include "ir/circuit.hpp"
#include "numeric/linalg.hpp"
#include "numeric/matrix_json.hpp"
#include "shannon/demux.hpp"
#include "shannon/qsd.hpp"
#include "shannon/ucr.hpp"
#include "unary/unary.hpp"

#ifndef QUDSYNTH_FIXTURE_DIR
#define QUDSYNTH_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

using qs::ir::Circuit;
using qs::num::Complex;
using qs::num::ComplexMatrix;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && pass) detail = what;
        pass = pass && cond;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(QUDSYNTH_FIXTURE_DIR) + "/" + name);
    if (!in) qs::fail(qs::ErrorCode::Parse, "missing fixture " + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::int64_t ipow(int b, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

std::vector<int> digits_of(std::int64_t x, int d, int n) {
    std::vector<int> out(n);
    for (int q = n - 1; q >= 0; --q) {
        out[q] = static_cast<int>(x % d);
        x /= d;
    }
    return out;
}

std::int64_t index_of(const std::vector<int>& ds, int d) {
    std::int64_t x = 0;
    for (int v : ds) x = x * d + v;
    return x;
}

ComplexMatrix truth_matrix(int d, int n, const std::function<std::vector<int>(const std::vector<int>&)>& f) {
    const std::int64_t dim = ipow(d, n);
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (std::int64_t x = 0; x < dim; ++x) m(index_of(f(digits_of(x, d, n)), d), x) = 1.0;
    return m;
}

double max_abs(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

ComplexMatrix two_level(int d, int i, int j, const ComplexMatrix& u) {
    ComplexMatrix m = ComplexMatrix::Identity(d, d);
    m(i, i) = u(0, 0);
    m(i, j) = u(0, 1);
    m(j, i) = u(1, 0);
    m(j, j) = u(1, 1);
    return m;
}

ComplexMatrix ry(double t) {
    ComplexMatrix m(2, 2);
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

ComplexMatrix rz(double t) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -t / 2);
    m(1, 1) = std::polar(1.0, t / 2);
    return m;
}

// Applies u_of(word) to `target` where word is read from `controls`.
ComplexMatrix multiplexed(int d, int n, const std::vector<int>& controls, int target,
                          const std::function<ComplexMatrix(const std::vector<int>&)>& u_of) {
    const std::int64_t dim = ipow(d, n);
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (std::int64_t x = 0; x < dim; ++x) {
        const auto in = digits_of(x, d, n);
        std::vector<int> word;
        for (int c : controls) word.push_back(in[c]);
        const ComplexMatrix u = u_of(word);
        for (int v = 0; v < d; ++v) {
            auto out = in;
            out[target] = v;
            m(index_of(out, d), x) = u(v, in[target]);
        }
    }
    return m;
}

Circuit random_circuit(std::mt19937& rng, int d, int n, int len) {
    Circuit c(d, n);
    std::uniform_int_distribution<int> q(0, n - 1), lv(0, d - 1), kind(0, n > 1 ? 2 : 1);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int g = 0; g < len; ++g) {
        int i = lv(rng), j = lv(rng);
        while (j == i) j = lv(rng);
        if (i > j) std::swap(i, j);
        switch (kind(rng)) {
            case 0: c.rot(q(rng), rng() % 2 ? qs::ir::Axis::Y : qs::ir::Axis::Z, i, j, ang(rng)); break;
            case 1: c.phase(q(rng), lv(rng), ang(rng)); break;
            default: {
                const int a = q(rng);
                int b = q(rng);
                while (b == a) b = q(rng);
                c.gcx(a, lv(rng), b, i, j);
            }
        }
    }
    return c;
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = Clock::now();
    const Circuit b1 = qs::ir::circuit_from_json(read_fixture("b1_circuit.json"));
    const Circuit b4 = qs::ir::circuit_from_json(read_fixture("b4_circuit.json"));
    const ComplexMatrix b2 = qs::num::matrix_from_json(read_fixture("b2_matrix.json"));
    const ComplexMatrix b5 = qs::num::matrix_from_json(read_fixture("b5_matrix.json"));
    o.expect(max_abs(qs::ir::evaluate(b1), b2) <= 1e-12, "B1 circuit differs from diag{I18, Z12, Z12, X12}");
    o.expect(max_abs(qs::ir::evaluate(b4), b5) <= 1e-12, "flipped circuit differs from diag{I18, Z21, Z21, X12}");
    const Circuit built = qs::forge::build_p_toffoli(3, 2, 2, 1, 2);
    o.expect(max_abs(qs::ir::evaluate(built), b2) <= 1e-12, "library pseudo Toffoli differs from the fixture");
    o.expect(seconds_since(t0) < 1.0, "runtime above 1 s");
    return o;
}

struct QsdRuns {
    Outcome counts;
    Outcome reconstruction;
};

QsdRuns criteria2and3() {
    QsdRuns r;
    const struct {
        int d, n;
        long long expect;
    } cases[] = {{3, 2, 44}, {4, 2, 108}, {3, 3, 692}, {4, 3, 2232}, {8, 2, 1176}};
    for (const auto& c : cases) {
        const int dim = static_cast<int>(ipow(c.d, c.n));
        for (unsigned s = 0; s < 10; ++s) {
            const auto t0 = Clock::now();
            const ComplexMatrix u = qs::num::random_unitary(dim, 100 * c.d + 10 * c.n + s);
            const auto res = qs::shannon::qsd_synth(u, c.d, c.n);
            const double secs = seconds_since(t0);
            const std::string tag = "(" + std::to_string(c.d) + "," + std::to_string(c.n) + ") seed " +
                                    std::to_string(s);
            r.counts.expect(res.report.gcx_count == c.expect,
                            tag + ": " + std::to_string(res.report.gcx_count) + " GCX, expected " +
                                std::to_string(c.expect));
            r.counts.expect(secs < 30.0, tag + ": runtime above 30 s");
            const auto cmp = qs::ir::equivalent_up_to_phase(qs::ir::evaluate(res.circuit), u, 1e-8 * dim);
            r.reconstruction.expect(cmp.equivalent, tag + ": reconstruction error " + std::to_string(cmp.error));
        }
    }
    return r;
}

Outcome criterion4() {
    Outcome o;
    const long long table[] = {0, 108, 2232, 37800};
    for (int n = 1; n <= 8; ++n)
        o.expect(qs::cost::ququart_closed_form(n) == qs::cost::qsd_count(4, n),
                 "closed form and recursion differ at n=" + std::to_string(n));
    for (int n = 1; n <= 4; ++n)
        o.expect(qs::cost::ququart_closed_form(n) == table[n - 1], "closed form off the table at n=" + std::to_string(n));
    const auto t = qs::cost::comparison_table(4, 4, 5, 5);
    bool footnote = false;
    for (const auto& f : t.footnotes) footnote = footnote || f.find("613248") != std::string::npos;
    o.expect(footnote, "n=5 discrepancy footnote missing");
    return o;
}

Outcome criterion5() {
    Outcome o;
    const long long l1[] = {6, 168, 2976, 48768};
    const long long l2[] = {3, 120, 2208, 36480};
    const long long opt[] = {3, 100, 1868, 30927};
    for (int n = 1; n <= 4; ++n) {
        const auto b = qs::cost::qubit_baselines(n);
        const std::string at = " at n=" + std::to_string(n);
        o.expect(b.l1 == l1[n - 1], "l=1" + at + " is " + b.l1.str());
        o.expect(b.l2 == l2[n - 1], "l=2" + at + " is " + b.l2.str());
        o.expect(b.l2_optimal == opt[n - 1], "l=2 optimal" + at + " is " + b.l2_optimal.str() + ", expected " +
                                                 std::to_string(opt[n - 1]));
        o.expect(qs::cost::ququart_closed_form(n) < b.l1, "ququart not below qubit l=1" + at);
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    o.expect(qs::ir::count_gcx(qs::forge::build_swap(3)) == 9, "ternary SWAP is not 9 GCX");
    for (int d = 2; d <= 8; ++d)
        o.expect(qs::ir::count_gcx(qs::forge::build_cinc(d, d - 1)) == d - 1, "CINC count at d=" + std::to_string(d));
    for (int d = 3; d <= 6; ++d) {
        for (unsigned s = 0; s < 100; ++s) {
            const ComplexMatrix u = qs::num::random_unitary(d, 7000 + 100 * d + s);
            const int m = static_cast<int>(s % d);
            const Circuit c = qs::forge::build_ctrl_u(d, m, u);
            const ComplexMatrix want = multiplexed(d, 2, {0}, 1, [&](const std::vector<int>& w) {
                return w[0] == m ? u : ComplexMatrix(ComplexMatrix::Identity(d, d));
            });
            o.expect(qs::ir::count_gcx(c) <= 2 * (d - 1), "controlled U above 2(d-1) GCX at d=" + std::to_string(d));
            o.expect((qs::ir::evaluate(c) - want).norm() <= 1e-9, "controlled U inexact at d=" + std::to_string(d));
        }
    }
    const Circuit pt = qs::forge::build_p_toffoli(3, 2, 2, 1, 2);
    o.expect(qs::ir::count_gcx(pt) == 3 && qs::ir::count_gates(pt).rot == 4, "pseudo Toffoli is not 3 GCX + 4 rotations");

    for (int d = 2; d <= 4; ++d) {
        const Circuit t = qs::forge::build_toffoli(d, d - 1, d - 1, 0, 1);
        const ComplexMatrix want = truth_matrix(d, 3, [d](std::vector<int> v) {
            if (v[0] == d - 1 && v[1] == d - 1 && v[2] <= 1) v[2] = 1 - v[2];
            return v;
        });
        const std::string at = " at d=" + std::to_string(d);
        o.expect(qs::ir::count_gcx(t) == 6, "Toffoli uses " + std::to_string(qs::ir::count_gcx(t)) + " GCX" + at);
        o.expect(qs::ir::equivalent_up_to_phase(qs::ir::evaluate(t), want, 1e-10).equivalent, "Toffoli inexact" + at);
    }

    const Circuit c3 = qs::forge::build_lambda2_inc(3, 2, 2);
    int ry_count = 0;
    for (const auto& g : c3.gates())
        if (const auto* r = std::get_if<qs::ir::Rot>(&g)) ry_count += r->axis == qs::ir::Axis::Y;
    o.expect(qs::ir::count_gcx(c3) == 6 && ry_count == 8, "controlled INC at d=3 is not 6 GCX + 8 R_y");
    o.expect(qs::ir::count_gcx(qs::forge::build_lambda2_inc(5, 4, 4)) == 12, "controlled INC at d=5 is not 12 GCX");
    const auto c4 = qs::ir::count_gcx(qs::forge::build_lambda2_inc(4, 3, 3));
    o.expect(c4 == 12, "controlled INC at d=4 uses " + std::to_string(c4) + " GCX, expected 12");
    for (int d = 3; d <= 5; ++d) {
        const ComplexMatrix want = truth_matrix(d, 3, [d](std::vector<int> v) {
            if (v[0] == d - 1 && v[1] == d - 1) v[2] = (v[2] + 1) % d;
            return v;
        });
        const ComplexMatrix got = qs::ir::evaluate(qs::forge::build_lambda2_inc(d, d - 1, d - 1));
        o.expect(qs::ir::equivalent_up_to_phase(got, want, 1e-10).equivalent,
                 "controlled INC inexact at d=" + std::to_string(d));
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int d = 2; d <= 4; ++d) {
        for (int k = 1; k <= 3; ++k) {
            const int n = k + 1;
            qs::ir::UCRot node;
            for (int q = 0; q < k; ++q) node.controls.push_back(q);
            node.target = k;
            node.axis = qs::ir::Axis::Y;
            node.i = 0;
            node.j = d - 1;
            for (std::int64_t w = 0; w < ipow(d, k); ++w) node.angles.push_back(ang(rng));
            const Circuit c = qs::shannon::synth_ucr({d, n}, node);
            const ComplexMatrix want = multiplexed(d, n, node.controls, k, [&](const std::vector<int>& w) {
                return two_level(d, 0, d - 1, ry(node.angles[index_of(w, d)]));
            });
            const std::string at = " at (d,k)=(" + std::to_string(d) + "," + std::to_string(k) + ")";
            o.expect(qs::ir::count_gcx(c) == 2 * ipow(d, k - 1) * (d - 1), "UCR count" + at);
            o.expect(max_abs(qs::ir::evaluate(c), want) <= 1e-11, "UCR matrix" + at);
        }
    }
    const std::pair<int, int> regs[] = {{3, 2}, {3, 3}, {4, 2}, {4, 3}};
    for (auto [d, n] : regs) {
        qs::ir::CtrlDiag node;
        node.control = 0;
        node.level = d - 1;
        for (int q = 1; q < n; ++q) node.targets.push_back(q);
        for (std::int64_t w = 0; w < ipow(d, n - 1); ++w) node.phases.push_back(ang(rng));
        const Circuit c = qs::shannon::synth_ctrl_diag_multi({d, n}, node, false);
        ComplexMatrix want = ComplexMatrix::Identity(ipow(d, n), ipow(d, n));
        const std::int64_t block = ipow(d, n - 1);
        for (std::int64_t w = 0; w < block; ++w) want(node.level * block + w, node.level * block + w) =
            std::polar(1.0, node.phases[w]);
        const std::string at = " at (d,n)=(" + std::to_string(d) + "," + std::to_string(n) + ")";
        o.expect(qs::ir::count_gcx(c) == 2 * (block - 1), "controlled diagonal count" + at);
        o.expect(max_abs(qs::ir::evaluate(c), want) <= 1e-11, "controlled diagonal matrix" + at);
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        const bool better = qs::cost::qsd_count(3, n) < qs::cost::spectral_count(3, n);
        o.expect(better == (n <= 6), "d=3, n=" + std::to_string(n) + ": qsd " + qs::cost::qsd_count(3, n).str() +
                                         " vs spectral " + qs::cost::spectral_count(3, n).str());
        o.expect(qs::cost::qsd_count(4, n) < qs::cost::spectral_count(4, n), "d=4 unmarked at n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    const auto t0 = Clock::now();
    const std::vector<std::pair<int, int>> pattern{{0, 1}, {0, 2}, {0, 1}};
    for (unsigned s = 0; s < 100; ++s) {
        const ComplexMatrix u = qs::num::random_unitary(3, 9000 + s);
        const Circuit c = qs::unary::synth_one_qutrit(u);
        std::vector<std::pair<int, int>> runs;
        for (const auto& g : c.gates())
            if (const auto* r = std::get_if<qs::ir::Rot>(&g))
                if (runs.empty() || runs.back() != std::make_pair(r->j, r->k)) runs.emplace_back(r->j, r->k);
        o.expect(runs == pattern, "qutrit subspace pattern differs");
        o.expect(qs::ir::equivalent_up_to_phase(qs::ir::evaluate(c), u, 1e-10).equivalent, "qutrit reconstruction");
    }
    for (int d = 4; d <= 8; ++d) {
        for (unsigned s = 0; s < 50; ++s) {
            const ComplexMatrix u = qs::num::random_unitary(d, 9500 + 100 * d + s);
            const Circuit c = qs::unary::synth_one_qudit(u, d);
            o.expect(qs::ir::equivalent_up_to_phase(qs::ir::evaluate(c), u, 1e-9).equivalent,
                     "one-qudit reconstruction at d=" + std::to_string(d));
        }
    }
    o.expect(seconds_since(t0) < 10.0, "runtime above 10 s");
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::mt19937 rng(1010);
    int cases = 0;
    for (int t = 0; t < 200; ++t, ++cases) {
        const int d = std::uniform_int_distribution<int>(2, 4)(rng);
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const Circuit a = random_circuit(rng, d, n, 6), b = random_circuit(rng, d, n, 6);
        Circuit ab = a;
        ab.append(b);
        const ComplexMatrix lhs = qs::ir::evaluate(ab);
        o.expect((lhs - qs::ir::evaluate(b) * qs::ir::evaluate(a)).norm() <= 1e-12 * lhs.rows(),
                 "evaluate homomorphism");
    }
    for (int t = 0; t < 200; ++t, ++cases) {
        const int d = std::uniform_int_distribution<int>(2, 5)(rng);
        std::uniform_int_distribution<int> lv(0, d - 1);
        qs::ir::GCX g{0, lv(rng), 1, 0, 1};
        g.i = lv(rng);
        do g.j = lv(rng);
        while (g.j == g.i);
        if (g.i > g.j) std::swap(g.i, g.j);
        Circuit ref(d, 2);
        ref.add(g);
        const ComplexMatrix want = qs::ir::evaluate(ref);
        int m2 = lv(rng);
        while (m2 == g.level) m2 = lv(rng);
        Circuit a(d, 2);
        for (const auto& x : qs::ir::rewrite_control_level(g, m2, d).gates) a.add(x);
        std::vector<int> perm(d);
        for (int x = 0; x < d; ++x) perm[x] = x;
        std::shuffle(perm.begin(), perm.end(), rng);
        Circuit b(d, 2);
        for (const auto& x : qs::ir::rewrite_target_levels(g, perm[g.i], perm[g.j], perm, d).gates) b.add(x);
        o.expect(max_abs(qs::ir::evaluate(a), want) <= 1e-12, "control-level rewrite");
        o.expect(max_abs(qs::ir::evaluate(b), want) <= 1e-12, "target-level rewrite");
    }
    for (int t = 0; t < 200; ++t, ++cases) {
        const int d = std::uniform_int_distribution<int>(2, 5)(rng);
        const int b = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<ComplexMatrix> blocks;
        for (int v = 0; v < d; ++v) blocks.push_back(qs::num::random_unitary(b, rng()));
        const auto r = qs::shannon::demux_uc_gate(blocks);
        ComplexMatrix want = ComplexMatrix::Zero(d * b, d * b);
        for (int v = 0; v < d; ++v) want.block(v * b, v * b, b, b) = blocks[v];
        o.expect(max_abs(qs::shannon::recompose(r), want) <= 1e-9, "demux reconstruction");
    }
    for (int t = 0; t < 200; ++t, ++cases) {
        const int n = std::uniform_int_distribution<int>(2, 64)(rng);
        const int p = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const ComplexMatrix u = qs::num::random_unitary(n, rng());
        o.expect((qs::num::recompose(qs::num::csd(u, p, n - p)) - u).norm() <= 1e-10 * n, "CSD reconstruction");
    }
    for (int t = 0; t < 200; ++t, ++cases) {
        const int d = std::uniform_int_distribution<int>(2, 6)(rng);
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const Circuit c = random_circuit(rng, d, n, 12);
        const std::string text = qs::ir::circuit_to_json(c);
        o.expect(qs::ir::circuit_to_json(qs::ir::circuit_from_json(text)) == text, "serialization round trip");
    }
    o.expect(cases == 1000, "case count");
    return o;
}

}  // namespace

int main() {
    const char* titles[] = {
        "pseudo Toffoli fixture exactness",
        "QSD gate counts",
        "QSD reconstruction",
        "ququart closed form",
        "qubit baselines",
        "gate library counts and semantics",
        "UCR and controlled-diagonal counts",
        "better-than-spectral markers",
        "one-qudit synthesis",
        "property suites",
    };
    std::vector<Outcome> results(10);
    auto run = [&](int idx, const std::function<Outcome()>& f) {
        try {
            results[idx] = f();
        } catch (const std::exception& e) {
            results[idx] = Outcome{false, std::string("exception: ") + e.what()};
        }
    };
    run(0, criterion1);
    try {
        const QsdRuns q = criteria2and3();
        results[1] = q.counts;
        results[2] = q.reconstruction;
    } catch (const std::exception& e) {
        results[1] = results[2] = Outcome{false, std::string("exception: ") + e.what()};
    }
    run(3, criterion4);
    run(4, criterion5);
    run(5, criterion6);
    run(6, criterion7);
    run(7, criterion8);
    run(8, criterion9);
    run(9, criterion10);

    int failed = 0;
    for (int i = 0; i < 10; ++i) {
        std::printf("criterion %2d: %s  %s", i + 1, results[i].pass ? "PASS" : "FAIL", titles[i]);
        if (!results[i].pass) std::printf(" (%s)", results[i].detail.c_str());
        std::printf("\n");
        failed += !results[i].pass;
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
