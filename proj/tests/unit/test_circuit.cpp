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

#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "ir/circuit.hpp"
#include "oracles.hpp"

using qs::ir::Axis;
using qs::ir::Circuit;
using qs::ir::ComplexMatrix;
using qs::ir::GCX;
using qs::ir::Gate;

namespace {

Gate random_elementary(std::mt19937& rng, int d, int n) {
    std::uniform_int_distribution<int> qd(0, n - 1);
    std::uniform_int_distribution<int> lv(0, d - 1);
    std::uniform_real_distribution<double> ang(-7.0, 7.0);
    const int kind = std::uniform_int_distribution<int>(0, n > 1 ? 3 : 2)(rng);
    auto pair = [&]() {
        int a = lv(rng);
        int b = lv(rng);
        while (b == a) b = lv(rng);
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    if (kind == 0) {
        const auto [j, k] = pair();
        const Axis ax = static_cast<Axis>(std::uniform_int_distribution<int>(0, 2)(rng));
        return qs::ir::Rot{qd(rng), ax, j, k, ang(rng)};
    }
    if (kind == 1) return qs::ir::LevelPhase{qd(rng), lv(rng), ang(rng)};
    if (kind == 2) return qs::ir::GlobalPhase{ang(rng)};
    const int c = qd(rng);
    int t = qd(rng);
    while (t == c) t = qd(rng);
    const auto [i, j] = pair();
    return GCX{c, lv(rng), t, i, j};
}

Circuit random_circuit(std::mt19937& rng, int d, int n, int len) {
    Circuit c(d, n);
    for (int g = 0; g < len; ++g) c.add(random_elementary(rng, d, n));
    return c;
}

}  // namespace

TEST_SUITE("circuit-ir") {

TEST_CASE("empty circuit evaluates to the identity") {
    CHECK(qs::ir::evaluate(Circuit(3, 2)) == ComplexMatrix::Identity(9, 9));
    CHECK(qs::ir::count_gcx(Circuit(3, 2)) == 0);
}

TEST_CASE("single GCX evaluates to diag(I3, I3, X12)") {
    Circuit c(3, 2);
    c.gcx(0, 2, 1, 1, 2);
    ComplexMatrix expect = ComplexMatrix::Identity(9, 9);
    expect(7, 7) = 0.0;
    expect(8, 8) = 0.0;
    expect(7, 8) = 1.0;
    expect(8, 7) = 1.0;
    CHECK(qs::ir::evaluate(c) == expect);
    CHECK(qs::ir::count_gcx(c) == 1);
}

TEST_CASE("GCX matches the truth-table oracle for every placement") {
    for (int d = 2; d <= 4; ++d) {
        for (int c = 0; c < 3; ++c) {
            for (int t = 0; t < 3; ++t) {
                if (c == t) continue;
                for (int m = 0; m < d; ++m) {
                    Circuit circ(d, 3);
                    circ.gcx(c, m, t, 0, d - 1);
                    CHECK(qs::ir::evaluate(circ) == oracle::gcx(d, 3, c, m, t, 0, d - 1));
                }
            }
        }
    }
}

TEST_CASE("rotations and phases match their embedded definitions") {
    const double th = 0.83;
    Circuit c(4, 1);
    c.rot(0, Axis::Y, 1, 3, th);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), oracle::embed_two_level(4, 1, 3, oracle::ry(th))) < 1e-15);
    Circuit z(4, 1);
    z.rot(0, Axis::Z, 0, 2, th);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(z), oracle::embed_two_level(4, 0, 2, oracle::rz(th))) < 1e-15);
    Circuit x(4, 1);
    x.rot(0, Axis::X, 2, 3, th);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(x), oracle::embed_two_level(4, 2, 3, oracle::rx(th))) < 1e-15);
    Circuit p(3, 2);
    p.phase(1, 2, th);
    ComplexMatrix s = ComplexMatrix::Identity(3, 3);
    s(2, 2) = std::polar(1.0, th);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(p), oracle::on_qudit(3, 2, 1, s)) < 1e-15);
}

TEST_CASE("count_gates splits by kind") {
    Circuit c(3, 2);
    c.gcx(0, 1, 1, 0, 2);
    c.rot(1, Axis::Y, 0, 1, 0.3);
    c.phase(0, 2, 0.1);
    c.global_phase(0.2);
    c.gcx(1, 0, 0, 1, 2);
    const qs::ir::GateCounts n = qs::ir::count_gates(c);
    CHECK(n.gcx == 2);
    CHECK(n.rot == 1);
    CHECK(n.phase == 2);
    CHECK(n.high_level == 0);
}

TEST_CASE("gate validation") {
    Circuit c(3, 2);
    CHECK_THROWS_AS(c.gcx(0, 0, 0, 0, 1), qs::Error);
    CHECK_THROWS_AS(c.gcx(0, 3, 1, 0, 1), qs::Error);
    CHECK_THROWS_AS(c.gcx(0, 0, 1, 1, 1), qs::Error);
    CHECK_THROWS_AS(c.gcx(0, 0, 2, 0, 1), qs::Error);
    CHECK_THROWS_AS(c.rot(0, Axis::Y, 2, 1, 0.1), qs::Error);
    CHECK_THROWS_AS(c.phase(0, 5, 0.1), qs::Error);
    CHECK_THROWS_AS(Circuit(1, 2), qs::Error);
    CHECK_THROWS_AS(Circuit(2, 0), qs::Error);
}

TEST_CASE("angles are normalized on insertion") {
    Circuit c(3, 1);
    c.rot(0, Axis::Y, 0, 1, 5 * oracle::kPi);
    c.phase(0, 1, 3 * oracle::kPi);
    const auto& r = std::get<qs::ir::Rot>(c.gates()[0]);
    const auto& p = std::get<qs::ir::LevelPhase>(c.gates()[1]);
    CHECK(r.theta == doctest::Approx(oracle::kPi));
    CHECK(p.phi == doctest::Approx(oracle::kPi));
    CHECK(qs::ir::normalize_theta(-2 * oracle::kPi) == doctest::Approx(2 * oracle::kPi));
    CHECK(qs::ir::normalize_theta(2 * oracle::kPi) == doctest::Approx(2 * oracle::kPi));
}

TEST_CASE("evaluate refuses registers beyond the budget") {
    CHECK_THROWS_AS(qs::ir::evaluate(Circuit(5, 6)), qs::Error);
}

TEST_CASE("high-level nodes evaluate to their definitions") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    const int d = 3;
    const int n = 3;

    SUBCASE("opaque") {
        const ComplexMatrix u = qs::num::random_unitary(9, 1);
        Circuit c(d, n);
        c.add(qs::ir::Opaque{{0, 1}, u});
        CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), oracle::kron(u, ComplexMatrix::Identity(3, 3))) < 1e-14);
    }
    SUBCASE("ucgate") {
        std::vector<ComplexMatrix> blocks;
        for (int v = 0; v < d; ++v) blocks.push_back(qs::num::random_unitary(3, 10 + v));
        Circuit c(d, n);
        c.add(qs::ir::UCGate{1, {2}, blocks});
        const ComplexMatrix expect = oracle::multiplexed(d, n, {1}, 2, [&](const oracle::Digits& w) { return blocks[w[0]]; });
        CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), expect) < 1e-14);
    }
    SUBCASE("ctrldiag") {
        std::vector<double> ph(9);
        for (double& p : ph) p = ang(rng);
        Circuit c(d, n);
        c.add(qs::ir::CtrlDiag{0, 2, {1, 2}, ph});
        const ComplexMatrix expect = oracle::from_truth_table(
            d, n, [](const oracle::Digits& x) { return x; },
            [&](const oracle::Digits& x) { return x[0] == 2 ? std::polar(1.0, ph[3 * x[1] + x[2]]) : oracle::Complex(1.0); });
        CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), expect) < 1e-14);
    }
    SUBCASE("ucrot") {
        std::vector<double> th(9);
        for (double& t : th) t = ang(rng);
        Circuit c(d, n);
        c.add(qs::ir::UCRot{{0, 2}, 1, Axis::Z, 0, 2, th});
        const ComplexMatrix expect = oracle::multiplexed(d, n, {0, 2}, 1, [&](const oracle::Digits& w) {
            return oracle::embed_two_level(3, 0, 2, oracle::rz(th[3 * w[0] + w[1]]));
        });
        CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), expect) < 1e-14);
    }
    SUBCASE("cs layer") {
        std::vector<double> th(3);
        for (double& t : th) t = ang(rng);
        Circuit c(d, 2);
        c.add(qs::ir::CSLayer{0, {1}, {{0, 2}}, {th}});
        const ComplexMatrix expect = oracle::multiplexed(d, 2, {1}, 0, [&](const oracle::Digits& w) {
            return oracle::embed_two_level(3, 0, 2, oracle::ry(2 * th[w[0]]));
        });
        CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), expect) < 1e-14);
    }
}

TEST_CASE("local_matrix of a GCX is the two-qudit definition") {
    const ComplexMatrix m = qs::ir::local_matrix(GCX{2, 1, 0, 0, 1}, 3);
    CHECK(m == oracle::gcx(3, 2, 0, 1, 1, 0, 1));
}

TEST_CASE("append with a qudit map") {
    Circuit small(3, 2);
    small.gcx(0, 1, 1, 0, 2);
    Circuit big(3, 3);
    big.append(small, {2, 0});
    CHECK(qs::ir::evaluate(big) == oracle::gcx(3, 3, 2, 1, 0, 0, 2));
    Circuit other(4, 2);
    CHECK_THROWS_AS(big.append(other, {0, 1}), qs::Error);
}

TEST_CASE("equivalent_up_to_phase") {
    const ComplexMatrix u = qs::num::random_unitary(6, 9);
    auto r = qs::ir::equivalent_up_to_phase(u, u, 1e-12);
    CHECK(r.equivalent);
    CHECK(r.error == doctest::Approx(0.0));
    r = qs::ir::equivalent_up_to_phase(std::polar(1.0, oracle::kPi / 7) * u, u, 1e-12);
    CHECK(r.equivalent);
    CHECK(r.phase == doctest::Approx(oracle::kPi / 7));
    r = qs::ir::equivalent_up_to_phase(ComplexMatrix::Identity(2, 2), qs::num::level_swap(2, 0, 1), 1e-12);
    CHECK_FALSE(r.equivalent);
    CHECK(r.indeterminate);
    CHECK_THROWS_AS(qs::ir::equivalent_up_to_phase(u, ComplexMatrix::Identity(2, 2), 1e-12), qs::Error);
}

TEST_CASE("level swap gates equal a bare X") {
    for (int d = 2; d <= 5; ++d) {
        for (int a = 0; a < d; ++a) {
            for (int b = a + 1; b < d; ++b) {
                Circuit c(d, 1);
                for (const Gate& g : qs::ir::level_swap_gates(0, a, b)) c.add(g);
                CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), qs::num::level_swap(d, a, b)) < 1e-15);
            }
        }
    }
}

TEST_CASE("level permutation gates realize the permutation") {
    std::vector<int> perm = {2, 0, 3, 1};
    Circuit c(4, 1);
    for (const Gate& g : qs::ir::level_permutation_gates(0, perm)) c.add(g);
    const ComplexMatrix expect =
        oracle::from_truth_table(4, 1, [&](const oracle::Digits& x) { return oracle::Digits{perm[x[0]]}; });
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), expect) < 1e-15);
    CHECK_THROWS_AS(qs::ir::level_permutation_gates(0, {0, 0, 1}), qs::Error);
}

TEST_CASE("control-level rewrite, qubit case") {
    const GCX g{0, 0, 1, 0, 1};
    const qs::ir::Rewrite rw = qs::ir::rewrite_control_level(g, 1, 2);
    Circuit c(2, 2);
    for (const Gate& x : rw.gates) c.add(x);
    CHECK(qs::ir::count_gcx(c) == 1);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), oracle::gcx(2, 2, 0, 0, 1, 0, 1)) < 1e-15);
    CHECK(rw.corrections.size() == 1);
}

TEST_CASE("control-level rewrite, qutrit m=2 to 0") {
    const GCX g{0, 2, 1, 0, 1};
    const qs::ir::Rewrite rw = qs::ir::rewrite_control_level(g, 0, 3);
    Circuit c(3, 2);
    for (const Gate& x : rw.gates) c.add(x);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), oracle::gcx(3, 2, 0, 2, 1, 0, 1)) < 1e-15);
    CHECK_THROWS_AS(qs::ir::rewrite_control_level(g, 2, 3), qs::Error);
}

TEST_CASE("control-level rewrite applied twice returns to the original level") {
    const GCX g{1, 1, 0, 0, 2};
    const qs::ir::Rewrite first = qs::ir::rewrite_control_level(g, 2, 3);
    const GCX moved = std::get<GCX>(first.gates[2]);
    const qs::ir::Rewrite back = qs::ir::rewrite_control_level(moved, 1, 3);
    CHECK(std::get<GCX>(back.gates[2]).level == 1);
    Circuit c(3, 2);
    for (const Gate& x : first.gates) {
        if (std::holds_alternative<GCX>(x)) {
            for (const Gate& y : back.gates) c.add(y);
        } else {
            c.add(x);
        }
    }
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), oracle::gcx(3, 2, 1, 1, 0, 0, 2)) < 1e-15);
}

TEST_CASE("target-level rewrite") {
    const GCX g{0, 1, 1, 0, 1};
    // Conjugator 0->1, 1->2, 2->0 maps {0,1} onto {1,2}.
    const qs::ir::Rewrite rw = qs::ir::rewrite_target_levels(g, 1, 2, {1, 2, 0}, 3);
    Circuit c(3, 2);
    for (const Gate& x : rw.gates) c.add(x);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c), oracle::gcx(3, 2, 0, 1, 1, 0, 1)) < 1e-15);
    CHECK_THROWS_AS(qs::ir::rewrite_target_levels(g, 1, 2, {0, 1, 2}, 3), qs::Error);
    // Applying the inverse rewrite to the moved gate restores the original levels.
    const GCX moved = std::get<GCX>(rw.gates[rw.gates.size() / 2]);
    const qs::ir::Rewrite inv = qs::ir::rewrite_target_levels(moved, 0, 1, {2, 0, 1}, 3);
    Circuit c2(3, 2);
    for (const Gate& x : inv.gates) c2.add(x);
    CHECK(oracle::max_abs_diff(qs::ir::evaluate(c2), oracle::gcx(3, 2, 0, 1, 1, 1, 2)) < 1e-15);
}

TEST_CASE("circuit json round trip and errors") {
    Circuit c(3, 2);
    c.gcx(0, 2, 1, 1, 2);
    c.rot(1, Axis::Y, 1, 2, oracle::kPi / 4);
    c.phase(0, 1, -0.5);
    c.global_phase(0.25);
    const std::string text = qs::ir::circuit_to_json(c);
    const Circuit back = qs::ir::circuit_from_json(text);
    CHECK(qs::ir::circuit_to_json(back) == text);
    CHECK(qs::ir::evaluate(back) == qs::ir::evaluate(c));

    CHECK_THROWS_AS(qs::ir::circuit_from_json(R"({"radix":3,"qudits":2,"gates":[{"kind":"ccx"}]})"), qs::Error);
    CHECK_THROWS_AS(qs::ir::circuit_from_json(R"({"radix":3,"qudits":2,"gates":[{"kind":"gcx","control":0}]})"),
                    qs::Error);
    CHECK_THROWS_AS(qs::ir::circuit_from_json(
                        R"({"radix":3,"qudits":2,"gates":[{"kind":"gcx","control":0,"level":0,"target":0,"i":0,"j":1}]})"),
                    qs::Error);
    CHECK_THROWS_AS(qs::ir::circuit_from_json("[1,2]"), qs::Error);
    try {
        qs::ir::circuit_from_json(R"({"radix":3,"qudits":2,"gates":[{"kind":"ccx"}]})");
    } catch (const qs::Error& e) {
        CHECK(e.code() == qs::ErrorCode::Parse);
    }
}

TEST_CASE("high-level gates cannot be serialized") {
    Circuit c(2, 1);
    c.add(qs::ir::Opaque{{0}, ComplexMatrix::Identity(2, 2)});
    CHECK_THROWS_AS(qs::ir::circuit_to_json(c), qs::Error);
}

TEST_CASE("property: evaluate is a homomorphism") {
    std::mt19937 rng(11);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = std::uniform_int_distribution<int>(2, 4)(rng);
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const Circuit a = random_circuit(rng, d, n, 6);
        const Circuit b = random_circuit(rng, d, n, 6);
        Circuit ab = a;
        ab.append(b);
        const ComplexMatrix lhs = qs::ir::evaluate(ab);
        const ComplexMatrix rhs = qs::num::multiply(qs::ir::evaluate(b), qs::ir::evaluate(a));
        if ((lhs - rhs).norm() > 1e-12 * lhs.rows()) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("property: every elementary gate is unitary and GCX is an involution") {
    std::mt19937 rng(12);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = std::uniform_int_distribution<int>(2, 5)(rng);
        const Gate g = random_elementary(rng, d, 2);
        Circuit c(d, 2);
        c.add(g);
        const ComplexMatrix m = qs::ir::evaluate(c);
        if (!qs::num::assert_unitary(m, 1e-12)) ++failures;
        if (std::holds_alternative<GCX>(g)) {
            c.add(g);
            if (qs::ir::evaluate(c) != ComplexMatrix::Identity(d * d, d * d)) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("property: control-level rewrites preserve the unitary") {
    std::mt19937 rng(13);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = std::uniform_int_distribution<int>(2, 5)(rng);
        std::uniform_int_distribution<int> lv(0, d - 1);
        GCX g{0, lv(rng), 1, 0, 1};
        g.i = lv(rng);
        do g.j = lv(rng);
        while (g.j == g.i);
        if (g.i > g.j) std::swap(g.i, g.j);
        const ComplexMatrix ref = oracle::gcx(d, 2, 0, g.level, 1, g.i, g.j);

        int m2 = lv(rng);
        while (m2 == g.level && d > 1) m2 = lv(rng);
        Circuit a(d, 2);
        for (const Gate& x : qs::ir::rewrite_control_level(g, m2, d).gates) a.add(x);
        if (oracle::max_abs_diff(qs::ir::evaluate(a), ref) > 1e-12) ++failures;

        std::vector<int> perm(d);
        for (int x = 0; x < d; ++x) perm[x] = x;
        std::shuffle(perm.begin(), perm.end(), rng);
        Circuit b(d, 2);
        for (const Gate& x : qs::ir::rewrite_target_levels(g, perm[g.i], perm[g.j], perm, d).gates) b.add(x);
        if (oracle::max_abs_diff(qs::ir::evaluate(b), ref) > 1e-12) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("property: serialization round trip") {
    std::mt19937 rng(14);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = std::uniform_int_distribution<int>(2, 6)(rng);
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const Circuit c = random_circuit(rng, d, n, 12);
        const std::string text = qs::ir::circuit_to_json(c);
        const Circuit back = qs::ir::circuit_from_json(text);
        if (qs::ir::circuit_to_json(back) != text || back.size() != c.size()) ++failures;
    }
    CHECK(failures == 0);
}

}
