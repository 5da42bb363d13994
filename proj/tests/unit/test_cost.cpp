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

#include <cmath>

#include "common/error.hpp"
#include "cost/cost.hpp"
#include "numeric/linalg.hpp"
#include "shannon/qsd.hpp"

using qs::cost::BigInt;

namespace {

// Direct evaluation in machine integers, valid while d^{2n} fits.
long long spectral_direct(long long d, int n) {
    long long dn = 1;
    for (int i = 0; i < n; ++i) dn *= d;
    long long sum = 1;
    for (int s = 2; s <= n - 1; ++s) sum += 2 * s - 1;
    return 2 * dn * ((dn - 1) - n * (d - 1)) + 2 * sum * dn * (d - 1);
}

long long ququart_recursion(int n) {
    long long c = 0, p = 1;  // p = 4^{m-2}
    for (int m = 2; m <= n; ++m) {
        c = 16 * c + 24 * (4 * p - 1) + 36 * p;
        p *= 4;
    }
    return c;
}

}  // namespace

TEST_SUITE("cost-models") {

TEST_CASE("spectral count") {
    CHECK(qs::cost::spectral_count(3, 2) == 108);
    CHECK(qs::cost::spectral_count(3, 6) == 1116828);
    CHECK(qs::cost::spectral_count(3, 7) == 9815256);
    for (int d = 2; d <= 8; ++d)
        for (int n = 2; n <= 6; ++n) CHECK(qs::cost::spectral_count(d, n) == spectral_direct(d, n));
    const auto constant_p = [](int) { return BigInt(1); };
    CHECK(qs::cost::spectral_count(3, 4, constant_p) == 2 * 81 * (80 - 8) + 2 * 3 * 81 * 2);
    CHECK_THROWS_AS(qs::cost::spectral_count(3, 1), qs::Error);
}

TEST_CASE("cinc count") {
    CHECK(qs::cost::cinc_count(2, 3) == doctest::Approx(2.0 * 16 * (7 - 3) + std::pow(4.0, 3) * 128));
    const double direct = 108.0 + std::pow(3.0, 2.0 + std::log2(3.0)) * std::pow(3.0, 6);
    CHECK(qs::cost::cinc_count(3, 2) == doctest::Approx(direct));
    CHECK(qs::cost::cinc_count(3, 2) == doctest::Approx(3.73e4).epsilon(0.02));
    const double big = std::pow(4.0, 4) * std::pow(4.0, 7);
    CHECK(qs::cost::cinc_count(4, 3) > big);
    CHECK(qs::cost::cinc_count(4, 3) < 1.01 * big);
    CHECK(qs::cost::format_sig6(37527.123456) == "37527.1");
}

TEST_CASE("qsd count") {
    CHECK(qs::cost::qsd_count(4, 1) == 0);
    CHECK(qs::cost::qsd_count(4, 2) == 108);
    CHECK(qs::cost::qsd_count(4, 3) == 2232);
    CHECK(qs::cost::qsd_count(4, 4) == 37800);
    CHECK(qs::cost::qsd_count(3, 2) == 44);
    CHECK(qs::cost::qsd_count(3, 3) == 692);
    CHECK(qs::cost::qsd_count(8, 2) == 1176);
    for (int n = 1; n <= 8; ++n) CHECK(qs::cost::qsd_count(4, n) == ququart_recursion(n));
}

TEST_CASE("qsd count agrees with the engine") {
    const std::vector<std::pair<int, int>> regs{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {6, 2}, {8, 2}};
    unsigned seed = 3;
    for (auto [d, n] : regs) {
        CAPTURE(d);
        CAPTURE(n);
        int dim = 1;
        for (int i = 0; i < n; ++i) dim *= d;
        const auto r = qs::shannon::qsd_synth(qs::num::random_unitary(dim, seed++), d, n);
        CHECK(BigInt(r.report.gcx_count) == qs::cost::qsd_count(d, n));
    }
}

TEST_CASE("ququart closed form") {
    CHECK(qs::cost::ququart_closed_form(1) == 0);
    CHECK(qs::cost::ququart_closed_form(2) == 108);
    CHECK(qs::cost::ququart_closed_form(3) == 2232);
    CHECK(qs::cost::ququart_closed_form(4) == 37800);
    CHECK(qs::cost::ququart_closed_form(5) == 613224);
    for (int n = 1; n <= 8; ++n) {
        CHECK(boost::multiprecision::denominator(qs::cost::ququart_closed_form_exact(n)) == 1);
        CHECK(qs::cost::ququart_closed_form(n) == qs::cost::qsd_count(4, n));
    }
}

TEST_CASE("qubit baselines") {
    CHECK(qs::cost::qubit_baselines(1).l2_optimal == 3);
    CHECK(qs::cost::qubit_baselines(1).l1 == 6);
    const auto b2 = qs::cost::qubit_baselines(2);
    CHECK(b2.l1 == 168);
    CHECK(b2.l2 == 120);
    CHECK(b2.l2_optimal == 100);
    const auto b3 = qs::cost::qubit_baselines(3);
    CHECK(b3.l1 == 2976);
    CHECK(b3.l2 == 2208);
    CHECK(b3.l2_optimal == 1868);
}

TEST_CASE("qubit baselines at four") {
    const auto b4 = qs::cost::qubit_baselines(4);
    CHECK(b4.l1 == 48768);
    CHECK(b4.l2 == 36480);
    CHECK(b4.l2_optimal == 30927);
}

TEST_CASE("closed forms are integers") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(boost::multiprecision::denominator(qs::cost::ququart_closed_form_exact(n)) == 1);
        CHECK_NOTHROW(qs::cost::qubit_baselines(n));
    }
}

TEST_CASE("comparison markers for qutrits from the published counts") {
    for (int n = 2; n <= 8; ++n) {
        const auto e = qs::cost::reference_entry(3, n);
        REQUIRE(e.has_value());
        CHECK((e->value < qs::cost::spectral_count(3, n).convert_to<double>()) == (n <= 6));
        CHECK(e->marked == (n <= 6));
    }
}

TEST_CASE("comparison markers for qutrits from the model") {
    const auto t = qs::cost::comparison_table(3, 3, 2, 8);
    REQUIRE(t.rows.size() == 7);
    for (const auto& r : t.rows) {
        CAPTURE(r.n);
        CHECK(r.marker == (r.n <= 6));
    }
}

TEST_CASE("comparison table rows and footnotes") {
    const auto t = qs::cost::comparison_table(3, 4, 2, 5);
    REQUIRE(t.rows.size() == 8);
    CHECK(t.rows[0].qsd == 44);
    CHECK(t.rows[0].spectral == 108);
    CHECK(t.rows[0].marker);
    CHECK(t.rows[0].reference_agrees);
    const auto& q5 = t.rows[7];
    CHECK(q5.d == 4);
    CHECK(q5.n == 5);
    CHECK(q5.qsd == 613224);
    CHECK_FALSE(q5.reference_agrees);
    bool found = false;
    for (const auto& f : t.footnotes) found = found || f.find("613248") != std::string::npos;
    CHECK(found);
    const std::string csv = qs::cost::to_csv(t);
    CHECK(csv.rfind("d,n,qsd,spectral,cinc,marker\n3,2,44,108,", 0) == 0);
    CHECK(qs::cost::to_markdown(t).find("613224") != std::string::npos);
}

TEST_CASE("ququart against qubits") {
    const auto rows = qs::cost::ququart_vs_qubit(1, 4);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1].ququart == 108);
    CHECK(rows[1].ququart < rows[1].qubit.l1);
    CHECK(qs::cost::to_markdown(rows).find("| 2 | 108 | 168 | 120 | 100 |") != std::string::npos);
}

TEST_CASE("reference table shape") {
    CHECK(qs::cost::reference_table().size() == 42);
    CHECK(qs::cost::reference_entry(8, 2)->value == 1176);
    CHECK_FALSE(qs::cost::reference_entry(6, 6)->exact);
    CHECK_FALSE(qs::cost::reference_entry(5, 8)->marked);
    CHECK_FALSE(qs::cost::reference_entry(2, 2).has_value());
}

}  // TEST_SUITE
