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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shannon/qsd.hpp"

namespace qs::cost {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// GCX cost p_k of one pseudo k-controlled X.
using PModel = std::function<BigInt(int k)>;

// p_k = 2k - 1.
BigInt linear_p(int k);

// GCX count of the spectral method for a generic n-qudit gate.
BigInt spectral_count(int d, int n, const PModel& p = linear_p);

// Upper bound on the CINC count of the spectral method. The (n + 1)^(2 + log2 d) term is not integral.
double cinc_count(int d, int n);

// GCX count of the QSD recursion with the given level tree, bottoming out at n = 1.
BigInt qsd_count(int d, int n, shannon::TreeShape shape = shannon::TreeShape::Balanced);

// (47/80) 4^{2n} - (11/4) 4^n + 8/5, evaluated exactly.
Rational ququart_closed_form_exact(int n);
BigInt ququart_closed_form(int n);

// CNOT counts of QSD on 2n qubits.
struct QubitBaselines {
    BigInt l1;          // (3/4) 4^{2n} - (3/2) 4^n
    BigInt l2;          // (9/16) 4^{2n} - (3/2) 4^n
    BigInt l2_optimal;  // (23/48) 4^{2n} - (3/2) 4^n + 4/3
};
QubitBaselines qubit_baselines(int n);

// One published QSD count. Large entries were printed in scientific notation
// with three significant digits; those have exact == false.
struct ReferenceEntry {
    int d = 0;
    int n = 0;
    double value = 0.0;
    bool exact = true;
    bool marked = false;
};
const std::vector<ReferenceEntry>& reference_table();
std::optional<ReferenceEntry> reference_entry(int d, int n);

struct ComparisonRow {
    int d = 0;
    int n = 0;
    BigInt qsd;
    BigInt spectral;
    double cinc = 0.0;
    bool marker = false;  // qsd < spectral
    std::optional<ReferenceEntry> reference;
    bool reference_agrees = false;  // exact reference equal to qsd
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::vector<std::string> footnotes;
};

ComparisonTable comparison_table(int d_lo, int d_hi, int n_lo, int n_hi, const PModel& p = linear_p);

// Columns d,n,qsd,spectral,cinc,marker.
std::string to_csv(const ComparisonTable& t);
std::string to_markdown(const ComparisonTable& t);

struct QuquartRow {
    int n = 0;
    BigInt ququart;
    QubitBaselines qubit;
};
std::vector<QuquartRow> ququart_vs_qubit(int n_lo, int n_hi);
std::string to_markdown(const std::vector<QuquartRow>& rows);

// Six significant digits.
std::string format_sig6(double v);

}  // namespace qs::cost
