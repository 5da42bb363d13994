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

#include "cost/cost.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "common/error.hpp"

namespace qs::cost {

namespace {

BigInt pow_big(int base, int e) {
    BigInt out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

Rational pow_rat(int base, int e) { return Rational(pow_big(base, e)); }

void require_dn(int d, int n, int n_min, const char* what) {
    require(d >= 2, ErrorCode::Argument, std::string(what) + ": radix must be at least 2");
    require(n >= n_min, ErrorCode::Argument,
            std::string(what) + ": qudit count must be at least " + std::to_string(n_min));
}

BigInt to_integer(const Rational& r, const char* what) {
    require(boost::multiprecision::denominator(r) == 1, ErrorCode::Internal,
            std::string(what) + ": closed form is not an integer");
    return boost::multiprecision::numerator(r);
}

std::string marker_text(bool m) { return m ? "*" : ""; }

std::string reference_text(const std::optional<ReferenceEntry>& r) {
    if (!r) return "";
    if (r->exact) return std::to_string(static_cast<long long>(r->value));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", r->value);
    return buf;
}

}  // namespace

BigInt linear_p(int k) { return 2 * k - 1; }

BigInt spectral_count(int d, int n, const PModel& p) {
    require_dn(d, n, 2, "spectral_count");
    const BigInt dn = pow_big(d, n);
    BigInt sum = 1;
    for (int s = 2; s <= n - 1; ++s) sum += p(s);
    return 2 * dn * ((dn - 1) - BigInt(n) * (d - 1)) + 2 * sum * dn * (d - 1);
}

double cinc_count(int d, int n) {
    require_dn(d, n, 2, "cinc_count");
    const double dd = d;
    const double geometric = (std::pow(dd, n) - 1.0) / (dd - 1.0);
    return 2.0 * std::pow(dd, n + 1) * (geometric - n) +
           std::pow(n + 1.0, 2.0 + std::log2(dd)) * std::pow(dd, n + 4);
}

BigInt qsd_count(int d, int n, shannon::TreeShape shape) {
    require_dn(d, n, 1, "qsd_count");
    const shannon::QsdStructure s = shannon::qsd_structure(d, 2, shape);
    BigInt c = 0;
    for (int m = 2; m <= n; ++m) {
        c = BigInt(s.bd_layers) * d * c + BigInt(s.ctrl_diag_nodes) * 2 * (pow_big(d, m - 1) - 1) +
            BigInt(s.ucr_nodes) * 2 * pow_big(d, m - 2) * (d - 1);
    }
    return c;
}

Rational ququart_closed_form_exact(int n) {
    require(n >= 1, ErrorCode::Argument, "ququart_closed_form: n must be at least 1");
    return Rational(47, 80) * pow_rat(4, 2 * n) - Rational(11, 4) * pow_rat(4, n) + Rational(8, 5);
}

BigInt ququart_closed_form(int n) { return to_integer(ququart_closed_form_exact(n), "ququart_closed_form"); }

QubitBaselines qubit_baselines(int n) {
    require(n >= 1, ErrorCode::Argument, "qubit_baselines: n must be at least 1");
    const Rational q2 = pow_rat(4, 2 * n);
    const Rational q1 = pow_rat(4, n);
    const Rational tail = Rational(3, 2) * q1;
    QubitBaselines b;
    b.l1 = to_integer(Rational(3, 4) * q2 - tail, "qubit_baselines");
    b.l2 = to_integer(Rational(9, 16) * q2 - tail, "qubit_baselines");
    b.l2_optimal = to_integer(Rational(23, 48) * q2 - tail + Rational(4, 3), "qubit_baselines");
    return b;
}

const std::vector<ReferenceEntry>& reference_table() {
    static const std::vector<ReferenceEntry> table = [] {
        struct Raw {
            int n;
            double v[6];
        };
        const Raw raw[] = {
            {2, {44, 108, 272, 510, 828, 1176}},
            {3, {692, 2232, 10256, 25860, 52740, 85456}},
            {4, {6860, 37800, 336144, 1158720, 2965788, 5551504}},
            {5, {83924, 613248, 10796560, 51109320, 166400964, 355955600}},
            {6, {1011932, 7392768, 345689872, 2.25e9, 9.32e9, 2.28e10}},
            {7, {12157748, 118419456, 1.11e10, 9.90e10, 5.22e11, 1.46e12}},
            {8, {145936700, 1.90e9, 3.55e11, 4.36e12, 2.92e13, 9.34e13}},
        };
        std::vector<ReferenceEntry> out;
        for (const Raw& r : raw) {
            for (int c = 0; c < 6; ++c) {
                const int d = c + 3;
                ReferenceEntry e;
                e.d = d;
                e.n = r.n;
                e.value = r.v[c];
                e.exact = r.v[c] < 1e9 && !(d == 4 && r.n == 8);
                e.marked = !((d == 3 && r.n >= 7) || (d == 5 && r.n == 8));
                out.push_back(e);
            }
        }
        return out;
    }();
    return table;
}

std::optional<ReferenceEntry> reference_entry(int d, int n) {
    for (const ReferenceEntry& e : reference_table())
        if (e.d == d && e.n == n) return e;
    return std::nullopt;
}

ComparisonTable comparison_table(int d_lo, int d_hi, int n_lo, int n_hi, const PModel& p) {
    require(d_lo >= 2 && d_lo <= d_hi, ErrorCode::Argument, "comparison_table: bad radix range");
    require(n_lo >= 2 && n_lo <= n_hi, ErrorCode::Argument, "comparison_table: bad qudit range");
    ComparisonTable t;
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int n = n_lo; n <= n_hi; ++n) {
            ComparisonRow row;
            row.d = d;
            row.n = n;
            row.qsd = qsd_count(d, n);
            row.spectral = spectral_count(d, n, p);
            row.cinc = cinc_count(d, n);
            row.marker = row.qsd < row.spectral;
            row.reference = reference_entry(d, n);
            if (row.reference && row.reference->exact) {
                row.reference_agrees = BigInt(static_cast<long long>(row.reference->value)) == row.qsd;
                if (!row.reference_agrees) {
                    std::ostringstream os;
                    os << "d=" << d << ", n=" << n << ": published " << reference_text(row.reference)
                       << ", recursion gives " << row.qsd;
                    if (d == 4) os << " (matches the ququart closed form)";
                    t.footnotes.push_back(os.str());
                }
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

std::string to_csv(const ComparisonTable& t) {
    std::ostringstream os;
    os << "d,n,qsd,spectral,cinc,marker\n";
    for (const ComparisonRow& r : t.rows)
        os << r.d << ',' << r.n << ',' << r.qsd << ',' << r.spectral << ',' << format_sig6(r.cinc) << ','
           << (r.marker ? 1 : 0) << '\n';
    return os.str();
}

std::string to_markdown(const ComparisonTable& t) {
    std::ostringstream os;
    os << "| d | n | qsd | spectral | cinc | better | published |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const ComparisonRow& r : t.rows)
        os << "| " << r.d << " | " << r.n << " | " << r.qsd << " | " << r.spectral << " | " << format_sig6(r.cinc)
           << " | " << marker_text(r.marker) << " | " << reference_text(r.reference) << " |\n";
    if (!t.footnotes.empty()) {
        os << '\n';
        for (std::size_t i = 0; i < t.footnotes.size(); ++i) os << '[' << i + 1 << "] " << t.footnotes[i] << '\n';
    }
    return os.str();
}

std::vector<QuquartRow> ququart_vs_qubit(int n_lo, int n_hi) {
    require(n_lo >= 1 && n_lo <= n_hi, ErrorCode::Argument, "ququart_vs_qubit: bad range");
    std::vector<QuquartRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) rows.push_back({n, ququart_closed_form(n), qubit_baselines(n)});
    return rows;
}

std::string to_markdown(const std::vector<QuquartRow>& rows) {
    std::ostringstream os;
    os << "| n | n-ququart (l=1) | 2n-qubit (l=1) | 2n-qubit (l=2) | 2n-qubit (l=2, optimal) |\n";
    os << "|---|---|---|---|---|\n";
    for (const QuquartRow& r : rows)
        os << "| " << r.n << " | " << r.ququart << " | " << r.qubit.l1 << " | " << r.qubit.l2 << " | "
           << r.qubit.l2_optimal << " |\n";
    return os.str();
}

std::string format_sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace qs::cost
