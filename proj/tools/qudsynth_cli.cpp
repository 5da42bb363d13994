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

// Command-line front end. Links only the C interface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudsynth/qudsynth.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotUnitary = 3;
constexpr int kExitVerify = 4;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(qs_status s) {
    switch (s) {
        case QS_OK: return kExitOk;
        case QS_ERR_PARSE:
        case QS_ERR_SHAPE:
        case QS_ERR_ARGUMENT: return kExitParse;
        case QS_ERR_NOT_UNITARY: return kExitNotUnitary;
        case QS_ERR_VERIFY: return kExitVerify;
        default: return kExitFailure;
    }
}

void check(qs_status s, const std::string& what) {
    if (s != QS_OK) throw CliError{exit_code_for(s), what + ": " + qs_last_error()};
}

struct MatrixDeleter {
    void operator()(qs_matrix* m) const { qs_matrix_free(m); }
};
struct CircuitDeleter {
    void operator()(qs_circuit* c) const { qs_circuit_free(c); }
};
struct StringDeleter {
    void operator()(char* s) const { qs_string_free(s); }
};
using MatrixPtr = std::unique_ptr<qs_matrix, MatrixDeleter>;
using CircuitPtr = std::unique_ptr<qs_circuit, CircuitDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitParse, "cannot read '" + path + "'"};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Writes all outputs only once every one of them is ready.
void write_outputs(const std::vector<std::pair<std::string, std::string>>& files) {
    for (const auto& [path, text] : files) {
        if (path.empty() || path == "-") {
            std::cout << text;
            continue;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw CliError{kExitFailure, "cannot write '" + path + "'"};
        out << text;
    }
}

MatrixPtr load_matrix(const std::string& path) {
    const std::string text = read_file(path);
    qs_matrix* m = nullptr;
    check(qs_matrix_from_json(text.c_str(), &m), "reading " + path);
    return MatrixPtr(m);
}

CircuitPtr load_circuit(const std::string& path) {
    const std::string text = read_file(path);
    qs_circuit* c = nullptr;
    check(qs_circuit_from_json(text.c_str(), &c), "reading " + path);
    return CircuitPtr(c);
}

std::string circuit_json(const qs_circuit* c) {
    char* s = nullptr;
    check(qs_circuit_to_json(c, 2, &s), "serializing circuit");
    return StringPtr(s).get() + std::string("\n");
}

std::string matrix_json(const qs_matrix* m) {
    char* s = nullptr;
    check(qs_matrix_to_json(m, -1, &s), "serializing matrix");
    return StringPtr(s).get() + std::string("\n");
}

std::string timestamp_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::int64_t ipow(int b, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

struct Range {
    int lo = 0;
    int hi = -1;
};

Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CliError{kExitParse, "bad range '" + text + "', expected LO..HI"};
    }
    return r;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw CliError{kExitParse, "bad parameter '" + item + "', expected key=value"};
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int param_int(const std::map<std::string, std::string>& p, const std::string& key, int fallback) {
    const auto it = p.find(key);
    if (it == p.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw CliError{kExitParse, "parameter '" + key + "' must be an integer"};
    }
}

std::vector<int> param_levels(const std::map<std::string, std::string>& p, int fallback_level, int k) {
    const auto it = p.find("levels");
    std::vector<int> out;
    if (it == p.end()) return std::vector<int>(k, fallback_level);
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CliError{kExitParse, "levels must be colon-separated integers"};
        }
    }
    return out;
}

std::vector<int> parse_digits(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CliError{kExitParse, "state must be comma-separated digits"};
        }
    }
    return out;
}

struct Options {
    int d = 3;
    int n = 2;
    std::uint64_t seed = 1;
    double tol = -1.0;
    std::string in;
    std::string circuit;
    std::string out;
    std::string report;
    std::string format = "csv";
    bool no_timestamp = false;
    bool no_prune = false;
    bool random = false;
    std::string name;
    std::string params;
    std::string model = "qsd";
    std::string d_range = "3..8";
    std::string n_range = "2..8";
    std::string state;
    std::string shape = "balanced";
};

double default_tol(int d, int n) { return 1e-8 * static_cast<double>(ipow(d, n)); }

int run_synth(const Options& o) {
    MatrixPtr u;
    if (o.random) {
        qs_matrix* m = nullptr;
        check(qs_matrix_random_unitary(static_cast<int>(ipow(o.d, o.n)), o.seed, &m), "generating unitary");
        u.reset(m);
    } else {
        if (o.in.empty()) throw CliError{kExitParse, "synth needs --in or --random"};
        u = load_matrix(o.in);
    }
    qs_synth_options opts;
    qs_synth_options_default(&opts);
    opts.prune = o.no_prune ? 0 : 1;
    opts.shape = o.shape == "chain" ? QS_TREE_CHAIN : QS_TREE_BALANCED;
    qs_circuit* raw = nullptr;
    qs_report rep{};
    check(qs_synthesize(u.get(), o.d, o.n, &opts, &raw, &rep), "synthesis");
    CircuitPtr c(raw);

    const double tol = o.tol > 0 ? o.tol : default_tol(o.d, o.n);
    const bool ok = rep.verified && rep.reconstruction_error <= tol;
    json report = {{"d", o.d},
                   {"n", o.n},
                   {"gcx_count", rep.gcx_count},
                   {"rot_count", rep.rot_count},
                   {"phase_count", rep.phase_count},
                   {"reconstruction_error", rep.reconstruction_error},
                   {"tolerance", tol},
                   {"verified", rep.verified != 0},
                   {"depth", rep.depth},
                   {"pruned", !o.no_prune}};
    if (o.random) report["seed"] = o.seed;
    if (!o.no_timestamp) report["timestamp"] = timestamp_now();
    if (!ok) {
        std::cerr << "synth: reconstruction error " << rep.reconstruction_error << " exceeds " << tol << "\n";
        return kExitVerify;
    }
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back(o.out.empty() ? "-" : o.out, circuit_json(c.get()));
    if (!o.report.empty()) files.emplace_back(o.report, report.dump(2) + "\n");
    write_outputs(files);
    if (o.report.empty() && !o.out.empty()) std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const Options& o) {
    if (o.circuit.empty() || o.in.empty()) throw CliError{kExitParse, "verify needs --circuit and --in"};
    CircuitPtr c = load_circuit(o.circuit);
    MatrixPtr u = load_matrix(o.in);
    int d = 0, n = 0;
    check(qs_circuit_shape(c.get(), &d, &n), "circuit shape");
    const double tol = o.tol > 0 ? o.tol : default_tol(d, n);
    double err = 0.0;
    int eq = 0;
    check(qs_verify(c.get(), u.get(), tol, &err, &eq), "verification");
    std::cout << "error " << err << " tolerance " << tol << (eq ? " equivalent" : " NOT equivalent") << "\n";
    return eq ? kExitOk : kExitVerify;
}

int run_simulate(const Options& o) {
    if (o.in.empty()) throw CliError{kExitParse, "simulate needs --in circuit.json"};
    CircuitPtr c = load_circuit(o.in);
    if (o.state.empty()) {
        qs_matrix* m = nullptr;
        check(qs_circuit_evaluate(c.get(), &m), "evaluation");
        MatrixPtr u(m);
        write_outputs({{o.out.empty() ? "-" : o.out, matrix_json(u.get())}});
        return kExitOk;
    }
    int d = 0, n = 0;
    check(qs_circuit_shape(c.get(), &d, &n), "circuit shape");
    const std::vector<int> digits = parse_digits(o.state);
    std::vector<double> amps(2 * static_cast<std::size_t>(ipow(d, n)));
    check(qs_circuit_apply_basis(c.get(), digits.data(), static_cast<int>(digits.size()), amps.data(), amps.size()),
          "simulation");
    json arr = json::array();
    for (std::size_t x = 0; x < amps.size() / 2; ++x) arr.push_back({amps[2 * x], amps[2 * x + 1]});
    write_outputs({{o.out.empty() ? "-" : o.out, json{{"radix", d}, {"qudits", n}, {"amplitudes", arr}}.dump() + "\n"}});
    return kExitOk;
}

int run_build_gate(const Options& o) {
    const auto p = parse_params(o.params);
    const int d = o.d;
    const int m = param_int(p, "m", d - 1);
    const int m2 = param_int(p, "m2", d - 1);
    const int i = param_int(p, "i", d > 2 ? 1 : 0);
    const int j = param_int(p, "j", d > 2 ? 2 : 1);
    const int minus = param_int(p, "minus", 0);
    qs_circuit* raw = nullptr;
    qs_status s = QS_OK;
    if (o.name == "swap") {
        s = qs_build_swap(d, &raw);
    } else if (o.name == "root-swap") {
        s = qs_build_root_swap(d, &raw);
    } else if (o.name == "sum") {
        s = qs_build_sum(d, &raw);
    } else if (o.name == "gxor") {
        s = qs_build_gxor(d, &raw);
    } else if (o.name == "cinc") {
        s = qs_build_cinc(d, m, &raw);
    } else if (o.name == "toffoli") {
        s = qs_build_toffoli(d, m, m2, i, j, &raw);
    } else if (o.name == "p-toffoli") {
        s = qs_build_p_toffoli(d, m, m2, i, j, minus, &raw);
    } else if (o.name == "c2inc") {
        s = qs_build_lambda2_inc(d, m, m2, &raw);
    } else if (o.name == "p-ck-x") {
        const std::vector<int> levels = param_levels(p, d - 1, param_int(p, "k", 2));
        s = qs_build_p_lambda_k_x(d, levels.data(), static_cast<int>(levels.size()), i, j, minus, &raw);
    } else if (o.name == "cu" || o.name == "ck-u") {
        if (o.in.empty()) throw CliError{kExitParse, o.name + " needs --in matrix.json"};
        MatrixPtr u = load_matrix(o.in);
        if (o.name == "cu") {
            s = qs_build_ctrl_u(d, m, u.get(), &raw);
        } else {
            const std::vector<int> levels = param_levels(p, d - 1, param_int(p, "k", 2));
            s = qs_build_lambda_k_u(d, levels.data(), static_cast<int>(levels.size()), u.get(), &raw);
        }
    } else {
        throw CliError{kExitParse, "unknown gate '" + o.name + "'"};
    }
    check(s, "building " + o.name);
    CircuitPtr c(raw);
    write_outputs({{o.out.empty() ? "-" : o.out, circuit_json(c.get())}});
    return kExitOk;
}

std::string count_text(const std::string& model, int d, int n) {
    char* s = nullptr;
    check(qs_count(model.c_str(), d, n, &s), "count");
    return StringPtr(s).get();
}

int run_count(const Options& o) {
    std::ostringstream os;
    if (o.model == "table2") {
        char* s = nullptr;
        check(qs_ququart_table(o.n, o.n, &s), "count");
        os << StringPtr(s).get();
    } else {
        os << count_text(o.model, o.d, o.n) << "\n";
    }
    write_outputs({{o.out.empty() ? "-" : o.out, os.str()}});
    return kExitOk;
}

int run_compare(const Options& o) {
    const Range dr = parse_range(o.d_range), nr = parse_range(o.n_range);
    char* s = nullptr;
    check(qs_compare(dr.lo, dr.hi, nr.lo, nr.hi, o.format.c_str(), &s), "compare");
    write_outputs({{o.out.empty() ? "-" : o.out, StringPtr(s).get()}});
    return kExitOk;
}

int run_bench(const Options& o) {
    const Range dr = parse_range(o.d_range), nr = parse_range(o.n_range);
    std::ostringstream os;
    if (dr.lo <= dr.hi && nr.lo <= nr.hi) {
        for (int d = dr.lo; d <= dr.hi; ++d)
            for (int n = nr.lo; n <= nr.hi; ++n)
                if (d < 2 || n < 1 || ipow(d, n) > 4096)
                    throw CliError{kExitParse, "bench: (d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                                                   ") exceeds the d^n <= 4096 budget"};
        os << (o.no_timestamp ? "d,n,gcx_count,reconstruction_error\n"
                              : "d,n,gcx_count,reconstruction_error,seconds\n");
        qs_synth_options opts;
        qs_synth_options_default(&opts);
        for (int d = dr.lo; d <= dr.hi; ++d) {
            for (int n = nr.lo; n <= nr.hi; ++n) {
                qs_matrix* m = nullptr;
                check(qs_matrix_random_unitary(static_cast<int>(ipow(d, n)), o.seed, &m), "generating unitary");
                MatrixPtr u(m);
                const auto start = std::chrono::steady_clock::now();
                qs_circuit* raw = nullptr;
                qs_report rep{};
                check(qs_synthesize(u.get(), d, n, &opts, &raw, &rep), "synthesis");
                CircuitPtr c(raw);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                char err[32];
                std::snprintf(err, sizeof err, "%.3e", rep.reconstruction_error);
                os << d << ',' << n << ',' << rep.gcx_count << ',' << err;
                if (!o.no_timestamp) os << ',' << secs;
                os << '\n';
            }
        }
    }
    write_outputs({{o.out.empty() ? "-" : o.out, os.str()}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qudsynth: qudit circuit synthesis"};
    app.require_subcommand(1);
    Options o;

    auto add_dn = [&o](CLI::App* sub) {
        sub->add_option("--d", o.d, "radix")->check(CLI::Range(2, 64));
        sub->add_option("--n", o.n, "number of qudits")->check(CLI::Range(1, 64));
    };

    auto* synth = app.add_subcommand("synth", "synthesize a unitary into elementary gates");
    add_dn(synth);
    synth->add_option("--in", o.in, "unitary matrix JSON");
    synth->add_flag("--random", o.random, "synthesize a seeded random unitary instead of --in");
    synth->add_option("--seed", o.seed, "seed for --random");
    synth->add_option("--tol", o.tol, "reconstruction tolerance (default 1e-8 d^n)");
    synth->add_option("--out", o.out, "circuit JSON output");
    synth->add_option("--report", o.report, "report JSON output");
    synth->add_option("--shape", o.shape, "level tree shape")->check(CLI::IsMember({"balanced", "chain"}));
    synth->add_flag("--no-prune", o.no_prune, "keep vanishing sub-circuits so counts depend only on (d, n)");
    synth->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp from the report");

    auto* verify = app.add_subcommand("verify", "check a circuit against a unitary up to global phase");
    verify->add_option("--circuit", o.circuit, "circuit JSON")->required();
    verify->add_option("--in", o.in, "unitary matrix JSON")->required();
    verify->add_option("--tol", o.tol, "tolerance (default 1e-8 d^n)");

    auto* simulate = app.add_subcommand("simulate", "evaluate a circuit");
    simulate->add_option("--in", o.in, "circuit JSON")->required();
    simulate->add_option("--state", o.state, "basis state digits, e.g. 2,2,1; default prints the unitary");
    simulate->add_option("--out", o.out, "output path");

    auto* build = app.add_subcommand("build-gate", "emit a library gate as a circuit");
    build->add_option("--name", o.name, "swap|root-swap|sum|gxor|cinc|toffoli|p-toffoli|c2inc|p-ck-x|cu|ck-u")
        ->required();
    build->add_option("--d", o.d, "radix")->check(CLI::Range(2, 64));
    build->add_option("--params", o.params, "comma-separated key=value: m, m2, i, j, minus, k, levels=a:b:c");
    build->add_option("--in", o.in, "one-qudit matrix JSON for cu and ck-u");
    build->add_option("--out", o.out, "circuit JSON output");

    auto* count = app.add_subcommand("count", "evaluate a gate-count model");
    count->add_option("--model", o.model, "model")
        ->check(CLI::IsMember({"qsd", "spectral", "cinc", "table2", "ququart", "qubit-l1", "qubit-l2",
                               "qubit-l2-optimal"}));
    add_dn(count);
    count->add_option("--out", o.out, "output path");

    auto* compare = app.add_subcommand("compare", "QSD against spectral counts");
    compare->add_option("--d-range", o.d_range, "radix range LO..HI");
    compare->add_option("--n-range", o.n_range, "qudit range LO..HI");
    compare->add_option("--format", o.format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    compare->add_option("--out", o.out, "output path");

    auto* bench = app.add_subcommand("bench", "time synthesis of seeded random unitaries");
    bench->add_option("--d-range", o.d_range, "radix range LO..HI");
    bench->add_option("--n-range", o.n_range, "qudit range LO..HI");
    bench->add_option("--seed", o.seed, "seed");
    bench->add_option("--out", o.out, "CSV output");
    bench->add_flag("--no-timestamp", o.no_timestamp, "omit wall-clock timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (*synth) return run_synth(o);
        if (*verify) return run_verify(o);
        if (*simulate) return run_simulate(o);
        if (*build) return run_build_gate(o);
        if (*count) return run_count(o);
        if (*compare) return run_compare(o);
        if (*bench) return run_bench(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return kExitFailure;
}
