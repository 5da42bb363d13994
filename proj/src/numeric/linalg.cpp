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

#include "numeric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "common/error.hpp"

namespace qs::num {

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), ErrorCode::Shape,
            "multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                " vs " + std::to_string(b.rows()) + ")");
    return a * b;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols(); }

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        const Complex z = a.data()[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double unitarity_defect(const ComplexMatrix& a) {
    if (!is_square(a)) return std::numeric_limits<double>::infinity();
    const ComplexMatrix g = a.adjoint() * a;
    return (g - ComplexMatrix::Identity(a.rows(), a.cols())).norm();
}

bool assert_unitary(const ComplexMatrix& a, double tol) {
    return is_square(a) && all_finite(a) && unitarity_defect(a) <= tol;
}

void require_unitary(const ComplexMatrix& a, const char* what) {
    require(is_square(a), ErrorCode::Shape, std::string(what) + ": matrix is not square");
    require(all_finite(a), ErrorCode::Parse, std::string(what) + ": non-finite entry");
    const double tol = kUnitarityTol * static_cast<double>(std::max<Eigen::Index>(1, a.rows()));
    const double defect = unitarity_defect(a);
    require(defect <= tol, ErrorCode::NotUnitary,
            std::string(what) + ": input is not unitary (defect " + std::to_string(defect) + ")");
}

ComplexMatrix level_swap(int d, int i, int j) {
    ComplexMatrix x = ComplexMatrix::Identity(d, d);
    x(i, i) = 0.0;
    x(j, j) = 0.0;
    x(i, j) = 1.0;
    x(j, i) = 1.0;
    return x;
}

double wrap_phase(double phi) {
    double w = std::remainder(phi, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

EigResult eig_unitary(const ComplexMatrix& u) {
    require_unitary(u, "eig_unitary");
    const Eigen::Index n = u.rows();
    Eigen::ComplexSchur<ComplexMatrix> schur(u, true);
    require(schur.info() == Eigen::Success, ErrorCode::Internal, "eig_unitary: Schur iteration failed");
    const ComplexMatrix& t = schur.matrixT();
    const ComplexMatrix& z = schur.matrixU();

    std::vector<double> phase(n);
    ComplexMatrix vec = z;
    for (Eigen::Index k = 0; k < n; ++k) {
        double ph = std::arg(t(k, k));
        if (ph <= -kPi + 1e-15) ph = kPi;
        phase[k] = ph;
        // Normalize the column so its leading dominant entry is real and positive.
        double big = vec.col(k).cwiseAbs().maxCoeff();
        Eigen::Index lead = 0;
        while (std::abs(vec(lead, k)) < big - 1e-12) ++lead;
        const Complex z0 = vec(lead, k);
        vec.col(k) *= std::conj(z0) / std::abs(z0);
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    constexpr double tie = 1e-12;
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (std::abs(phase[a] - phase[b]) > tie) return phase[a] < phase[b];
        for (Eigen::Index r = 0; r < n; ++r) {
            const double ma = std::abs(vec(r, a));
            const double mb = std::abs(vec(r, b));
            if (std::abs(ma - mb) > tie) return ma > mb;
        }
        return false;
    });

    EigResult out;
    out.phases.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.phases[k] = phase[order[k]];
        out.vectors.col(k) = vec.col(order[k]);
    }
    return out;
}

ComplexMatrix recompose(const EigResult& e) {
    const Eigen::Index n = e.vectors.rows();
    ComplexVector lam(n);
    for (Eigen::Index k = 0; k < n; ++k) lam(k) = std::polar(1.0, e.phases[k]);
    return e.vectors * lam.asDiagonal() * e.vectors.adjoint();
}

ComplexMatrix polar_unitary(const ComplexMatrix& a) {
    Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix cs_matrix(const std::vector<double>& theta, int p, int q) {
    ComplexMatrix cs = ComplexMatrix::Identity(p + q, p + q);
    for (int i = 0; i < static_cast<int>(theta.size()); ++i) {
        const double c = std::cos(theta[i]);
        const double s = std::sin(theta[i]);
        cs(i, i) = c;
        cs(i, p + i) = -s;
        cs(p + i, i) = s;
        cs(p + i, p + i) = c;
    }
    return cs;
}

ComplexMatrix recompose(const CSDResult& r) {
    const int n = r.p + r.q;
    ComplexMatrix left = ComplexMatrix::Zero(n, n);
    ComplexMatrix right = ComplexMatrix::Zero(n, n);
    left.topLeftCorner(r.p, r.p) = r.u1;
    left.bottomRightCorner(r.q, r.q) = r.u2;
    right.topLeftCorner(r.p, r.p) = r.v1;
    right.bottomRightCorner(r.q, r.q) = r.v2;
    return left * cs_matrix(r.theta, r.p, r.q) * right.adjoint();
}

namespace {

double snap_angle(double t) {
    if (t < kAngleSnap) return 0.0;
    if (kPi / 2 - t < kAngleSnap) return kPi / 2;
    return t;
}

// CSD for p <= q. Pairs coordinate i with p + i.
CSDResult csd_narrow(const ComplexMatrix& u, int p, int q) {
    const int n = p + q;
    CSDResult r;
    r.p = p;
    r.q = q;
    if (p == 0) {
        r.u1.resize(0, 0);
        r.v1.resize(0, 0);
        r.u2 = u;
        r.v2 = ComplexMatrix::Identity(q, q);
        return r;
    }

    const ComplexMatrix u11 = u.topLeftCorner(p, p);
    const ComplexMatrix u12 = u.topRightCorner(p, q);
    const ComplexMatrix u21 = u.bottomLeftCorner(q, p);
    const ComplexMatrix u22 = u.bottomRightCorner(q, q);

    Eigen::BDCSVD<ComplexMatrix> svd(u11, Eigen::ComputeFullU | Eigen::ComputeFullV);
    r.u1 = svd.matrixU();
    r.v1 = svd.matrixV();
    RealVector c = svd.singularValues().cwiseMin(1.0);

    // Columns of u21 * v1 are orthogonal with norms sin(theta_i). Factor them
    // largest-first so the unit columns of Q are well conditioned.
    const ComplexMatrix a = u21 * r.v1;
    ComplexMatrix arev(q, p);
    for (int i = 0; i < p; ++i) arev.col(i) = a.col(p - 1 - i);
    Eigen::HouseholderQR<ComplexMatrix> qr(arev);
    ComplexMatrix qmat = qr.householderQ() * ComplexMatrix::Identity(q, q);
    const ComplexMatrix& rmat = qr.matrixQR();

    r.u2.resize(q, q);
    std::vector<double> s(p);
    for (int t = 0; t < p; ++t) {
        const Complex rt = rmat(t, t);
        const double mag = std::abs(rt);
        if (mag > 0.0) qmat.col(t) *= rt / mag;
        s[p - 1 - t] = mag;
    }
    for (int i = 0; i < p; ++i) r.u2.col(i) = qmat.col(p - 1 - i);
    for (int i = p; i < q; ++i) r.u2.col(i) = qmat.col(i);

    r.theta.resize(p);
    for (int i = 0; i < p; ++i) r.theta[i] = snap_angle(std::atan2(s[i], c(i)));

    ComplexMatrix x(n, q);
    x.topRows(p) = r.u1.adjoint() * u12;
    x.bottomRows(q) = r.u2.adjoint() * u22;
    ComplexMatrix k = ComplexMatrix::Zero(n, q);
    for (int i = 0; i < p; ++i) {
        k(i, i) = -std::sin(r.theta[i]);
        k(p + i, i) = std::cos(r.theta[i]);
    }
    for (int i = p; i < q; ++i) k(p + i, i) = 1.0;
    r.v2 = polar_unitary(k.adjoint() * x).adjoint();
    return r;
}

}  // namespace

CSDResult csd(const ComplexMatrix& u, int p, int q) {
    require(p >= 0 && q >= 0 && u.rows() == p + q, ErrorCode::Shape,
            "csd: partition does not match matrix size");
    require_unitary(u, "csd");
    if (p <= q) return csd_narrow(u, p, q);

    // Swap the block order, decompose with the narrow partition, then map back.
    ComplexMatrix w(p + q, p + q);
    w.topLeftCorner(q, q) = u.bottomRightCorner(q, q);
    w.topRightCorner(q, p) = u.bottomLeftCorner(q, p);
    w.bottomLeftCorner(p, q) = u.topRightCorner(p, q);
    w.bottomRightCorner(p, p) = u.topLeftCorner(p, p);
    CSDResult s = csd_narrow(w, q, p);

    CSDResult r;
    r.p = p;
    r.q = q;
    r.theta = s.theta;
    r.u1 = s.u2;
    r.u2 = -s.u1;
    r.v1 = s.v2;
    r.v2 = -s.v1;
    return r;
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
    require(dim >= 1, ErrorCode::Argument, "random_unitary: dimension must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix qmat = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix& rmat = qr.matrixQR();
    for (int k = 0; k < dim; ++k) {
        const Complex rk = rmat(k, k);
        if (std::abs(rk) > 0.0) qmat.col(k) *= rk / std::abs(rk);
    }
    return qmat;
}

}  // namespace qs::num
