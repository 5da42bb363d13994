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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qs::num {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// Default tolerances, scaled by the matrix dimension at the call site.
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-8;
// Angles closer than this to 0 or pi/2 are snapped in the CSD.
inline constexpr double kAngleSnap = 1e-12;

struct CSDResult {
    ComplexMatrix u1, u2;  // left blocks, p x p and q x q
    ComplexMatrix v1, v2;  // right blocks, p x p and q x q
    std::vector<double> theta;  // min(p, q) angles in [0, pi/2], ascending
    int p = 0;
    int q = 0;
};

struct EigResult {
    std::vector<double> phases;  // eigenphases in (-pi, pi], ascending
    ComplexMatrix vectors;       // unitary, eigenvectors as columns
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_square(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);
double unitarity_defect(const ComplexMatrix& a);
bool assert_unitary(const ComplexMatrix& a, double tol);
// Throws NotUnitary when the defect exceeds kUnitarityTol * dim.
void require_unitary(const ComplexMatrix& a, const char* what);

// X^(ij) embedded in dimension d.
ComplexMatrix level_swap(int d, int i, int j);

EigResult eig_unitary(const ComplexMatrix& u);
ComplexMatrix recompose(const EigResult& e);

// Cosine-sine decomposition u = diag(u1, u2) * CS(theta) * diag(v1, v2)^dagger.
CSDResult csd(const ComplexMatrix& u, int p, int q);
ComplexMatrix cs_matrix(const std::vector<double>& theta, int p, int q);
ComplexMatrix recompose(const CSDResult& r);

// Closest unitary in Frobenius norm.
ComplexMatrix polar_unitary(const ComplexMatrix& a);

// Haar-distributed unitary from a seeded complex Gaussian matrix.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

// Wraps an angle into (-pi, pi].
double wrap_phase(double phi);

}  // namespace qs::num
