// Copyright 2026 The weakmeas authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <utility>

#include "weakmeas/errors.hpp"

namespace weakmeas {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for identity-style checks; all checks carry the
/// relative guard max(1, ||.||_F).
inline constexpr double kIdentityTol = 1e-10;
/// Gate for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascend; each
/// eigenvector's largest-magnitude component is made real-positive so the
/// factorization is reproducible across runs.
struct HermitianEig {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;  // columns
};

double frobenius(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

ComplexMatrix identity(Eigen::Index dim);

/// max |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const ComplexMatrix& m);

HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Q f(Lambda) Q^dag. `domain_check` (optional) may throw DomainError.
ComplexMatrix func_of_hermitian(const ComplexMatrix& h,
                                const std::function<double(double)>& f);

/// Square root of a positive-semidefinite matrix. Eigenvalues in
/// [-1e-12, 0) are clamped to zero; anything lower throws DomainError.
ComplexMatrix sqrt_psd(const ComplexMatrix& h);

/// H^{-1/2}; all eigenvalues must exceed 1e-12.
ComplexMatrix inv_sqrt(const ComplexMatrix& h);

/// M = V P with V unitary and P = (M^dag M)^{1/2}. On the kernel of P the
/// unitary is completed from the SVD, V = U W^dag.
struct PolarFactors {
    ComplexMatrix unitary;
    ComplexMatrix positive;
};
PolarFactors polar_decompose(const ComplexMatrix& m);

/// Principal-branch skew-Hermitian log of a unitary: exp(K) = W with
/// eigenphases in (-pi, pi]. Throws BranchAmbiguity if an eigenvalue of W
/// lies within 1e-8 of -1.
ComplexMatrix unitary_log(const ComplexMatrix& w);

/// exp(K) for skew-Hermitian K, evaluated through the eigendecomposition
/// of -iK so the result is unitary to rounding error.
ComplexMatrix exp_skew(const ComplexMatrix& k);

/// (1/2) sum |eigenvalues of rho - sigma|.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix; singular values
/// below cutoff * s_max are treated as zero.
ComplexMatrix pinv_psd(const ComplexMatrix& h, double cutoff = 1e-10);

}  // namespace weakmeas
