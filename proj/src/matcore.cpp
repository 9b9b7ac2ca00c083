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

#include "weakmeas/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace weakmeas {

namespace {

// Rotate each column so its largest-magnitude entry is real-positive.
void fix_phases(ComplexMatrix& q) {
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < q.rows(); ++r) {
            const double a = std::abs(q(r, c));
            if (a > best) {
                best = a;
                imax = r;
            }
        }
        if (best > 0.0) {
            const Complex phase = q(imax, c) / best;
            q.col(c) *= std::conj(phase);
        }
    }
}

}  // namespace

double frobenius(const ComplexMatrix& m) { return m.norm(); }

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return hermiticity_defect(m) <= tol * std::max(1.0, m.norm());
}

HermitianEig hermitian_eig(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw ShapeMismatch("hermitian_eig: matrix not square");
    if (!is_hermitian(h))
        throw NotHermitian("hermitian_eig: input not Hermitian (defect " +
                           std::to_string(hermiticity_defect(h)) + ")");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        ((h + h.adjoint()) / 2.0).eval());
    HermitianEig out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    fix_phases(out.eigenvectors);
    return out;
}

ComplexMatrix func_of_hermitian(const ComplexMatrix& h,
                                const std::function<double(double)>& f) {
    const HermitianEig eig = hermitian_eig(h);
    RealVector mapped(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < mapped.size(); ++i)
        mapped(i) = f(eig.eigenvalues(i));
    return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix sqrt_psd(const ComplexMatrix& h) {
    return func_of_hermitian(h, [](double x) {
        if (x < -1e-12)
            throw DomainError("sqrt_psd: negative eigenvalue " + std::to_string(x), x);
        return x > 0.0 ? std::sqrt(x) : 0.0;
    });
}

ComplexMatrix inv_sqrt(const ComplexMatrix& h) {
    return func_of_hermitian(h, [](double x) {
        if (x <= 1e-12)
            throw DomainError("inv_sqrt: eigenvalue " + std::to_string(x) +
                                  " not strictly positive",
                              x);
        return 1.0 / std::sqrt(x);
    });
}

PolarFactors polar_decompose(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("polar_decompose: matrix not square");
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix& u = svd.matrixU();
    const ComplexMatrix& w = svd.matrixV();
    PolarFactors out;
    out.unitary = u * w.adjoint();
    out.positive = w * svd.singularValues().asDiagonal() * w.adjoint();
    return out;
}

ComplexMatrix unitary_log(const ComplexMatrix& w) {
    const Eigen::Index d = w.rows();
    if (w.cols() != d) throw ShapeMismatch("unitary_log: matrix not square");
    const double udefect = (w.adjoint() * w - identity(d)).norm();
    if (udefect > kIdentityTol * std::max(1.0, w.norm()))
        throw Error("unitary_log: input not unitary (defect " +
                    std::to_string(udefect) + ")");
    // A unitary is normal, so its Schur form is diagonal to rounding error.
    Eigen::ComplexSchur<ComplexMatrix> schur(w);
    const ComplexMatrix& t = schur.matrixT();
    const ComplexMatrix& q = schur.matrixU();
    ComplexVector phases(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const Complex lambda = t(i, i);
        if (std::abs(lambda + 1.0) < 1e-8)
            throw BranchAmbiguity("unitary_log: eigenvalue within 1e-8 of -1");
        phases(i) = Complex(0.0, std::arg(lambda));
    }
    ComplexMatrix k = q * phases.asDiagonal() * q.adjoint();
    // Skew-Hermitian up to the Schur solve's rounding; symmetrize.
    return ((k - k.adjoint()) / 2.0).eval();
}

ComplexMatrix exp_skew(const ComplexMatrix& k) {
    const ComplexMatrix h = (Complex(0.0, -1.0) * k).eval();
    const HermitianEig eig = hermitian_eig(h);
    ComplexVector ph(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < ph.size(); ++i)
        ph(i) = std::exp(Complex(0.0, eig.eigenvalues(i)));
    return eig.eigenvectors * ph.asDiagonal() * eig.eigenvectors.adjoint();
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw ShapeMismatch("trace_distance: dimension mismatch");
    const HermitianEig eig = hermitian_eig((rho - sigma).eval());
    return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

double spectral_norm(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

ComplexMatrix pinv_psd(const ComplexMatrix& h, double cutoff) {
    const HermitianEig eig = hermitian_eig(h);
    const double smax = eig.eigenvalues.cwiseAbs().maxCoeff();
    RealVector inv(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < inv.size(); ++i) {
        const double s = eig.eigenvalues(i);
        inv(i) = (s > cutoff * smax) ? 1.0 / s : 0.0;
    }
    return eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace weakmeas
