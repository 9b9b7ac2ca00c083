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

#include <utility>

#include "weakmeas/instrument.hpp"
#include "weakmeas/matcore.hpp"

namespace weakmeas {

/// Proportionality constant of the curve composition law,
/// (cosh(x+y) / (2 cosh(x) cosh(y)))^{1/2}, evaluated in log space so
/// large arguments do not overflow.
double compose_constant(double x, double y);

/// Precomputed decomposition of a two-outcome instrument that evaluates
/// the interpolating operators M(x,y), A(x), B(x), U(x) and V(x).
///
/// Projective and positive instruments are evaluated spectrally in the
/// shared eigenbasis of the commuting pair: eigenvalue pairs (a_i, b_i)
/// with a_i^2 + b_i^2 = 1. General instruments apply the same machinery to
/// the positive polar parts and dress the result with the unitary
/// interpolation V(x).
class OperatorCurve {
  public:
    static constexpr double kDefaultClamp = 20.0;

    explicit OperatorCurve(Instrument instr, double x_clamp = kDefaultClamp);

    const Instrument& instrument() const { return instr_; }
    double x_clamp() const { return x_clamp_; }
    Eigen::Index dim() const { return instr_.dim; }
    InstrumentClass cls() const { return instr_.cls; }
    const ComplexMatrix& basis() const { return basis_; }
    const RealVector& a_eigs() const { return a_; }
    const RealVector& b_eigs() const { return b_; }

    /// P(x) = sqrt((1-tanh x)/2) P1 + sqrt((1+tanh x)/2) P2. Projective only.
    ComplexMatrix proj_curve(double x) const;

    /// A(x) = sqrt(1-tanh x) M1 (I + tanh x (M2^2 - M1^2))^{-1/2} and the
    /// matching B(x); positive part for General instruments.
    std::pair<ComplexMatrix, ComplexMatrix> ab_pair(double x) const;

    /// [[A(x), B(x)], [B(x), -A(x)]] on the doubled space; Hermitian,
    /// unitary, its own inverse. Positive class only.
    ComplexMatrix block_unitary(double x) const;

    /// The weak measurement operator M(x,y); V(x+y) . M_p(x,y) . V(x)^dag
    /// for General instruments.
    ComplexMatrix weak_op(double x, double y) const;

    /// M(0,x): the effective operator giving the state at position x.
    ComplexMatrix effective_op(double x) const;

    /// V(x) = exp(tanh(|x|) K) with K the log of V2 (x > 0) or V1 (x < 0);
    /// V(0) = I. General class only.
    ComplexMatrix unitary_interp(double x) const;

    /// Scalar spectral components of weak_op before unitary dressing.
    RealVector weak_scalars(double x, double y) const;

  private:
    void check_clamp(double x) const;
    /// (A_i(x), B_i(x)) for eigenvalue pair i.
    std::pair<double, double> ab_scalars(Eigen::Index i, double x) const;
    ComplexMatrix assemble(const RealVector& diag) const;

    Instrument instr_;
    double x_clamp_;
    ComplexMatrix basis_;   // eigenvectors of m1 (or of the positive part)
    RealVector a_, b_;      // a_i^2 + b_i^2 = 1
    ComplexMatrix k1_, k2_; // skew-Hermitian logs of v1, v2 (General only)
};

}  // namespace weakmeas
