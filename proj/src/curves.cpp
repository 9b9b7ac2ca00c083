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

#include "weakmeas/curves.hpp"

#include <cmath>

namespace weakmeas {

namespace {

// log(cosh(z)), overflow-safe.
double log_cosh(double z) {
    const double a = std::abs(z);
    return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

// (1 - tanh x)/2 and (1 + tanh x)/2 without cancellation at large |x|
// (tanh(20) rounds to 1.0 in double).
double half_minus(double x) { return 1.0 / (1.0 + std::exp(2.0 * x)); }
double half_plus(double x) { return 1.0 / (1.0 + std::exp(-2.0 * x)); }

}  // namespace

double compose_constant(double x, double y) {
    return std::exp(0.5 * (log_cosh(x + y) - log_cosh(x) - log_cosh(y) - M_LN2));
}

OperatorCurve::OperatorCurve(Instrument instr, double x_clamp)
    : instr_(std::move(instr)), x_clamp_(x_clamp) {
    const ComplexMatrix& positive_part =
        (instr_.cls == InstrumentClass::General) ? instr_.p1pos : instr_.m1;
    const HermitianEig eig = hermitian_eig(positive_part);
    basis_ = eig.eigenvectors;
    a_ = eig.eigenvalues;
    b_.resize(a_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
        // a_i in [0, 1] up to rounding; b_i = sqrt(1 - a_i^2). Projector
        // eigenvalues are snapped to {0, 1} so the P-curve identities hold
        // to rounding error.
        if (instr_.cls == InstrumentClass::Projective)
            a_(i) = a_(i) > 0.5 ? 1.0 : 0.0;
        else
            a_(i) = std::min(1.0, std::max(0.0, a_(i)));
        b_(i) = std::sqrt(std::max(0.0, 1.0 - a_(i) * a_(i)));
    }
    if (instr_.cls == InstrumentClass::General) {
        k1_ = unitary_log(instr_.v1);
        k2_ = unitary_log(instr_.v2);
    }
}

void OperatorCurve::check_clamp(double x) const {
    if (std::abs(x) > x_clamp_ + 1e-12)
        throw ClampExceeded("curve evaluation at |x| = " + std::to_string(std::abs(x)) +
                            " beyond clamp " + std::to_string(x_clamp_));
}

std::pair<double, double> OperatorCurve::ab_scalars(Eigen::Index i, double x) const {
    const double a = a_(i);
    const double b = b_(i);
    // 1 + tanh(x)(b^2 - a^2) = (1 - tanh x) a^2 + (1 + tanh x) b^2.
    const double um = 2.0 * half_minus(x);
    const double up = 2.0 * half_plus(x);
    const double den = std::sqrt(um * a * a + up * b * b);
    return {std::sqrt(um) * a / den, std::sqrt(up) * b / den};
}

ComplexMatrix OperatorCurve::assemble(const RealVector& diag) const {
    return basis_ * diag.asDiagonal() * basis_.adjoint();
}

ComplexMatrix OperatorCurve::proj_curve(double x) const {
    if (instr_.cls != InstrumentClass::Projective)
        throw WrongClass("proj_curve: instrument is not projective");
    check_clamp(x);
    const double cm = std::sqrt(half_minus(x));
    const double cp = std::sqrt(half_plus(x));
    RealVector diag(a_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i)
        diag(i) = cm * a_(i) + cp * b_(i);  // a_i, b_i in {0, 1}
    return assemble(diag);
}

std::pair<ComplexMatrix, ComplexMatrix> OperatorCurve::ab_pair(double x) const {
    check_clamp(x);
    RealVector da(a_.size()), db(a_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
        const auto [ai, bi] = ab_scalars(i, x);
        da(i) = ai;
        db(i) = bi;
    }
    return {assemble(da), assemble(db)};
}

ComplexMatrix OperatorCurve::block_unitary(double x) const {
    if (instr_.cls != InstrumentClass::Positive)
        throw WrongClass("block_unitary: instrument is not positive");
    const auto [a, b] = ab_pair(x);
    const Eigen::Index d = dim();
    ComplexMatrix u(2 * d, 2 * d);
    u.topLeftCorner(d, d) = a;
    u.topRightCorner(d, d) = b;
    u.bottomLeftCorner(d, d) = b;
    u.bottomRightCorner(d, d) = -a;
    return u;
}

RealVector OperatorCurve::weak_scalars(double x, double y) const {
    const double cm = std::sqrt(half_minus(y));
    const double cp = std::sqrt(half_plus(y));
    RealVector diag(a_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
        const auto [a0, b0] = ab_scalars(i, x);
        const auto [a1, b1] = ab_scalars(i, x + y);
        diag(i) = cm * a0 * a1 + cp * b0 * b1;
    }
    return diag;
}

ComplexMatrix OperatorCurve::weak_op(double x, double y) const {
    check_clamp(x);
    check_clamp(x + y);
    ComplexMatrix m = assemble(weak_scalars(x, y));
    if (instr_.cls == InstrumentClass::General)
        m = unitary_interp(x + y) * m * unitary_interp(x).adjoint();
    return m;
}

ComplexMatrix OperatorCurve::effective_op(double x) const {
    check_clamp(x);
    const double cm = std::sqrt(half_minus(x));
    const double cp = std::sqrt(half_plus(x));
    RealVector diag(a_.size());
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
        const auto [ai, bi] = ab_scalars(i, x);
        diag(i) = cm * a_(i) * ai + cp * b_(i) * bi;
    }
    ComplexMatrix m = assemble(diag);
    if (instr_.cls == InstrumentClass::General) m = unitary_interp(x) * m;
    return m;
}

ComplexMatrix OperatorCurve::unitary_interp(double x) const {
    if (instr_.cls != InstrumentClass::General)
        throw WrongClass("unitary_interp: instrument is not general");
    if (x == 0.0) return identity(dim());
    const ComplexMatrix& k = (x > 0.0) ? k2_ : k1_;
    return exp_skew((std::tanh(std::abs(x)) * k).eval());
}

}  // namespace weakmeas
