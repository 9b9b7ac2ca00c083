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

#include "weakmeas/instrument.hpp"

#include <cmath>

namespace weakmeas {

namespace {

bool min_eigenvalue_at_least(const ComplexMatrix& h, double floor) {
    return hermitian_eig(h).eigenvalues.minCoeff() >= floor;
}

bool is_projector(const ComplexMatrix& p) {
    return (p * p - p).norm() <= kIdentityTol && is_hermitian(p, 1e-10);
}

}  // namespace

std::string to_string(InstrumentClass c) {
    switch (c) {
        case InstrumentClass::Projective: return "Projective";
        case InstrumentClass::Positive: return "Positive";
        case InstrumentClass::General: return "General";
    }
    return "?";
}

Instrument validate(const ComplexMatrix& m1, const ComplexMatrix& m2) {
    if (m1.rows() != m1.cols() || m2.rows() != m2.cols() || m1.rows() != m2.rows())
        throw ShapeMismatch("validate: operators must be square with equal dims");
    const Eigen::Index d = m1.rows();
    const ComplexMatrix eye = identity(d);

    Instrument out;
    out.dim = d;
    out.m1 = m1;
    out.m2 = m2;
    out.completeness_residual =
        (m1.adjoint() * m1 + m2.adjoint() * m2 - eye).norm();
    if (out.completeness_residual > kIdentityTol * std::max(1.0, std::sqrt((double)d)))
        throw CompletenessViolation(
            "validate: M1^dag M1 + M2^dag M2 != I, residual " +
                std::to_string(out.completeness_residual),
            out.completeness_residual);

    if (is_projector(m1) && is_projector(m2) && (m1 * m2).norm() <= kIdentityTol) {
        out.cls = InstrumentClass::Projective;
        out.v1 = out.v2 = eye;
        out.p1pos = m1;
        out.p2pos = m2;
        return out;
    }

    if (is_hermitian(m1) && is_hermitian(m2) &&
        min_eigenvalue_at_least(m1, -1e-10) && min_eigenvalue_at_least(m2, -1e-10)) {
        // A positive complete pair forces m2 = (I - m1^2)^{1/2}; a pair that
        // fails this numerically is handled as General.
        const ComplexMatrix expected = sqrt_psd((eye - m1 * m1).eval());
        if ((m2 - expected).norm() <= 1e-8) {
            out.cls = InstrumentClass::Positive;
            out.v1 = out.v2 = eye;
            out.p1pos = m1;
            out.p2pos = m2;
            return out;
        }
    }

    out.cls = InstrumentClass::General;
    PolarFactors f1 = polar_decompose(m1);
    PolarFactors f2 = polar_decompose(m2);
    out.v1 = std::move(f1.unitary);
    out.p1pos = std::move(f1.positive);
    out.v2 = std::move(f2.unitary);
    out.p2pos = std::move(f2.positive);
    return out;
}

MultiInstrument validate_multi(const std::vector<ComplexMatrix>& operators) {
    if (operators.size() < 2)
        throw ShapeMismatch("validate_multi: need at least 2 outcomes");
    const Eigen::Index d = operators.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& m : operators) {
        if (m.rows() != d || m.cols() != d)
            throw ShapeMismatch("validate_multi: inconsistent operator dims");
        sum += m.adjoint() * m;
    }
    const double residual = (sum - identity(d)).norm();
    if (residual > kIdentityTol * std::max(1.0, std::sqrt((double)d)))
        throw CompletenessViolation("validate_multi: completeness residual " +
                                        std::to_string(residual),
                                    residual);
    return MultiInstrument{d, operators};
}

BinaryReduction binary_reduce(const MultiInstrument& multi) {
    const Eigen::Index d = multi.dim;
    const std::size_t n = multi.operators.size();
    const ComplexMatrix eye = identity(d);

    BinaryReduction red;
    red.dim = d;
    red.n_outcomes = n;

    if (n == 2) {
        red.nodes.push_back(
            {validate(multi.operators[0], multi.operators[1]), eye});
        red.final_unitary = eye;
        return red;
    }

    // Residual operators for the outcomes not yet split off; updated with a
    // pseudoinverse after each continue branch. `support` projects onto the
    // subspace the walked state can still occupy; the residual family is
    // complete on it, not on the full space.
    std::vector<ComplexMatrix> residual(multi.operators.begin(),
                                        multi.operators.end());
    ComplexMatrix support = eye;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const ComplexMatrix& r = residual[k];
        const ComplexMatrix effect = (r.adjoint() * r).eval();
        const ComplexMatrix a = sqrt_psd(effect);
        // B extends with the identity outside `support` (effect <= support),
        // which keeps the node pair complete on the full space without
        // touching the walked subspace.
        const ComplexMatrix b = sqrt_psd((eye - effect).eval());
        ReductionNode node;
        node.instr = validate(a, b);
        node.stop_unitary = polar_decompose(r).unitary;
        red.nodes.push_back(std::move(node));

        const ComplexMatrix bpinv = pinv_psd(b);
        // New support: range of B inside the old support.
        support = (b * bpinv - (eye - support)).eval();
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        for (std::size_t j = k + 1; j < n; ++j) {
            residual[j] = (residual[j] * bpinv).eval();
            sum += residual[j].adjoint() * residual[j];
        }
        const double res = (sum - support).norm();
        if (res > 1e-8)
            throw SingularResidual(
                "binary_reduce: residual family incomplete on support, residual " +
                std::to_string(res));
    }

    // Last residual is an isometry on its support; complete it to a unitary.
    red.final_unitary = polar_decompose(residual[n - 1]).unitary;
    return red;
}

ComplexMatrix branch_operator(const BinaryReduction& red, std::size_t outcome) {
    if (outcome >= red.n_outcomes)
        throw ShapeMismatch("branch_operator: outcome out of range");
    ComplexMatrix acc = identity(red.dim);
    for (std::size_t k = 0; k < red.nodes.size(); ++k) {
        if (k == outcome) {
            return (red.nodes[k].stop_unitary * red.nodes[k].instr.m1 * acc).eval();
        }
        acc = (red.nodes[k].instr.m2 * acc).eval();
    }
    return (red.final_unitary * acc).eval();
}

WeaknessReport weakness(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("weakness: matrix not square");
    const Complex q = m.trace() / static_cast<double>(m.rows());
    if (std::abs(q) < 1e-12)
        return {q, std::numeric_limits<double>::infinity()};
    return {q, spectral_norm((m / q - identity(m.rows())).eval())};
}

}  // namespace weakmeas
