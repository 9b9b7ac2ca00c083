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

#include "weakmeas/ancilla.hpp"

#include <cmath>

namespace weakmeas::ancilla {

namespace {

void require_positive(const OperatorCurve& curve, const char* what) {
    if (curve.cls() != InstrumentClass::Positive)
        throw WrongClass(std::string(what) + ": instrument is not positive");
}

// I (x) P(y) for the ancilla curve P1 = |0><0|, P2 = |1><1|.
ComplexMatrix ancilla_proj_curve(Eigen::Index d, double y) {
    const double cm = std::sqrt((1.0 - std::tanh(y)) / 2.0);
    const double cp = std::sqrt((1.0 + std::tanh(y)) / 2.0);
    ComplexMatrix out = ComplexMatrix::Zero(2 * d, 2 * d);
    out.topLeftCorner(d, d) = cm * identity(d);
    out.bottomRightCorner(d, d) = cp * identity(d);
    return out;
}

}  // namespace

BlockDecomposition split_blocks(const ComplexMatrix& extended) {
    const Eigen::Index d = extended.rows() / 2;
    if (extended.rows() != 2 * d || extended.cols() != 2 * d)
        throw ShapeMismatch("split_blocks: dimension not even");
    return {extended.topLeftCorner(d, d), extended.topRightCorner(d, d),
            extended.bottomLeftCorner(d, d), extended.bottomRightCorner(d, d)};
}

ComplexMatrix join_blocks(const BlockDecomposition& blocks) {
    const Eigen::Index d = blocks.upper_left.rows();
    ComplexMatrix out(2 * d, 2 * d);
    out.topLeftCorner(d, d) = blocks.upper_left;
    out.topRightCorner(d, d) = blocks.upper_right;
    out.bottomLeftCorner(d, d) = blocks.lower_left;
    out.bottomRightCorner(d, d) = blocks.lower_right;
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

ComplexMatrix pauli_z() {
    ComplexMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

ComplexMatrix u_zero(const OperatorCurve& curve) {
    require_positive(curve, "u_zero");
    const Instrument& instr = curve.instrument();
    const Eigen::Index d = curve.dim();
    ComplexMatrix u(2 * d, 2 * d);
    u.topLeftCorner(d, d) = instr.m1;
    u.topRightCorner(d, d) = instr.m2;
    u.bottomLeftCorner(d, d) = instr.m2;
    u.bottomRightCorner(d, d) = -instr.m1;
    return u;
}

BlockDecomposition extended_weak_op(const OperatorCurve& curve, double x, double y) {
    require_positive(curve, "extended_weak_op");
    const ComplexMatrix m =
        curve.block_unitary(x + y) * ancilla_proj_curve(curve.dim(), y) *
        curve.block_unitary(x);
    return split_blocks(m);
}

ComplexMatrix extended_state_expand(const OperatorCurve& curve,
                                    const QuantumState& rho) {
    require_positive(curve, "extended_state_expand");
    const Eigen::Index d = curve.dim();
    ComplexMatrix init = ComplexMatrix::Zero(2 * d, 2 * d);
    init.topLeftCorner(d, d) = rho.rho;
    const ComplexMatrix u0 = u_zero(curve);
    return u0 * init * u0.adjoint();
}

EquivalenceReport oracle_walk_equivalence(const OperatorCurve& curve,
                                          const QuantumState& rho,
                                          const WalkConfig& config) {
    require_positive(curve, "oracle_walk_equivalence");
    config.validate(curve.x_clamp());
    const Eigen::Index d = curve.dim();
    const double eps = config.epsilon;

    // Direct walk state and extended state rho(x) (x) |0><0|.
    QuantumState direct = rho;
    ComplexMatrix ext = ComplexMatrix::Zero(2 * d, 2 * d);
    ext.topLeftCorner(d, d) = rho.rho;

    SplitMix64 rng(mix_seed(config.seed, 0));
    EquivalenceReport report;
    double x = config.x0;
    const std::uint64_t max_steps = config.effective_max_steps();

    while (std::abs(x) < config.threshold - 1e-12 && report.steps < max_steps) {
        const double draw = rng.next_double();

        // (a) ancilla protocol, probability from the extended state.
        const ComplexMatrix mt_plus =
            join_blocks(extended_weak_op(curve, x, eps));
        const ComplexMatrix mt_minus =
            join_blocks(extended_weak_op(curve, x, -eps));
        const double p_plus_ext =
            (mt_plus * ext * mt_plus.adjoint()).trace().real();
        const int dir_ext = (draw < p_plus_ext) ? +1 : -1;
        const ComplexMatrix& mt = (dir_ext > 0) ? mt_plus : mt_minus;
        const double p_ext = (dir_ext > 0) ? p_plus_ext : 1.0 - p_plus_ext;
        if (p_ext < 1e-14)
            throw DegenerateProbability("oracle_walk_equivalence: extended branch");
        ext = (mt * ext * mt.adjoint()) / p_ext;

        // (b) direct walk with the same draw.
        const StepResult direct_step = step(curve, direct, x, eps, draw);
        direct = direct_step.state;

        report.directions_match =
            report.directions_match && (direct_step.direction == dir_ext);
        // The extended state stays of the form rho(x) (x) |0><0|.
        const ComplexMatrix system_part = ext.topLeftCorner(d, d);
        report.max_trace_distance = std::max(
            report.max_trace_distance, trace_distance(system_part, direct.rho));

        x += dir_ext * eps;
        ++report.steps;
    }
    report.outcome = (x >= config.threshold - 1e-12) ? 2 : 1;
    return report;
}

}  // namespace weakmeas::ancilla
