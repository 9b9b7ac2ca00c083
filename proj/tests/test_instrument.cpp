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

#include <doctest.h>

#include <cmath>

#include "weakmeas/instrument.hpp"
#include "weakmeas/sampler.hpp"
#include "weakmeas/walk.hpp"

using namespace weakmeas;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("validate classifies projective pairs") {
    const Instrument instr = validate(diag2(1.0, 0.0), diag2(0.0, 1.0));
    CHECK(instr.cls == InstrumentClass::Projective);
    CHECK(instr.dim == 2);
    CHECK(instr.completeness_residual < 1e-14);
    CHECK((instr.v1 - identity(2)).norm() < 1e-14);
}

TEST_CASE("validate classifies commuting positive pairs") {
    const Instrument instr =
        validate(diag2(std::sqrt(0.3), std::sqrt(0.6)),
                 diag2(std::sqrt(0.7), std::sqrt(0.4)));
    CHECK(instr.cls == InstrumentClass::Positive);
    CHECK((instr.p1pos - instr.m1).norm() < 1e-12);
}

TEST_CASE("validate classifies general pairs through polar factors") {
    SplitMix64 rng(3);
    const Instrument base = sampler::random_positive(3, rng);
    const ComplexMatrix w = sampler::random_unitary(3, rng);
    const Instrument instr = validate((w * base.m1).eval(), base.m2);
    CHECK(instr.cls == InstrumentClass::General);
    CHECK((instr.v1 * instr.p1pos - instr.m1).norm() < 1e-10);
    CHECK((instr.v1.adjoint() * instr.v1 - identity(3)).norm() < 1e-10);
    CHECK((instr.p1pos - base.m1).norm() < 1e-9);
}

TEST_CASE("validate rejects incomplete pairs") {
    CHECK_THROWS_AS(validate(diag2(0.9, 0.0), diag2(0.0, 0.9)),
                    CompletenessViolation);
    CHECK_THROWS_AS(validate(identity(2), identity(3)), ShapeMismatch);
}

TEST_CASE("validate_multi checks the completeness sum") {
    const double r = 1.0 / std::sqrt(3.0);
    std::vector<ComplexMatrix> ops = {r * identity(2), r * identity(2),
                                      r * identity(2)};
    const MultiInstrument multi = validate_multi(ops);
    CHECK(multi.dim == 2);
    CHECK(multi.operators.size() == 3);

    ops[2] *= 0.5;
    CHECK_THROWS_AS(validate_multi(ops), CompletenessViolation);
}

TEST_CASE("weakness examples") {
    const auto near_id = weakness((0.9 * identity(2)).eval());
    CHECK(near_id.deviation == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(near_id.scalar.real() == doctest::Approx(0.9));

    // Traceless operator: no scalar part at all.
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK(weakness(x).is_infinite());

    const auto shifted = weakness(diag2(1.0, 0.8));
    CHECK(shifted.scalar.real() == doctest::Approx(0.9));
    CHECK(shifted.deviation == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("binary_reduce on a two-outcome instrument is the instrument") {
    SplitMix64 rng(5);
    MultiInstrument multi;
    const Instrument instr = sampler::random_positive(3, rng);
    multi.dim = 3;
    multi.operators = {instr.m1, instr.m2};
    const BinaryReduction red = binary_reduce(multi);
    CHECK(red.n_outcomes == 2);
    CHECK(red.nodes.size() == 1);
    CHECK((red.nodes[0].instr.m1 - instr.m1).norm() < 1e-12);
    CHECK((red.nodes[0].stop_unitary - identity(3)).norm() < 1e-12);
    CHECK((red.final_unitary - identity(3)).norm() < 1e-12);
}

TEST_CASE("binary_reduce of a qutrit projective measurement") {
    std::vector<ComplexMatrix> ops;
    for (int j = 0; j < 3; ++j) {
        ComplexMatrix p = ComplexMatrix::Zero(3, 3);
        p(j, j) = 1.0;
        ops.push_back(p);
    }
    const BinaryReduction red = binary_reduce(validate_multi(ops));
    CHECK(red.n_outcomes == 3);
    CHECK(red.nodes.size() == 2);
    // First node: A = |0><0|, B = |1><1| + |2><2|, both positive.
    CHECK((red.nodes[0].instr.m1 - ops[0]).norm() < 1e-10);
    CHECK((red.nodes[0].instr.m2 - (ops[1] + ops[2]).eval()).norm() < 1e-10);
    for (std::size_t j = 0; j < 3; ++j) {
        const ComplexMatrix branch = branch_operator(red, j);
        // On the subspace the branch handles, it acts as the target operator.
        CHECK(((branch - ops[j]) * ops[j]).norm() < 1e-9);
    }
}

TEST_CASE("binary_reduce branch probabilities match the direct Born rule") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const std::size_t n = 3 + trial % 2;
        const MultiInstrument multi = sampler::random_multi(dim, n, rng);
        const BinaryReduction red = binary_reduce(multi);
        CHECK(red.nodes.size() == n - 1);
        const QuantumState rho = sampler::random_state(dim, rng);

        for (std::size_t j = 0; j < n; ++j) {
            const ComplexMatrix& mj = multi.operators[j];
            const double direct =
                (mj * rho.rho * mj.adjoint()).trace().real();
            // Walk the chain: stop at node j (or fall through for j = n-1).
            ComplexMatrix acc = rho.rho;
            double prob = 1.0;
            for (std::size_t k = 0; k < red.nodes.size(); ++k) {
                const Instrument& node = red.nodes[k].instr;
                if (k == j) {
                    const ComplexMatrix post =
                        (node.m1 * acc * node.m1.adjoint()).eval();
                    prob = post.trace().real();
                    acc = post;
                    break;
                }
                acc = (node.m2 * acc * node.m2.adjoint()).eval();
                prob = acc.trace().real();
            }
            CHECK(prob == doctest::Approx(direct).epsilon(1e-8));
        }
    }
}

TEST_CASE("binary_reduce node pairs commute and are complete") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const MultiInstrument multi = sampler::random_multi(3, 4, rng);
        const BinaryReduction red = binary_reduce(multi);
        for (const auto& node : red.nodes) {
            const Instrument& ni = node.instr;
            CHECK(ni.cls != InstrumentClass::General);
            CHECK((ni.m1 * ni.m2 - ni.m2 * ni.m1).norm() < 1e-9);
            CHECK((ni.m1 * ni.m1 + ni.m2 * ni.m2 - identity(3)).norm() < 1e-9);
            CHECK((node.stop_unitary.adjoint() * node.stop_unitary -
                   identity(3)).norm() < 1e-9);
        }
    }
}
