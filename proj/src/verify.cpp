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

#include "weakmeas/verify.hpp"

#include <cmath>
#include <map>

#include "weakmeas/ancilla.hpp"
#include "weakmeas/curves.hpp"
#include "weakmeas/sampler.hpp"
#include "weakmeas/walk.hpp"

namespace weakmeas {

namespace {

class ResidualTable {
  public:
    void record(const std::string& name, double residual, double tol) {
        auto [it, inserted] = idx_.try_emplace(name, results_.size());
        if (inserted) results_.push_back({name, residual, tol});
        else results_[it->second].residual =
                 std::max(results_[it->second].residual, residual);
    }
    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    std::map<std::string, std::size_t> idx_;
    std::vector<CheckResult> results_;
};

Instrument sample_instrument(Eigen::Index dim, int which, SplitMix64& rng) {
    switch (which % 3) {
        case 0: return sampler::random_projective(dim, rng);
        case 1: return sampler::random_positive(dim, rng);
        default: return sampler::random_general(dim, rng);
    }
}

}  // namespace

std::vector<CheckResult> verify_identities(std::uint64_t seed, int count) {
    ResidualTable table;
    SplitMix64 rng(mix_seed(seed, 0x1de9717));
    const double xs[] = {-3.0, -1.0, -0.25, 0.0, 0.5, 2.0, 3.0};
    const double eps = 0.1;

    for (int i = 0; i < count; ++i) {
        const Eigen::Index dim = 2 + (i % 3);
        const Instrument instr = sample_instrument(dim, i, rng);
        const OperatorCurve curve(instr);
        const ComplexMatrix eye = identity(dim);
        const ComplexMatrix half_eye = eye / std::sqrt(2.0);

        for (double x : xs) {
            // (1) M(x,0) = I/sqrt(2)
            table.record("M(x,0) = I/sqrt(2)",
                         (curve.weak_op(x, 0.0) - half_eye).norm(), 1e-10);
            // (5) completeness on the system space
            const ComplexMatrix mp = curve.weak_op(x, eps);
            const ComplexMatrix mm = curve.weak_op(x, -eps);
            table.record(
                "M^dag(x,e) M(x,e) + M^dag(x,-e) M(x,-e) = I",
                (mp.adjoint() * mp + mm.adjoint() * mm - eye).norm(), 1e-10);

            const auto [a, b] = curve.ab_pair(x);
            table.record("A(x)^2 + B(x)^2 = I", (a * a + b * b - eye).norm(),
                         1e-10);
            table.record("[A(x), B(x)] = 0", (a * b - b * a).norm(), 1e-10);

            if (instr.cls == InstrumentClass::Positive) {
                const ComplexMatrix u = curve.block_unitary(x);
                const ComplexMatrix eye2 = identity(2 * dim);
                table.record("U(x) unitary", (u.adjoint() * u - eye2).norm(),
                             1e-10);
                table.record("U(x)^2 = I", (u * u - eye2).norm(), 1e-10);
            }
            if (instr.cls == InstrumentClass::Projective) {
                const ComplexMatrix p = curve.proj_curve(x);
                const ComplexMatrix pneg = curve.proj_curve(-x);
                table.record("P^2(x) + P^2(-x) = I",
                             (p * p + pneg * pneg - eye).norm(), 1e-10);
                const double sech = 1.0 / std::cosh(x);
                table.record("P(-x) P(x) = sech(x)/2 I",
                             (pneg * p - (sech / 2.0) * eye).norm(), 1e-10);
            }
            if (instr.cls == InstrumentClass::General) {
                const ComplexMatrix v = curve.unitary_interp(x);
                table.record("V(x) unitary",
                             (v.adjoint() * v - eye).norm(), 1e-10);
            }
        }
        // (2), (3): limits of the effective operator.
        table.record("M(0,x) -> M2 as x -> +inf",
                     (curve.effective_op(20.0) - instr.m2).norm(), 1e-7);
        table.record("M(0,x) -> M1 as x -> -inf",
                     (curve.effective_op(-20.0) - instr.m1).norm(), 1e-7);
        table.record("M(0,x) = weak_op(0,x)",
                     (curve.effective_op(1.3) - curve.weak_op(0.0, 1.3)).norm(),
                     1e-10);
    }
    return table.take();
}

std::vector<CheckResult> verify_composition(std::uint64_t seed, int count) {
    ResidualTable table;
    SplitMix64 rng(mix_seed(seed, 0xc09u));
    const double triples[][3] = {
        {0.3, 0.5, -0.2}, {1.0, -0.7, 0.4}, {0.0, 0.1, 0.1}, {-2.0, 1.0, 2.0},
        {0.5, 0.05, -0.05}};

    for (int i = 0; i < count; ++i) {
        const Eigen::Index dim = 2 + (i % 3);
        const Instrument instr = sample_instrument(dim, i, rng);
        const OperatorCurve curve(instr);
        for (const auto& xyz : triples) {
            const double x = xyz[0], y = xyz[1], z = xyz[2];
            const ComplexMatrix lhs = curve.weak_op(x + y, z) * curve.weak_op(x, y);
            const ComplexMatrix rhs = curve.weak_op(x, z + y);
            const double rhs_sq = rhs.squaredNorm();
            const Complex lambda = (rhs.adjoint() * lhs).trace() / rhs_sq;
            table.record("M(x+y,z) M(x,y) proportional to M(x,z+y)",
                         (lhs - lambda * rhs).norm() / rhs.norm(), 1e-9);
            table.record("lambda = compose_constant(y,z)",
                         std::abs(lambda - compose_constant(y, z)), 1e-8);
        }
    }
    return table.take();
}

std::vector<CheckResult> verify_hitting() {
    ResidualTable table;
    const double cases[][2] = {{4.0, 0.5}, {4.0, 0.1}, {2.0, 1.0}};
    for (const auto& c : cases) {
        const double threshold = c[0], eps = c[1];
        const long kx = static_cast<long>(std::llround(threshold / eps));
        for (long k = -kx; k <= kx; ++k) {
            const double x = k * eps;
            table.record("closed form vs tridiagonal oracle",
                         std::abs(hitting_prob_closed(x, threshold) -
                                  hitting_prob_oracle(x, threshold, eps)),
                         1e-10);
        }
    }
    // The closed form plugged back into the difference equation.
    for (double eps : {0.05, 0.3, 1.0}) {
        const double threshold = 10.0;
        const long kmax = static_cast<long>(std::floor(threshold / eps - 1.0));
        for (long k = -kmax; k <= kmax; ++k) {
            const double x = k * eps;
            const double lhs = hitting_prob_closed(x, threshold);
            const double pp = hitting_prob_closed(x + eps, threshold);
            const double pm = hitting_prob_closed(x - eps, threshold);
            const double rhs = (pp + pm) / 2.0 +
                               std::tanh(eps) * std::tanh(x) * (pp - pm) / 2.0;
            table.record("closed form satisfies difference equation",
                         std::abs(lhs - rhs), 1e-12);
        }
    }
    // ODE consistency via central differences, h = 1e-4.
    const double h = 1e-4;
    for (double x = -5.0; x <= 5.0; x += 0.5) {
        const double threshold = 6.0;
        const double p0 = hitting_prob_closed(x, threshold);
        const double pp = hitting_prob_closed(x + h, threshold);
        const double pm = hitting_prob_closed(x - h, threshold);
        const double d1 = (pp - pm) / (2.0 * h);
        const double d2 = (pp - 2.0 * p0 + pm) / (h * h);
        table.record("closed form satisfies p'' + 2 tanh(x) p' = 0",
                     std::abs(d2 + 2.0 * std::tanh(x) * d1), 1e-6);
    }
    return table.take();
}

std::vector<CheckResult> verify_ancilla(std::uint64_t seed, int count) {
    ResidualTable table;
    SplitMix64 rng(mix_seed(seed, 0xa2c177a));
    const double eps = 0.1;

    for (int i = 0; i < count; ++i) {
        const Eigen::Index dim = 2 + (i % 3);
        const Instrument instr = sampler::random_positive(dim, rng);
        const OperatorCurve curve(instr);
        const ComplexMatrix eye2d = identity(2 * dim);

        for (double x : {-2.0, 0.0, 2.0}) {
            for (double y : {eps, -eps}) {
                const auto blocks = ancilla::extended_weak_op(curve, x, y);
                table.record("lower-left block of M~(x,e) vanishes",
                             blocks.lower_left.norm(), 1e-10);
                table.record("upper-left block of M~(x,e) = M(x,e)",
                             (blocks.upper_left - curve.weak_op(x, y)).norm(),
                             1e-10);
            }
            const ComplexMatrix mp =
                ancilla::join_blocks(ancilla::extended_weak_op(curve, x, eps));
            const ComplexMatrix mm =
                ancilla::join_blocks(ancilla::extended_weak_op(curve, x, -eps));
            table.record("doubled-space completeness",
                         (mp.adjoint() * mp + mm.adjoint() * mm - eye2d).norm(),
                         1e-10);
        }

        const QuantumState rho = sampler::random_state(dim, rng);
        const ComplexMatrix ext = ancilla::extended_state_expand(curve, rho);
        const auto blocks = ancilla::split_blocks(ext);
        const ComplexMatrix& m1 = instr.m1;
        const ComplexMatrix& m2 = instr.m2;
        double worst = (blocks.upper_left - m1 * rho.rho * m1).norm();
        worst = std::max(worst, (blocks.upper_right - m1 * rho.rho * m2).norm());
        worst = std::max(worst, (blocks.lower_left - m2 * rho.rho * m1).norm());
        worst = std::max(worst, (blocks.lower_right - m2 * rho.rho * m2).norm());
        table.record("extended state blocks are M_i rho M_j", worst, 1e-10);
        table.record("extended state trace = 1",
                     std::abs(ext.trace().real() - 1.0), 1e-10);

        WalkConfig paired;
        paired.epsilon = eps;
        paired.threshold = 10.0;
        paired.seed = mix_seed(seed, 1000 + i);
        auto report = ancilla::oracle_walk_equivalence(curve, rho, paired);
        table.record("paired ancilla vs direct walk trace distance",
                     report.max_trace_distance, 1e-9);
        table.record("paired walk directions agree",
                     report.directions_match ? 0.0 : 1.0, 0.5);
    }
    return table.take();
}

std::vector<CheckResult> verify_all(std::uint64_t seed, int count) {
    std::vector<CheckResult> all = verify_identities(seed, count);
    for (auto&& r : verify_composition(seed, count)) all.push_back(std::move(r));
    for (auto&& r : verify_hitting()) all.push_back(std::move(r));
    for (auto&& r : verify_ancilla(seed, std::max(1, count / 5)))
        all.push_back(std::move(r));
    return all;
}

}  // namespace weakmeas
