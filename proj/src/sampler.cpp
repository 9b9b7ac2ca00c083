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

#include "weakmeas/sampler.hpp"

#include <cmath>

namespace weakmeas::sampler {

double gaussian(SplitMix64& rng) {
    double u1 = rng.next_double();
    while (u1 <= 0.0) u1 = rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

ComplexMatrix random_matrix(Eigen::Index dim, SplitMix64& rng) {
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            m(i, j) = Complex(gaussian(rng), gaussian(rng));
    return m;
}

ComplexMatrix random_hermitian(Eigen::Index dim, SplitMix64& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    return ((g + g.adjoint()) / 2.0).eval();
}

ComplexMatrix random_unitary(Eigen::Index dim, SplitMix64& rng, double max_phase) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    const HermitianEig eig = hermitian_eig(h);
    const double radius =
        std::max(std::abs(eig.eigenvalues.minCoeff()), eig.eigenvalues.maxCoeff());
    const double scale = radius > 0.0 ? max_phase / radius : 0.0;
    return exp_skew((Complex(0.0, scale) * h).eval());
}

Instrument random_positive(Eigen::Index dim, SplitMix64& rng, double a_min,
                           double a_max) {
    const ComplexMatrix q = random_unitary(dim, rng);
    RealVector a(dim), b(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        a(i) = a_min + (a_max - a_min) * rng.next_double();
        b(i) = std::sqrt(1.0 - a(i) * a(i));
    }
    const ComplexMatrix m1 = q * a.asDiagonal() * q.adjoint();
    // m2 from the analytic identity so completeness holds to rounding error.
    const ComplexMatrix m2 = q * b.asDiagonal() * q.adjoint();
    return validate(((m1 + m1.adjoint()) / 2.0).eval(),
                    ((m2 + m2.adjoint()) / 2.0).eval());
}

Instrument random_projective(Eigen::Index dim, SplitMix64& rng) {
    const ComplexMatrix q = random_unitary(dim, rng);
    const Eigen::Index rank =
        1 + static_cast<Eigen::Index>(rng.next_double() * (dim - 1));
    RealVector a = RealVector::Zero(dim);
    for (Eigen::Index i = 0; i < rank; ++i) a(i) = 1.0;
    const ComplexMatrix p1 = q * a.asDiagonal() * q.adjoint();
    const ComplexMatrix p2 = identity(dim) - p1;
    return validate(((p1 + p1.adjoint()) / 2.0).eval(),
                    ((p2 + p2.adjoint()) / 2.0).eval());
}

Instrument random_general(Eigen::Index dim, SplitMix64& rng, double max_phase,
                          double a_min, double a_max) {
    const Instrument positive = random_positive(dim, rng, a_min, a_max);
    const ComplexMatrix v1 = random_unitary(dim, rng, max_phase);
    const ComplexMatrix v2 = random_unitary(dim, rng, max_phase);
    return validate((v1 * positive.m1).eval(), (v2 * positive.m2).eval());
}

MultiInstrument random_multi(Eigen::Index dim, std::size_t n_outcomes,
                             SplitMix64& rng) {
    std::vector<ComplexMatrix> gs;
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (std::size_t j = 0; j < n_outcomes; ++j) {
        gs.push_back(random_matrix(dim, rng));
        sum += gs.back().adjoint() * gs.back();
    }
    const ComplexMatrix whiten = inv_sqrt(sum);
    std::vector<ComplexMatrix> ops;
    ops.reserve(n_outcomes);
    for (auto& g : gs) ops.push_back((g * whiten).eval());
    return validate_multi(ops);
}

QuantumState random_state(Eigen::Index dim, SplitMix64& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    ComplexMatrix rho = (g * g.adjoint()).eval();
    rho /= rho.trace().real();
    return QuantumState::from_density(((rho + rho.adjoint()) / 2.0).eval());
}

ComplexVector random_pure(Eigen::Index dim, SplitMix64& rng) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        v(i) = Complex(gaussian(rng), gaussian(rng));
    return v / v.norm();
}

}  // namespace weakmeas::sampler
