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

#include "weakmeas/matcore.hpp"
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

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_z() { return diag2(1.0, -1.0); }

}  // namespace

TEST_CASE("hermitian_eig on simple matrices") {
    auto eig = hermitian_eig(identity(2));
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(1.0));
    CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - identity(2)).norm() <
          1e-10);

    eig = hermitian_eig(diag2(0.3, 0.7));
    CHECK(eig.eigenvalues(0) == doctest::Approx(0.3));
    CHECK(eig.eigenvalues(1) == doctest::Approx(0.7));

    eig = hermitian_eig(pauli_x());
    CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("hermitian_eig reconstruction on random Hermitian matrices") {
    SplitMix64 rng(11);
    for (int dim = 2; dim <= 6; ++dim) {
        const ComplexMatrix h = sampler::random_hermitian(dim, rng);
        const auto eig = hermitian_eig(h);
        CHECK((eig.eigenvectors * eig.eigenvalues.asDiagonal() *
                   eig.eigenvectors.adjoint() -
               h).norm() <= 1e-10 * std::max(1.0, h.norm()));
        for (Eigen::Index i = 1; i < dim; ++i)
            CHECK(eig.eigenvalues(i) >= eig.eigenvalues(i - 1));
        // Phase convention: largest-magnitude component real-positive.
        for (Eigen::Index c = 0; c < dim; ++c) {
            Eigen::Index imax;
            eig.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
            CHECK(eig.eigenvectors(imax, c).imag() == doctest::Approx(0.0).epsilon(1e-10));
            CHECK(eig.eigenvectors(imax, c).real() > 0.0);
        }
    }
}

TEST_CASE("func_of_hermitian examples") {
    CHECK((func_of_hermitian(diag2(4.0, 9.0), [](double x) { return std::sqrt(x); }) -
           diag2(2.0, 3.0)).norm() < 1e-12);
    CHECK((inv_sqrt(identity(3)) - identity(3)).norm() < 1e-12);

    // Rank-one projector: sqrt equals the projector itself; verified by
    // squaring rather than by a second eigendecomposition.
    ComplexMatrix p(2, 2);
    p << 0.5, 0.5, 0.5, 0.5;
    const ComplexMatrix root = sqrt_psd(p);
    CHECK((root * root - p).norm() < 1e-12);
}

TEST_CASE("func_of_hermitian domain errors") {
    CHECK_THROWS_AS(inv_sqrt(diag2(0.0, 1.0)), DomainError);
    CHECK_THROWS_AS(sqrt_psd(diag2(-0.5, 1.0)), DomainError);
}

TEST_CASE("sqrt_psd squares back on random positive matrices") {
    SplitMix64 rng(7);
    for (int dim = 2; dim <= 6; ++dim) {
        const ComplexMatrix g = sampler::random_matrix(dim, rng);
        const ComplexMatrix h = (g * g.adjoint()).eval();
        const ComplexMatrix root = sqrt_psd(h);
        CHECK((root * root - h).norm() <= 1e-9 * std::max(1.0, h.norm()));
    }
}

TEST_CASE("polar_decompose examples") {
    SUBCASE("unitary input") {
        const ComplexMatrix w = pauli_x();
        const auto f = polar_decompose(w);
        CHECK((f.unitary - w).norm() < 1e-10);
        CHECK((f.positive - identity(2)).norm() < 1e-10);
    }
    SUBCASE("positive input") {
        const ComplexMatrix m = diag2(std::sqrt(0.7), std::sqrt(0.3));
        const auto f = polar_decompose(m);
        CHECK((f.unitary - identity(2)).norm() < 1e-10);
        CHECK((f.positive - m).norm() < 1e-10);
    }
    SUBCASE("general input reconstructs") {
        const ComplexMatrix m = (pauli_z() * diag2(std::sqrt(0.7), std::sqrt(0.3))).eval();
        const auto f = polar_decompose(m);
        CHECK((f.unitary * f.positive - m).norm() < 1e-10);
        CHECK((f.positive * f.positive - m.adjoint() * m).norm() < 1e-10);
        CHECK((f.unitary - pauli_z()).norm() < 1e-10);
    }
}

TEST_CASE("polar_decompose properties on random matrices") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 4;
        const ComplexMatrix m = sampler::random_matrix(dim, rng);
        const auto f = polar_decompose(m);
        CHECK((f.unitary.adjoint() * f.unitary - identity(dim)).norm() < 1e-10);
        CHECK(hermitian_eig(f.positive).eigenvalues.minCoeff() >= -1e-10);
        CHECK((f.unitary * f.positive - m).norm() < 1e-10 * std::max(1.0, m.norm()));
    }
}

TEST_CASE("unitary_log examples") {
    CHECK(unitary_log(identity(3)).norm() < 1e-10);

    ComplexMatrix w = ComplexMatrix::Zero(2, 2);
    w(0, 0) = Complex(0, 1);
    w(1, 1) = Complex(0, -1);
    const ComplexMatrix k = unitary_log(w);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = Complex(0, M_PI / 2);
    expected(1, 1) = Complex(0, -M_PI / 2);
    CHECK((k - expected).norm() < 1e-10);
}

TEST_CASE("unitary_log branch gate near -1") {
    CHECK_THROWS_AS(unitary_log(diag2(1.0, -1.0)), BranchAmbiguity);
}

TEST_CASE("unitary_log round-trips small skew-Hermitian generators") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 3;
        ComplexMatrix h = sampler::random_hermitian(dim, rng);
        h *= 0.9 / std::max(1.0, spectral_norm(h));
        const ComplexMatrix k = (Complex(0, 1) * h).eval();
        const ComplexMatrix w = exp_skew(k);
        CHECK((unitary_log(w) - k).norm() < 1e-9);
    }
}

TEST_CASE("trace_distance examples") {
    CHECK(trace_distance(diag2(0.5, 0.5), diag2(0.5, 0.5)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(trace_distance(diag2(1.0, 0.0), diag2(0.0, 1.0)) == doctest::Approx(1.0));
    CHECK(trace_distance(diag2(1.0, 0.0), diag2(0.5, 0.5)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(trace_distance(identity(2), identity(3)), ShapeMismatch);
}

TEST_CASE("trace_distance is symmetric and satisfies the triangle inequality") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 3;
        const ComplexMatrix a = sampler::random_state(dim, rng).rho;
        const ComplexMatrix b = sampler::random_state(dim, rng).rho;
        const ComplexMatrix c = sampler::random_state(dim, rng).rho;
        CHECK(trace_distance(a, b) == doctest::Approx(trace_distance(b, a)).epsilon(1e-12));
        CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-10);
        CHECK(trace_distance(a, b) >= -1e-12);
        CHECK(trace_distance(a, b) <= 1.0 + 1e-10);
    }
}
