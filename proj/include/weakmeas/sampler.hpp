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

#include <vector>

#include "weakmeas/instrument.hpp"
#include "weakmeas/walk.hpp"

namespace weakmeas {

/// Seeded generators for random instruments and states, shared by the
/// verification suites and the tests.
namespace sampler {

/// Gaussian pair via Box-Muller on the SplitMix64 stream.
double gaussian(SplitMix64& rng);

ComplexMatrix random_matrix(Eigen::Index dim, SplitMix64& rng);

ComplexMatrix random_hermitian(Eigen::Index dim, SplitMix64& rng);

/// Haar-like unitary with eigenphases bounded by `max_phase` (exp(iH) with
/// the spectrum of H rescaled), keeping the principal log branch safe.
ComplexMatrix random_unitary(Eigen::Index dim, SplitMix64& rng,
                             double max_phase = 2.8);

/// Positive commuting pair: m1 = Q diag(a) Q^dag, m2 = Q diag(sqrt(1-a^2))
/// Q^dag with a_i drawn from [a_min, a_max].
Instrument random_positive(Eigen::Index dim, SplitMix64& rng,
                           double a_min = 0.2, double a_max = 0.95);

/// Projective pair from a random eigenbasis; rank of P1 drawn in [1, d-1].
Instrument random_projective(Eigen::Index dim, SplitMix64& rng);

/// General pair v_i p_i with bounded unitary eigenphases.
Instrument random_general(Eigen::Index dim, SplitMix64& rng,
                          double max_phase = 2.8, double a_min = 0.2,
                          double a_max = 0.95);

/// Random n-outcome measurement: m_j = G_j S^{-1/2}, S = sum G_j^dag G_j.
MultiInstrument random_multi(Eigen::Index dim, std::size_t n_outcomes,
                             SplitMix64& rng);

/// Random full-rank density matrix (normalized G G^dag).
QuantumState random_state(Eigen::Index dim, SplitMix64& rng);

ComplexVector random_pure(Eigen::Index dim, SplitMix64& rng);

}  // namespace sampler
}  // namespace weakmeas
