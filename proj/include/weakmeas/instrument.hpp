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

#include <limits>
#include <string>
#include <vector>

#include "weakmeas/matcore.hpp"

namespace weakmeas {

enum class InstrumentClass { Projective, Positive, General };

std::string to_string(InstrumentClass c);

/// A validated two-outcome measurement {m1, m2} with m1^dag m1 + m2^dag m2 = I.
///
/// Classification is resolved in the fixed order Projective > Positive >
/// General. For General instruments the polar factors m_i = v_i * p_i_pos
/// are precomputed; for the other classes v_i = I and p_i_pos = m_i.
struct Instrument {
    Eigen::Index dim = 0;
    ComplexMatrix m1, m2;
    InstrumentClass cls = InstrumentClass::General;
    ComplexMatrix v1, v2;          // unitary polar factors
    ComplexMatrix p1pos, p2pos;    // (m_i^dag m_i)^{1/2}
    double completeness_residual = 0.0;
};

Instrument validate(const ComplexMatrix& m1, const ComplexMatrix& m2);

/// An n-outcome measurement; sum_j m_j^dag m_j = I.
struct MultiInstrument {
    Eigen::Index dim = 0;
    std::vector<ComplexMatrix> operators;
};

MultiInstrument validate_multi(const std::vector<ComplexMatrix>& operators);

/// One node of the binary reduction chain: a positive two-outcome
/// instrument plus the unitary applied when the walk stops at this node's
/// first outcome. The stop branch of node k realizes outcome k; the
/// continue branch descends to node k+1 (the last node's continue branch
/// realizes outcome n-1 through `final_unitary`).
struct ReductionNode {
    Instrument instr;
    ComplexMatrix stop_unitary;
};

struct BinaryReduction {
    Eigen::Index dim = 0;
    std::size_t n_outcomes = 0;
    std::vector<ReductionNode> nodes;
    ComplexMatrix final_unitary;
};

/// Decompose an n-outcome measurement into a chain of two-outcome nodes.
/// n = 2 returns the instrument itself as a single node with identity
/// leaf unitaries.
BinaryReduction binary_reduce(const MultiInstrument& multi);

/// Composite operator applied along the branch ending in `outcome`
/// (product of the leaf unitary, the stop operator and all continue
/// operators above it). On states supported away from the handled
/// kernels it equals the target m_j.
ComplexMatrix branch_operator(const BinaryReduction& red, std::size_t outcome);

/// How far an operator is from a scalar multiple of the identity.
struct WeaknessReport {
    Complex scalar;     // Tr(M)/dim
    double deviation;   // ||M/scalar - I||_2, +inf when |scalar| < 1e-12
    bool is_infinite() const { return !std::isfinite(deviation); }
};

WeaknessReport weakness(const ComplexMatrix& m);

}  // namespace weakmeas
