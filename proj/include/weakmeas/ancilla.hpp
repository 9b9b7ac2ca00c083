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

#include "weakmeas/curves.hpp"
#include "weakmeas/walk.hpp"

namespace weakmeas {

/// Independent realization of the measurement on the system plus a qubit
/// ancilla. Tensor ordering is system (x) ancilla with the ancilla basis
/// {|0>, |1>} indexing the 2x2 block structure: block (i,j) carries the
/// <i| . |j> ancilla components of a 2d x 2d operator.
///
/// Shipped as a public API so the ancilla-free weak operators can be
/// audited against it; never used in production walks.
namespace ancilla {

/// d x d blocks of a 2d x 2d operator, indexed by the ancilla basis.
struct BlockDecomposition {
    ComplexMatrix upper_left;    // M
    ComplexMatrix upper_right;   // N
    ComplexMatrix lower_left;
    ComplexMatrix lower_right;   // O
};

BlockDecomposition split_blocks(const ComplexMatrix& extended);
ComplexMatrix join_blocks(const BlockDecomposition& blocks);

ComplexMatrix pauli_x();
ComplexMatrix pauli_z();

/// U(0) = M1 (x) Z + M2 (x) X.
ComplexMatrix u_zero(const OperatorCurve& curve);

/// The extended weak operator U(x+y) (I (x) P(y)) U(x), where P is the
/// ancilla projective curve with P1 = |0><0|, P2 = |1><1|. Its lower-left
/// block vanishes and its upper-left block equals the ancilla-free
/// weak_op(x, y). Positive class only.
BlockDecomposition extended_weak_op(const OperatorCurve& curve, double x, double y);

/// U(0) (rho (x) |0><0|) U(0)^dag; blocks are M_i rho M_j.
ComplexMatrix extended_state_expand(const OperatorCurve& curve,
                                    const QuantumState& rho);

struct EquivalenceReport {
    std::uint64_t steps = 0;
    double max_trace_distance = 0.0;
    bool directions_match = true;
    int outcome = 0;
};

/// Runs the same seeded random stream through (a) the ancilla protocol on
/// the doubled space and (b) the direct system-only walk, asserting
/// identical step directions and comparing the per-step system states.
EquivalenceReport oracle_walk_equivalence(const OperatorCurve& curve,
                                          const QuantumState& rho,
                                          const WalkConfig& config);

}  // namespace ancilla
}  // namespace weakmeas
