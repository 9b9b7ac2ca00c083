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

#include <string>
#include <vector>

#include "weakmeas/matcore.hpp"

namespace weakmeas {

/// One verified identity: the worst residual seen across the sampled
/// instruments against its tolerance.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass() const { return residual <= tolerance; }
};

/// Operator-curve identity suite over `count` random instruments
/// (projective, positive and general; dims 2-4).
std::vector<CheckResult> verify_identities(std::uint64_t seed, int count);

/// Composition law M(x+y,z) M(x,y) = lambda M(x,z+y): proportionality
/// residual plus the extracted lambda against its closed form.
std::vector<CheckResult> verify_composition(std::uint64_t seed, int count);

/// Closed-form hitting probability against the tridiagonal solve.
std::vector<CheckResult> verify_hitting();

/// Ancilla construction against the ancilla-free operators, including a
/// paired seeded walk.
std::vector<CheckResult> verify_ancilla(std::uint64_t seed, int count);

std::vector<CheckResult> verify_all(std::uint64_t seed, int count);

}  // namespace weakmeas
