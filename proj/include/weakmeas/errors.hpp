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

#include <stdexcept>
#include <string>

namespace weakmeas {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

/// A scalar function was applied to a Hermitian operator whose spectrum
/// leaves the function's domain.
struct DomainError : Error {
    DomainError(const std::string& msg, double eigenvalue)
        : Error(msg), offending_eigenvalue(eigenvalue) {}
    double offending_eigenvalue;
};

/// A unitary has an eigenvalue too close to -1 for a principal-branch log.
struct BranchAmbiguity : Error {
    using Error::Error;
};

struct CompletenessViolation : Error {
    CompletenessViolation(const std::string& msg, double residual)
        : Error(msg), residual(residual) {}
    double residual;
};

struct SingularResidual : Error {
    using Error::Error;
};

struct WrongClass : Error {
    using Error::Error;
};

struct ClampExceeded : Error {
    using Error::Error;
};

struct OffLattice : Error {
    using Error::Error;
};

/// The probability of the chosen walk branch fell below the numerical floor.
struct DegenerateProbability : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace weakmeas
