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

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "weakmeas/harness.hpp"
#include "weakmeas/instrument.hpp"
#include "weakmeas/walk.hpp"

namespace weakmeas::io {

/// Instrument file: {"dimension": d, "operators": [matrix, ...]} where a
/// matrix is a row-major array of d*d [re, im] pairs.
MultiInstrument load_multi_instrument(const std::string& path);
MultiInstrument parse_multi_instrument(const nlohmann::json& j);

/// State file: {"dimension": d, "rho": matrix} or {"dimension": d,
/// "psi": [[re, im], ...]} (converted to a rank-one density matrix).
QuantumState load_state(const std::string& path);
QuantumState parse_state(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, Eigen::Index dim);

nlohmann::json report_to_json(const EnsembleReport& report);
nlohmann::json trajectory_to_json(const TrajectoryRecord& rec, std::uint64_t index);

/// Numbers rendered with 12 significant digits, for diffable reports.
std::string format_double(double v);
std::string format_matrix(const ComplexMatrix& m);

}  // namespace weakmeas::io
