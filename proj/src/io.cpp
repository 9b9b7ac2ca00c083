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

#include "weakmeas/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace weakmeas::io {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

Complex entry_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("matrix entry must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j, Eigen::Index dim) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim * dim)
        throw ParseError("matrix must hold exactly dim^2 entries");
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index k = 0; k < dim; ++k)
            m(i, k) = entry_from_json(j[i * dim + k]);
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            out.push_back({m(i, k).real(), m(i, k).imag()});
    return out;
}

MultiInstrument parse_multi_instrument(const json& j) {
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw ParseError("instrument file needs integer \"dimension\"");
    const Eigen::Index dim = j["dimension"].get<Eigen::Index>();
    if (dim < 1) throw ParseError("dimension must be positive");
    if (!j.contains("operators") || !j["operators"].is_array() ||
        j["operators"].size() < 2)
        throw ParseError("instrument file needs \"operators\" with >= 2 matrices");
    std::vector<ComplexMatrix> ops;
    ops.reserve(j["operators"].size());
    for (const auto& m : j["operators"]) ops.push_back(matrix_from_json(m, dim));
    return validate_multi(ops);
}

MultiInstrument load_multi_instrument(const std::string& path) {
    return parse_multi_instrument(load_json(path));
}

QuantumState parse_state(const json& j) {
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw ParseError("state file needs integer \"dimension\"");
    const Eigen::Index dim = j["dimension"].get<Eigen::Index>();
    if (dim < 1) throw ParseError("dimension must be positive");
    if (j.contains("rho"))
        return QuantumState::from_density(matrix_from_json(j["rho"], dim));
    if (j.contains("psi")) {
        const auto& v = j["psi"];
        if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != dim)
            throw ParseError("psi must hold exactly dim entries");
        ComplexVector psi(dim);
        for (Eigen::Index i = 0; i < dim; ++i) psi(i) = entry_from_json(v[i]);
        return QuantumState::from_pure(psi);
    }
    throw ParseError("state file needs \"rho\" or \"psi\"");
}

QuantumState load_state(const std::string& path) {
    return parse_state(load_json(path));
}

json report_to_json(const EnsembleReport& report) {
    json j;
    j["nTrajectories"] = report.n_trajectories;
    j["aborted"] = report.aborted;
    j["outcomeCounts"] = report.outcome_counts;
    j["empiricalFreqs"] = report.empirical_freqs;
    j["targetProbs"] = report.target_probs;
    j["zScores"] = report.z_scores;
    j["meanFinalStateTraceDistance"] = report.mean_final_trace_distance;
    j["maxFinalStateTraceDistance"] = report.max_final_trace_distance;
    j["meanSteps"] = report.mean_steps;
    j["wallClock"] = report.wall_clock_seconds;
    return j;
}

json trajectory_to_json(const TrajectoryRecord& rec, std::uint64_t index) {
    json j;
    j["index"] = index;
    j["steps"] = rec.steps;
    j["finalX"] = rec.final_x;
    j["outcome"] = rec.outcome;
    j["seedUsed"] = rec.seed_used;
    j["aborted"] = rec.aborted;
    if (!rec.step_log.empty()) j["stepLog"] = rec.step_log;
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_matrix(const ComplexMatrix& m) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << "  ";
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            out << "(" << format_double(m(i, k).real()) << ", "
                << format_double(m(i, k).imag()) << ")";
            if (k + 1 < m.cols()) out << "  ";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace weakmeas::io
