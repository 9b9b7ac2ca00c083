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

#include <functional>
#include <vector>

#include "weakmeas/curves.hpp"
#include "weakmeas/instrument.hpp"
#include "weakmeas/walk.hpp"

namespace weakmeas {

/// Monte Carlo ensemble statistics against the direct Born-rule targets.
struct EnsembleReport {
    std::uint64_t n_trajectories = 0;
    std::uint64_t aborted = 0;
    std::vector<std::uint64_t> outcome_counts;
    std::vector<double> empirical_freqs;
    std::vector<double> target_probs;   // Tr(M_j rho M_j^dag)
    std::vector<double> z_scores;
    std::vector<double> mean_final_trace_distance;  // per outcome
    std::vector<double> max_final_trace_distance;   // per outcome
    double mean_steps = 0.0;
    double wall_clock_seconds = 0.0;
};

/// Run `n` seeded trajectories of the two-outcome walk; trajectory i uses
/// the stream seeded from (config.seed, i), so the report is bit-identical
/// for a fixed config regardless of execution order.
EnsembleReport run_ensemble(const OperatorCurve& curve, const QuantumState& rho,
                            const WalkConfig& config, std::uint64_t n,
                            const std::function<void(const TrajectoryRecord&)>&
                                on_trajectory = nullptr);

/// Run the binary-reduction decision tree, each node as a full walk.
EnsembleReport compare_multi(const MultiInstrument& multi, const QuantumState& rho,
                             const WalkConfig& config, std::uint64_t n);

/// Statistical gate: no comparison beyond 4 sigma and at most
/// max(1, n/20) comparisons in (3, 4] sigma.
struct StatGate {
    std::vector<double> z_scores;

    void add(double z) { z_scores.push_back(z); }
    void add_report(const EnsembleReport& report);
    bool passes() const;
    double max_abs_z() const;
};

/// Abort-rate gate: aborted trajectories must stay at or below 0.1% of n.
bool abort_rate_ok(const EnsembleReport& report);

}  // namespace weakmeas
