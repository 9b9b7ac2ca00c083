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

#include "weakmeas/harness.hpp"

#include <chrono>
#include <cmath>

namespace weakmeas {

namespace {

double born_probability(const ComplexMatrix& m, const ComplexMatrix& rho) {
    return (m * rho * m.adjoint()).trace().real();
}

ComplexMatrix conditional_state(const ComplexMatrix& m, const ComplexMatrix& rho,
                                double p) {
    return (m * rho * m.adjoint()) / p;
}

void finalize_stats(EnsembleReport& report) {
    const std::uint64_t n_done = report.n_trajectories - report.aborted;
    const std::size_t n_outcomes = report.outcome_counts.size();
    report.empirical_freqs.assign(n_outcomes, 0.0);
    report.z_scores.assign(n_outcomes, 0.0);
    for (std::size_t j = 0; j < n_outcomes; ++j) {
        if (n_done == 0) continue;
        const double f = static_cast<double>(report.outcome_counts[j]) / n_done;
        report.empirical_freqs[j] = f;
        const double p = report.target_probs[j];
        const double se = std::sqrt(p * (1.0 - p) / n_done);
        report.z_scores[j] = se > 0.0 ? (f - p) / se : 0.0;
    }
}

}  // namespace

EnsembleReport run_ensemble(
    const OperatorCurve& curve, const QuantumState& rho, const WalkConfig& config,
    std::uint64_t n,
    const std::function<void(const TrajectoryRecord&)>& on_trajectory) {
    const auto start = std::chrono::steady_clock::now();
    const Instrument& instr = curve.instrument();

    EnsembleReport report;
    report.n_trajectories = n;
    report.outcome_counts.assign(2, 0);
    report.target_probs = {born_probability(instr.m1, rho.rho),
                           born_probability(instr.m2, rho.rho)};
    std::vector<ComplexMatrix> ideal(2);
    for (int j = 0; j < 2; ++j)
        ideal[j] = conditional_state(j == 0 ? instr.m1 : instr.m2, rho.rho,
                                     report.target_probs[j]);

    WalkEngine engine(curve, config);
    std::vector<double> dist_sum(2, 0.0);
    std::vector<double> dist_max(2, 0.0);
    double step_sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        TrajectoryRecord rec = engine.run(rho, i);
        step_sum += static_cast<double>(rec.steps);
        if (rec.aborted) {
            ++report.aborted;
        } else {
            const int j = rec.outcome - 1;
            ++report.outcome_counts[j];
            const double td = trace_distance(rec.final_state.rho, ideal[j]);
            dist_sum[j] += td;
            dist_max[j] = std::max(dist_max[j], td);
        }
        if (on_trajectory) on_trajectory(rec);
    }
    finalize_stats(report);
    report.mean_final_trace_distance.assign(2, 0.0);
    report.max_final_trace_distance = dist_max;
    for (int j = 0; j < 2; ++j)
        if (report.outcome_counts[j] > 0)
            report.mean_final_trace_distance[j] =
                dist_sum[j] / report.outcome_counts[j];
    report.mean_steps = n > 0 ? step_sum / n : 0.0;
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

EnsembleReport compare_multi(const MultiInstrument& multi, const QuantumState& rho,
                             const WalkConfig& config, std::uint64_t n) {
    const auto start = std::chrono::steady_clock::now();
    const BinaryReduction red = binary_reduce(multi);
    const std::size_t n_outcomes = red.n_outcomes;

    EnsembleReport report;
    report.n_trajectories = n;
    report.outcome_counts.assign(n_outcomes, 0);
    report.target_probs.resize(n_outcomes);
    std::vector<ComplexMatrix> ideal(n_outcomes);
    for (std::size_t j = 0; j < n_outcomes; ++j) {
        report.target_probs[j] = born_probability(multi.operators[j], rho.rho);
        ideal[j] = conditional_state(multi.operators[j], rho.rho,
                                     report.target_probs[j]);
    }

    std::vector<OperatorCurve> curves;
    curves.reserve(red.nodes.size());
    for (const auto& node : red.nodes) curves.emplace_back(node.instr);
    std::vector<WalkEngine> engines;
    engines.reserve(red.nodes.size());
    for (std::size_t k = 0; k < red.nodes.size(); ++k)
        engines.emplace_back(curves[k], config);

    std::vector<double> dist_sum(n_outcomes, 0.0);
    std::vector<double> dist_max(n_outcomes, 0.0);
    double step_sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        SplitMix64 rng(mix_seed(config.seed, i));
        QuantumState state = rho;
        long outcome = -1;
        bool aborted = false;
        for (std::size_t k = 0; k < red.nodes.size(); ++k) {
            TrajectoryRecord rec = engines[k].run_with_rng(state, rng);
            step_sum += static_cast<double>(rec.steps);
            if (rec.aborted) {
                aborted = true;
                break;
            }
            if (rec.outcome == 1) {
                const ComplexMatrix& u = red.nodes[k].stop_unitary;
                state.rho = (u * rec.final_state.rho * u.adjoint()).eval();
                outcome = static_cast<long>(k);
                break;
            }
            state = rec.final_state;  // continue branch
            if (k + 1 == red.nodes.size()) {
                const ComplexMatrix& u = red.final_unitary;
                state.rho = (u * state.rho * u.adjoint()).eval();
                // Renormalize: the final unitary may act only on the
                // walked support.
                state.rho /= state.rho.trace().real();
                outcome = static_cast<long>(n_outcomes - 1);
            }
        }
        if (aborted || outcome < 0) {
            ++report.aborted;
            continue;
        }
        ++report.outcome_counts[outcome];
        const double td = trace_distance(state.rho, ideal[outcome]);
        dist_sum[outcome] += td;
        dist_max[outcome] = std::max(dist_max[outcome], td);
    }
    finalize_stats(report);
    report.mean_final_trace_distance.assign(n_outcomes, 0.0);
    report.max_final_trace_distance = dist_max;
    for (std::size_t j = 0; j < n_outcomes; ++j)
        if (report.outcome_counts[j] > 0)
            report.mean_final_trace_distance[j] =
                dist_sum[j] / report.outcome_counts[j];
    report.mean_steps = n > 0 ? step_sum / n : 0.0;
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

void StatGate::add_report(const EnsembleReport& report) {
    // freq_2 = 1 - freq_1 for two outcomes; count one comparison per
    // independent frequency.
    const std::size_t independent = report.z_scores.size() > 1
                                        ? report.z_scores.size() - 1
                                        : report.z_scores.size();
    for (std::size_t j = 0; j < independent; ++j) add(report.z_scores[j]);
}

bool StatGate::passes() const {
    std::size_t marginal = 0;
    for (double z : z_scores) {
        const double a = std::abs(z);
        if (a > 4.0) return false;
        if (a > 3.0) ++marginal;
    }
    const std::size_t allowance = std::max<std::size_t>(1, z_scores.size() / 20);
    return marginal <= allowance;
}

double StatGate::max_abs_z() const {
    double m = 0.0;
    for (double z : z_scores) m = std::max(m, std::abs(z));
    return m;
}

bool abort_rate_ok(const EnsembleReport& report) {
    return static_cast<double>(report.aborted) <=
           0.001 * static_cast<double>(report.n_trajectories);
}

}  // namespace weakmeas
