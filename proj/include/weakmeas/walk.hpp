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

#include <cstdint>
#include <optional>
#include <vector>

#include "weakmeas/curves.hpp"
#include "weakmeas/matcore.hpp"

namespace weakmeas {

/// Counter-based deterministic generator (SplitMix64). Each trajectory owns
/// one stream seeded from hash(seed, trajectory index), so ensembles are
/// reproducible and independent of execution order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, 1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct QuantumState {
    ComplexMatrix rho;

    Eigen::Index dim() const { return rho.rows(); }
    static QuantumState from_density(const ComplexMatrix& rho);
    static QuantumState from_pure(const ComplexVector& psi);
};

struct WalkConfig {
    double epsilon = 0.1;
    double threshold = 8.0;  // X
    std::uint64_t max_steps = 0;  // 0: default 10 (X/eps)^2
    std::uint64_t seed = 0;
    double x0 = 0.0;  // initial position, must sit on the epsilon lattice
    bool log_steps = false;

    std::uint64_t effective_max_steps() const;
    /// Throws ConfigError on violated invariants.
    void validate(double x_clamp = OperatorCurve::kDefaultClamp) const;
};

struct TrajectoryRecord {
    std::uint64_t steps = 0;
    double final_x = 0.0;
    int outcome = 0;  // 1 or 2; 0 when aborted
    QuantumState final_state;
    std::vector<int> step_log;  // +-1 per step when logging is on
    std::uint64_t seed_used = 0;
    bool aborted = false;  // hit max_steps without reaching |x| >= X
};

struct StepResult {
    QuantumState state;
    double new_x;
    int direction;  // +1 or -1
};

/// One weak measurement M(x, +-eps) applied to `state`; the branch is
/// selected by comparing `random_draw` against p_+ = Tr(M rho M^dag).
StepResult step(const OperatorCurve& curve, const QuantumState& state, double x,
                double epsilon, double random_draw);

/// Caches the lattice operators M(k eps, +-eps) and their effects so a long
/// walk costs O(d^2) per step for the probability and O(d^3) for the update.
class WalkEngine {
  public:
    WalkEngine(const OperatorCurve& curve, const WalkConfig& config);

    /// Runs one trajectory with the stream seeded from (seed, index).
    TrajectoryRecord run(const QuantumState& initial, std::uint64_t index) const;

    /// Continues `rng` instead of opening a fresh stream; used when chaining
    /// node walks in a multi-outcome reduction.
    TrajectoryRecord run_with_rng(const QuantumState& initial, SplitMix64& rng) const;

    const WalkConfig& config() const { return config_; }
    const OperatorCurve& curve() const { return curve_; }

  private:
    const OperatorCurve& curve_;
    WalkConfig config_;
    long k0_, k_limit_;
    // index 0 holds lattice site -k_limit - 1.
    std::vector<ComplexMatrix> op_plus_, op_minus_;
    std::vector<ComplexMatrix> effect_plus_;  // M(+)^dag M(+)
};

TrajectoryRecord run_trajectory(const OperatorCurve& curve,
                                const QuantumState& initial,
                                const WalkConfig& config,
                                std::uint64_t trajectory_index = 0);

/// Probability that the walk ends at +X given position x:
/// (1/2)(1 + tanh(x)/tanh(X)).
double hitting_prob_closed(double x, double threshold);

/// Independent oracle: direct tridiagonal solve of the difference equation
/// p(x) = (p(x+e)+p(x-e))/2 + tanh(e) tanh(x) (p(x+e)-p(x-e))/2 with
/// boundaries p(-X) = 0, p(X) = 1.
double hitting_prob_oracle(double x0, double threshold, double epsilon);

/// A state on the walk curve: sqrt(w1)|psi1> + sqrt(w2)|psi2> with
/// w_{1,2} = (1 -+ tanh x0)/2 under the operator sign convention
/// (+x is the M2 side).
struct OnCurveState {
    double x0;
    ComplexVector psi1, psi2;  // orthonormal
};

QuantumState on_curve_state(const OnCurveState& params);

}  // namespace weakmeas
