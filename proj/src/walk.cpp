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

#include "weakmeas/walk.hpp"

#include <cmath>

namespace weakmeas {

namespace {

constexpr double kProbFloor = 1e-14;

double real_trace_product(const ComplexMatrix& effect, const ComplexMatrix& rho) {
    // Tr(E rho) for Hermitian E and rho.
    return (effect.transpose().cwiseProduct(rho)).sum().real();
}

long lattice_index(double x, double epsilon, const char* what) {
    const double k = x / epsilon;
    const double rounded = std::round(k);
    if (std::abs(k - rounded) > 1e-9)
        throw OffLattice(std::string(what) + " = " + std::to_string(x) +
                         " is not on the epsilon lattice");
    return static_cast<long>(rounded);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return g.next();
}

QuantumState QuantumState::from_density(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols())
        throw ShapeMismatch("QuantumState: density matrix not square");
    if (hermiticity_defect(rho) > 1e-12 * std::max(1.0, rho.norm()))
        throw NotHermitian("QuantumState: density matrix not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
        throw Error("QuantumState: trace != 1");
    const HermitianEig eig = hermitian_eig(rho);
    if (eig.eigenvalues.minCoeff() < -1e-10)
        throw Error("QuantumState: negative eigenvalue " +
                    std::to_string(eig.eigenvalues.minCoeff()));
    return {rho};
}

QuantumState QuantumState::from_pure(const ComplexVector& psi) {
    const double n = psi.norm();
    if (n < 1e-12) throw Error("QuantumState: zero state vector");
    const ComplexVector v = psi / n;
    return {(v * v.adjoint()).eval()};
}

std::uint64_t WalkConfig::effective_max_steps() const {
    if (max_steps != 0) return max_steps;
    const double r = threshold / epsilon;
    return static_cast<std::uint64_t>(10.0 * r * r) + 1;
}

void WalkConfig::validate(double x_clamp) const {
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
    if (threshold <= 0.0) throw ConfigError("threshold must be positive");
    // Equality gives the degenerate single-step walk, which is allowed.
    if (epsilon > threshold) throw ConfigError("epsilon must not exceed threshold");
    if (threshold > x_clamp - epsilon)
        throw ConfigError("threshold must not exceed x_clamp - epsilon");
    const double r = threshold / epsilon;
    if (max_steps != 0 && static_cast<double>(max_steps) < 10.0 * r * r)
        throw ConfigError("max_steps below 10 (threshold/epsilon)^2");
    try {
        lattice_index(x0, epsilon, "x0");
    } catch (const OffLattice& e) {
        throw ConfigError(e.what());
    }
    if (std::abs(x0) >= threshold) throw ConfigError("|x0| must be below threshold");
}

StepResult step(const OperatorCurve& curve, const QuantumState& state, double x,
                double epsilon, double random_draw) {
    const ComplexMatrix m_plus = curve.weak_op(x, epsilon);
    const ComplexMatrix m_minus = curve.weak_op(x, -epsilon);
    const double p_plus =
        real_trace_product((m_plus.adjoint() * m_plus).eval(), state.rho);
    const int direction = (random_draw < p_plus) ? +1 : -1;
    const ComplexMatrix& m = (direction > 0) ? m_plus : m_minus;
    const double p = (direction > 0) ? p_plus : 1.0 - p_plus;
    if (p < kProbFloor)
        throw DegenerateProbability("step: branch probability " + std::to_string(p));
    ComplexMatrix rho = (m * state.rho * m.adjoint()) / p;
    return {{std::move(rho)}, x + direction * epsilon, direction};
}

WalkEngine::WalkEngine(const OperatorCurve& curve, const WalkConfig& config)
    : curve_(curve), config_(config) {
    config_.validate(curve.x_clamp());
    const double eps = config_.epsilon;
    k0_ = lattice_index(config_.x0, eps, "x0");
    k_limit_ = static_cast<long>(std::ceil(config_.threshold / eps - 1e-9));
    const long n_sites = 2 * (k_limit_ + 1) + 1;
    op_plus_.reserve(n_sites);
    op_minus_.reserve(n_sites);
    effect_plus_.reserve(n_sites);
    for (long k = -k_limit_ - 1; k <= k_limit_ + 1; ++k) {
        const double x = k * eps;
        ComplexMatrix mp = curve_.weak_op(x, eps);
        ComplexMatrix mm = curve_.weak_op(x, -eps);
        effect_plus_.push_back((mp.adjoint() * mp).eval());
        op_plus_.push_back(std::move(mp));
        op_minus_.push_back(std::move(mm));
    }
}

TrajectoryRecord WalkEngine::run(const QuantumState& initial,
                                 std::uint64_t index) const {
    SplitMix64 rng(mix_seed(config_.seed, index));
    TrajectoryRecord rec = run_with_rng(initial, rng);
    rec.seed_used = mix_seed(config_.seed, index);
    return rec;
}

TrajectoryRecord WalkEngine::run_with_rng(const QuantumState& initial,
                                          SplitMix64& rng) const {
    const double eps = config_.epsilon;
    const std::uint64_t max_steps = config_.effective_max_steps();
    const long offset = k_limit_ + 1;

    TrajectoryRecord rec;
    rec.final_state = initial;
    long k = k0_;
    ComplexMatrix scratch(initial.dim(), initial.dim());

    while (std::abs(k) * eps < config_.threshold - 1e-12) {
        if (rec.steps >= max_steps) {
            rec.aborted = true;
            rec.final_x = k * eps;
            rec.outcome = 0;
            return rec;
        }
        const std::size_t site = static_cast<std::size_t>(k + offset);
        const double p_plus =
            real_trace_product(effect_plus_[site], rec.final_state.rho);
        const int direction = (rng.next_double() < p_plus) ? +1 : -1;
        const double p = (direction > 0) ? p_plus : 1.0 - p_plus;
        if (p < kProbFloor)
            throw DegenerateProbability("walk: branch probability " +
                                        std::to_string(p));
        const ComplexMatrix& m =
            (direction > 0) ? op_plus_[site] : op_minus_[site];
        scratch.noalias() = m * rec.final_state.rho;
        rec.final_state.rho.noalias() = scratch * m.adjoint();
        rec.final_state.rho /= p;
        k += direction;
        ++rec.steps;
        if (config_.log_steps) rec.step_log.push_back(direction);
    }
    rec.final_x = k * eps;
    rec.outcome = (rec.final_x >= config_.threshold - 1e-12) ? 2 : 1;
    return rec;
}

TrajectoryRecord run_trajectory(const OperatorCurve& curve,
                                const QuantumState& initial,
                                const WalkConfig& config,
                                std::uint64_t trajectory_index) {
    WalkEngine engine(curve, config);
    return engine.run(initial, trajectory_index);
}

double hitting_prob_closed(double x, double threshold) {
    if (threshold <= 0.0) throw ConfigError("hitting_prob_closed: X must be positive");
    if (std::abs(x) > threshold + 1e-12)
        throw ConfigError("hitting_prob_closed: |x| must not exceed X");
    return 0.5 * (1.0 + std::tanh(x) / std::tanh(threshold));
}

double hitting_prob_oracle(double x0, double threshold, double epsilon) {
    const long kx = lattice_index(threshold, epsilon, "threshold");
    if (std::abs(kx * epsilon - threshold) > 1e-9)
        throw OffLattice("hitting_prob_oracle: X/epsilon not integral");
    const long k0 = lattice_index(x0, epsilon, "x0");
    if (std::abs(k0) > kx)
        throw OffLattice("hitting_prob_oracle: x0 outside [-X, X]");
    if (std::abs(k0) == kx) return k0 > 0 ? 1.0 : 0.0;

    // Interior sites k = -kx+1 .. kx-1; Thomas solve of the tridiagonal
    // system p(k) - q_+(k) p(k+1) - q_-(k) p(k-1) = rhs.
    const long n = 2 * kx - 1;
    std::vector<double> diag(n, 1.0), upper(n, 0.0), lower(n, 0.0), rhs(n, 0.0);
    const double te = std::tanh(epsilon);
    for (long i = 0; i < n; ++i) {
        const long k = i - (kx - 1);
        const double c = te * std::tanh(k * epsilon) / 2.0;
        const double qp = 0.5 + c;
        const double qm = 0.5 - c;
        if (i + 1 < n) upper[i] = -qp;
        else rhs[i] += qp;  // p(X) = 1
        if (i > 0) lower[i] = -qm;
        // p(-X) = 0 contributes nothing.
    }
    for (long i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    std::vector<double> p(n);
    p[n - 1] = rhs[n - 1] / diag[n - 1];
    for (long i = n - 2; i >= 0; --i)
        p[i] = (rhs[i] - upper[i] * p[i + 1]) / diag[i];
    return p[k0 + (kx - 1)];
}

QuantumState on_curve_state(const OnCurveState& params) {
    if (params.psi1.size() != params.psi2.size())
        throw ShapeMismatch("on_curve_state: vector dims differ");
    if (std::abs(params.psi1.norm() - 1.0) > 1e-10 ||
        std::abs(params.psi2.norm() - 1.0) > 1e-10 ||
        std::abs(params.psi1.dot(params.psi2)) > 1e-10)
        throw Error("on_curve_state: psi1, psi2 must be orthonormal");
    const double t = std::tanh(params.x0);
    const double w1 = (1.0 - t) / 2.0;
    const double w2 = (1.0 + t) / 2.0;
    const ComplexVector psi =
        std::sqrt(w1) * params.psi1 + std::sqrt(w2) * params.psi2;
    return QuantumState::from_pure(psi);
}

}  // namespace weakmeas
