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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "weakmeas/ancilla.hpp"
#include "weakmeas/curves.hpp"
#include "weakmeas/harness.hpp"
#include "weakmeas/io.hpp"
#include "weakmeas/verify.hpp"

namespace {

using namespace weakmeas;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAbortRate = 3;

int cmd_validate(const std::string& path) {
    MultiInstrument multi;
    try {
        multi = io::load_multi_instrument(path);
    } catch (const CompletenessViolation& e) {
        std::cout << "completeness violation: residual "
                  << io::format_double(e.residual) << "\n";
        return kExitVerificationFailed;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "dimension: " << multi.dim << "\n";
    std::cout << "outcomes: " << multi.operators.size() << "\n";
    if (multi.operators.size() == 2) {
        const Instrument instr = validate(multi.operators[0], multi.operators[1]);
        std::cout << "class: " << to_string(instr.cls) << "\n";
        std::cout << "completeness residual: "
                  << io::format_double(instr.completeness_residual) << "\n";
        const OperatorCurve curve(instr);
        std::cout << "spectrum a_i:";
        for (Eigen::Index i = 0; i < curve.a_eigs().size(); ++i)
            std::cout << " " << io::format_double(curve.a_eigs()(i));
        std::cout << "\nspectrum b_i:";
        for (Eigen::Index i = 0; i < curve.b_eigs().size(); ++i)
            std::cout << " " << io::format_double(curve.b_eigs()(i));
        std::cout << "\n";
    } else {
        ComplexMatrix sum = ComplexMatrix::Zero(multi.dim, multi.dim);
        for (const auto& m : multi.operators) sum += m.adjoint() * m;
        std::cout << "completeness residual: "
                  << io::format_double((sum - identity(multi.dim)).norm()) << "\n";
        for (std::size_t j = 0; j < multi.operators.size(); ++j) {
            const auto eig = hermitian_eig(
                (multi.operators[j].adjoint() * multi.operators[j]).eval());
            std::cout << "effect " << j + 1 << " spectrum:";
            for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
                std::cout << " " << io::format_double(eig.eigenvalues(i));
            std::cout << "\n";
        }
    }
    return kExitOk;
}

struct SimulateOptions {
    std::string instrument_path;
    std::string state_path;
    std::string out_path;
    double epsilon = 0.1;
    double threshold = 8.0;
    std::uint64_t trajectories = 0;
    std::uint64_t seed = 0;
    bool log_steps = false;
};

void print_summary(const EnsembleReport& report) {
    std::cout << "outcome  target          empirical       z\n";
    for (std::size_t j = 0; j < report.target_probs.size(); ++j)
        std::cout << j + 1 << "        "
                  << io::format_double(report.target_probs[j]) << "   "
                  << io::format_double(report.empirical_freqs[j]) << "   "
                  << io::format_double(report.z_scores[j]) << "\n";
    std::cout << "aborted: " << report.aborted << " / " << report.n_trajectories
              << ", mean steps " << io::format_double(report.mean_steps) << "\n";
}

int cmd_simulate(const SimulateOptions& opt) {
    MultiInstrument multi;
    QuantumState rho;
    WalkConfig config;
    config.epsilon = opt.epsilon;
    config.threshold = opt.threshold;
    config.seed = opt.seed;
    config.log_steps = opt.log_steps;
    try {
        multi = io::load_multi_instrument(opt.instrument_path);
        if (!opt.state_path.empty()) {
            rho = io::load_state(opt.state_path);
            if (rho.dim() != multi.dim)
                throw ConfigError("state dimension does not match instrument");
        } else {
            rho.rho = identity(multi.dim) / static_cast<double>(multi.dim);
        }
        if (opt.trajectories == 0) throw ConfigError("trajectories must be positive");
        config.validate();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CompletenessViolation& e) {
        std::cerr << "invalid instrument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }

    EnsembleReport report;
    std::ofstream jsonl;
    std::function<void(const TrajectoryRecord&)> sink;
    std::uint64_t index = 0;
    if (!opt.out_path.empty()) {
        jsonl.open(opt.out_path + ".jsonl");
        sink = [&](const TrajectoryRecord& rec) {
            jsonl << io::trajectory_to_json(rec, index++).dump() << "\n";
        };
    }
    if (multi.operators.size() == 2) {
        const Instrument instr = validate(multi.operators[0], multi.operators[1]);
        const OperatorCurve curve(instr);
        report = run_ensemble(curve, rho, config, opt.trajectories, sink);
    } else {
        report = compare_multi(multi, rho, config, opt.trajectories);
    }
    print_summary(report);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        out << io::report_to_json(report).dump(2) << "\n";
    }
    if (!abort_rate_ok(report)) {
        std::cout << "FAIL: abort rate above 0.1%\n";
        return kExitAbortRate;
    }
    StatGate gate;
    gate.add_report(report);
    if (!gate.passes()) {
        std::cout << "FAIL: statistical gate, max |z| = "
                  << io::format_double(gate.max_abs_z()) << "\n";
        return kExitVerificationFailed;
    }
    std::cout << "PASS\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int seeds) {
    std::vector<CheckResult> results;
    const std::uint64_t seed = 0x5eedULL;
    if (suite == "identities") results = verify_identities(seed, seeds);
    else if (suite == "composition") results = verify_composition(seed, seeds);
    else if (suite == "hitting") results = verify_hitting();
    else if (suite == "ancilla") results = verify_ancilla(seed, std::max(1, seeds / 5));
    else if (suite == "all") results = verify_all(seed, seeds);
    else {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
    }
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass() ? "ok   " : "FAIL ") << r.name
                  << "  max residual " << io::format_double(r.residual)
                  << "  (tol " << io::format_double(r.tolerance) << ")\n";
        if (!r.pass() && ok) {
            ok = false;
        }
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_curve(const std::string& path, double x, double y) {
    try {
        const MultiInstrument multi = io::load_multi_instrument(path);
        if (multi.operators.size() != 2) {
            std::cerr << "curve: instrument must have two outcomes\n";
            return kExitUsage;
        }
        const Instrument instr = validate(multi.operators[0], multi.operators[1]);
        const OperatorCurve curve(instr);
        const ComplexMatrix m = curve.weak_op(x, y);
        std::cout << "M(" << io::format_double(x) << ", " << io::format_double(y)
                  << "):\n" << io::format_matrix(m);
        const WeaknessReport w = weakness(m);
        std::cout << "weakness scalar: (" << io::format_double(w.scalar.real())
                  << ", " << io::format_double(w.scalar.imag()) << ")\n";
        std::cout << "weakness deviation: " << io::format_double(w.deviation)
                  << "\n";
        if (instr.cls == InstrumentClass::General) {
            const auto polar = polar_decompose(m);
            std::cout << "polar unitarity defect: "
                      << io::format_double(
                             (polar.unitary.adjoint() * polar.unitary -
                              identity(instr.dim)).norm())
                      << "\n";
        }
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ClampExceeded& e) {
        std::cerr << "clamp violation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CompletenessViolation& e) {
        std::cerr << "invalid instrument: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose generalized quantum measurements into weak "
                 "measurement random walks"};
    app.require_subcommand(1);

    std::string instrument_path, suite;
    double x = 0.0, y = 0.0;
    int seeds = 20;
    SimulateOptions sim;

    auto* validate_cmd = app.add_subcommand("validate", "Validate an instrument file");
    validate_cmd->add_option("file", instrument_path)->required();

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a walk ensemble");
    simulate_cmd->add_option("--instrument", sim.instrument_path)->required();
    simulate_cmd->add_option("--state", sim.state_path);
    simulate_cmd->add_option("--epsilon", sim.epsilon);
    simulate_cmd->add_option("--threshold", sim.threshold);
    simulate_cmd->add_option("--trajectories", sim.trajectories)->required();
    simulate_cmd->add_option("--seed", sim.seed);
    simulate_cmd->add_option("--out", sim.out_path);
    simulate_cmd->add_flag("--log-steps", sim.log_steps);

    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--seeds", seeds);

    auto* curve_cmd = app.add_subcommand("curve", "Print a weak operator");
    curve_cmd->add_option("--instrument", instrument_path)->required();
    curve_cmd->add_option("--x", x)->required();
    curve_cmd->add_option("--y", y)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; real parse errors map to usage.
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(instrument_path);
        if (simulate_cmd->parsed()) return cmd_simulate(sim);
        if (verify_cmd->parsed()) return cmd_verify(suite, seeds);
        if (curve_cmd->parsed()) return cmd_curve(instrument_path, x, y);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
