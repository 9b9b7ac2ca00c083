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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weakmeas/ancilla.hpp"
#include "weakmeas/curves.hpp"
#include "weakmeas/harness.hpp"
#include "weakmeas/verify.hpp"

namespace py = pybind11;
using namespace weakmeas;

namespace {

py::dict report_to_dict(const EnsembleReport& r) {
    py::dict d;
    d["n_trajectories"] = r.n_trajectories;
    d["aborted"] = r.aborted;
    d["outcome_counts"] = r.outcome_counts;
    d["empirical_freqs"] = r.empirical_freqs;
    d["target_probs"] = r.target_probs;
    d["z_scores"] = r.z_scores;
    d["mean_final_trace_distance"] = r.mean_final_trace_distance;
    d["max_final_trace_distance"] = r.max_final_trace_distance;
    d["mean_steps"] = r.mean_steps;
    d["wall_clock_seconds"] = r.wall_clock_seconds;
    return d;
}

WalkConfig make_config(double epsilon, double threshold, std::uint64_t max_steps,
                       std::uint64_t seed, double x0, bool log_steps) {
    WalkConfig c;
    c.epsilon = epsilon;
    c.threshold = threshold;
    c.max_steps = max_steps;
    c.seed = seed;
    c.x0 = x0;
    c.log_steps = log_steps;
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weak-measurement decomposition of generalized quantum measurements";

    py::register_exception<Error>(m, "WeakmeasError");

    py::enum_<InstrumentClass>(m, "InstrumentClass")
        .value("Projective", InstrumentClass::Projective)
        .value("Positive", InstrumentClass::Positive)
        .value("General", InstrumentClass::General);

    py::class_<Instrument>(m, "Instrument")
        .def_readonly("dim", &Instrument::dim)
        .def_readonly("m1", &Instrument::m1)
        .def_readonly("m2", &Instrument::m2)
        .def_readonly("cls", &Instrument::cls)
        .def_readonly("v1", &Instrument::v1)
        .def_readonly("v2", &Instrument::v2)
        .def_readonly("p1pos", &Instrument::p1pos)
        .def_readonly("p2pos", &Instrument::p2pos)
        .def_readonly("completeness_residual", &Instrument::completeness_residual);

    m.def("validate", &validate, py::arg("m1"), py::arg("m2"));
    m.def("weakness", [](const ComplexMatrix& mat) {
        const WeaknessReport w = weakness(mat);
        return py::make_tuple(w.scalar, w.deviation);
    });

    py::class_<OperatorCurve>(m, "OperatorCurve")
        .def(py::init<Instrument, double>(), py::arg("instrument"),
             py::arg("x_clamp") = OperatorCurve::kDefaultClamp)
        .def_property_readonly("dim", &OperatorCurve::dim)
        .def_property_readonly("cls", &OperatorCurve::cls)
        .def_property_readonly("a_eigs", &OperatorCurve::a_eigs)
        .def_property_readonly("b_eigs", &OperatorCurve::b_eigs)
        .def("proj_curve", &OperatorCurve::proj_curve, py::arg("x"))
        .def("ab_pair", &OperatorCurve::ab_pair, py::arg("x"))
        .def("block_unitary", &OperatorCurve::block_unitary, py::arg("x"))
        .def("weak_op", &OperatorCurve::weak_op, py::arg("x"), py::arg("y"))
        .def("effective_op", &OperatorCurve::effective_op, py::arg("x"))
        .def("unitary_interp", &OperatorCurve::unitary_interp, py::arg("x"));

    m.def("compose_constant", &compose_constant, py::arg("x"), py::arg("y"));
    m.def("hitting_prob_closed", &hitting_prob_closed, py::arg("x"), py::arg("X"));
    m.def("hitting_prob_oracle", &hitting_prob_oracle, py::arg("x0"), py::arg("X"),
          py::arg("epsilon"));
    m.def("trace_distance", &trace_distance, py::arg("rho"), py::arg("sigma"));
    m.def("polar_decompose", [](const ComplexMatrix& mat) {
        const PolarFactors f = polar_decompose(mat);
        return py::make_tuple(f.unitary, f.positive);
    });

    m.def(
        "run_trajectory",
        [](const OperatorCurve& curve, const ComplexMatrix& rho, double epsilon,
           double threshold, std::uint64_t seed, std::uint64_t index, double x0,
           bool log_steps, std::uint64_t max_steps) {
            const WalkConfig config = make_config(epsilon, threshold, max_steps,
                                                  seed, x0, log_steps);
            const TrajectoryRecord rec = run_trajectory(
                curve, QuantumState::from_density(rho), config, index);
            py::dict d;
            d["steps"] = rec.steps;
            d["final_x"] = rec.final_x;
            d["outcome"] = rec.outcome;
            d["final_state"] = rec.final_state.rho;
            d["seed_used"] = rec.seed_used;
            d["aborted"] = rec.aborted;
            if (log_steps) d["step_log"] = rec.step_log;
            return d;
        },
        py::arg("curve"), py::arg("rho"), py::arg("epsilon"), py::arg("threshold"),
        py::arg("seed") = 0, py::arg("index") = 0, py::arg("x0") = 0.0,
        py::arg("log_steps") = false, py::arg("max_steps") = 0);

    m.def(
        "run_ensemble",
        [](const OperatorCurve& curve, const ComplexMatrix& rho, double epsilon,
           double threshold, std::uint64_t n, std::uint64_t seed, double x0) {
            const WalkConfig config =
                make_config(epsilon, threshold, 0, seed, x0, false);
            return report_to_dict(run_ensemble(
                curve, QuantumState::from_density(rho), config, n));
        },
        py::arg("curve"), py::arg("rho"), py::arg("epsilon"), py::arg("threshold"),
        py::arg("n"), py::arg("seed") = 0, py::arg("x0") = 0.0);

    m.def(
        "compare_multi",
        [](const std::vector<ComplexMatrix>& operators, const ComplexMatrix& rho,
           double epsilon, double threshold, std::uint64_t n, std::uint64_t seed) {
            const WalkConfig config =
                make_config(epsilon, threshold, 0, seed, 0.0, false);
            return report_to_dict(compare_multi(
                validate_multi(operators), QuantumState::from_density(rho),
                config, n));
        },
        py::arg("operators"), py::arg("rho"), py::arg("epsilon"),
        py::arg("threshold"), py::arg("n"), py::arg("seed") = 0);

    m.def("binary_reduce_branches", [](const std::vector<ComplexMatrix>& operators) {
        const BinaryReduction red = binary_reduce(validate_multi(operators));
        std::vector<ComplexMatrix> branches;
        for (std::size_t j = 0; j < red.n_outcomes; ++j)
            branches.push_back(branch_operator(red, j));
        return branches;
    });

    m.def("extended_weak_op", [](const OperatorCurve& curve, double x, double y) {
        const auto blocks = ancilla::extended_weak_op(curve, x, y);
        return py::make_tuple(blocks.upper_left, blocks.upper_right,
                              blocks.lower_left, blocks.lower_right);
    });

    m.def("verify_all", [](std::uint64_t seed, int count) {
        py::list out;
        for (const auto& r : verify_all(seed, count))
            out.append(py::make_tuple(r.name, r.residual, r.tolerance, r.pass()));
        return out;
    }, py::arg("seed") = 0x5eed, py::arg("count") = 20);
}
