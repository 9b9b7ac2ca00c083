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

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

#include "weakmeas/io.hpp"
#include "weakmeas/sampler.hpp"

using namespace weakmeas;
using nlohmann::json;

TEST_CASE("matrix json round-trip") {
    SplitMix64 rng(2);
    for (int dim = 2; dim <= 4; ++dim) {
        const ComplexMatrix m = sampler::random_matrix(dim, rng);
        const ComplexMatrix back =
            io::matrix_from_json(io::matrix_to_json(m), dim);
        CHECK((back - m).norm() < 1e-15);
    }
}

TEST_CASE("matrix_from_json rejects malformed entries") {
    CHECK_THROWS_AS(io::matrix_from_json(json::array({1, 2, 3, 4}), 2),
                    ParseError);
    json wrong_count = json::array();
    wrong_count.push_back({1.0, 0.0});
    CHECK_THROWS_AS(io::matrix_from_json(wrong_count, 2), ParseError);
    json bad_pair = json::array();
    for (int i = 0; i < 4; ++i) bad_pair.push_back({1.0, 0.0, 0.0});
    CHECK_THROWS_AS(io::matrix_from_json(bad_pair, 2), ParseError);
}

TEST_CASE("parse_multi_instrument accepts a projective qubit pair") {
    json j;
    j["dimension"] = 2;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(0, 0) = 1.0;
    ComplexMatrix p2 = ComplexMatrix::Zero(2, 2);
    p2(1, 1) = 1.0;
    j["operators"] = {io::matrix_to_json(p1), io::matrix_to_json(p2)};
    const MultiInstrument multi = io::parse_multi_instrument(j);
    CHECK(multi.dim == 2);
    CHECK(multi.operators.size() == 2);
    CHECK((multi.operators[0] - p1).norm() < 1e-15);
}

TEST_CASE("parse_multi_instrument error paths") {
    json j;
    j["operators"] = json::array();
    CHECK_THROWS_AS(io::parse_multi_instrument(j), ParseError);  // no dimension
    j["dimension"] = 2;
    CHECK_THROWS_AS(io::parse_multi_instrument(j), ParseError);  // < 2 operators
    // Incomplete pair fails validation, not parsing.
    ComplexMatrix half = 0.5 * identity(2);
    j["operators"] = {io::matrix_to_json(half), io::matrix_to_json(half)};
    CHECK_THROWS_AS(io::parse_multi_instrument(j), CompletenessViolation);
}

TEST_CASE("parse_state density and pure forms") {
    json j;
    j["dimension"] = 2;
    j["rho"] = io::matrix_to_json((identity(2) / 2.0).eval());
    const QuantumState mixed = io::parse_state(j);
    CHECK(mixed.rho(0, 0).real() == doctest::Approx(0.5));

    json p;
    p["dimension"] = 2;
    p["psi"] = {json::array({std::sqrt(0.3), 0.0}),
                json::array({std::sqrt(0.7), 0.0})};
    const QuantumState pure = io::parse_state(p);
    CHECK(pure.rho(1, 1).real() == doctest::Approx(0.7));

    json bad;
    bad["dimension"] = 2;
    CHECK_THROWS_AS(io::parse_state(bad), ParseError);
    bad["psi"] = {json::array({1.0, 0.0})};  // wrong length
    CHECK_THROWS_AS(io::parse_state(bad), ParseError);
}

TEST_CASE("load_multi_instrument round-trips through a file") {
    SplitMix64 rng(8);
    const MultiInstrument multi = sampler::random_multi(3, 3, rng);
    json j;
    j["dimension"] = 3;
    j["operators"] = json::array();
    for (const auto& op : multi.operators)
        j["operators"].push_back(io::matrix_to_json(op));
    const std::string path = "io_roundtrip_instrument.json";
    std::ofstream(path) << j.dump(2);
    const MultiInstrument back = io::load_multi_instrument(path);
    REQUIRE(back.operators.size() == multi.operators.size());
    for (std::size_t k = 0; k < multi.operators.size(); ++k)
        CHECK((back.operators[k] - multi.operators[k]).norm() < 1e-15);
    std::remove(path.c_str());
}

TEST_CASE("load_multi_instrument error paths") {
    CHECK_THROWS_AS(io::load_multi_instrument("does_not_exist.json"), ParseError);
    const std::string path = "io_bad_syntax.json";
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(io::load_multi_instrument(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("report_to_json carries every field") {
    EnsembleReport report;
    report.n_trajectories = 100;
    report.aborted = 1;
    report.outcome_counts = {60, 39};
    report.empirical_freqs = {60.0 / 99.0, 39.0 / 99.0};
    report.target_probs = {0.6, 0.4};
    report.z_scores = {0.2, -0.2};
    report.mean_final_trace_distance = {1e-4, 2e-4};
    report.max_final_trace_distance = {3e-4, 5e-4};
    report.mean_steps = 123.5;
    report.wall_clock_seconds = 0.25;
    const json j = io::report_to_json(report);
    CHECK(j["nTrajectories"] == 100);
    CHECK(j["aborted"] == 1);
    CHECK(j["outcomeCounts"][0] == 60);
    CHECK(j["targetProbs"][1].get<double>() == doctest::Approx(0.4));
    CHECK(j["zScores"][0].get<double>() == doctest::Approx(0.2));
    CHECK(j["meanFinalStateTraceDistance"][1].get<double>() ==
          doctest::Approx(2e-4));
    CHECK(j["maxFinalStateTraceDistance"][0].get<double>() ==
          doctest::Approx(3e-4));
    CHECK(j["meanSteps"].get<double>() == doctest::Approx(123.5));
    CHECK(j["wallClock"].get<double>() >= 0.0);
}

TEST_CASE("trajectory_to_json shape") {
    TrajectoryRecord rec;
    rec.steps = 12;
    rec.final_x = -4.0;
    rec.outcome = 1;
    rec.seed_used = 777;
    const json j = io::trajectory_to_json(rec, 5);
    CHECK(j["index"] == 5);
    CHECK(j["steps"] == 12);
    CHECK(j["finalX"].get<double>() == doctest::Approx(-4.0));
    CHECK(j["outcome"] == 1);
    CHECK(j["seedUsed"] == 777);
    CHECK(j["aborted"] == false);
    CHECK(!j.contains("stepLog"));

    rec.step_log = {1, -1, 1};
    const json with_log = io::trajectory_to_json(rec, 6);
    CHECK(with_log["stepLog"].size() == 3);
}

TEST_CASE("format_double uses 12 significant digits") {
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(io::format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_matrix(identity(1)) == "  (1, 0)\n");
}
