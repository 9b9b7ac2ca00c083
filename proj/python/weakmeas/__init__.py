# Copyright 2026 The weakmeas authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Decompose generalized quantum measurements into weak-measurement walks."""

from weakmeas._core import (
    Instrument,
    InstrumentClass,
    OperatorCurve,
    WeakmeasError,
    binary_reduce_branches,
    compare_multi,
    compose_constant,
    extended_weak_op,
    hitting_prob_closed,
    hitting_prob_oracle,
    polar_decompose,
    run_ensemble,
    run_trajectory,
    trace_distance,
    validate,
    verify_all,
    weakness,
)

__all__ = [
    "Instrument",
    "InstrumentClass",
    "OperatorCurve",
    "WeakmeasError",
    "binary_reduce_branches",
    "compare_multi",
    "compose_constant",
    "extended_weak_op",
    "hitting_prob_closed",
    "hitting_prob_oracle",
    "polar_decompose",
    "run_ensemble",
    "run_trajectory",
    "trace_distance",
    "validate",
    "verify_all",
    "weakness",
]
