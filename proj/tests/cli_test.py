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

"""End-to-end checks of the weakmeas command line binary."""

import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = sys.argv[1]

failures = 0


def run(*args):
    return subprocess.run(
        [BINARY, *args], capture_output=True, text=True, timeout=600
    )


def check(name, ok, detail=""):
    global failures
    print(("ok   " if ok else "FAIL ") + name + ("  " + detail if detail else ""))
    if not ok:
        failures += 1


def matrix(rows):
    out = []
    for row in rows:
        for entry in row:
            if isinstance(entry, complex):
                out.append([entry.real, entry.imag])
            else:
                out.append([float(entry), 0.0])
    return out


def write_json(directory, name, payload):
    path = Path(directory) / name
    path.write_text(json.dumps(payload))
    return str(path)


def main():
    tmp = tempfile.mkdtemp(prefix="weakmeas_cli_")

    projective = write_json(
        tmp,
        "projective.json",
        {
            "dimension": 2,
            "operators": [matrix([[1, 0], [0, 0]]), matrix([[0, 0], [0, 1]])],
        },
    )
    incomplete = write_json(
        tmp,
        "incomplete.json",
        {
            "dimension": 2,
            "operators": [
                matrix([[0.99, 0], [0, 0]]),
                matrix([[0, 0], [0, 0.99]]),
            ],
        },
    )
    malformed = Path(tmp) / "malformed.json"
    malformed.write_text("{ not json at all")

    r = run("validate", projective)
    check(
        "validate accepts a projective instrument",
        r.returncode == 0 and "class: projective" in r.stdout.lower(),
        r.stdout.strip().replace("\n", " | "),
    )

    r = run("validate", incomplete)
    check(
        "validate rejects an incomplete pair with exit 1",
        r.returncode == 1 and "residual" in r.stdout,
    )

    r = run("validate", str(malformed))
    check("validate reports malformed JSON with exit 2", r.returncode == 2)

    r = run("simulate", "--instrument", projective, "--trajectories", "0")
    check("simulate with zero trajectories is a usage error", r.returncode == 2)

    r = run(
        "simulate",
        "--instrument",
        projective,
        "--epsilon",
        "0.1",
        "--threshold",
        "25",
        "--trajectories",
        "100",
    )
    check("simulate with threshold beyond the clamp is a usage error",
          r.returncode == 2)

    state = write_json(
        tmp,
        "state.json",
        {"dimension": 2, "psi": [[math.sqrt(0.3), 0.0], [math.sqrt(0.7), 0.0]]},
    )
    report_path = str(Path(tmp) / "report.json")
    r = run(
        "simulate",
        "--instrument",
        projective,
        "--state",
        state,
        "--epsilon",
        "0.2",
        "--threshold",
        "4",
        "--trajectories",
        "2000",
        "--seed",
        "7",
        "--out",
        report_path,
    )
    check("simulate runs a projective ensemble", r.returncode == 0, r.stdout.splitlines()[-1] if r.stdout else "")
    report = json.loads(Path(report_path).read_text())
    check(
        "simulate report carries Born targets",
        abs(report["targetProbs"][0] - 0.3) < 1e-9
        and report["nTrajectories"] == 2000
        and report["aborted"] == 0,
    )
    lines = Path(report_path + ".jsonl").read_text().splitlines()
    first = json.loads(lines[0])
    check(
        "trajectory log has one record per trajectory",
        len(lines) == 2000 and first["outcome"] in (1, 2) and first["steps"] > 0,
    )

    # Determinism: identical invocation, identical report.
    report2_path = str(Path(tmp) / "report2.json")
    run(
        "simulate",
        "--instrument",
        projective,
        "--state",
        state,
        "--epsilon",
        "0.2",
        "--threshold",
        "4",
        "--trajectories",
        "2000",
        "--seed",
        "7",
        "--out",
        report2_path,
    )
    second = json.loads(Path(report2_path).read_text())
    check(
        "simulate is deterministic for a fixed seed",
        report["outcomeCounts"] == second["outcomeCounts"]
        and report["meanSteps"] == second["meanSteps"],
    )

    # Three-outcome instrument goes through the reduction path.
    r = 1.0 / math.sqrt(3.0)
    trine = write_json(
        tmp,
        "trine.json",
        {
            "dimension": 2,
            "operators": [
                matrix([[r, 0], [0, r]]),
                matrix([[r, 0], [0, r]]),
                matrix([[r, 0], [0, r]]),
            ],
        },
    )
    res = run(
        "simulate",
        "--instrument",
        trine,
        "--epsilon",
        "0.2",
        "--threshold",
        "4",
        "--trajectories",
        "1500",
        "--seed",
        "3",
    )
    check(
        "simulate handles a three-outcome instrument",
        res.returncode == 0 and "PASS" in res.stdout,
    )

    res = run("curve", "--instrument", projective, "--x", "0", "--y", "0")
    check(
        "curve at y = 0 prints the identity over sqrt(2)",
        res.returncode == 0 and "0.707106781187" in res.stdout,
    )

    res = run("curve", "--instrument", projective, "--x", "30", "--y", "0")
    check("curve beyond the clamp is a usage error", res.returncode == 2)

    for suite in ("identities", "composition", "hitting", "ancilla"):
        res = run("verify", suite, "--seeds", "10")
        check(f"verify {suite} passes", res.returncode == 0 and "FAIL" not in res.stdout)

    res = run("verify", "no_such_suite")
    check("verify with an unknown suite is a usage error", res.returncode == 2)

    res = run("--help")
    check("--help exits 0", res.returncode == 0)

    print(f"{failures} failure(s)")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
