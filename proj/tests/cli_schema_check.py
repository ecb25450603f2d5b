#!/usr/bin/env python3
"""Runs every subcommand with --format json and validates the output."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

CASES = [
    ("gen", ["gen", "kst_plus", "--params", "3,3", "--format", "json"], 0),
    ("lambda", ["lambda", "C~"], 0),
    ("lambda", ["lambda", "--family", "split", "--k", "3", "--m", "300"], 0),
    ("profile", ["profile", "--family", "theta", "--params", "1,3,3"], 0),
    ("profile", ["profile", "--family", "four_layer", "--params", "5,2"], 0),
    ("profile", ["profile", "--family", "wheel_even", "--params", "2"], 0),
    ("search", ["search", "--forbid", "cycle:4", "--m", "7", "--bound", "2.7"], 2),
    ("search", ["search", "--forbid", "complete:3", "--m", "3", "--m-max", "5", "--stable-output"], 0),
    ("canon", ["canon", "DQc"], 0),
    ("verify-nikiforov", ["verify", "nosal", "--m-max", "6", "--format", "json"], 0),
    ("verify-nikiforov", ["verify", "nikiforov", "--r", "3", "--m-max", "6", "--format", "json"], 0),
    ("verify-c4", ["verify", "c4", "--format", "json"], 0),
    ("verify-structure", ["verify", "structure", "--forbid", "kst_plus:3,3", "--m", "6", "--m-max", "8",
                          "--k", "2", "--format", "json"], 0),
    ("verify-asymptotic", ["verify", "asymptotic", "--forbid", "kst_plus:3,3", "--params", "101,1001",
                           "--format", "json"], 0),
    ("verify-asymptotic", ["verify", "asymptotic", "--forbid", "cycle:4", "--params", "100",
                           "--format", "json"], 0),
    ("verify-table1", ["verify", "table1", "--format", "json"], 0),
    ("verify-stability", ["verify", "stability", "--params", "50", "--format", "json"], 0),
    ("verify-stability", ["verify", "stability", "Es\\o", "Es\\o", "--format", "json"], 0),
    ("verify-turan-bounds", ["verify", "turan-bounds", "--params", "12,4", "--format", "json"], 0),
    ("verify-blowup-sample", ["verify", "blowup-sample", "--params", "2,30,25,300", "--format", "json"], 0),
    ("verify-bn-conjecture", ["verify", "bn-conjecture", "--m-max", "5", "--format", "json"], 0),
]


def main() -> int:
    failures = 0
    for schema_name, args, want_code in CASES:
        schema = json.loads((SCHEMAS / f"{schema_name}.schema.json").read_text())
        proc = subprocess.run([BIN, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != want_code:
            print(f"FAIL {label}: exit {proc.returncode}, wanted {want_code}\n{proc.stderr}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {e}")
            failures += 1
            continue
        print(f"ok   {label}")
    print(f"{len(CASES) - failures}/{len(CASES)} outputs validate")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
