#!/usr/bin/env python3
"""Runs every cliquemdl command and validates the reports against the schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    tool, schema_path, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    planted = str(data / "planted_n50_k12.txt")
    k5 = str(data / "k5.txt")
    with tempfile.TemporaryDirectory() as tmp:
        runs = [
            ["codelength", k5],
            ["codelength", k5, "--model", "gnm", "--clique", "0,1,2"],
            ["test", k5],
            ["test", planted, "--seeds", "50", "--seed", "1"],
            ["test", planted, "--model", "uniform,gnm,gnp:0.5", "--alpha", "0.01"],
            ["test", k5, "--search", "exact", "--model", "gnp:0.25"],
            ["mc-verify", "--n", "10", "--samples", "1000", "--ks", "1..4", "--seed", "0x10"],
            ["mc-verify", "--model", "gnm", "--n", "10", "--samples", "1000", "--m", "20"],
            ["sample", "--n", "10", "--count", "3", "--out-dir", tmp],
            ["sample", "--model", "gnm", "--n", "10", "--m", "12", "--plant", "4", "--out-dir", tmp],
        ]
        failures = 0
        for args in runs:
            proc = subprocess.run([tool, *args], capture_output=True, text=True)
            if proc.returncode != 0:
                print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
            if errors:
                failures += 1
                print(f"FAIL {' '.join(args)}: {errors[0].message}")
            else:
                print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
