"""Runs qweyl with --format json and validates each report against the schema.

usage: check_reports.py <qweyl binary> <schema file>
Exits 0 when every report validates and every exit code matches its summary.
"""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["check", "--algebra", "qheis1", "p x - q x p = -i"],
    ["check", "--algebra", "qheis1", "p x - q x p = i"],
    ["normalize", "--algebra", "qheis3", "i [p, x]", "x~ p^2"],
    ["confluence", "--algebra", "heisenberg:n=2", "--maxlen", "4"],
    ["confluence", "--algebra", "qheis5:variant=printed", "--maxlen", "4"],
    ["verify", "qheis5-realization", "--order", "6", "--variant", "printed"],
    ["verify", "qheis5-realization", "--order", "4"],
    ["verify", "osc-map", "--dim", "16"],
    ["verify", "momentum-rep", "--levels", "4"],
    ["verify", "momentum-rep", "--levels", "4", "--float", "--q", "1.3", "--pi0", "1.1"],
    ["verify", "remark1", "--sweep", "3"],
    ["verify", "soq"],
    ["verify", "inner-derivations", "--trials", "4"],
    ["verify", "confluence", "--maxlen", "4"],
    ["rep", "--algebra", "qoscillator", "--dim", "6", "--dump"],
    ["rep", "--algebra", "qheis5", "--levels", "3", "--dump"],
    ["rmatrix-validate", "@DATA@/so3.rmat"],
]


def main():
    qweyl, schema_path = sys.argv[1], sys.argv[2]
    data_dir = schema_path.rsplit("/", 1)[0]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for cmd in COMMANDS:
        cmd = [c.replace("@DATA@", data_dir) for c in cmd]
        runs = [subprocess.run([qweyl, "--format", "json", *cmd], capture_output=True, text=True) for _ in range(2)]
        proc = runs[0]
        label = " ".join(cmd)
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError:
            print(f"FAIL {label}: not JSON (exit {proc.returncode}): {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: e.path)
        expected_code = 0 if report["summary"]["failed"] == 0 else 1
        problems = [e.message for e in errors]
        if proc.returncode != expected_code:
            problems.append(f"exit {proc.returncode}, summary implies {expected_code}")
        if runs[1].stdout != proc.stdout:
            problems.append("output differs between identical runs")
        if problems:
            print(f"FAIL {label}: {'; '.join(problems)}")
            failures += 1
        else:
            print(f"ok   {label} (exit {proc.returncode})")
    for bad in (["verify", "nosuch"], ["check", "--algebra", "qheis1", "p x +"]):
        proc = subprocess.run([qweyl, *bad], capture_output=True, text=True)
        ok = proc.returncode == 2
        print(f"{'ok  ' if ok else 'FAIL'} {' '.join(bad)} (exit {proc.returncode}, usage error expected)")
        failures += 0 if ok else 1
    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
