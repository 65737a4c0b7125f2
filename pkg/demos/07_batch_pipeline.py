"""The batch pipeline end to end: problem JSON in, report JSON out.

The same run is available from the command line:

    padiclinv --input problem.json --report report.json --crosscheck 3

Attestations are explicit: the tool refuses to assume the global
hypotheses (C1, C2, C5, LGp) silently, and every convention switch is
echoed in the report so runs are reproducible byte for byte.
"""

import json
import tempfile
from pathlib import Path

from padiclinv.cli import canonical_json, crosscheck, main, parse_problem, run

problem = {
    "schema_version": "1",
    "prime": 5,
    "precision": 20,
    "representation": "spin",
    "genus": 2,
    "attestations": {"C1": True, "C2": True, "C5": True, "LGp": True},
    "conventions": {"filtration_variant": "prose", "steinberg_ratio": "q"},
    "primes_above_p": [
        {
            "label": "P1",
            "f": 1,
            "local_type": "steinberg",
            "weight": {"k": [[3, 4]], "k0": 8},
            "satake": {"alpha0": 1, "alphas": [2, 10]},
            "family": {
                "base": 3, "unit": 6,
                "exponents": {"k": 2}, "basepoint": {"k": 8},
            },
        },
        {
            "label": "P2",
            "f": 2,
            "local_type": "steinberg",
            "family": {
                "base": 7, "unit": 6,
                "exponents": {"k": 1}, "basepoint": {"k": 8},
            },
        },
    ],
}

# --- library API -------------------------------------------------------------

spec = parse_problem(problem)
report = run(spec)
print("exit code:", report["exit_code"])
print("trivial zeros:", report["trivial_zero_count"])
print("status:", report["status"], "| spherical factor:", report["spherical_factor"])
print("per-prime factors:")
for label, entry in sorted(report["primes"].items()):
    if "factor" in entry:
        print(f"  {label}: valuation {entry['factor'].get('valuation')} "
              f"(f = {entry['f']})")

# the finite-difference cross-check recomputes each family derivative
check = crosscheck(spec, 3)
print("\ncrosscheck discrepancy valuation:", check["max_discrepancy_valuation"])

# reports are canonical: running twice gives identical bytes
again = canonical_json(run(parse_problem(problem)))
print("byte-identical reruns:", canonical_json(report) == again)

# --- command-line round trip ---------------------------------------------------

with tempfile.TemporaryDirectory() as tmp:
    prob_path = Path(tmp) / "problem.json"
    rep_path = Path(tmp) / "report.json"
    prob_path.write_text(json.dumps(problem))
    code = main(["--input", str(prob_path), "--report", str(rep_path),
                 "--crosscheck", "3"])
    out = json.loads(rep_path.read_text())
    print("\nCLI exit:", code,
          "| crosscheck available:", out["crosscheck"]["available"])

# a raw (phi, N)-module problem goes through the filtration engine instead
phin_problem = {
    "schema_version": "1",
    "prime": 5,
    "precision": 20,
    "representation": "raw_phin",
    "attestations": {"C5": True},
    "primes_above_p": [
        {
            "label": "Q1",
            "f": 1,
            "local_type": "steinberg",
            "phin": {
                "phi": [["1/5", 0], [0, 1]],
                "n": [[0, 1], [0, 0]],
                "filtration": [[0, [[3, 1]]]],
                "regular_submodule": [[1, 0]],
            },
        }
    ],
}
phin_report = run(parse_problem(phin_problem))
print("\nraw module filtration:", phin_report["primes"]["Q1"]["filtration"])
