#!/usr/bin/env python3
"""Run the verification suites, then show that a wrong constant is caught."""

import json

from neuman_means.bounds import sharp_parameters
from neuman_means.verify import GridSpec, run_suites, verify_sharp_bounds


def main() -> None:
    reports = run_suites(samples=20_000, seed=42, grid=GridSpec(count=4000), grid_points=4000, n_max=50)
    for r in reports:
        margin = "n/a" if r.min_margin == float("inf") else f"{r.min_margin:.2e}"
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<20} checks={r.checks_run:<7} min_margin={margin}")

    # nudging both constants inward by 0.01 has to break containment near the ends
    bad = sharp_parameters("AQ", "power").shifted(0.01, -0.01)
    r = verify_sharp_bounds("AQ", "power", params=bad)
    print(f"negative control: {r.violations} violations out of {r.checks_run} checks")

    print(json.dumps(verify_sharp_bounds("AQ", "power").details["sharpness"], indent=2))


if __name__ == "__main__":
    main()
