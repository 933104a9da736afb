#!/usr/bin/env python3
"""The seven means at a few pairs, and what happens at the numerical edges."""

import math

from neuman_means import classical_mean, neuman, neuman_mean, schwab_borchardt

CHAIN = ["G", "AG", "GA", "A", "QA", "AQ", "Q"]


def value(name, a, b):
    if len(name) == 1:
        return classical_mean(name, (a, b))
    return neuman_mean(name, (a, b))


def main() -> None:
    for a, b in [(2.0, 1.0), (1.0, 1e-3), (1e300, 1.0)]:
        vals = [value(name, a, b) for name in CHAIN]
        print(f"a={a:g} b={b:g}")
        for name, x in zip(CHAIN, vals):
            print(f"  {name:>2} = {x:.15g}")
        print(f"  ordered: {all(x < y for x, y in zip(vals, vals[1:]))}")

    # SB is not symmetric, N is built on it
    print(f"SB(1, 2) = {schwab_borchardt(1, 2):.15g}   (3*sqrt(3)/pi = {3 * math.sqrt(3) / math.pi:.15g})")
    print(f"SB(2, 1) = {schwab_borchardt(2, 1):.15g}")
    print(f"N(A, G) at (2, 1) = {neuman(1.5, math.sqrt(2)):.15g} = N_AG(2, 1) = {neuman_mean('AG', (2, 1)):.15g}")

    # a naive 0/0 formula would return nan here
    a = 1.0
    b = a * (1 + 1e-13)
    print("b = a(1 + 1e-13):")
    for name in CHAIN:
        print(f"  {name:>2}: relative distance from a = {abs(value(name, a, b) / a - 1):.2e}")


if __name__ == "__main__":
    main()
