#!/usr/bin/env python3
"""f1..f4: values, endpoint limits and the exact series coefficients behind f2 and f4."""

import math

import numpy as np

from neuman_means import coeff_ratio_increment, lemma_eval, lemma_limits, series_coeff


def main() -> None:
    x_half_pi = np.array([1e-8, 0.1, 0.5, math.pi / 4, 1.2, 1.5, math.pi / 2])
    x_open = np.array([1e-8, 0.1, 0.5, math.log(1 + math.sqrt(2)), 2.0, 10.0, 100.0])
    print("x            f1           f3")
    for x, f1, f3 in zip(x_half_pi, lemma_eval("F1", x_half_pi), lemma_eval("F3", x_half_pi)):
        print(f"{x:<12.6g} {f1:<12.9f} {f3:.9f}")
    print("x            f2           f4")
    for x, f2, f4 in zip(x_open, lemma_eval("F2", x_open), lemma_eval("F4", x_open)):
        print(f"{x:<12.6g} {f2:<12.9f} {f4:.9f}")

    for lemma in ("F1", "F2", "F3", "F4"):
        lo, hi = lemma_limits(lemma)
        print(f"{lemma}: limits {lo} at 0+, {hi} at the right end")

    # a_n / b_n increases in n; the increments are exact rationals
    for lemma in ("F2", "F4"):
        print(f"{lemma} series:")
        for n in range(4):
            a, b = series_coeff(lemma, n)
            print(f"  n={n}  a/b = {a / b}  increment = {coeff_ratio_increment(lemma, n)}")


if __name__ == "__main__":
    main()
