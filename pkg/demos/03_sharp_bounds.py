#!/usr/bin/env python3
"""Sharp power and harmonic bounds, and how the bounded ratios creep toward their constants."""

import numpy as np

from neuman_means import (
    BoundFamily,
    MeanPair,
    NeumanKind,
    bound_envelope,
    exponent_ratio,
    harmonic_weight,
    linear_envelope,
    neuman_mean,
    sharp_parameters,
)


def main() -> None:
    for kind in NeumanKind:
        for family in BoundFamily:
            p = sharp_parameters(kind, family)
            print(f"{kind.value}/{family.value:<8}  alpha = {p.alpha:.6f} ({p.alpha_symbolic})")
            print(f"{'':12}beta  = {p.beta:.6f} ({p.beta_symbolic})")

    pair = (2.0, 1.0)
    n = neuman_mean("GA", pair)
    for family in BoundFamily:
        env = bound_envelope("GA", family, pair)
        print(f"GA/{family.value} at (2, 1): {env.lower:.9f} < {n:.9f} < {env.upper:.9f}")
    lin = linear_envelope("GA", pair)
    print(f"GA/linear   at (2, 1): {lin.lower:.9f} < {n:.9f} < {lin.upper:.9f}")

    # the constants are only reached in the limits v -> 0 and v -> 1
    v = np.array([1e-1, 1e-2, 1e-4, 1e-6, 0.9, 0.99, 0.9999, 0.999999])
    pair = MeanPair.from_v(v)
    print("AQ ratio runs from 2/3 to 0.724431, QA weight from 1/3 to 0.439625")
    print(f"{'v':<10} {'AQ ratio':<12} QA weight")
    for row in zip(v, exponent_ratio("AQ", pair), harmonic_weight("QA", pair)):
        print("{:<10g} {:<12.9f} {:.9f}".format(*row))


if __name__ == "__main__":
    main()
