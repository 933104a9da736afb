import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from neuman_means import means
from neuman_means.errors import DomainError
from neuman_means.means import (
    MeanKind,
    MeanPair,
    NeumanKind,
    classical_mean,
    kernel,
    kernel_excess,
    neuman,
    neuman_mean,
    normalized_v,
    schwab_borchardt,
)
from neuman_means.verify import sample_pairs

positive = st.floats(min_value=1e-150, max_value=1e150, allow_nan=False, allow_infinity=False)
pairs = st.tuples(positive, positive)
# pairs far enough apart that strict mean inequalities survive rounding
distinct_pairs = pairs.filter(lambda p: abs(math.log(p[0] / p[1])) > 1e-6)

ALL_KINDS = list(MeanKind) + list(NeumanKind)


def evaluate(kind, a, b):
    if isinstance(kind, MeanKind):
        return classical_mean(kind, (a, b))
    return neuman_mean(kind, (a, b))


class TestMeanPair:
    @pytest.mark.parametrize("a,b", [(0, 1), (-1, 2), (math.inf, 1), (math.nan, 1), (1, 0.0)])
    def test_rejects(self, a, b):
        with pytest.raises(DomainError):
            MeanPair(a, b)

    def test_arrays_broadcast(self):
        p = MeanPair(np.array([1.0, 2.0]), 3.0)
        assert p.b.shape == (2,)

    def test_from_v(self):
        p = MeanPair.from_v(0.5)
        assert (p.a, p.b) == (1.5, 0.5)
        with pytest.raises(DomainError):
            MeanPair.from_v(1.0)


class TestClassical:
    def test_examples(self):
        assert classical_mean("G", (4, 1)) == 2
        assert classical_mean(MeanKind.ARITHMETIC, (1, 3)) == 2
        assert classical_mean("Q", (1, 7)) == 5

    @pytest.mark.parametrize("kind", list(MeanKind))
    def test_equal_arguments(self, kind):
        for c in (1e-300, 0.1, 3.0, 7e250):
            assert classical_mean(kind, (c, c)) == c

    def test_extreme_ratio(self):
        assert classical_mean("G", (1e-300, 1e300)) == pytest.approx(1.0, rel=1e-15)
        assert classical_mean("G", (5e-324, 1e308)) == pytest.approx(math.sqrt(5e-324) * 1e154, rel=1e-6)

    def test_no_overflow(self):
        big = 1e308
        assert classical_mean("Q", (big, big / 2)) == pytest.approx(big * math.sqrt(1.25 / 2), rel=1e-15)
        assert classical_mean("A", (big, big)) == big
        tiny = 5e-324 * 2**20
        assert classical_mean("G", (tiny, tiny * 4)) == pytest.approx(2 * tiny, rel=1e-12)

    @given(distinct_pairs)
    def test_ranges(self, p):
        a, b = p
        lo, hi = min(a, b), max(a, b)
        g, ar, q = (classical_mean(k, p) for k in MeanKind)
        assert lo < g < hi and lo < ar < hi
        assert ar < q < hi


class TestNormalizedV:
    def test_examples(self):
        assert normalized_v((2, 1)) == pytest.approx(1 / 3, rel=1e-16)
        assert normalized_v((5, 5)) == 0
        assert normalized_v((3, 1)) == 0.5

    @given(pairs, st.sampled_from([2.0**-20, 0.5, 8.0, 2.0**30]))
    def test_scale_invariant(self, p, lam):
        assert normalized_v((p[0] * lam, p[1] * lam)) == normalized_v(p)


class TestSchwabBorchardt:
    def test_examples(self):
        assert schwab_borchardt(1, 2) == pytest.approx(3 * math.sqrt(3) / math.pi, rel=1e-15)
        assert schwab_borchardt(2, 1) == pytest.approx(float(oracle.SB(2, 1)), rel=1e-15)
        assert schwab_borchardt(3, 3) == 3

    def test_not_symmetric(self):
        assert schwab_borchardt(1, 2) != pytest.approx(schwab_borchardt(2, 1))

    @pytest.mark.parametrize(
        "a,b", [(1, 1 + 1e-12), (1 + 1e-9, 1), (1e-5, 1), (1, 1e-5), (3.5, 2.25), (0.01, 0.011), (1e200, 3e199)]
    )
    def test_against_oracle(self, a, b):
        assert schwab_borchardt(a, b) == pytest.approx(float(oracle.SB(a, b)), rel=2e-15)

    @given(distinct_pairs)
    def test_between(self, p):
        a, b = p
        assert min(a, b) < schwab_borchardt(a, b) < max(a, b)

    def test_domain(self):
        with pytest.raises(DomainError):
            schwab_borchardt(0, 1)


class TestNeuman:
    def test_examples(self):
        assert neuman(1, 1) == 1
        assert neuman(1.5, math.sqrt(2)) == pytest.approx(float(oracle.neuman_closed("AG", 2, 1)), rel=1e-15)
        assert neuman(math.sqrt(2.5), 1.5) == pytest.approx(float(oracle.neuman_closed("QA", 2, 1)), rel=1e-15)

    @pytest.mark.parametrize("a,b", [(2, 1), (1, 2), (1, 1e-4), (1e-4, 1), (10, 10.001)])
    def test_against_oracle(self, a, b):
        assert neuman(a, b) == pytest.approx(float(oracle.N(a, b)), rel=2e-15)


class TestKernel:
    def test_examples(self):
        assert kernel("asin", 0) == 1
        assert kernel("atanh", 0.5) == pytest.approx(math.log(3), rel=1e-15)
        assert kernel("atan", 1) == pytest.approx(math.pi / 4, rel=1e-16)

    @pytest.mark.parametrize("kind", ["asin", "atanh", "asinh", "atan"])
    def test_relative_error(self, kind):
        f = {"asin": oracle.mp.asin, "atanh": oracle.mp.atanh, "asinh": oracle.mp.asinh, "atan": oracle.mp.atan}[kind]
        v = np.concatenate([np.geomspace(1e-9, 0.999, 400), [0.9999999]])
        got = kernel(kind, v)
        exp = np.array([float(f(oracle.mp.mpf(x)) / x) for x in v])
        assert np.max(np.abs(got / exp - 1)) <= 1e-15

    @pytest.mark.parametrize("kind", ["asin", "atanh", "asinh", "atan"])
    def test_series_meets_direct_at_switch(self, kind):
        v = means.SERIES_THRESHOLD * (1 + 1e-9)
        direct = float(means._KERNEL_DIRECT[kind](v) / v)
        below = kernel(kind, means.SERIES_THRESHOLD * (1 - 1e-9))
        assert kernel(kind, v) == pytest.approx(direct, rel=1e-14)
        assert below == pytest.approx(direct, rel=1e-14)

    def test_threshold_is_overridable(self, monkeypatch):
        monkeypatch.setattr(means, "SERIES_THRESHOLD", 0.0)
        assert math.isnan(kernel("asin", 0.0))

    def test_monotone(self):
        v = np.linspace(0, 0.99, 2000)
        for kind, sign in (("asin", 1), ("atanh", 1), ("asinh", -1), ("atan", -1)):
            assert np.all(sign * np.diff(kernel(kind, v)) > 0)

    @pytest.mark.parametrize("kind,v", [("asin", -0.1), ("atanh", 1.0), ("atan", 1.5), ("nope", 0.1)])
    def test_domain(self, kind, v):
        with pytest.raises(DomainError):
            kernel(kind, v)

    @pytest.mark.parametrize("kind", ["asin", "atanh", "asinh", "atan"])
    def test_excess(self, kind):
        f = {"asin": oracle.mp.asin, "atanh": oracle.mp.atanh, "asinh": oracle.mp.asinh, "atan": oracle.mp.atan}[kind]
        v = np.geomspace(1e-8, 0.99, 300)
        exp = np.array([float(f(oracle.mp.mpf(x)) / x - 1) for x in v])
        assert np.max(np.abs(kernel_excess(kind, v) / exp - 1)) < 1e-14


class TestNeumanMean:
    def test_examples(self):
        assert neuman_mean("GA", (2, 1)) == pytest.approx(float(oracle.neuman_closed("GA", 2, 1)), rel=1e-15)
        assert neuman_mean("AQ", (2, 1)) == pytest.approx(float(oracle.neuman_closed("AQ", 2, 1)), rel=1e-15)
        # quoted values are truncated to six places
        assert math.floor(neuman_mean("GA", (2, 1)) * 1e6) == 1471739
        assert math.floor(neuman_mean("AQ", (2, 1)) * 1e6) == 1554376
        for c in (1e-200, 0.3, 17.0, 1e200):
            assert neuman_mean("AG", (c, c)) == c

    @pytest.mark.parametrize("kind", list(NeumanKind))
    @pytest.mark.parametrize("a,b", [(2, 1), (1, 1.0000001), (1e6, 1), (3.25, 0.5), (1, 1e-9), (1, 2.0**60)])
    def test_against_oracle(self, kind, a, b):
        assert neuman_mean(kind, (a, b)) == pytest.approx(float(oracle.neuman_closed(kind, a, b)), rel=2e-15)

    @pytest.mark.parametrize(
        "kind,limit",
        [
            ("GA", math.pi / 4),
            ("AG", 0.5),
            ("QA", (math.sqrt(2) + math.asinh(1)) / 2),
            ("AQ", 0.5 + math.pi / 4),
        ],
    )
    def test_ratio_beyond_double_range(self, kind, limit):
        # 1 - v underflows; N/A takes its v = 1 value
        assert neuman_mean(kind, (1e-300, 1e300)) == pytest.approx(5e299 * limit, rel=1e-15)

    def test_composition(self):
        p = sample_pairs(7, 0, 10_000)
        for kind in NeumanKind:
            m1, m2 = (classical_mean(k, p) for k in kind.arguments)
            np.testing.assert_allclose(neuman_mean(kind, p), neuman(m1, m2), rtol=1e-12, atol=0)


class TestInvariants:
    @given(pairs, st.sampled_from(ALL_KINDS))
    def test_symmetry(self, p, kind):
        a, b = p
        assert evaluate(kind, a, b) == evaluate(kind, b, a)

    @settings(max_examples=200)
    @given(st.tuples(st.floats(1e-100, 1e100), st.floats(1e-100, 1e100)), st.sampled_from(ALL_KINDS))
    def test_homogeneity(self, p, kind):
        a, b = p
        base = evaluate(kind, a, b)
        for lam in (1e-6, 1.0, 1e6):
            assert evaluate(kind, lam * a, lam * b) == pytest.approx(lam * base, rel=1e-14)

    @given(distinct_pairs, st.sampled_from(list(NeumanKind)))
    def test_mean_property(self, p, kind):
        a, b = p
        assert min(a, b) < neuman_mean(kind, p) < max(a, b)

    @given(distinct_pairs)
    def test_chain(self, p):
        order = ["G", "AG", "GA", "A", "QA", "AQ", "Q"]
        vals = [classical_mean(k, p) if len(k) == 1 else neuman_mean(k, p) for k in order]
        assert all(x < y for x, y in zip(vals, vals[1:]))

    @pytest.mark.parametrize("a", [1e-6, 1.0, 1e6])
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_near_equality(self, a, kind):
        b = a * (1 + 1e-13)
        value = evaluate(kind, a, b)
        assert math.isfinite(value)
        assert value == pytest.approx(a, rel=1e-10)
