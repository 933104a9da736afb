"""Classical means, the Schwab-Borchardt mean and the four Neuman means.

Every function here accepts scalars or numpy arrays (broadcast together) and
returns a Python float for scalar input.  Two numerical devices are used
throughout:

* Inputs are rescaled by a power of two close to ``max(a, b)`` before any
  squaring, so nothing overflows or underflows for finite positive input and
  the rescaling itself is exact.
* All Neuman means are written in the normalized variable
  ``v = |a - b| / (a + b)``.  The factors ``f(v)/v`` that appear there have a
  removable singularity at ``v = 0`` and are evaluated from their Maclaurin
  series below :data:`SERIES_THRESHOLD`.

Means are extended continuously to ``a == b`` (every mean returns ``a``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError

ArrayLike = Union[float, np.ndarray]

#: Below this ``v`` the kernels ``f(v)/v`` use their Maclaurin series.
SERIES_THRESHOLD = 1e-3


class MeanKind(str, enum.Enum):
    GEOMETRIC = "G"
    ARITHMETIC = "A"
    QUADRATIC = "Q"


class NeumanKind(str, enum.Enum):
    """Which classical means feed the Neuman mean ``N(x, y)``.

    ``AG`` is ``N(A, G)``, ``GA`` is ``N(G, A)`` and so on.
    """

    GA = "GA"
    AG = "AG"
    QA = "QA"
    AQ = "AQ"

    @property
    def inner(self) -> MeanKind:
        """The smaller of the two classical means bracketing this Neuman mean."""
        return MeanKind.GEOMETRIC if self in (NeumanKind.GA, NeumanKind.AG) else MeanKind.ARITHMETIC

    @property
    def outer(self) -> MeanKind:
        return MeanKind.ARITHMETIC if self in (NeumanKind.GA, NeumanKind.AG) else MeanKind.QUADRATIC

    @property
    def arguments(self) -> tuple[MeanKind, MeanKind]:
        """The classical means passed to :func:`neuman`, in order."""
        return MeanKind(self.value[0]), MeanKind(self.value[1])


def _finish(x):
    x = np.asarray(x, dtype=float)
    return float(x) if x.ndim == 0 else x


def _check_positive(name: str, x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or not np.all(arr > 0):
        raise DomainError(f"{name} must be strictly positive and finite, got {x!r}")
    return arr


@dataclass(frozen=True)
class MeanPair:
    """A validated pair of strictly positive, finite reals.

    ``a`` and ``b`` may be arrays, in which case they are broadcast together
    and every function taking a pair evaluates elementwise.
    """

    a: ArrayLike
    b: ArrayLike

    def __post_init__(self):
        a = _check_positive("a", self.a)
        b = _check_positive("b", self.b)
        a, b = np.broadcast_arrays(a, b)
        object.__setattr__(self, "a", _finish(a))
        object.__setattr__(self, "b", _finish(b))

    @classmethod
    def from_v(cls, v: ArrayLike, arithmetic: ArrayLike = 1.0) -> "MeanPair":
        """The pair ``(A(1+v), A(1-v))`` with arithmetic mean ``A`` and parameter ``v``."""
        v = np.asarray(v, dtype=float)
        if np.any((v < 0) | (v >= 1)):
            raise DomainError("v must lie in [0, 1)")
        return cls(arithmetic * (1 + v), arithmetic * (1 - v))

    def swapped(self) -> "MeanPair":
        return MeanPair(self.b, self.a)

    @property
    def v(self):
        return normalized_v(self)


def _as_pair(pair) -> MeanPair:
    if isinstance(pair, MeanPair):
        return pair
    a, b = pair
    return MeanPair(a, b)


def _scaled(a, b):
    """Split ``(a, b)`` into a power-of-two exponent and mantissas at most 1."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _, e = np.frexp(np.maximum(a, b))
    return np.ldexp(a, -e), np.ldexp(b, -e), e


def classical_mean(kind: MeanKind | str, pair) -> ArrayLike:
    """Geometric, arithmetic or quadratic mean of a pair."""
    kind = MeanKind(kind)
    pair = _as_pair(pair)
    x, y, e = _scaled(pair.a, pair.b)
    if kind is MeanKind.GEOMETRIC:
        prod = x * y
        if np.any(prod < np.finfo(float).tiny):
            # a/b beyond ~1e308: the scaled product underflows, the square roots never do
            wide = np.sqrt(np.asarray(pair.a, dtype=float)) * np.sqrt(np.asarray(pair.b, dtype=float))
            return _finish(np.where(prod < np.finfo(float).tiny, wide, np.ldexp(np.sqrt(prod), e)))
        m = np.sqrt(prod)
    elif kind is MeanKind.ARITHMETIC:
        m = (x + y) / 2
    else:
        m = np.sqrt((x * x + y * y) / 2)
    return _finish(np.ldexp(m, e))


def _v_and_complement(x, y):
    """``v = |x - y| / (x + y)`` and ``1 - v = 2 min(x, y) / (x + y)``.

    The complement is formed directly so it keeps full relative accuracy even
    when ``v`` itself rounds to 1 (ratios beyond ``2**53``).
    """
    total = x + y
    return np.abs(x - y) / total, 2 * np.minimum(x, y) / total


def normalized_v(pair) -> ArrayLike:
    """``|a - b| / (a + b)``, scale invariant and in ``[0, 1)``."""
    pair = _as_pair(pair)
    x, y, _ = _scaled(pair.a, pair.b)
    return _finish(_v_and_complement(x, y)[0])


def schwab_borchardt(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    """The Schwab-Borchardt mean ``SB(a, b)``.

    Not symmetric: the inverse-cosine branch is used when ``a < b`` and the
    inverse-hyperbolic-cosine branch when ``a > b``.  Both branches are
    rewritten through ``r = sqrt((b - a)(b + a))`` so that neither
    ``acos`` nor ``acosh`` is evaluated near 1, where they lose accuracy::

        acos(a/b)  = atan2(r, a)
        acosh(a/b) = asinh(r/b)
    """
    a = _check_positive("a", a)
    b = _check_positive("b", b)
    x, y, e = _scaled(a, b)
    r = np.sqrt(np.abs((y - x) * (y + x)))
    with np.errstate(divide="ignore", invalid="ignore"):
        angle = np.where(x < y, np.arctan2(r, x), np.arcsinh(r / y))
        sb = np.where(r > 0, r / angle, x)
    return _finish(np.ldexp(sb, e))


def neuman(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    """The Neuman mean ``N(a, b) = (a + b**2 / SB(a, b)) / 2``."""
    a = _check_positive("a", a)
    b = _check_positive("b", b)
    x, y, e = _scaled(a, b)
    n = (x + y * y / schwab_borchardt(x, y)) / 2
    return _finish(np.ldexp(n, e))


# Maclaurin coefficients of f(v)/v in powers of v**2, lowest order first.
_KERNEL_SERIES = {
    "asin": (1.0, 1 / 6, 3 / 40, 5 / 112, 35 / 1152),
    "atanh": (1.0, 1 / 3, 1 / 5, 1 / 7, 1 / 9),
    "asinh": (1.0, -1 / 6, 3 / 40, -5 / 112, 35 / 1152),
    "atan": (1.0, -1 / 3, 1 / 5, -1 / 7, 1 / 9),
}

_KERNEL_DIRECT = {
    "asin": np.arcsin,
    "atanh": np.arctanh,
    "asinh": np.arcsinh,
    "atan": np.arctan,
}


def _inverse_function(kind: str, v, w):
    """``f(v)`` given also ``w = 1 - v``; near ``v = 1`` asin and atanh go through ``w``."""
    if kind == "asin":
        return np.arctan2(v, np.sqrt(w * (1 + v)))
    if kind == "atanh":
        with np.errstate(divide="ignore"):
            return np.where(v < 0.5, np.arctanh(v), 0.5 * np.log((1 + v) / w))
    return _KERNEL_DIRECT[kind](v)


def _horner(coeffs, t):
    acc = np.zeros_like(t) + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * t + c
    return acc


def _check_v(kind: str, v, complement=None) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if kind not in _KERNEL_SERIES:
        raise DomainError(f"unknown kernel {kind!r}")
    if complement is not None:
        w = np.asarray(complement)
        upper_ok = (v <= 1) & ((w > 0) if kind == "atanh" else (w >= 0))
    else:
        upper_ok = v < 1 if kind == "atanh" else v <= 1
    if not np.all((v >= 0) & upper_ok):
        raise DomainError(f"{kind} kernel needs v in [0, 1{')' if kind == 'atanh' else ']'}, got {v!r}")
    return v


def kernel(kind: str, v: ArrayLike, complement: ArrayLike | None = None) -> ArrayLike:
    """``f(v)/v`` for ``f`` in ``asin, atanh, asinh, atan``, equal to 1 at ``v = 0``.

    ``complement`` is ``1 - v`` when the caller knows it more accurately than
    ``v`` does.
    """
    v = _check_v(kind, v, complement)
    w = 1 - v if complement is None else np.asarray(complement, dtype=float)
    series = _horner(_KERNEL_SERIES[kind], v * v)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = _inverse_function(kind, v, w) / v
    return _finish(np.where(v < SERIES_THRESHOLD, series, direct))


def _odd_series_coefficients(kind: str, n: int) -> np.ndarray:
    if kind in ("atanh", "atan"):
        c = [1 / (2 * k + 1) for k in range(n)]
    else:
        # (2k)! / (4**k (k!)**2 (2k+1))
        c = []
        central = 1.0
        for k in range(n):
            c.append(central / (2 * k + 1))
            central *= (2 * k + 1) / (2 * k + 2)
    if kind in ("asinh", "atan"):
        c = [ck * (-1) ** k for k, ck in enumerate(c)]
    return np.array(c)


_EXCESS_TERMS = 48
_EXCESS_SERIES = {k: tuple(_odd_series_coefficients(k, _EXCESS_TERMS)[1:]) for k in _KERNEL_SERIES}


def kernel_excess(kind: str, v: ArrayLike, complement: ArrayLike | None = None) -> ArrayLike:
    """``f(v)/v - 1`` without the cancellation of computing the kernel first.

    The full series is summed for ``v <= 1/2`` (48 terms reach below double
    rounding there); above that the difference is at least 0.03 in magnitude and
    direct subtraction is accurate.
    """
    v = _check_v(kind, v, complement)
    w = 1 - v if complement is None else np.asarray(complement, dtype=float)
    t = v * v
    series = t * _horner(_EXCESS_SERIES[kind], t)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = _inverse_function(kind, v, w) / v - 1
    return _finish(np.where(v <= 0.5, series, direct))


def _one_minus_sqrt(v, w):
    """``1 - sqrt(1 - v**2)`` and ``sqrt(1 - v**2)`` given ``w = 1 - v``."""
    s = np.sqrt(w * (1 + v))
    return v * v / (1 + s), s


def _sqrt_minus_one(v):
    """``sqrt(1 + v**2) - 1`` and ``sqrt(1 + v**2)``."""
    q = np.sqrt(1 + v * v)
    return v * v / (q + 1), q


def neuman_over_arithmetic(kind: NeumanKind | str, v: ArrayLike, complement: ArrayLike | None = None) -> ArrayLike:
    """``N_kind / A`` as a function of ``v`` (and optionally ``1 - v``)."""
    kind = NeumanKind(kind)
    v = np.asarray(v, dtype=float)
    w = 1 - v if complement is None else np.asarray(complement, dtype=float)
    if kind is NeumanKind.AG:
        # w log(1/w) -> 0 when the complement underflows (ratios beyond ~1e308)
        live = w > 0
        wl = np.where(live, w, 0.5)
        term = wl * (1 + v) * kernel("atanh", np.where(live, v, 0.5), wl)
        r = (1 + np.where(live, term, 0.0)) / 2
    elif kind is NeumanKind.GA:
        r = (np.sqrt(w * (1 + v)) + kernel("asin", v, w)) / 2
    elif kind is NeumanKind.QA:
        r = (np.sqrt(1 + v * v) + kernel("asinh", v)) / 2
    else:
        r = (1 + (1 + v * v) * kernel("atan", v)) / 2
    return _finish(r)


def neuman_mean(kind: NeumanKind | str, pair) -> ArrayLike:
    """Neuman mean ``N_kind(a, b)`` from its explicit formula in ``v``.

    Symmetric in ``(a, b)`` and exactly ``a`` when ``a == b``.
    """
    pair = _as_pair(pair)
    x, y, e = _scaled(pair.a, pair.b)
    arith = (x + y) / 2
    v, w = _v_and_complement(x, y)
    return _finish(np.ldexp(arith * neuman_over_arithmetic(kind, v, w), e))
