"""Sharp two-sided bounds for the Neuman means.

Each Neuman mean ``N`` sits between an inner and an outer classical mean
(``G < N < A`` for GA/AG, ``A < N < Q`` for QA/AQ).  Two interpolation
families bracket it::

    power:     Mo**alpha * Mi**(1-alpha)    < N < Mo**beta * Mi**(1-beta)
    harmonic:  alpha/Mi + (1-alpha)/Mo      > 1/N > beta/Mi + (1-beta)/Mo

The table :data:`SHARP_PARAMETERS` holds the best constants.  The quantities
that decide membership are :func:`exponent_ratio` (``log(N/Mi) / log(Mo/Mi)``,
which must lie in ``(alpha, beta)``) and :func:`harmonic_weight`
(``(1/Mi - 1/N) / (1/Mi - 1/Mo)``, which must lie in ``(1-beta, 1-alpha)``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .means import (
    ArrayLike,
    NeumanKind,
    _as_pair,
    _finish,
    _horner,
    _one_minus_sqrt,
    _scaled,
    _sqrt_minus_one,
    _v_and_complement,
    kernel_excess,
)

#: Below this ``v`` the ratio and weight come from their Maclaurin series.
RATIO_SERIES_THRESHOLD = 1e-2


class BoundFamily(str, enum.Enum):
    POWER = "power"
    HARMONIC = "harmonic"


@dataclass(frozen=True)
class SharpParams:
    alpha: float
    beta: float
    alpha_symbolic: str
    beta_symbolic: str

    @property
    def degenerate(self) -> dict[str, bool]:
        """Which side collapses to a single classical mean (weight 0 or 1)."""
        return {"alpha": self.alpha in (0.0, 1.0), "beta": self.beta in (0.0, 1.0)}

    def shifted(self, d_alpha: float, d_beta: float) -> "SharpParams":
        return SharpParams(
            self.alpha + d_alpha,
            self.beta + d_beta,
            f"{self.alpha_symbolic} + ({d_alpha!r})",
            f"{self.beta_symbolic} + ({d_beta!r})",
        )


@dataclass(frozen=True)
class Envelope:
    lower: ArrayLike
    upper: ArrayLike

    def contains(self, value) -> ArrayLike:
        """Strict containment, or the three-way equality at ``a == b``."""
        lo, hi, x = (np.asarray(t) for t in (self.lower, self.upper, value))
        inside = ((lo < x) & (x < hi)) | ((lo == x) & (x == hi))
        return inside if inside.ndim else bool(inside)


_SQRT2 = math.sqrt(2)
_LOG1P_SQRT2 = math.asinh(1.0)

# log2 of a quotient instead of a difference of logs avoids cancelling 4 or 2.
_BETA5 = 2 * math.log2((math.pi + 2) / 4)
_ALPHA6 = (6 + 2 * _SQRT2 - (1 + _SQRT2) * math.pi) / (math.pi + 2)
_BETA7 = 2 * math.log2((_SQRT2 + _LOG1P_SQRT2) / 2)
_ALPHA8 = (2 + _SQRT2 - (1 + _SQRT2) * _LOG1P_SQRT2) / (_SQRT2 + _LOG1P_SQRT2)

_P = BoundFamily.POWER
_H = BoundFamily.HARMONIC
_K = NeumanKind

SHARP_PARAMETERS: dict[tuple[NeumanKind, BoundFamily], SharpParams] = {
    (_K.GA, _P): SharpParams(2 / 3, 1.0, "2/3", "1"),
    (_K.GA, _H): SharpParams(0.0, 1 / 3, "0", "1/3"),
    (_K.AG, _P): SharpParams(1 / 3, 1.0, "1/3", "1"),
    (_K.AG, _H): SharpParams(0.0, 2 / 3, "0", "2/3"),
    (_K.AQ, _P): SharpParams(2 / 3, _BETA5, "2/3", "2*log(pi+2)/log(2) - 4"),
    (_K.AQ, _H): SharpParams(_ALPHA6, 1 / 3, "(6 + 2*sqrt(2) - (1+sqrt(2))*pi)/(pi+2)", "1/3"),
    (_K.QA, _P): SharpParams(1 / 3, _BETA7, "1/3", "2*log(sqrt(2) + log(1+sqrt(2)))/log(2) - 2"),
    (_K.QA, _H): SharpParams(
        _ALPHA8,
        2 / 3,
        "(2 + sqrt(2) - (1+sqrt(2))*log(1+sqrt(2)))/(sqrt(2) + log(1+sqrt(2)))",
        "2/3",
    ),
}

LINEAR_REFERENCE: dict[NeumanKind, SharpParams] = {
    _K.GA: SharpParams(2 / 3, math.pi / 4, "2/3", "pi/4"),
    _K.AQ: SharpParams(2 / 3, (math.pi - 2) / (4 * (_SQRT2 - 1)), "2/3", "(pi-2)/(4*(sqrt(2)-1))"),
    _K.AG: SharpParams(1 / 3, 1 / 2, "1/3", "1/2"),
    _K.QA: SharpParams(
        1 / 3,
        (_LOG1P_SQRT2 + _SQRT2 - 2) / (2 * (_SQRT2 - 1)),
        "1/3",
        "(log(1+sqrt(2)) + sqrt(2) - 2)/(2*(sqrt(2)-1))",
    ),
}


def sharp_parameters(kind: NeumanKind | str, family: BoundFamily | str) -> SharpParams:
    return SHARP_PARAMETERS[NeumanKind(kind), BoundFamily(family)]


def linear_reference_bounds(kind: NeumanKind | str) -> SharpParams:
    """Best weights ``theta`` for ``theta*Mo + (1-theta)*Mi`` bounds (convex combinations)."""
    return LINEAR_REFERENCE[NeumanKind(kind)]


# Maclaurin coefficients in v**2 (through v**8), derived symbolically.
_RATIO_SERIES = {
    _K.GA: (2 / 3, 4 / 45, 106 / 2835, 11 / 525, 12773 / 935550),
    _K.AG: (1 / 3, 4 / 45, 146 / 2835, 71 / 2025, 24253 / 935550),
    _K.QA: (1 / 3, 4 / 45, -106 / 2835, 11 / 525, -12773 / 935550),
    _K.AQ: (2 / 3, 4 / 45, -146 / 2835, 71 / 2025, -24253 / 935550),
}
_WEIGHT_SERIES = {
    _K.GA: (2 / 3, 13 / 90, 85 / 1512, 6409 / 226800, 999071 / 59875200),
    _K.AG: (1 / 3, 13 / 90, 667 / 7560, 13669 / 226800, 2627497 / 59875200),
    _K.QA: (1 / 3, 13 / 90, -85 / 1512, 6409 / 226800, -999071 / 59875200),
    _K.AQ: (2 / 3, 13 / 90, -667 / 7560, 13669 / 226800, -2627497 / 59875200),
}

_KERNEL_OF = {_K.GA: "asin", _K.AG: "atanh", _K.QA: "asinh", _K.AQ: "atan"}


def _pieces(kind: NeumanKind, v, w):
    """Normalized (A = 1) building blocks, each free of cancellation.

    Returns ``(log_mi, log_mo, gap, n_minus_mi, mi, mo, n)`` where ``gap`` is
    ``Mo - Mi`` and ``n_minus_mi`` is ``N - Mi``.
    """
    km1 = kernel_excess(_KERNEL_OF[kind], v, w)
    if kind in (_K.GA, _K.AG):
        om, s = _one_minus_sqrt(v, w)
        with np.errstate(divide="ignore"):
            log_s = np.where(v < 0.5, 0.5 * np.log1p(-v * v), 0.5 * (np.log(w) + np.log1p(v)))
        if kind is _K.GA:
            excess = (km1 + om) / 2
        else:
            excess = (om * om + s * s * km1) / 2
        return log_s, np.zeros_like(log_s), om, excess, s, np.ones_like(s), s + excess
    qm1, q = _sqrt_minus_one(v)
    log_q = 0.5 * np.log1p(v * v)
    if kind is _K.AQ:
        excess = (v * v + q * q * km1) / 2
    else:
        excess = (qm1 + km1) / 2
    return np.zeros_like(log_q), log_q, qm1, excess, np.ones_like(q), q, 1 + excess


def _normalized(x, y):
    v, w = _v_and_complement(x, y)
    if np.any(w < np.finfo(float).tiny):
        raise DomainError("a/b is too extreme (beyond ~1e307) to represent 1 - v")
    return v, w


def _distinct_v(pair):
    pair = _as_pair(pair)
    x, y, _ = _scaled(pair.a, pair.b)
    if np.any(x == y):
        raise DomainError("ratio is 0/0 at a == b; use lemma_limits for the endpoint values")
    return _normalized(x, y)


def exponent_ratio_v(kind: NeumanKind | str, v, complement=None) -> ArrayLike:
    """:func:`exponent_ratio` as a function of ``v`` in ``(0, 1)``."""
    kind = NeumanKind(kind)
    v = np.asarray(v, dtype=float)
    w = 1 - v if complement is None else np.asarray(complement, dtype=float)
    small = v < RATIO_SERIES_THRESHOLD
    log_mi, log_mo, _, excess, mi, _, _ = _pieces(kind, np.where(small, 0.5, v), np.where(small, 0.5, w))
    direct = np.log1p(excess / mi) / (log_mo - log_mi)
    return _finish(np.where(small, _horner(_RATIO_SERIES[kind], v * v), direct))


def harmonic_weight_v(kind: NeumanKind | str, v, complement=None) -> ArrayLike:
    """:func:`harmonic_weight` as a function of ``v`` in ``(0, 1)``."""
    kind = NeumanKind(kind)
    v = np.asarray(v, dtype=float)
    w = 1 - v if complement is None else np.asarray(complement, dtype=float)
    small = v < RATIO_SERIES_THRESHOLD
    _, _, gap, excess, _, mo, n = _pieces(kind, np.where(small, 0.5, v), np.where(small, 0.5, w))
    direct = excess * mo / (gap * n)
    return _finish(np.where(small, _horner(_WEIGHT_SERIES[kind], v * v), direct))


def exponent_ratio(kind: NeumanKind | str, pair) -> ArrayLike:
    """``log(N/Mi) / log(Mo/Mi)``; undefined (DomainError) at ``a == b``."""
    return exponent_ratio_v(kind, *_distinct_v(pair))


def harmonic_weight(kind: NeumanKind | str, pair) -> ArrayLike:
    """``(1/Mi - 1/N) / (1/Mi - 1/Mo)``; undefined (DomainError) at ``a == b``."""
    return harmonic_weight_v(kind, *_distinct_v(pair))


def _envelope_normalized(kind, family, params, v, w):
    log_mi, log_mo, _, _, mi, mo, _ = _pieces(kind, v, w)
    if family is BoundFamily.POWER:
        lower = np.exp(log_mi + params.alpha * (log_mo - log_mi))
        upper = np.exp(log_mi + params.beta * (log_mo - log_mi))
    else:
        inv_mi, inv_mo = 1 / mi, 1 / mo
        lower = 1 / (inv_mo + params.beta * (inv_mi - inv_mo))
        upper = 1 / (inv_mo + params.alpha * (inv_mi - inv_mo))
    return lower, upper


def bound_envelope(
    kind: NeumanKind | str,
    family: BoundFamily | str,
    pair,
    params: SharpParams | None = None,
) -> Envelope:
    """Both sides of the double inequality around ``N_kind(a, b)``.

    For the harmonic family the bounds on ``1/N`` are inverted, so ``beta``
    gives the lower bound on ``N`` and ``alpha`` the upper one.  ``params``
    defaults to the sharp constants; pass others to probe non-sharp bounds.
    """
    kind, family = NeumanKind(kind), BoundFamily(family)
    params = params or sharp_parameters(kind, family)
    pair = _as_pair(pair)
    x, y, e = _scaled(pair.a, pair.b)
    arith = (x + y) / 2
    v, w = _normalized(x, y)
    lower, upper = _envelope_normalized(kind, family, params, v, w)
    return Envelope(_finish(np.ldexp(arith * lower, e)), _finish(np.ldexp(arith * upper, e)))


def linear_envelope(kind: NeumanKind | str, pair, params: SharpParams | None = None) -> Envelope:
    """Convex-combination bounds ``theta*Mo + (1-theta)*Mi`` with the reference weights."""
    kind = NeumanKind(kind)
    params = params or linear_reference_bounds(kind)
    pair = _as_pair(pair)
    x, y, e = _scaled(pair.a, pair.b)
    arith = (x + y) / 2
    v, w = _normalized(x, y)
    _, _, gap, _, mi, _, _ = _pieces(kind, v, w)
    lower = mi + params.alpha * gap
    upper = mi + params.beta * gap
    return Envelope(_finish(np.ldexp(arith * lower, e)), _finish(np.ldexp(arith * upper, e)))
