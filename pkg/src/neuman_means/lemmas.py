"""The four monotone auxiliary functions f1..f4 and their exact series data.

``f1`` and ``f3`` live on ``(0, pi/2)``; ``f2`` and ``f4`` on ``(0, inf)``.  All
four are 0/0 at the origin and are evaluated there from their Maclaurin
expansions.  Away from the origin they are computed from algebraically
rearranged closed forms::

    f1(x) = log1p(-(2x - sin 2x) / (2x + sin 2x)) / log1p(-2 sin^2(x/2))
            (both logs taken directly near pi/2)
    f2(x) = log1p(sinh^2(x/2) - (sinh x - x) / (2 sinh x)) / log1p(2 sinh^2(x/2))
    f3(x) = (2x - sin 2x) / (2 sin^2(x/2) (2x + sin 2x))
    f4(x) = (1 - (sinh x - x) / (sinh x (cosh x - 1))) / (1 + x / (sinh x cosh x))

where ``y - sin y`` and ``sinh x - x`` come from short series for small
arguments.  The f4 form never forms ``sinh x cosh^2 x`` and so is safe up to
the domain cap :data:`X_MAX`.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, DomainError
from .means import _finish, _horner

RationalCoeff = Fraction

#: Below this argument f1..f4 are evaluated from their Maclaurin series.
SERIES_THRESHOLD = 1e-2

#: f2 and f4 refuse arguments beyond this (cosh overflows near 710).
X_MAX = 350.0


class LemmaId(str, enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"


# f(x) = sum c_k x**(2k), k = 0..3
_LEMMA_SERIES = {
    LemmaId.F1: (2 / 3, 4 / 45, 22 / 2835, -1 / 42525),
    LemmaId.F2: (1 / 3, 4 / 45, -22 / 2835, -1 / 42525),
    LemmaId.F3: (2 / 3, 13 / 90, 61 / 7560, -127 / 45360),
    LemmaId.F4: (1 / 3, 13 / 90, -61 / 7560, -127 / 45360),
}

_LIMITS = {
    LemmaId.F1: (Fraction(2, 3), Fraction(1)),
    LemmaId.F2: (Fraction(1, 3), Fraction(1)),
    LemmaId.F3: (Fraction(2, 3), Fraction(1)),
    LemmaId.F4: (Fraction(1, 3), Fraction(1)),
}

_DOMAIN_HI = {
    LemmaId.F1: math.pi / 2,
    LemmaId.F2: X_MAX,
    LemmaId.F3: math.pi / 2,
    LemmaId.F4: X_MAX,
}


def _taylor_tail(odd_signs: bool, n: int = 10) -> tuple[float, ...]:
    # coefficients of y**3, y**5, ... for y - sin y (alternating) or sinh y - y
    out = []
    for k in range(1, n + 1):
        c = 1 / math.factorial(2 * k + 1)
        out.append(c * (-1) ** (k + 1) if odd_signs else c)
    return tuple(out)


_Y_MINUS_SIN = _taylor_tail(True)
_SINH_MINUS_Y = _taylor_tail(False)


def _y_minus_sin(y):
    series = y**3 * _horner(_Y_MINUS_SIN, y * y)
    return np.where(np.abs(y) < 1, series, y - np.sin(y))


def _sinh_minus_y(y):
    series = y**3 * _horner(_SINH_MINUS_Y, y * y)
    return np.where(np.abs(y) < 1, series, np.sinh(y) - y)


def _f1(x):
    y = 2 * x
    sy = np.sin(y)
    r = _y_minus_sin(y) / (y + sy)
    c = np.cos(x)
    # near pi/2 both log1p arguments approach -1; take the logs directly there
    with np.errstate(divide="ignore"):
        num = np.where(r < 0.5, np.log1p(-r), np.log(2 * sy / (y + sy)))
        den = np.where(c > 0.5, np.log1p(-2 * np.sin(x / 2) ** 2), np.log(c))
    return num / den


def _f2(x):
    sh = np.sinh(x)
    half = np.sinh(x / 2) ** 2
    return np.log1p(half - _sinh_minus_y(x) / (2 * sh)) / np.log1p(2 * half)


def _f3(x):
    y = 2 * x
    return _y_minus_sin(y) / (2 * np.sin(x / 2) ** 2 * (y + np.sin(y)))


def _f4(x):
    sh, ch = np.sinh(x), np.cosh(x)
    c1 = 2 * np.sinh(x / 2) ** 2
    return (1 - _sinh_minus_y(x) / (sh * c1)) / (1 + x / (sh * ch))


_CLOSED = {LemmaId.F1: _f1, LemmaId.F2: _f2, LemmaId.F3: _f3, LemmaId.F4: _f4}


def lemma_eval(lemma: LemmaId | str, x):
    """Evaluate f1..f4 at ``x``; ``x = 0`` gives the limit at the origin.

    The right endpoint ``pi/2`` is accepted for F1 and F3 and returns 1 (a
    limit for F1, an attained value for F3).
    """
    lemma = LemmaId(lemma)
    x = np.asarray(x, dtype=float)
    hi = _DOMAIN_HI[lemma]
    if not np.all((x >= 0) & (x <= hi)):
        raise DomainError(f"{lemma.value} is defined on [0, {hi}], got {x!r}")
    small = x < SERIES_THRESHOLD
    with np.errstate(divide="ignore", invalid="ignore"):
        closed = _CLOSED[lemma](np.where(small, 1.0, x))
    series = _horner(_LEMMA_SERIES[lemma], x * x)
    out = np.where(small, series, closed)
    if lemma in (LemmaId.F1, LemmaId.F3):
        out = np.where(x == hi, 1.0, out)
    return _finish(out)


def lemma_limits(lemma: LemmaId | str) -> tuple[Fraction, Fraction]:
    """Exact limits at ``0+`` and at the right end of the domain."""
    return _LIMITS[LemmaId(lemma)]


def lemma_domain(lemma: LemmaId | str) -> tuple[float, float]:
    """Closed evaluation interval accepted by :func:`lemma_eval`."""
    return 0.0, _DOMAIN_HI[LemmaId(lemma)]


def _series_lemma(lemma) -> LemmaId:
    lemma = LemmaId(lemma)
    if lemma not in (LemmaId.F2, LemmaId.F4):
        raise DomainError(f"no coefficient series for {lemma.value}")
    return lemma


def series_coeff(lemma: LemmaId | str, n: int) -> tuple[Fraction, Fraction]:
    """Exact coefficients ``(a_n, b_n)`` of the even power series whose ratio
    is the derivative quotient behind F2, or F4 itself."""
    lemma = _series_lemma(lemma)
    if n < 0:
        raise DomainError("n must be nonnegative")
    fact = math.factorial(2 * n + 3)
    if lemma is LemmaId.F2:
        scale = 2 ** (2 * n + 4)
        return (
            Fraction((2 ** (2 * n + 2) - 2 * n - 2) * scale, fact),
            Fraction((2 ** (2 * n + 2) + 2 * n + 2) * scale, fact),
        )
    p3 = 3 ** (2 * n + 3)
    return (
        Fraction(p3 - 2 ** (2 * n + 5) + 8 * n + 13, 4 * fact),
        Fraction(p3 - 2 ** (2 * n + 4) + 8 * n + 13, 4 * fact),
    )


def ratio_increment_closed_form(lemma: LemmaId | str, n: int) -> Fraction:
    """``a_{n+1}/b_{n+1} - a_n/b_n`` from its factored closed form."""
    lemma = _series_lemma(lemma)
    if lemma is LemmaId.F2:
        return Fraction(
            (3 * n + 2) * 2 ** (2 * n + 2),
            (2 ** (2 * n + 3) + n + 2) * (2 ** (2 * n + 1) + n + 1),
        )
    return Fraction(
        (135 * 3 ** (2 * n) - 24 * n - 31) * 2 ** (2 * n + 4),
        (3 ** (2 * n + 3) - 2 ** (2 * n + 4) + 8 * n + 13) * (3 ** (2 * n + 5) - 2 ** (2 * n + 6) + 8 * n + 21),
    )


def coeff_ratio_increment(lemma: LemmaId | str, n: int) -> Fraction:
    """The exact increment of ``a_n/b_n``, cross-checked against its closed form.

    Raises :class:`ConsistencyError` if the two exact computations differ.
    """
    a0, b0 = series_coeff(lemma, n)
    a1, b1 = series_coeff(lemma, n + 1)
    direct = a1 / b1 - a0 / b0
    closed = ratio_increment_closed_form(lemma, n)
    if direct != closed:
        raise ConsistencyError(f"{LemmaId(lemma).value}, n={n}: {direct} != {closed}")
    return direct


def series_ratio(lemma: LemmaId | str, x, n_terms: int = 31):
    """``sum a_n x^(2n) / sum b_n x^(2n)`` truncated after ``n_terms`` terms."""
    coeffs = [series_coeff(lemma, n) for n in range(n_terms)]
    a = tuple(float(c[0]) for c in coeffs)
    b = tuple(float(c[1]) for c in coeffs)
    t = np.asarray(x, dtype=float) ** 2
    return _finish(_horner(a, t) / _horner(b, t))
