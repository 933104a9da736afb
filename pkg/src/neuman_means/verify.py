"""Seeded, reproducible numerical verification of the inequalities and identities.

Each suite returns a :class:`VerificationReport`.  Inequalities are judged on a
signed relative margin: below ``-VIOLATION_TOL`` is a violation, within
``±VIOLATION_TOL`` a boundary flag (double rounding near ``v = 0`` makes
those margins meaningless), above it a pass.

Random pairs come from SplitMix64 evaluated in counter mode, so sample ``i``
depends only on ``(seed, i)``.  Work is split into chunks that may run on a
thread pool (``NEUMAN_MEANS_THREADS``); chunk reports are merged with sums
and minima, so the result does not depend on scheduling.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .bounds import (
    BoundFamily,
    SharpParams,
    bound_envelope,
    exponent_ratio,
    harmonic_weight,
    sharp_parameters,
)
from .errors import DomainError
from .lemmas import (
    LemmaId,
    lemma_eval,
    lemma_limits,
    ratio_increment_closed_form,
    series_coeff,
)
from .means import (
    MeanPair,
    NeumanKind,
    _inverse_function,
    _scaled,
    _v_and_complement,
    classical_mean,
    neuman,
    neuman_mean,
)

VIOLATION_TOL = 1e-14
CONSISTENCY_TOL = 1e-12
CHUNK = 16384

# sampling range for a/b
RATIO_MIN = 1 + 1e-12
RATIO_MAX = 1e6
# overall scale of the pair, log-uniform
SCALE_RANGE = (1e-6, 1e6)

LEMMA_GRID_X_MAX = 20.0


# --------------------------------------------------------------------------
# random numbers

_MASK = (1 << 64) - 1
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream for ``seed``.

    Output ``i`` is ``mix(seed + (i + 1) * 0x9E3779B97F4A7C15)`` with the
    standard Stafford variant-13 finalizer, arithmetic mod 2**64.
    """
    i = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK) + i * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Doubles in ``[0, 1)`` from the top 53 bits of :func:`splitmix64`."""
    return (splitmix64(seed, start, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def sample_pairs(seed: int, start: int, stop: int) -> MeanPair:
    """Pairs ``start .. stop-1``: ratio log-uniform in ``[RATIO_MIN, RATIO_MAX]``,
    scale log-uniform in :data:`SCALE_RANGE`, order swapped with probability 1/2."""
    u = uniforms(seed, 3 * start, 3 * (stop - start)).reshape(-1, 3)
    lo = math.log1p(RATIO_MIN - 1)
    ratio = np.exp(lo + u[:, 0] * (math.log(RATIO_MAX) - lo))
    s_lo, s_hi = (math.log(s) for s in SCALE_RANGE)
    b = np.exp(s_lo + u[:, 1] * (s_hi - s_lo))
    a = b * ratio
    swap = u[:, 2] < 0.5
    return MeanPair(np.where(swap, b, a), np.where(swap, a, b))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("NEUMAN_MEANS_THREADS", "1")))
    except ValueError:
        return 1


# --------------------------------------------------------------------------
# grids and reports


@dataclass(frozen=True)
class GridSpec:
    """Points in ``v``.

    ``"log-endpoints"`` puts half the points linearly on
    ``[CORE_LO, CORE_HI]`` and a quarter geometrically toward each end (in
    ``v`` near ``v_min`` and in ``1 - v`` near ``v_max``).
    """

    v_min: float = 1e-6
    v_max: float = 1 - 1e-6
    count: int = 10_000
    spacing: str = "log-endpoints"

    CORE_LO = 1e-3
    CORE_HI = 1 - 1e-3

    def __post_init__(self):
        if not 0 < self.v_min < self.v_max < 1:
            raise DomainError("grid needs 0 < v_min < v_max < 1")
        if self.count < 2:
            raise DomainError("grid needs at least 2 points")
        if self.spacing not in ("linear", "log-endpoints"):
            raise DomainError(f"unknown spacing {self.spacing!r}")

    def points(self) -> np.ndarray:
        if self.spacing == "linear":
            return np.linspace(self.v_min, self.v_max, self.count)
        lo = max(self.CORE_LO, self.v_min)
        hi = min(self.CORE_HI, self.v_max)
        n_core = self.count // 2
        n_lo = (self.count - n_core) // 2 if self.v_min < lo else 0
        n_hi = self.count - n_core - n_lo if self.v_max > hi else 0
        n_core = self.count - n_lo - n_hi
        parts = [np.linspace(lo, hi, n_core)]
        if n_lo:
            parts.insert(0, np.geomspace(self.v_min, lo, n_lo, endpoint=False))
        if n_hi:
            parts.append(1 - np.geomspace(1 - hi, 1 - self.v_max, n_hi + 1)[1:])
        return np.concatenate(parts)

    def describe(self) -> dict:
        return {"v_min": self.v_min, "v_max": self.v_max, "count": self.count, "spacing": self.spacing}


DEFAULT_GRID = GridSpec()


@dataclass
class VerificationReport:
    suite: str
    checks_run: int = 0
    violations: int = 0
    min_margin: float = math.inf
    boundary_flags: int = 0
    seed: int | None = None
    grid: dict | None = None
    label: str = "sampled"
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def add(self, margins, tol: float = VIOLATION_TOL) -> None:
        """Tally an array of signed relative margins."""
        m = np.asarray(margins, dtype=float).ravel()
        if m.size == 0:
            return
        if not np.all(np.isfinite(m)):
            raise FloatingPointError(f"non-finite margin in suite {self.suite}")
        self.checks_run += int(m.size)
        self.violations += int(np.count_nonzero(m < -tol))
        self.boundary_flags += int(np.count_nonzero(np.abs(m) <= tol))
        self.min_margin = min(self.min_margin, float(m.min()))

    def add_exact(self, ok: bool) -> None:
        """Tally one exact (no tolerance) check; its margin is +1 or -1."""
        self.checks_run += 1
        if not ok:
            self.violations += 1
        self.min_margin = min(self.min_margin, 1.0 if ok else -1.0)

    def merge(self, other: "VerificationReport") -> None:
        self.checks_run += other.checks_run
        self.violations += other.violations
        self.boundary_flags += other.boundary_flags
        self.min_margin = min(self.min_margin, other.min_margin)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks_run": self.checks_run,
            "violations": self.violations,
            "min_margin": self.min_margin if math.isfinite(self.min_margin) else None,
            "boundary_flags": self.boundary_flags,
            "seed": self.seed,
            "grid": self.grid,
            "label": self.label,
            "details": self.details,
        }


def _chunked(suite: str, samples: int, fn: Callable[[int, int], VerificationReport]) -> VerificationReport:
    bounds = [(i, min(i + CHUNK, samples)) for i in range(0, samples, CHUNK)]
    threads = _threads()
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda ab: fn(*ab), bounds))
    else:
        parts = [fn(*ab) for ab in bounds]
    total = VerificationReport(suite)
    for p in parts:
        total.merge(p)
    return total


def _check_count(name: str, n: int, minimum: int = 1) -> None:
    if not isinstance(n, (int, np.integer)) or n < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {n!r}")


# --------------------------------------------------------------------------
# suites

CHAIN = ("G", "AG", "GA", "A", "QA", "AQ", "Q")


def _chain_values(pair: MeanPair) -> list[np.ndarray]:
    out = []
    for name in CHAIN:
        if len(name) == 1:
            out.append(np.asarray(classical_mean(name, pair)))
        else:
            out.append(np.asarray(neuman_mean(name, pair)))
    return out


def verify_chain(samples: int, seed: int, *, perturb: float = 0.0) -> VerificationReport:
    """Check ``G < N_AG < N_GA < A < N_QA < N_AQ < Q`` on seeded random pairs.

    Margins are consecutive differences divided by ``A``.  ``perturb``
    multiplies ``N_AG`` by ``1 + perturb`` (negative control).
    """
    _check_count("samples", samples)

    def run(start, stop):
        pair = sample_pairs(seed, start, stop)
        values = _chain_values(pair)
        values[1] = values[1] * (1 + perturb)
        arith = values[3]
        rep = VerificationReport("chain")
        rep.add(np.diff(np.stack(values), axis=0) / arith)
        return rep

    rep = _chunked("chain", samples, run)
    rep.seed = seed
    rep.details = {
        "inequalities": " < ".join(CHAIN),
        "samples": samples,
        "ratio_range": [RATIO_MIN, RATIO_MAX],
        "perturb": perturb,
    }
    return rep


def _endpoint_targets(family: BoundFamily, params: SharpParams) -> tuple[float, float]:
    if family is BoundFamily.POWER:
        return params.alpha, params.beta
    return 1 - params.beta, 1 - params.alpha


def verify_sharp_bounds(
    kind: NeumanKind | str,
    family: BoundFamily | str,
    grid: GridSpec = DEFAULT_GRID,
    *,
    params: SharpParams | None = None,
) -> VerificationReport:
    """Containment of ``N_kind`` in its bound envelope over a ``v`` grid, plus
    sharpness evidence.

    Grid point ``v`` is the pair ``(1 + v, 1 - v)``.  Sharpness: on each half
    of the grid, the ratio (power) or weight (harmonic) at the outermost point
    must be strictly closer to its endpoint constant than at any other point of
    that half.  Those two checks carry no margin.
    """
    kind, family = NeumanKind(kind), BoundFamily(family)
    sharp = sharp_parameters(kind, family)
    params = params or sharp
    v = grid.points()
    pair = MeanPair.from_v(v)
    n = np.asarray(neuman_mean(kind, pair))
    env = bound_envelope(kind, family, pair, params)
    rep = VerificationReport(f"bounds[{kind.value}/{family.value}]", grid=grid.describe(), label="evidence")
    rep.add((n - env.lower) / n)
    rep.add((env.upper - n) / n)

    q = np.asarray(exponent_ratio(kind, pair) if family is BoundFamily.POWER else harmonic_weight(kind, pair))
    lo_target, hi_target = _endpoint_targets(family, params)
    low = v < 0.5
    sharpness = {}
    for side, mask, target, pick in (("low", low, lo_target, np.argmin), ("high", ~low, hi_target, np.argmax)):
        if np.count_nonzero(mask) < 2:
            continue
        qs, vs = q[mask], v[mask]
        dist = np.abs(qs - target)
        ext = pick(vs)
        others = np.delete(dist, ext)
        ok = bool(np.all(dist[ext] < others))
        rep.checks_run += 1
        rep.violations += 0 if ok else 1
        sharpness[side] = {"v": float(vs[ext]), "value": float(qs[ext]), "target": target, "monotone_approach": ok}

    rep.details = {
        "kind": kind.value,
        "family": family.value,
        "quantity": "exponent_ratio" if family is BoundFamily.POWER else "harmonic_weight",
        "alpha": params.alpha,
        "beta": params.beta,
        "alpha_symbolic": params.alpha_symbolic,
        "beta_symbolic": params.beta_symbolic,
        "degenerate": params.degenerate,
        "sharp": params == sharp,
        "sharpness": sharpness,
    }
    return rep


def _lemma_grid(lemma: LemmaId, grid_points: int) -> tuple[np.ndarray, bool]:
    """Grid over the (truncated) domain and whether its last point is a closed endpoint."""
    if lemma in (LemmaId.F2, LemmaId.F4):
        return LEMMA_GRID_X_MAX * np.arange(1, grid_points + 1) / grid_points, False
    hi = math.pi / 2
    if lemma is LemmaId.F3:
        return hi * np.arange(1, grid_points + 1) / grid_points, True
    return hi * np.arange(1, grid_points + 1) / (grid_points + 1), False


def verify_lemma_monotone(
    lemma: LemmaId | str,
    grid_points: int,
    *,
    func: Callable[[np.ndarray], np.ndarray] | None = None,
) -> VerificationReport:
    """Strict increase and range containment of a lemma function on a grid.

    F1 uses ``(0, pi/2)``, F3 ``(0, pi/2]`` (where it must equal 1), F2 and F4
    ``(0, 20]``.  ``func`` replaces the function under test (self-tests).
    """
    lemma = LemmaId(lemma)
    _check_count("grid_points", grid_points, 3)
    x, closed = _lemma_grid(lemma, grid_points)
    f = np.asarray(func(x) if func is not None else lemma_eval(lemma, x), dtype=float)
    lo, hi = (float(t) for t in lemma_limits(lemma))
    rep = VerificationReport(f"lemma[{lemma.value}]", label="evidence")
    rep.add(np.diff(f) / np.abs(f[:-1]))
    rep.add((f - lo) / lo)
    if closed:
        rep.add((hi - f[:-1]) / hi)
        rep.add_exact(bool(f[-1] == hi))
    else:
        rep.add((hi - f) / hi)
    rep.grid = {"x_min": float(x[0]), "x_max": float(x[-1]), "count": int(x.size), "spacing": "linear"}
    rep.details = {"lemma": lemma.value, "range": [lo, hi], "right_endpoint_closed": closed}
    return rep


def verify_series_identities(
    lemma: LemmaId | str, n_max: int, *, corrupt: Fraction = Fraction(0)
) -> VerificationReport:
    """Exact rational checks for ``n = 0 .. n_max``.

    Per ``n``: ``b_n > 0``; the increment ``a_{n+1}/b_{n+1} - a_n/b_n`` equals
    its factored closed form (shifted by ``corrupt`` for negative controls);
    the increment is positive.  F4 additionally checks
    ``b_n > (3^(2n+3) - 2^(2n+4)) / (4 (2n+3)!) > 0``.
    """
    lemma = LemmaId(lemma)
    if lemma not in (LemmaId.F2, LemmaId.F4):
        raise DomainError("series identities exist for F2 and F4 only")
    _check_count("n_max", n_max)
    rep = VerificationReport(f"series[{lemma.value}]", label="exact")
    increments = {}
    prev = series_coeff(lemma, 0)
    for n in range(n_max + 1):
        a, b = prev
        nxt = series_coeff(lemma, n + 1)
        inc = nxt[0] / nxt[1] - a / b
        rep.add_exact(b > 0)
        rep.add_exact(inc == ratio_increment_closed_form(lemma, n) + corrupt)
        rep.add_exact(inc > 0)
        if lemma is LemmaId.F4:
            floor = Fraction(3 ** (2 * n + 3) - 2 ** (2 * n + 4), 4 * math.factorial(2 * n + 3))
            rep.add_exact(b > floor > 0)
        if n < 3:
            increments[str(n)] = str(inc)
        prev = nxt
    rep.details = {"lemma": lemma.value, "n_max": n_max, "first_increments": increments}
    return rep


# substitution x(v) and the lemma each quantity reduces to
SUBSTITUTIONS = {
    NeumanKind.GA: (np.arcsin, LemmaId.F1, LemmaId.F3),
    NeumanKind.AG: (np.arctanh, LemmaId.F2, LemmaId.F4),
    NeumanKind.AQ: (np.arctan, LemmaId.F1, LemmaId.F3),
    NeumanKind.QA: (np.arcsinh, LemmaId.F2, LemmaId.F4),
}
_SUBSTITUTION_KERNEL = {NeumanKind.GA: "asin", NeumanKind.AG: "atanh", NeumanKind.AQ: "atan", NeumanKind.QA: "asinh"}


def substituted_argument(kind: NeumanKind | str, pair) -> np.ndarray:
    """The lemma argument ``x(v)`` for a pair, taken through ``1 - v``.

    ``asin`` and ``atanh`` are badly conditioned near ``v = 1``, so ``v``
    rounded on its own would cost several digits there.
    """
    kind = NeumanKind(kind)
    pair = pair if isinstance(pair, MeanPair) else MeanPair(*pair)
    x, y, _ = _scaled(pair.a, pair.b)
    v, w = _v_and_complement(x, y)
    return _inverse_function(_SUBSTITUTION_KERNEL[kind], v, w)


def _relative_error(x, y):
    return np.abs(x - y) / np.abs(y)


def verify_consistency(samples: int, seed: int, *, perturb: float = 0.0) -> VerificationReport:
    """Cross-check independent routes to the same quantity on random pairs.

    (i) explicit Neuman formula vs ``neuman(M1, M2)`` on the classical means;
    (ii) exponent ratio and harmonic weight vs the lemma functions after the
    substitution ``x = asin v, atanh v, atan v, asinh v``.  Margins are
    ``CONSISTENCY_TOL - relative error``.  ``perturb`` scales the lemma side.
    """
    _check_count("samples", samples)

    def run(start, stop):
        pair = sample_pairs(seed, start, stop)
        rep = VerificationReport("consistency")
        for kind in NeumanKind:
            m1, m2 = (classical_mean(k, pair) for k in kind.arguments)
            err = _relative_error(neuman_mean(kind, pair), neuman(m1, m2))
            rep.add(CONSISTENCY_TOL - err, tol=0.0)
            _, f_ratio, f_weight = SUBSTITUTIONS[kind]
            x = substituted_argument(kind, pair)
            err = _relative_error(exponent_ratio(kind, pair), lemma_eval(f_ratio, x) * (1 + perturb))
            rep.add(CONSISTENCY_TOL - err, tol=0.0)
            err = _relative_error(harmonic_weight(kind, pair), lemma_eval(f_weight, x) * (1 + perturb))
            rep.add(CONSISTENCY_TOL - err, tol=0.0)
        return rep

    rep = _chunked("consistency", samples, run)
    rep.seed = seed
    rep.details = {"samples": samples, "tolerance": CONSISTENCY_TOL, "perturb": perturb}
    return rep


SUITES = ("chain", "bounds", "lemmas", "series", "consistency")


def run_suites(
    suite: str = "all",
    *,
    samples: int = 100_000,
    seed: int = 42,
    grid: GridSpec = DEFAULT_GRID,
    grid_points: int = 10_000,
    n_max: int = 50,
) -> list[VerificationReport]:
    """Run one named suite or ``"all"`` of them, in a fixed order."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise DomainError(f"unknown suite {name!r}")
    reports = []
    for name in names:
        if name == "chain":
            reports.append(verify_chain(samples, seed))
        elif name == "bounds":
            for kind in NeumanKind:
                for family in BoundFamily:
                    reports.append(verify_sharp_bounds(kind, family, grid))
        elif name == "lemmas":
            reports.extend(verify_lemma_monotone(lemma, grid_points) for lemma in LemmaId)
        elif name == "series":
            reports.extend(verify_series_identities(lemma, n_max) for lemma in (LemmaId.F2, LemmaId.F4))
        else:
            reports.append(verify_consistency(samples, seed))
    return reports
