"""Pythagoras- and Fermat-type identities in the plane under different metrics.

Coordinates are :class:`fractions.Fraction`, so identity checks are exact.
Euclidean distances are carried in squared form and never square-rooted.
``PNorm(1)`` and ``PNorm(2)`` normalise to Taxicab and Euclidean; other
p-norms produce only floating-point distances and are rejected by the
identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

import numpy as np

from .errors import InexactMetric, InexactMetricForOddExponent


@dataclass(frozen=True)
class PlanePoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def as_list(self) -> list[str]:
        return [str(self.x), str(self.y)]


@dataclass(frozen=True)
class Metric:
    kind: str
    r: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("euclidean", "taxicab", "chebyshev", "pnorm"):
            raise ValueError(f"unknown metric {self.kind!r}")
        if self.kind == "pnorm":
            r = Fraction(self.r)
            if r < 1:
                raise ValueError("p-norm needs r >= 1")
            object.__setattr__(self, "r", r)

    def normalized(self) -> Metric:
        if self.kind == "pnorm" and self.r == 1:
            return TAXICAB
        if self.kind == "pnorm" and self.r == 2:
            return EUCLIDEAN
        return self

    def __str__(self):
        return f"pnorm({self.r})" if self.kind == "pnorm" else self.kind


EUCLIDEAN = Metric("euclidean")
TAXICAB = Metric("taxicab")
CHEBYSHEV = Metric("chebyshev")


def PNorm(r) -> Metric:
    return Metric("pnorm", Fraction(r))


def parse_metric(text: str) -> Metric:
    t = text.strip().lower()
    if t.startswith("pnorm"):
        return PNorm(Fraction(t[5:].strip("(:= )"))).normalized()
    return Metric(t)


@dataclass(frozen=True)
class Distance:
    """``exact`` is the distance itself when rational, ``squared`` its square
    when rational; ``approx`` is always available."""

    exact: Fraction | None
    squared: Fraction | None
    approx: float


def _rational_sqrt(v: Fraction) -> Fraction | None:
    n, d = isqrt(v.numerator), isqrt(v.denominator)
    return Fraction(n, d) if n * n == v.numerator and d * d == v.denominator else None


def dist(metric: Metric, A: PlanePoint, B: PlanePoint) -> Distance:
    m = metric.normalized()
    dx, dy = abs(A.x - B.x), abs(A.y - B.y)
    if m.kind == "taxicab":
        v = dx + dy
        return Distance(v, v * v, float(v))
    if m.kind == "chebyshev":
        v = max(dx, dy)
        return Distance(v, v * v, float(v))
    if m.kind == "euclidean":
        sq = dx * dx + dy * dy
        return Distance(_rational_sqrt(sq), sq, float(sq) ** 0.5)
    r = float(m.r)
    return Distance(None, None, (float(dx) ** r + float(dy) ** r) ** (1 / r))


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction
    holds: bool

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.holds))


def pythagoras_identity(metric: Metric, A: PlanePoint, B: PlanePoint, C: PlanePoint) -> IdentityCheck:
    """Compare d(A,B)^2 + d(A,C)^2 with d(B,C)^2 exactly (right angle at A)."""
    ds = [dist(metric, P, Q).squared for P, Q in ((A, B), (A, C), (B, C))]
    if any(s is None for s in ds):
        raise InexactMetric(f"{metric} distances are not rational")
    lhs, rhs = ds[0] + ds[1], ds[2]
    return IdentityCheck(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class TripleHit:
    A: tuple[int, int]
    B: tuple[int, int]
    C: tuple[int, int]
    powers: tuple[int, int, int]

    def as_row(self, metric: Metric, n: int) -> dict:
        return {
            "metric": str(metric),
            "n": n,
            "A": list(self.A),
            "B": list(self.B),
            "C": list(self.C),
            "dist_pow_AB": self.powers[0],
            "dist_pow_AC": self.powers[1],
            "dist_pow_BC": self.powers[2],
        }


def _grid(bound: int) -> np.ndarray:
    return np.array(list(product(range(bound + 1), repeat=2)), dtype=np.int64)


def _distance_powers(metric: Metric, n: int, pts: np.ndarray) -> np.ndarray:
    """Matrix of d(P, Q)^n over integer grid points, exact integers."""
    m = metric.normalized()
    diff = np.abs(pts[:, None, :] - pts[None, :, :])
    if m.kind == "taxicab":
        base, e = diff.sum(axis=2), n
    elif m.kind == "chebyshev":
        base, e = diff.max(axis=2), n
    elif m.kind == "euclidean":
        if n % 2:
            raise InexactMetricForOddExponent(f"Euclidean distance^{n} is irrational in general")
        base, e = (diff**2).sum(axis=2), n // 2
    else:
        raise InexactMetric(f"{metric} has no exact grid distances")
    top = int(base.max()) if base.size else 0
    if top and top.bit_length() * e >= 62:
        base = base.astype(object)
    return base**e


def fermat_triple_search(metric: Metric, n: int, bound: int, rows: range | None = None) -> list[TripleHit]:
    """Grid triples with d(A,B)^n + d(A,C)^n = d(B,C)^n on {0..bound}^2.

    All three distances must be positive; each unordered pair {B, C} is
    reported once (B before C in grid order). ``rows`` restricts the
    apex A to a slab of grid indices so callers can split the work.
    """
    if n < 2:
        raise ValueError("exponent must be >= 2")
    pts = _grid(bound)
    D = _distance_powers(metric, n, pts)
    N = len(pts)
    hits = []
    iu, ju = np.triu_indices(N, k=1)
    for a in rows if rows is not None else range(N):
        da = D[a]
        lhs = da[iu] + da[ju]
        ok = (lhs == D[iu, ju]) & (da[iu] > 0) & (da[ju] > 0) & (D[iu, ju] > 0)
        for i, j in zip(iu[ok].tolist(), ju[ok].tolist()):
            hits.append(
                TripleHit(
                    tuple(pts[a].tolist()),
                    tuple(pts[i].tolist()),
                    tuple(pts[j].tolist()),
                    (int(da[i]), int(da[j]), int(D[i, j])),
                )
            )
    return hits


def grid_size(bound: int) -> int:
    return (bound + 1) ** 2


UNIT_TRIPLE = (PlanePoint(0, 0), PlanePoint(1, 0), PlanePoint(0, 1))
