"""Bracketed scalar minimization.

`minimize_scalar` is golden-section search: derivative-free, robust near
bracket edges where the objective blows up, and with a provable
iteration bound.  `grid_scan` is a brute-force argmin on an even grid,
kept deliberately independent so it can serve as an oracle for the
search in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class InvalidBracket(ValueError):
    pass


class NonFiniteObjective(ValueError):
    pass


class Infeasible(ValueError):
    """Raised by an objective to mark a point as having no defined value.

    grid_scan skips such points; minimize_scalar does not catch it (its
    contract requires the objective to be finite on the bracket).
    """


class AllInfeasible(ValueError):
    pass


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise InvalidBracket(f"need lo < hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class MinResult:
    x: float
    f_at_x: float
    iterations: int
    achieved_tolerance: float


def _eval(f: Callable[[float], float], x: float) -> float:
    fx = f(x)
    if not math.isfinite(fx):
        raise NonFiniteObjective(f"objective returned {fx!r} at x={x!r}")
    return fx


def minimize_scalar(
    f: Callable[[float], float], bracket: Bracket, tol: float = 1e-9
) -> MinResult:
    """Golden-section search for the minimum of a unimodal f on bracket.

    Contracts the interval by the inverse golden ratio per iteration
    until its width is at most tol, then returns the midpoint.  Never
    evaluates f outside the initial bracket.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo, hi = bracket.lo, bracket.hi
    c = hi - (hi - lo) * INV_PHI
    d = lo + (hi - lo) * INV_PHI
    fc = _eval(f, c)
    fd = _eval(f, d)
    iterations = 0
    while hi - lo > tol:
        iterations += 1
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - (hi - lo) * INV_PHI
            fc = _eval(f, c)
        else:
            lo, c, fc = c, d, fd
            d = lo + (hi - lo) * INV_PHI
            fd = _eval(f, d)
    x = 0.5 * (lo + hi)
    return MinResult(
        x=x, f_at_x=_eval(f, x), iterations=iterations, achieved_tolerance=hi - lo
    )


def grid_scan(f: Callable[[float], float], bracket: Bracket, n: int) -> MinResult:
    """Argmin of f over n evenly spaced points including both endpoints.

    Points where f raises Infeasible are skipped; ties break toward the
    smaller x.  This is the test oracle, not a production path.
    """
    if n < 2:
        raise ValueError(f"need at least 2 grid points, got {n}")
    lo, hi = bracket.lo, bracket.hi
    best_x = None
    best_f = math.inf
    evaluated = 0
    for i in range(n):
        x = lo + (hi - lo) * i / (n - 1)
        try:
            fx = _eval(f, x)
        except Infeasible:
            continue
        evaluated += 1
        if fx < best_f:
            best_x, best_f = x, fx
    if best_x is None:
        raise AllInfeasible(f"objective infeasible at all {n} grid points")
    return MinResult(
        x=best_x,
        f_at_x=best_f,
        iterations=evaluated,
        achieved_tolerance=(hi - lo) / (n - 1),
    )
