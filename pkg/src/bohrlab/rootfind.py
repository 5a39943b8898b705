"""Smallest root of ``B(r) = d(M)`` on ``(0, 1)``.

Every majorant is increasing with ``B(0) = 0``, so when the target is
positive the first sign change found by scanning up from 0 brackets the
only root.  Bisection then shrinks the bracket.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .radius_eqs import MajorantFunctional, RadiusProblem, radius_equation

RADIUS_TOL = 1e-12
RESIDUAL_TOL = 1e-9
SCAN_STEP = 1e-3
R_MAX = 1.0 - 1e-9
MAX_ITER = 200


class Status(str, enum.Enum):
    FOUND = "Found"
    NO_ROOT = "NoRoot"
    NOT_CONVERGED = "NotConverged"


@dataclass(frozen=True)
class RootResult:
    radius: float | None
    residual: float | None
    bracket_width: float
    iterations: int
    status: Status
    message: str = ""

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def _no_root(message: str) -> RootResult:
    return RootResult(None, None, 0.0, 0, Status.NO_ROOT, message)


def _bracket(f: MajorantFunctional) -> tuple[float, float] | None:
    lo = 0.0
    k = 0
    while lo < R_MAX:
        k += 1
        hi = min(k * SCAN_STEP, R_MAX)
        if f.residual(hi) >= 0:
            return lo, hi
        lo = hi
    return None


def smallest_root(
    f: MajorantFunctional,
    radius_tol: float = RADIUS_TOL,
    residual_tol: float = RESIDUAL_TOL,
    max_iter: int = MAX_ITER,
) -> RootResult:
    """Locate the smallest ``r`` in ``(0, 1)`` with ``f.eval(r) == f.target``.

    Returns ``NoRoot`` when the target is not positive (``M >= M_STAR``),
    since then ``B(r) > 0 >= d(M)`` on the whole interval.
    """
    if isinstance(f, RadiusProblem):
        f = radius_equation(f)
    if f.target <= 0:
        return _no_root("no root: M >= 1/(2(2ln2-1)), distance target is not positive")

    bracket = _bracket(f)
    if bracket is None:
        return _no_root(f"no root: majorant stays below target up to r = {R_MAX}")
    lo, hi = bracket

    iterations = 0
    while True:
        mid = 0.5 * (lo + hi)
        value = f.residual(mid)
        if hi - lo <= radius_tol and abs(value) <= residual_tol:
            return RootResult(mid, abs(value), hi - lo, iterations, Status.FOUND)
        if iterations >= max_iter or mid <= lo or mid >= hi:
            # cap reached, or the bracket is down to adjacent floats
            return RootResult(
                mid, abs(value), hi - lo, iterations, Status.NOT_CONVERGED,
                "iteration cap reached" if iterations >= max_iter else "bracket exhausted",
            )
        if value >= 0:
            hi = mid
        else:
            lo = mid
        iterations += 1


def radius_curve(
    problem: RadiusProblem, M_grid: Iterable[float], **kwargs
) -> list[tuple[float, RootResult]]:
    """Radius as a function of ``M`` for fixed kind and integer parameters."""
    out = []
    for M in M_grid:
        out.append((M, smallest_root(radius_equation(problem.with_M(M)), **kwargs)))
    return out
