"""Radial kernels shared by every radius equation.

All functions take a radius ``r`` in ``[0, 1)`` and return floats.  The
closed forms are written to stay accurate at both ends of the interval:
near ``r = 0`` the logarithmic forms cancel, so the defining power series
is summed instead; near ``r = 1`` the ``(1 - r) ln(1 - r)`` products are
sent to their limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

EPS = 2.220446049250313e-16
PI2_6 = math.pi**2 / 6

# below this argument the log closed forms lose relative accuracy
_SERIES_CUTOFF = 0.25


@dataclass(frozen=True)
class TruncatedSeries:
    """Partial sum of a power series together with a bound on what was dropped.

    For a series with nonnegative terms the exact value lies in
    ``[partial_sum, partial_sum + tail_bound]``.  Alternating series are
    flagged and enclosed symmetrically.
    """

    partial_sum: float
    tail_bound: float
    terms_used: int
    alternating: bool = False

    def __post_init__(self):
        if not self.tail_bound >= 0:
            raise ValueError(f"tail_bound must be nonnegative, got {self.tail_bound}")

    @property
    def lower(self) -> float:
        if self.alternating:
            return self.partial_sum - self.tail_bound
        return self.partial_sum

    @property
    def upper(self) -> float:
        return self.partial_sum + self.tail_bound

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def rounding_slack(self) -> float:
        # truncation is certified; floating-point summation error is not
        return 16 * EPS * max(1.0, abs(self.partial_sum))

    def contains(self, value: float, slack: float | None = None) -> bool:
        if slack is None:
            slack = self.rounding_slack()
        return self.lower - slack <= value <= self.upper + slack

    def distance_outside(self, value: float) -> float:
        """How far ``value`` lies outside the enclosure (0 when inside)."""
        return max(0.0, self.lower - value, value - self.upper)


def check_radial(r: float) -> float:
    """Validate a radius in ``[0, 1)`` and return it as a float."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"radius must lie in [0, 1), got {r!r}")
    return r


def _sum_series(x: float, coeff: Callable[[int], float], start: int) -> float:
    # only used for x <= _SERIES_CUTOFF with coefficients bounded by 1
    total = 0.0
    xn = x**start
    n = start
    while True:
        term = coeff(n) * xn
        total += term
        if term <= EPS * 1e-2 * total:
            return total
        n += 1
        xn *= x


def _one_minus_log(u: float) -> float:
    """``(1 - u) ln(1 - u)`` with the limit 0 at ``u = 1``."""
    if u >= 1.0:
        return 0.0
    return (1.0 - u) * math.log1p(-u)


def phi(r: float) -> float:
    """Sum of ``r**n / (n (n - 1))`` over ``n >= 2``.

    Closed form ``r + (1 - r) ln(1 - r)``, increasing from 0 to 1 on
    ``[0, 1)``.
    """
    r = check_radial(r)
    if r < _SERIES_CUTOFF:
        return _sum_series(r, lambda n: 1.0 / (n * (n - 1)), 2)
    return r + _one_minus_log(r)


def psi(m: int, r: float) -> float:
    """``(1 - r**m) ln(1 - r**m)``; note ``psi(1, r) == phi(r) - r``."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    r = check_radial(r)
    return _one_minus_log(r**m)


def partial_sum_P(N: int, r: float) -> float:
    """Finite sum of ``r**n / (n (n - 1))`` for ``2 <= n <= N - 1``."""
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    r = check_radial(r)
    total = 0.0
    rn = r
    for n in range(2, N):
        rn *= r
        total += rn / (n * (n - 1))
    return total


def _dilog_series(x: float) -> float:
    total = 0.0
    xn = 1.0
    n = 0
    while True:
        n += 1
        xn *= x
        total += xn / (n * n)
        # remaining terms are bounded by x**(n+1) / ((n+1)**2 (1 - x))
        if xn * x / ((n + 1) ** 2 * (1.0 - x)) < 1e-17:
            return total


def dilog(x: float) -> float:
    """Real dilogarithm ``Li2(x) = sum x**n / n**2`` on ``[0, 1]``.

    The defining series is summed for ``x <= 1/2``.  Above that the
    reflection ``Li2(x) + Li2(1 - x) = pi**2/6 - ln(x) ln(1 - x)`` maps the
    argument back into the fast-converging range.
    """
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"dilog is only defined here on [0, 1], got {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return PI2_6
    if x <= 0.5:
        return _dilog_series(x)
    y = 1.0 - x
    return PI2_6 - math.log(x) * math.log1p(-x) - _dilog_series(y)


def area_tail(M: float, r: float) -> float:
    """Sharp bound on ``sum n (|a_n| + |b_n|)(|a_n| - |b_n|) r**(2n)`` for ``n >= 2``.

    With ``|a_n| + |b_n| <= 2M / (n (n - 1))`` the series is
    ``4 M**2 sum x**n / (n (n - 1)**2)`` with ``x = r**2``, whose closed form
    is ``4 M**2 (x Li2(x) - x - (1 - x) ln(1 - x))``.
    """
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    r = check_radial(r)
    x = r * r
    if x < _SERIES_CUTOFF:
        s = _sum_series(x, lambda n: 1.0 / (n * (n - 1) ** 2), 2)
    else:
        s = x * (dilog(x) - 1.0) - _one_minus_log(x)
    return 4.0 * M * M * s


def poly_P(N: int, w: float) -> float:
    """``w**N + w**(N-1) + ... + w`` by Horner's rule."""
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    if w < 0:
        raise ValueError(f"w must be nonnegative, got {w}")
    acc = 0.0
    for _ in range(N):
        acc = (acc + 1.0) * w
    return acc


LN4 = 2.0 * math.log(2.0)
M_STAR = 1.0 / (2.0 * (LN4 - 1.0))


def dist_target(M: float) -> float:
    """Distance from ``f(0)`` to the boundary of ``f(D)`` for the extremal map.

    Equals ``1 + 2M(1 - 2 ln 2)``; positive exactly when ``M < M_STAR``.
    """
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    return 1.0 + 2.0 * M * (1.0 - LN4)
