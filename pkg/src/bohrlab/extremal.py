"""The class P0_H(M): coefficient bounds, the extremal map and growth bounds.

Every member ``f = h + conj(g)`` of the class satisfies
``|a_n| + |b_n| <= 2M / (n (n - 1))`` for ``n >= 2``, and the analytic map

    f_M(z) = z + sum_{n>=2} 2M z**n / (n (n - 1))

attains all of these bounds at once (``b_n = 0``).  Only radial values are
needed, so everything here is a function of ``r = |z|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import M_STAR, check_radial, dist_target, phi


@dataclass(frozen=True)
class BohrClassParams:
    M: float

    def __post_init__(self):
        if not self.M > 0:
            raise ValueError(f"M must be positive, got {self.M}")

    M_star = M_STAR

    def has_positive_distance(self) -> bool:
        return self.M < M_STAR


@dataclass(frozen=True)
class ExtremalCoefficients:
    """Taylor coefficients of ``f_M``: ``h = z + sum c(n) z**n`` and ``g = 0``."""

    M: float
    a1: float = 1.0
    b1: float = 0.0

    def c(self, n: int) -> float:
        return coeff_bound(n, self.M)

    def a(self, n: int) -> float:
        return 1.0 if n == 1 else self.c(n)

    def b(self, n: int) -> float:
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        return 0.0


def coeff_bound(n: int, M: float) -> float:
    """Sharp bound ``2M / (n (n - 1))`` on ``|a_n| + |b_n|``."""
    if n < 2:
        raise ValueError(f"coefficient bound needs n >= 2, got {n}")
    return 2.0 * M / (n * (n - 1))


def extremal_value(M: float, r: float) -> float:
    """``f_M(r) = r + 2M phi(r)``."""
    r = check_radial(r)
    return r + 2.0 * M * phi(r)


def _alternating_kernel(r: float) -> float:
    # sum_{n>=2} (-1)**(n-1) r**n / (n (n-1)) = r - (1 + r) ln(1 + r)
    if r < 0.25:
        total, rn, n = 0.0, r, 1
        while True:
            n += 1
            rn *= r
            term = rn / (n * (n - 1))
            total += term if n % 2 else -term
            if term <= 1e-18 * abs(total):
                return total
    return r - (1.0 + r) * math.log1p(r)


def growth_bounds(M: float, r: float) -> tuple[float, float]:
    """Lower and upper bounds on ``|f(z)|`` for ``|z| = r``; both sharp for ``f_M``."""
    r = check_radial(r)
    lower = r + 2.0 * M * _alternating_kernel(r)
    upper = extremal_value(M, r)
    return lower, upper


def distance_lower_bound(M: float) -> float:
    # sum_{n>=2} (-1)**(n-1) / (n (n-1)) = 1 - 2 ln 2, attained by f_M
    return dist_target(M)
