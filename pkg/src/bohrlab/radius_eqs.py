"""Majorant functionals and the radius equations ``B(r) = d(M)``.

Each inequality of Bohr type for the class bounds a left-hand side by a
radial majorant ``B(r)`` obtained from the sharp coefficient bounds.  The
majorant is a power series with nonnegative coefficients, so it is
increasing with ``B(0) = 0``, and the sharp radius is the unique root of
``B(r) = d(M)`` with ``d(M) = 1 + 2M(1 - 2 ln 2)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import partial
from typing import Callable

from .specfun import area_tail, check_radial, dist_target, partial_sum_P, phi, poly_P


class Kind(str, enum.Enum):
    BOHR_ROGOSINSKI = "br"
    BOHR_ROGOSINSKI_SQUARED = "br-sq"
    BOHR_ROGOSINSKI_POWER = "br-pow"
    IMPROVED_AREA = "area"
    COEFF_SQUARED = "coeff-sq"
    REFINED = "refined"
    JACOBIAN = "jacobian"


# integer parameters each kind takes, with their minimum values
PARAMS: dict[Kind, dict[str, int]] = {
    Kind.BOHR_ROGOSINSKI: {"N": 2},
    Kind.BOHR_ROGOSINSKI_SQUARED: {"N": 2},
    Kind.BOHR_ROGOSINSKI_POWER: {"m": 1, "N": 2},
    Kind.IMPROVED_AREA: {"N": 1},
    Kind.COEFF_SQUARED: {},
    Kind.REFINED: {"p": 1, "N": 2},
    Kind.JACOBIAN: {"p": 1, "N": 1},
}


class InvalidProblem(ValueError):
    pass


@dataclass(frozen=True)
class RadiusProblem:
    """Which inequality, for which ``M``, with which integer parameters.

    Parameters a kind does not use must be left as ``None``.
    """

    kind: Kind
    M: float
    N: int | None = None
    m: int | None = None
    p: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not (isinstance(self.M, (int, float)) and self.M > 0 and math.isfinite(self.M)):
            raise InvalidProblem(f"M must be a positive finite number, got {self.M!r}")
        required = PARAMS[self.kind]
        for name in ("N", "m", "p"):
            value = getattr(self, name)
            if name in required:
                if value is None:
                    raise InvalidProblem(f"{self.kind.value} requires {name}")
                if isinstance(value, bool) or not isinstance(value, int):
                    raise InvalidProblem(f"{name} must be an integer, got {value!r}")
                if value < required[name]:
                    raise InvalidProblem(
                        f"{self.kind.value} requires {name} >= {required[name]}, got {value}"
                    )
            elif value is not None:
                raise InvalidProblem(f"{self.kind.value} does not take {name}")

    @property
    def t(self) -> int | None:
        if self.kind is not Kind.REFINED:
            return None
        return (self.N - 1) // 2

    def with_M(self, M: float) -> "RadiusProblem":
        return RadiusProblem(self.kind, M, self.N, self.m, self.p)

    def params(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PARAMS[self.kind]}

    def label(self) -> str:
        extra = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.kind.value}(M={self.M:g}{',' + extra if extra else ''})"


def majorant_br(M: float, N: int, r: float) -> float:
    """``|f| + sum_{n>=N} (|a_n|+|b_n|) r**n``  <=  ``r + 2M(2 phi - P_N)``."""
    r = check_radial(r)
    return r + 2.0 * M * (2.0 * phi(r) - partial_sum_P(N, r))


def majorant_br_sq(M: float, N: int, r: float) -> float:
    r = check_radial(r)
    ph = phi(r)
    return (r + 2.0 * M * ph) ** 2 + 2.0 * M * (ph - partial_sum_P(N, r))


def majorant_br_pow(M: float, m: int, N: int, r: float) -> float:
    """``|f(z**m)| + sum_{n>=N} |a_n| r**n``; reduces to :func:`majorant_br` at ``m = 1``."""
    r = check_radial(r)
    rm = r**m
    return rm + 2.0 * M * phi(rm) + 2.0 * M * (phi(r) - partial_sum_P(N, r))


def area_bound(M: float, r: float) -> float:
    """Sharp upper bound on ``S_r / pi``, the normalized area of ``f(|z| < r)``."""
    return r * r + area_tail(M, r)


def majorant_area(M: float, N: int, r: float) -> float:
    r = check_radial(r)
    return r + 2.0 * M * phi(r) + poly_P(N, area_bound(M, r))


def majorant_coeff_sq(M: float, r: float) -> float:
    # sum n(n-1) c_n**2 r**n = 4 M**2 phi(r)
    r = check_radial(r)
    return r + 2.0 * M * (1.0 + 2.0 * M) * phi(r)


def _head_sum(t: int, x: float) -> float:
    # sum_{n=2}^{t} x**n / (n (n-1)); empty when t < 2
    return partial_sum_P(t + 1, x) if t >= 2 else 0.0


def majorant_refined(M: float, p: int, N: int, r: float) -> float:
    """Majorant of the refined inequality with ``t = (N - 1) // 2``.

    The ``sgn(t)`` term carries the squared coefficients
    ``sum_{n=2}^{t} (2M / (n (n-1)))**2`` and vanishes for ``t <= 1``.
    """
    r = check_radial(r)
    t = (N - 1) // 2
    ph = phi(r)
    value = (r + 2.0 * M * ph) ** p + 2.0 * M * (ph - partial_sum_P(N, r))
    if t >= 1:
        sq = sum((2.0 * M / (n * (n - 1))) ** 2 for n in range(2, t + 1))
        value += sq * r**N / (1.0 - r)
    x = r * r
    value += 4.0 * M * M / (1.0 - r) * (phi(x) - _head_sum(t, x))
    return value


def majorant_jacobian(M: float, p: int, N: int, r: float) -> float:
    r = check_radial(r)
    ph = phi(r)
    # sqrt|J_f| <= |h'(r)| = 1 - 2M ln(1 - r)
    jac = 1.0 - 2.0 * M * math.log1p(-r)
    return (r + 2.0 * M * ph) ** p + r * jac + 2.0 * M * ph + 4.0 * M * M / (1.0 - r**N) * phi(r * r)


def _bind(problem: RadiusProblem) -> Callable[[float], float]:
    M, N, m, p = problem.M, problem.N, problem.m, problem.p
    kind = problem.kind
    if kind is Kind.BOHR_ROGOSINSKI:
        return partial(majorant_br, M, N)
    if kind is Kind.BOHR_ROGOSINSKI_SQUARED:
        return partial(majorant_br_sq, M, N)
    if kind is Kind.BOHR_ROGOSINSKI_POWER:
        return partial(majorant_br_pow, M, m, N)
    if kind is Kind.IMPROVED_AREA:
        return partial(majorant_area, M, N)
    if kind is Kind.COEFF_SQUARED:
        return partial(majorant_coeff_sq, M)
    if kind is Kind.REFINED:
        return partial(majorant_refined, M, p, N)
    if kind is Kind.JACOBIAN:
        return partial(majorant_jacobian, M, p, N)
    raise InvalidProblem(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class MajorantFunctional:
    problem: RadiusProblem
    target: float
    _fn: Callable[[float], float]

    def eval(self, r: float) -> float:
        return self._fn(r)

    __call__ = eval

    def residual(self, r: float) -> float:
        return self._fn(r) - self.target


def radius_equation(problem: RadiusProblem) -> MajorantFunctional:
    """Majorant and distance target for ``problem``; the radius solves ``eval(r) = target``."""
    if not isinstance(problem, RadiusProblem):
        raise InvalidProblem(f"expected a RadiusProblem, got {type(problem).__name__}")
    return MajorantFunctional(problem, dist_target(problem.M), _bind(problem))
