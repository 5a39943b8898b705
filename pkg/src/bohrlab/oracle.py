"""Brute-force certified series for the extremal map ``f_M``.

Nothing here uses a closed form.  Each left-hand side is assembled from
truncated power series in the coefficients ``c_n = 2M / (n (n - 1))`` of
``f_M``, each carrying a rigorous truncation bound.  Since every left-hand
side is increasing in each of its constituent series, evaluating it once at
the lower edges and once at the upper edges gives an enclosure of the exact
value.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterator

import numpy as np

from . import extremal, specfun
from .radius_eqs import Kind, RadiusProblem, radius_equation
from .rootfind import RootResult
from .specfun import TruncatedSeries, check_radial, dist_target

K_DEFAULT = 200
K_MAX = 6400
REL_TAIL = 1e-13


@dataclass(frozen=True)
class SeriesSpec:
    """``sum_{n >= start} coeff(n) * x**n``.

    ``coeff`` takes an integer array.  Terms must be nonnegative with
    nonincreasing coefficients unless ``alternating`` is set, in which case
    term magnitudes must decrease.
    """

    coeff: Callable[[np.ndarray], np.ndarray]
    start: int
    x: float
    alternating: bool = False


def certified_sum(spec: SeriesSpec, K: int) -> TruncatedSeries:
    """Sum terms ``start..K`` and bound the remainder.

    Nonnegative series: remainder ``<= c(K+1) x**(K+1) / (1 - x)``.
    Alternating series: remainder ``<= |first omitted term|``.
    """
    if K < spec.start:
        raise ValueError(f"K={K} is below the series start index {spec.start}")
    x = float(spec.x)
    if not 0.0 <= x < 1.0:
        raise ValueError(f"series argument must lie in [0, 1), got {x}")
    n = np.arange(spec.start, K + 2)
    c = np.asarray(spec.coeff(n), dtype=float)
    terms = c * x ** n.astype(float)
    partial = float(np.sum(terms[:-1]))
    omitted = abs(float(terms[-1]))
    if spec.alternating:
        tail = omitted
    else:
        if np.any(terms < 0):
            raise ValueError("enclosure mode needs nonnegative terms; flag alternating series")
        tail = omitted / (1.0 - x)
    return TruncatedSeries(partial, tail, K - spec.start + 1, spec.alternating)


def adaptive_sum(spec: SeriesSpec, K: int = K_DEFAULT) -> TruncatedSeries:
    """:func:`certified_sum` with ``K`` doubled until the tail is negligible."""
    while True:
        s = certified_sum(spec, max(K, spec.start))
        if s.tail_bound < REL_TAIL * max(1.0, abs(s.partial_sum)) or K >= K_MAX:
            return s
        K *= 2


def _coeffs(M: float) -> Callable[[np.ndarray], np.ndarray]:
    def c(n):
        n = np.asarray(n, dtype=float)
        return 2.0 * M / (n * (n - 1.0))

    return c


def _series_for(problem: RadiusProblem, r: float, K: int | None) -> dict[str, TruncatedSeries]:
    M, N = problem.M, problem.N
    c = _coeffs(M)

    def run(spec):
        return adaptive_sum(spec) if K is None else certified_sum(spec, max(K, spec.start))

    kind = problem.kind
    out = {}
    # |f_M(r)| - r
    out["f"] = run(SeriesSpec(c, 2, r))
    if kind in (Kind.BOHR_ROGOSINSKI, Kind.BOHR_ROGOSINSKI_SQUARED, Kind.BOHR_ROGOSINSKI_POWER,
                Kind.REFINED):
        out["tail"] = run(SeriesSpec(c, N, r))
    if kind is Kind.BOHR_ROGOSINSKI_POWER:
        out["f_pow"] = run(SeriesSpec(c, 2, r**problem.m))
    if kind is Kind.IMPROVED_AREA:
        # S_r / pi - r**2 = sum n |a_n|**2 r**(2n) since g = 0
        out["area"] = run(SeriesSpec(lambda n: n * c(n) ** 2, 2, r * r))
    if kind is Kind.COEFF_SQUARED:
        out["coeff_sq"] = run(SeriesSpec(lambda n: c(n) + n * (n - 1.0) * c(n) ** 2, 2, r))
    if kind is Kind.REFINED:
        t = problem.t
        out["sq_tail"] = run(SeriesSpec(lambda n: n * (n - 1.0) * c(n) ** 2, max(t + 1, 2), r * r))
    if kind is Kind.JACOBIAN:
        # |h'(r)| - 1 = sum_{n>=2} n c_n r**(n-1), reindexed by k = n - 1
        out["hprime"] = run(SeriesSpec(lambda k: (k + 1.0) * c(k + 1.0), 1, r))
        out["sq_all"] = run(SeriesSpec(lambda n: n * (n - 1.0) * c(n) ** 2, 2, r * r))
    return out


def _lhs(problem: RadiusProblem, r: float, e: dict[str, float]) -> float:
    M, N, p = problem.M, problem.N, problem.p
    kind = problem.kind
    f_abs = r + e["f"]
    if kind is Kind.BOHR_ROGOSINSKI:
        return f_abs + e["tail"]
    if kind is Kind.BOHR_ROGOSINSKI_SQUARED:
        return f_abs**2 + e["tail"]
    if kind is Kind.BOHR_ROGOSINSKI_POWER:
        return r**problem.m + e["f_pow"] + e["tail"]
    if kind is Kind.IMPROVED_AREA:
        w = r * r + e["area"]
        return f_abs + sum(w**k for k in range(1, N + 1))
    if kind is Kind.COEFF_SQUARED:
        return r + e["coeff_sq"]
    if kind is Kind.REFINED:
        t = problem.t
        value = f_abs**p + e["tail"]
        if t >= 1:
            c = _coeffs(M)
            value += float(sum(c(n) ** 2 for n in range(2, t + 1))) * r**N / (1.0 - r)
        return value + e["sq_tail"] / (1.0 - r)
    if kind is Kind.JACOBIAN:
        sqrt_jac = 1.0 + e["hprime"]
        return f_abs**p + sqrt_jac * r + e["f"] + e["sq_all"] / (1.0 - r**N)
    raise ValueError(f"unknown kind {kind!r}")


def lhs_functional(problem: RadiusProblem, r: float, K: int | None = None) -> TruncatedSeries:
    """Enclosure of the inequality's left-hand side for ``f = f_M`` at ``|z| = r``.

    ``K=None`` picks the truncation depth adaptively (200 doubling up to
    6400).
    """
    if not isinstance(problem, RadiusProblem):
        raise ValueError(f"expected a RadiusProblem, got {type(problem).__name__}")
    r = check_radial(r)
    series = _series_for(problem, r, K)
    lo = _lhs(problem, r, {k: s.lower for k, s in series.items()})
    hi = _lhs(problem, r, {k: s.upper for k, s in series.items()})
    terms = max(s.terms_used for s in series.values())
    return TruncatedSeries(lo, max(hi - lo, 0.0), terms)


def _require_found(root: RootResult):
    if not root.found:
        raise ValueError(f"need a root with status Found, got {root.status.value}")


def verify_sharpness(problem: RadiusProblem, root: RootResult, tol: float = 1e-8) -> bool:
    """True when the extremal left-hand side at the root hits the target within ``tol``."""
    _require_found(root)
    enc = lhs_functional(problem, root.radius)
    d = dist_target(problem.M)
    return enc.lower - tol <= d <= enc.upper + tol


def sample_radii(radius: float, samples: int) -> np.ndarray:
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    return radius * np.arange(1, samples + 1) / (samples + 1)


def inequality_violations(
    problem: RadiusProblem, root: RootResult, samples: int
) -> list[tuple[float, TruncatedSeries]]:
    """Sample points below the root where the left-hand side may exceed the target."""
    _require_found(root)
    d = dist_target(problem.M)
    bad = []
    for r in sample_radii(root.radius, samples):
        enc = lhs_functional(problem, float(r))
        if enc.upper > d:
            bad.append((float(r), enc))
    return bad


def verify_inequality_below(problem: RadiusProblem, root: RootResult, samples: int) -> bool:
    return not inequality_violations(problem, root, samples)


def majorant_matches(problem: RadiusProblem, r: float) -> tuple[bool, TruncatedSeries, float]:
    """Check that the closed-form majorant lies inside the extremal enclosure."""
    enc = lhs_functional(problem, r)
    value = radius_equation(problem).eval(r)
    return enc.contains(value), enc, value


# closed-form certification


@dataclass(frozen=True)
class FormCheck:
    name: str
    r: float
    value: float
    enclosure: TruncatedSeries

    @property
    def ok(self) -> bool:
        return self.enclosure.contains(self.value)


def _shift(s: TruncatedSeries, scale: float = 1.0, offset: float = 0.0) -> TruncatedSeries:
    return replace(s, partial_sum=offset + scale * s.partial_sum, tail_bound=scale * s.tail_bound)


def _phi_spec(x: float) -> SeriesSpec:
    return SeriesSpec(lambda n: 1.0 / (n * (n - 1.0)), 2, x)


def closed_form_checks(
    radii, M_values=(0.2, 0.6, 1.0), m_values=(1, 2, 3), K: int = K_DEFAULT
) -> Iterator[FormCheck]:
    """Every closed form of the library against its defining series at depth ``K``."""
    for r in radii:
        r = check_radial(r)
        yield FormCheck("phi", r, specfun.phi(r), certified_sum(_phi_spec(r), K))
        for m in m_values:
            u = r**m
            # (1-u) ln(1-u) = -u + sum_{n>=2} u**n / (n (n-1))
            enc = _shift(certified_sum(_phi_spec(u), K), offset=-u)
            yield FormCheck(f"psi[m={m}]", r, specfun.psi(m, r), enc)
        yield FormCheck(
            "dilog", r, specfun.dilog(r), certified_sum(SeriesSpec(lambda n: 1.0 / n**2, 1, r), K)
        )
        for M in M_values:
            c = _coeffs(M)
            enc = certified_sum(SeriesSpec(lambda n: n * c(n) ** 2, 2, r * r), K)
            yield FormCheck(f"area_tail[M={M}]", r, specfun.area_tail(M, r), enc)
            upper = _shift(certified_sum(SeriesSpec(c, 2, r), K), offset=r)
            yield FormCheck(f"extremal_value[M={M}]", r, extremal.extremal_value(M, r), upper)
            lower_bound, upper_bound = extremal.growth_bounds(M, r)
            yield FormCheck(f"growth_upper[M={M}]", r, upper_bound, upper)
            alt = SeriesSpec(lambda n: -c(n) * (-1.0) ** n, 2, r, alternating=True)
            enc = _shift(certified_sum(alt, K), offset=r)
            yield FormCheck(f"growth_lower[M={M}]", r, lower_bound, enc)


def printed_G(r: float) -> float:
    """``r**2 (Li2(r**2) - 1) + (1 - r**2) ln(1 - r**2)`` exactly as typeset in the source."""
    x = r * r
    return x * (specfun.dilog(x) - 1.0) + (1.0 - x) * np.log1p(-x)


def series_G(r: float, K: int = K_DEFAULT) -> TruncatedSeries:
    """``sum_{n>=2} r**(2n) / (n (n-1)**2)``, the series that ``G`` should sum."""
    return certified_sum(SeriesSpec(lambda n: 1.0 / (n * (n - 1.0) ** 2), 2, r * r), K)
