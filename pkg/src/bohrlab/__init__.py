"""Sharp Bohr-type radii for the harmonic class P0_H(M)."""

from .extremal import (
    BohrClassParams,
    ExtremalCoefficients,
    coeff_bound,
    distance_lower_bound,
    extremal_value,
    growth_bounds,
)
from .radius_eqs import Kind, MajorantFunctional, RadiusProblem, radius_equation
from .rootfind import RootResult, Status, radius_curve, smallest_root
from .specfun import M_STAR, TruncatedSeries, dist_target

__all__ = [
    "BohrClassParams",
    "ExtremalCoefficients",
    "Kind",
    "M_STAR",
    "MajorantFunctional",
    "RadiusProblem",
    "RootResult",
    "Status",
    "TruncatedSeries",
    "coeff_bound",
    "dist_target",
    "distance_lower_bound",
    "extremal_value",
    "growth_bounds",
    "radius_curve",
    "radius_equation",
    "smallest_root",
]
