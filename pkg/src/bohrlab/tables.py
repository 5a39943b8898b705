"""Layouts of the three published radius tables and their printed entries.

Rows are indexed by ``N`` and columns by ``M``.  Tables 1 and 2 tabulate
the Bohr-Rogosinski radius (``br``); Table 3 tabulates its squared variant
(``br-sq``).  That mapping is not stated next to the tables, it was pinned
down by checking residuals of each candidate equation at the printed roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .radius_eqs import Kind, RadiusProblem, radius_equation
from .rootfind import RootResult, smallest_root

TOLERANCE = 2e-3


@dataclass(frozen=True)
class TableLayout:
    id: int
    kind: Kind
    N_values: tuple[int, ...]
    M_values: tuple[float, ...]
    published: dict[int, tuple[float, ...]]


_M12 = (0.2, 0.4, 0.6, 0.8, 1.0, 1.29)
_M3 = (0.2, 0.3, 0.5, 0.6, 0.8, 0.9, 1.0, 1.1, 1.29)

TABLES: dict[int, TableLayout] = {
    1: TableLayout(
        1, Kind.BOHR_ROGOSINSKI, (3, 5, 7, 9), _M12,
        {
            3: (0.683, 0.527, 0.405, 0.296, 0.187, 0.003),
            5: (0.702, 0.541, 0.414, 0.301, 0.189, 0.003),
            7: (0.705, 0.542, 0.414, 0.300, 0.189, 0.003),
            9: (0.706, 0.5429, 0.414, 0.300, 0.1891, 0.003),
        },
    ),
    2: TableLayout(
        2, Kind.BOHR_ROGOSINSKI, (4, 6, 8), _M12,
        {
            4: (0.697, 0.537, 0.412, 0.300, 0.189, 0.003),
            6: (0.704, 0.542, 0.415, 0.301, 0.189, 0.003),
            8: (0.706, 0.542, 0.414, 0.300, 0.189, 0.003),
        },
    ),
    3: TableLayout(
        3, Kind.BOHR_ROGOSINSKI_SQUARED, (3, 5, 6, 9, 10), _M3,
        {
            3: (0.739, 0.668, 0.559, 0.512, 0.425, 0.381, 0.334, 0.279, 0.053),
            5: (0.751, 0.681, 0.517, 0.524, 0.435, 0.390, 0.342, 0.286, 0.054),
            6: (0.753, 0.682, 0.572, 0.525, 0.436, 0.391, 0.342, 0.286, 0.054),
            9: (0.754, 0.684, 0.573, 0.525, 0.436, 0.391, 0.342, 0.286, 0.054),
            10: (0.755, 0.684, 0.573, 0.525, 0.436, 0.391, 0.342, 0.286, 0.054),
        },
    ),
}

# (table id, N, M) -> printed value that fails the residual check.  r_5(0.5)
# breaks the N-monotonicity of its own column (r_3 = 0.559, r_6 = 0.572);
# the recomputed root is about 0.5717, so the digits look transposed.
KNOWN_MISPRINTS: dict[tuple[int, int, float], float] = {
    (3, 5, 0.5): 0.517,
}


def round3(x: float) -> Decimal:
    """Round half away from zero to three decimals."""
    return Decimal(repr(x)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class Cell:
    table: int
    N: int
    M: float
    published: float
    result: RootResult

    @property
    def computed(self) -> float | None:
        return self.result.radius

    @property
    def deviation(self) -> float | None:
        if self.computed is None:
            return None
        return abs(self.computed - self.published)

    @property
    def matches(self) -> bool:
        return self.deviation is not None and self.deviation <= TOLERANCE

    @property
    def known_misprint(self) -> bool:
        return (self.table, self.N, self.M) in KNOWN_MISPRINTS


def compute_table(table_id: int) -> list[Cell]:
    layout = TABLES[table_id]
    cells = []
    for N in layout.N_values:
        for j, M in enumerate(layout.M_values):
            problem = RadiusProblem(layout.kind, M, N=N)
            result = smallest_root(radius_equation(problem))
            cells.append(Cell(table_id, N, M, layout.published[N][j], result))
    return cells
