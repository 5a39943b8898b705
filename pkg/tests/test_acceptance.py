"""Exit criteria.  Each test records one PASS/FAIL line (shown in the summary)."""

import math
import time

import numpy as np
import pytest
from _grids import grid_problems

from bohrlab import oracle
from bohrlab.radius_eqs import Kind, RadiusProblem, radius_equation
from bohrlab.rootfind import Status, smallest_root
from bohrlab.specfun import M_STAR, dilog, dist_target
from bohrlab.tables import KNOWN_MISPRINTS, TOLERANCE, compute_table

TABLE_TOL = 2e-3
SHARP_TOL = 1e-8


def _table_check(table_id):
    t0 = time.perf_counter()
    cells = compute_table(table_id)
    elapsed = time.perf_counter() - t0
    misses = [c for c in cells if not c.matches]
    return cells, misses, elapsed


@pytest.mark.parametrize("table_id,count", [(1, 24), (2, 18)])
def test_tables_1_and_2(acceptance, table_id, count):
    cells, misses, elapsed = _table_check(table_id)
    worst = max(c.deviation for c in cells)
    ok = len(cells) == count and not misses and elapsed < 1.0 and TOLERANCE == TABLE_TOL
    acceptance(
        f"Table {table_id} reproduction",
        ok,
        f"{count - len(misses)}/{len(cells)} within {TABLE_TOL:g}, max dev {worst:.2e}, {elapsed:.3f}s",
    )
    assert ok, [(c.N, c.M, c.published, c.computed) for c in misses]


def test_table_3(acceptance):
    cells, misses, elapsed = _table_check(3)
    failing = {(c.table, c.N, c.M) for c in misses}
    # the exception list must be exactly the set of failing entries
    listed = set(KNOWN_MISPRINTS) == failing
    exceptions_ok = True
    notes = []
    for c in misses:
        problem = RadiusProblem(Kind.BOHR_ROGOSINSKI_SQUARED, c.M, N=c.N)
        sharp = c.result.found and oracle.verify_sharpness(problem, c.result, tol=SHARP_TOL)
        # the printed value itself must fail the residual certificate
        printed_residual = abs(radius_equation(problem).residual(c.published))
        exceptions_ok &= sharp and printed_residual > 1e-3
        notes.append(f"r_{c.N}({c.M:g}) printed {c.published} recomputed {c.computed:.4f}")
    ok = len(cells) == 45 and listed and exceptions_ok and elapsed < 1.0
    acceptance(
        "Table 3 reproduction",
        ok,
        f"{45 - len(misses)}/45 within {TABLE_TOL:g}; exceptions: {'; '.join(notes) or 'none'}",
    )
    assert ok


def test_no_root_regime(acceptance):
    probs = [p.with_M(M) for p in grid_problems((0.5,)) for M in (1.295, 1.5, 2.0)]
    statuses = {smallest_root(radius_equation(p)).status for p in probs}
    targets_ok = all(dist_target(M) <= 0 for M in (1.295, 1.5, 2.0))
    kinds = {p.kind for p in probs}
    ok = statuses == {Status.NO_ROOT} and targets_ok and kinds == set(Kind)
    acceptance("Non-existence regime", ok, f"{len(probs)} problems over {len(kinds)} kinds -> NoRoot")
    assert ok


def test_threshold_value(acceptance):
    stated, tol = 1.294353, 1e-6
    ok = abs(M_STAR - stated) <= tol
    acceptance(
        "Threshold M* = 1.294353 +- 1e-6",
        ok,
        f"1/(2(2ln2-1)) = {M_STAR:.9f}, off by {abs(M_STAR - stated):.2e}",
    )
    assert ok


def test_sharpness_suite(acceptance):
    t0 = time.perf_counter()
    problems = grid_problems()
    bad = []
    worst_gap = 0.0
    for problem in problems:
        root = smallest_root(radius_equation(problem))
        if not root.found:
            bad.append((problem.label(), "no root"))
            continue
        enc = oracle.lhs_functional(problem, root.radius)
        worst_gap = max(worst_gap, enc.distance_outside(dist_target(problem.M)))
        if not oracle.verify_sharpness(problem, root, tol=SHARP_TOL):
            bad.append((problem.label(), "sharpness"))
        if not oracle.verify_inequality_below(problem, root, 100):
            bad.append((problem.label(), "below root"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30.0
    acceptance(
        "Sharpness suite",
        ok,
        f"{len(problems)} roots, worst |LHS - d| gap {worst_gap:.1e}, {elapsed:.1f}s",
    )
    assert ok, bad


def test_closed_form_certification(acceptance):
    radii = [round(0.05 * k, 2) for k in range(1, 20)]
    checks = list(oracle.closed_form_checks(radii, K=200))
    failures = [(c.name, c.r) for c in checks if not c.ok]
    reflection = (math.pi**2 / 6 - math.log(0.5) ** 2) / 2
    dilog_ok = abs(dilog(0.5) - reflection) <= 1e-13
    names = {c.name.split("[")[0] for c in checks}
    ok = not failures and dilog_ok and {"phi", "psi", "dilog", "area_tail", "growth_lower", "growth_upper"} <= names
    acceptance(
        "Closed-form certification",
        ok,
        f"{len(checks)} checks, {len(failures)} outside enclosure; "
        f"|dilog(0.5) - reflection| = {abs(dilog(0.5) - reflection):.1e}",
    )
    assert ok, failures


def test_monotonicity(acceptance):
    M_grid = np.round(np.arange(0.1, 1.29, 0.05), 2).tolist() + [1.29]
    not_decreasing = []
    for problem in grid_problems((0.2,)):
        radii = [smallest_root(radius_equation(problem.with_M(M))).radius for M in M_grid]
        if not all(a > b for a, b in zip(radii, radii[1:])):
            not_decreasing.append(problem.label())

    not_increasing = []
    for M in (0.2, 0.4, 0.6, 0.8, 1.0, 1.29):
        radii = [smallest_root(RadiusProblem(Kind.BOHR_ROGOSINSKI, M, N=N)).radius for N in range(2, 21)]
        if not all(a <= b for a, b in zip(radii, radii[1:])):
            not_increasing.append(M)

    r = [smallest_root(RadiusProblem(Kind.BOHR_ROGOSINSKI, 0.2, N=N)).radius for N in (3, 5, 7, 9)]
    ok = not not_decreasing and not not_increasing and r == sorted(r)
    acceptance(
        "Monotonicity in M and N",
        ok,
        "r_3..r_9(0.2) = " + ", ".join(f"{x:.4f}" for x in r),
    )
    assert ok, (not_decreasing, not_increasing)
