"""Exact convex-hull membership by phase-one simplex over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def hull_membership(q: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """Whether ``q`` is a convex combination of ``points``.

    Solves ``sum l_s p_s = q, sum l_s = 1, l >= 0`` with one artificial
    variable per row and Bland's rule, so it always terminates.
    """
    points = [tuple(p) for p in points]
    if not points:
        raise ValueError("point set must be nonempty")
    d = len(q)
    if any(len(p) != d for p in points):
        raise ValueError("dimension mismatch between query and points")
    q = tuple(q)
    if q in set(points):
        return True
    pts = sorted(set(points))
    m = len(pts)
    rows = []
    for r in range(d + 1):
        coeffs = [Fraction(p[r]) if r < d else Fraction(1) for p in pts]
        rhs = Fraction(q[r]) if r < d else Fraction(1)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        rows.append(coeffs + [Fraction(int(k == r)) for k in range(d + 1)] + [rhs])
    ncols = m + d + 1
    basis = [m + r for r in range(d + 1)]
    # objective: minimize the sum of artificials; reduced costs for the structural columns
    cost = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for c in range(m):
            cost[c] -= row[c]
        cost[ncols] -= row[ncols]
    while True:
        enter = next((c for c in range(ncols) if cost[c] < 0), None)
        if enter is None:
            break
        best = None
        for r, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[ncols] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            break  # unbounded cannot happen in phase one; guard anyway
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [x / piv for x in rows[r]]
        for k, row in enumerate(rows):
            if k != r and row[enter] != 0:
                factor = row[enter]
                rows[k] = [x - factor * y for x, y in zip(row, rows[r])]
        factor = cost[enter]
        cost = [x - factor * y for x, y in zip(cost, rows[r])]
        basis[r] = enter
    return cost[ncols] == 0
