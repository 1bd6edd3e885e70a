"""Saturated Newton polytope checks.

For a homogeneous level the tight parameters ``z_I = min sum_I x`` over the
support always satisfy ``conv(support) <= P^z``.  The hull is a generalized
permutahedron exactly when ``z`` is supermodular and every greedy vertex of
``P^z`` lies in the hull; then the level is saturated iff the integer points
of ``P^z`` are the support.  Points of the whole hull that fall between
levels are settled by exact hull membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .genperm import all_subsets, genperm_lattice_points, z_from_points
from .hull import hull_membership
from .polynomial import SparsePolynomial


def box_candidates(points: Sequence[tuple[int, ...]]) -> Iterable[tuple[int, ...]]:
    """Integer points obeying every 0/1 support bound ``min <= sum_I x <= max``."""
    points = list(points)
    n = len(points[0])
    if n == 0:
        yield ()
        return
    bounds: list[list[tuple[frozenset, int, int]]] = [[] for _ in range(n + 1)]
    for I in all_subsets(n):
        if I:
            sums = [sum(p[i - 1] for i in I) for p in points]
            bounds[max(I)].append((I, min(sums), max(sums)))
    lo = [min(p[i] for p in points) for i in range(n)]
    hi = [max(p[i] for p in points) for i in range(n)]
    t = [0] * n

    def rec(k: int):
        if k > n:
            yield tuple(t)
            return
        for x in range(lo[k - 1], hi[k - 1] + 1):
            t[k - 1] = x
            if all(low <= sum(t[i - 1] for i in I) <= up for I, low, up in bounds[k]):
                yield from rec(k + 1)

    yield from rec(1)


def missing_hull_points(points: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Integer points of ``conv(points)`` that are not in ``points``."""
    pts = set(points)
    return [q for q in box_candidates(sorted(pts)) if q not in pts and hull_membership(q, sorted(pts))]


@dataclass
class LevelVerdict:
    degree: int
    gp: bool
    saturated: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"degree": self.degree, "gp": self.gp, "saturated": self.saturated, "witness": self.witness}


@dataclass
class SNPVerdict:
    snp: bool
    components_gp: bool
    levels: list[LevelVerdict] = field(default_factory=list)
    witness: list[int] | None = None

    def to_json(self) -> dict:
        return {"snp": self.snp, "components_gp": self.components_gp, "witness": self.witness,
                "levels": [lv.to_json() for lv in self.levels]}


def _non_gp(pts, degree: int, witness: dict) -> LevelVerdict:
    missing = missing_hull_points(pts)
    if missing:
        witness["missing_point"] = list(missing[0])
    return LevelVerdict(degree, False, not missing, witness)


def level_check(points: Sequence[tuple[int, ...]], degree: int) -> LevelVerdict:
    pts = sorted(set(points))
    n = len(pts[0])
    spec = z_from_points(pts, n)
    bad = spec.supermodular_violation()
    if bad is not None:
        I, J = bad
        return _non_gp(pts, degree, {"non_supermodular": [sorted(I), sorted(J)]})
    pset = set(pts)
    for v in sorted(spec.vertices()):
        if v not in pset and not hull_membership(v, pts):
            return _non_gp(pts, degree, {"vertex_outside_hull": list(v)})
    lattice = genperm_lattice_points(spec)
    extra = sorted(lattice - pset)
    if extra:
        return LevelVerdict(degree, True, False, {"missing_point": list(extra[0])})
    return LevelVerdict(degree, True, True)


def snp_check(p: SparsePolynomial) -> SNPVerdict:
    support = sorted(p.support())
    if not support:
        return SNPVerdict(True, True)
    levels = []
    by_deg: dict[int, list] = {}
    for e in support:
        by_deg.setdefault(sum(e), []).append(e)
    for d in sorted(by_deg):
        levels.append(level_check(by_deg[d], d))
    gp = all(lv.gp for lv in levels)
    witness = None
    for lv in levels:
        if not lv.saturated:
            witness = lv.witness.get("missing_point") if lv.witness else None
            break
    if witness is None:
        missing = missing_hull_points(support)
        if missing:
            witness = list(missing[0])
    return SNPVerdict(witness is None, gp, levels, witness)
