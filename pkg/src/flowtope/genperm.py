"""Generalized permutahedra in z-form and Minkowski y-form.

A z-form spec assigns an integer to every subset ``I`` of ``{1..n}`` and
describes ``{t : sum_I t >= z_I, sum t = z_[n]}``.  Subsets are frozensets of
1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Mapping


def all_subsets(n: int) -> Iterator[frozenset[int]]:
    for r in range(n + 1):
        for c in combinations(range(1, n + 1), r):
            yield frozenset(c)


def subset_key(I: frozenset[int]) -> str:
    return ",".join(str(i) for i in sorted(I))


def parse_subset_key(key: str) -> frozenset[int]:
    return frozenset(int(x) for x in key.split(",") if x.strip())


class NotSupermodular(ValueError):
    def __init__(self, I, J):
        super().__init__(f"z is not supermodular at I={sorted(I)}, J={sorted(J)}")
        self.pair = (I, J)


@dataclass(frozen=True)
class GenPermSpec:
    n: int
    z: Mapping[frozenset, int] = field(default_factory=dict)

    def __post_init__(self):
        z = {frozenset(I): int(v) for I, v in self.z.items()}
        z[frozenset()] = 0
        for I in all_subsets(self.n):
            if I not in z:
                raise ValueError(f"missing parameter for subset {sorted(I)}")
        object.__setattr__(self, "z", z)

    def __getitem__(self, I) -> int:
        return self.z[frozenset(I)]

    @property
    def total(self) -> int:
        return self.z[frozenset(range(1, self.n + 1))]

    def supermodular_violation(self) -> tuple[frozenset, frozenset] | None:
        subsets = list(all_subsets(self.n))
        for a, I in enumerate(subsets):
            for J in subsets[a + 1:]:
                if self.z[I | J] + self.z[I & J] < self.z[I] + self.z[J]:
                    return I, J
        return None

    def is_supermodular(self) -> bool:
        return self.supermodular_violation() is None

    def contains(self, t) -> bool:
        if sum(t) != self.total:
            return False
        return all(sum(t[i - 1] for i in I) >= v for I, v in self.z.items())

    def vertices(self) -> set[tuple[int, ...]]:
        """Greedy vertices, one per ordering of the coordinates."""
        out = set()
        for order in permutations(range(1, self.n + 1)):
            t = [0] * self.n
            prefix = frozenset()
            for i in order:
                grown = prefix | {i}
                t[i - 1] = self.z[grown] - self.z[prefix]
                prefix = grown
            out.add(tuple(t))
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "z": {subset_key(I): v for I, v in sorted(self.z.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))) if I}}

    @classmethod
    def from_json(cls, data: dict) -> GenPermSpec:
        return cls(int(data["n"]), {parse_subset_key(k): v for k, v in data["z"].items()})


@dataclass(frozen=True)
class MinkowskiSpec:
    n: int
    y: Mapping[frozenset, int] = field(default_factory=dict)

    def __post_init__(self):
        y = {frozenset(I): int(v) for I, v in self.y.items() if v}
        if frozenset() in y:
            raise ValueError("y of the empty set must be 0")
        object.__setattr__(self, "y", y)

    def to_json(self) -> dict:
        return {"n": self.n, "y": {subset_key(I): v for I, v in sorted(self.y.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))}}


def minkowski_to_z(spec: MinkowskiSpec) -> GenPermSpec:
    z = {I: sum(v for J, v in spec.y.items() if J <= I) for I in all_subsets(spec.n)}
    return GenPermSpec(spec.n, z)


def genperm_lattice_points(spec: GenPermSpec) -> set[tuple[int, ...]]:
    """Every integer point of the polytope; requires supermodular parameters."""
    bad = spec.supermodular_violation()
    if bad is not None:
        raise NotSupermodular(*bad)
    n = spec.n
    if n == 0:
        return {()}
    full = frozenset(range(1, n + 1))
    total = spec.total
    z = spec.z
    lo = [z[frozenset({i})] for i in range(1, n + 1)]
    hi = [total - z[full - {i}] for i in range(1, n + 1)]
    # constraints on subsets of a prefix, indexed by the prefix's last element
    by_last: list[list[tuple[frozenset, int, int]]] = [[] for _ in range(n + 1)]
    for I in all_subsets(n):
        if I:
            by_last[max(I)].append((I, z[I], total - z[full - I]))
    points = set()
    t = [0] * n

    def ok(k: int) -> bool:
        for I, low, up in by_last[k]:
            s = sum(t[i - 1] for i in I)
            if s < low or s > up:
                return False
        return True

    def rec(k: int, used: int):
        if k == n:
            t[n - 1] = total - used
            if lo[n - 1] <= t[n - 1] <= hi[n - 1] and ok(n):
                points.add(tuple(t))
            return
        for x in range(lo[k - 1], hi[k - 1] + 1):
            t[k - 1] = x
            if ok(k):
                rec(k + 1, used + x)

    rec(1, 0)
    return points


def modular_spec(p) -> GenPermSpec:
    """The single point ``p`` as a generalized permutahedron."""
    n = len(p)
    return GenPermSpec(n, {I: sum(p[i - 1] for i in I) for I in all_subsets(n)})


def hypersimplex_spec(n: int, k: int) -> GenPermSpec:
    """0/1 vectors with ``k`` ones: ``z_I = max(0, |I| - (n - k))``."""
    return GenPermSpec(n, {I: max(0, len(I) - (n - k)) for I in all_subsets(n)})


def hypersimplex_count(n: int, k: int) -> int:
    return comb(n, k)


def z_from_points(points, n: int) -> GenPermSpec:
    """Tight lower parameters ``z_I = min_p sum_I p`` of a finite point set."""
    points = list(points)
    return GenPermSpec(n, {I: min(sum(p[i - 1] for i in I) for p in points) for I in all_subsets(n)})
