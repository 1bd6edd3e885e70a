"""Pipe dreams, Schubert and Grothendieck polynomials, and the transition rule.

A pipe dream for a permutation of ``[n+1]`` is a set of crosses ``(i, j)`` with
``i + j <= n + 1``.  Strands enter at the top of each column and leave at the
left of each row; a cross between two strands that already crossed acts as an
elbow.  Polynomials are in the row variables ``t_1..t_n``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .polynomial import SparsePolynomial
from .snp import level_check, snp_check

MAX_SIZE = 8

Perm = tuple[int, ...]


class PermutationError(ValueError):
    pass


def parse_permutation(text: str | Sequence[int]) -> Perm:
    """One-line notation, e.g. ``"14523"`` or ``"1,4,5,2,3"``."""
    if isinstance(text, str):
        s = text.strip()
        parts = s.split(",") if "," in s else list(s)
        try:
            perm = tuple(int(p) for p in parts if p.strip())
        except ValueError as exc:
            raise PermutationError(f"not a permutation: {text!r}") from exc
    else:
        perm = tuple(int(x) for x in text)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise PermutationError(f"not a permutation of 1..{len(perm)}: {text!r}")
    return perm


def perm_str(perm: Perm) -> str:
    sep = "," if len(perm) > 9 else ""
    return sep.join(str(x) for x in perm)


def _guard(perm: Perm):
    if len(perm) > MAX_SIZE:
        raise PermutationError(f"permutation size {len(perm)} exceeds the limit {MAX_SIZE}")


def inversions(perm: Perm) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def lehmer_code(perm: Perm) -> tuple[int, ...]:
    return tuple(sum(1 for b in perm[a + 1:] if b < perm[a]) for a in range(len(perm)))


def permutation_from_code(code: Sequence[int], size: int | None = None) -> Perm:
    code = list(code)
    size = max(size or 0, len(code), max((i + c + 1 for i, c in enumerate(code)), default=0))
    code += [0] * (size - len(code))
    remaining = list(range(1, size + 1))
    out = []
    for i, c in enumerate(code):
        if c >= len(remaining):
            raise PermutationError(f"invalid Lehmer code {tuple(code)}")
        out.append(remaining.pop(c))
    return tuple(out)


def is_dominant(perm: Perm) -> bool:
    code = lehmer_code(perm)
    return all(a >= b for a, b in zip(code, code[1:]))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def is_one_dominant(perm: Perm) -> tuple[int, ...] | None:
    """The partition of ``pi'`` when ``pi = 1 pi'`` with ``pi'`` dominant, else ``None``.

    Parts are the column lengths of the diagram, i.e. the conjugate of the
    Lehmer code; this is the reading under which the transition rule holds.
    """
    if not perm or perm[0] != 1:
        return None
    code = lehmer_code(perm)[1:]
    if any(a < b for a, b in zip(code, code[1:])):
        return None
    return conjugate([c for c in code if c])


def trace(crosses, size: int) -> tuple[Perm, bool]:
    """Follow the strands; returns the permutation read down the left side and the reduced flag."""
    crosses = set(crosses)
    vert = list(range(size + 1))  # vert[j]: strand heading south in column j
    crossed: set[frozenset] = set()
    reduced = True
    out = []
    for i in range(1, size + 1):
        horiz = vert[size + 1 - i]
        for j in range(size - i, 0, -1):
            north = vert[j]
            pair = frozenset((north, horiz))
            if (i, j) in crosses:
                if pair not in crossed:
                    crossed.add(pair)
                    continue
                reduced = False
            vert[j], horiz = horiz, north
        out.append(horiz)
    return tuple(out), reduced


def staircase(size: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, size) for j in range(1, size + 1 - i)]


@dataclass(frozen=True)
class PipeDream:
    perm: Perm
    crosses: frozenset
    reduced: bool

    def weight(self) -> tuple[int, ...]:
        w = [0] * max(len(self.perm) - 1, 0)
        for i, _ in self.crosses:
            w[i - 1] += 1
        return tuple(w)

    def to_json(self) -> dict:
        return {"perm": perm_str(self.perm), "crosses": sorted(list(c) for c in self.crosses), "reduced": self.reduced}


def pipe_dreams(perm: Perm, reduced_only: bool = False) -> Iterator[PipeDream]:
    """All pipe dreams of ``perm``, pruned row by row on the exiting strand."""
    perm = parse_permutation(perm)
    _guard(perm)
    size = len(perm)
    target_inv = inversions(perm)

    def rows(i: int, vert: list[int], crossed: frozenset, reduced: bool, chosen: list, count: int):
        if i > size:
            yield PipeDream(perm, frozenset(chosen), reduced)
            return
        width = size - i
        for mask in range(1 << width):
            row_cross = {j for j in range(1, width + 1) if mask >> (j - 1) & 1}
            if reduced_only and count + len(row_cross) > target_inv:
                continue
            v = list(vert)
            cr = set(crossed)
            red = reduced
            horiz = v[size + 1 - i]
            for j in range(width, 0, -1):
                north = v[j]
                pair = frozenset((north, horiz))
                if j in row_cross:
                    if pair not in cr:
                        cr.add(pair)
                        continue
                    red = False
                v[j], horiz = horiz, north
            if horiz != perm[i - 1] or (reduced_only and not red):
                continue
            yield from rows(i + 1, v, frozenset(cr), red, chosen + [(i, j) for j in sorted(row_cross)],
                            count + len(row_cross))

    yield from rows(1, list(range(size + 1)), frozenset(), True, [], 0)


def reduced_pipe_dreams(perm: Perm) -> Iterator[PipeDream]:
    return pipe_dreams(perm, reduced_only=True)


def _weights_poly(perm: Perm, dreams) -> SparsePolynomial:
    n = len(perm) - 1
    terms: dict[tuple[int, ...], int] = {}
    for d in dreams:
        w = d.weight()
        terms[w] = terms.get(w, 0) + 1
    return SparsePolynomial(n, terms)


@lru_cache(maxsize=None)
def grothendieck(perm: Perm) -> SparsePolynomial:
    perm = parse_permutation(perm)
    return _weights_poly(perm, pipe_dreams(perm))


@lru_cache(maxsize=None)
def schubert(perm: Perm) -> SparsePolynomial:
    perm = parse_permutation(perm)
    return _weights_poly(perm, reduced_pipe_dreams(perm))


def _summand(lam: tuple[int, ...], l: int, nvars: int) -> SparsePolynomial:
    """The ``l``-th term of the transition rule for partition ``lam``."""
    z, k = len(lam), lam[-1]
    mu = tuple(p - (k - l) for p in lam[:-1] if p - (k - l))
    inner = _transition(mu, nvars)
    phi = {i: i if i <= l + 1 else i + k - l for i in range(1, nvars + 1)}
    for e in inner.terms:
        if any(x and phi[i] > nvars for i, x in enumerate(e, start=1)):
            raise AssertionError("variable substitution ran past the available variables")
    shifted = inner.remap({i: min(v, nvars) for i, v in phi.items()}, nvars)
    exp = [0] * nvars
    for m in range(1, l + 1):
        exp[m - 1] += 1
    for p in range(l + 2, k + 2):
        exp[p - 1] += z
    return SparsePolynomial.monomial(exp) * shifted


@lru_cache(maxsize=None)
def _transition(lam: tuple[int, ...], nvars: int) -> SparsePolynomial:
    if not lam:
        return SparsePolynomial.one(nvars)
    total = SparsePolynomial(nvars)
    for l in range(lam[-1] + 1):
        total = total + _summand(lam, l, nvars)
    return total


def _applicable(perm) -> tuple[Perm, tuple[int, ...]]:
    perm = parse_permutation(perm)
    lam = is_one_dominant(perm)
    if lam is None:
        raise PermutationError(f"{perm_str(perm)} is not of the form 1 followed by a dominant permutation")
    return perm, lam


def _nvars(perm: Perm, lam: tuple[int, ...]) -> int:
    return max(sum(lam) + len(lam) + 2, len(perm))


def transition(perm: Perm) -> SparsePolynomial:
    """Schubert polynomial of ``1 pi'`` with ``pi'`` dominant, by the transition recursion."""
    perm, lam = _applicable(perm)
    return _transition(lam, _nvars(perm, lam)).truncated(len(perm) - 1)


def transition_terms(perm: Perm) -> list[SparsePolynomial]:
    """The individual summands, one per ``l = 0..k``."""
    perm, lam = _applicable(perm)
    if not lam:
        return [SparsePolynomial.one(len(perm) - 1)]
    nvars = _nvars(perm, lam)
    return [_summand(lam, l, nvars).truncated(len(perm) - 1) for l in range(lam[-1] + 1)]


def g_i(perm: Perm) -> tuple[int, ...]:
    """Column counts of ``core(pi)`` together with ``(1,1)``."""
    raise NotImplementedError("requires external construction")


def is_zero_one(p: SparsePolynomial) -> bool:
    return all(c in (0, 1) for c in p.coefficients())


@dataclass
class PermReport:
    pi: str
    snp: bool
    components_gp: bool
    schubert_01: bool | None = None
    schubert_saturated: bool | None = None
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return (self.snp and self.components_gp and self.schubert_01 is not False
                and self.schubert_saturated is not False)

    def to_json(self) -> dict:
        out = {"pi": self.pi, "snp": self.snp, "components_gp": self.components_gp}
        if self.schubert_01 is not None:
            out["schubert_01"] = self.schubert_01
        if self.schubert_saturated is not None:
            out["schubert_saturated"] = self.schubert_saturated
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _grothendieck_report(perm: Perm) -> PermReport:
    verdict = snp_check(grothendieck(perm))
    rep = PermReport(perm_str(perm), verdict.snp, verdict.components_gp)
    if not verdict.snp:
        rep.counterexample = {"kind": "missing_point", "point": verdict.witness}
    elif not verdict.components_gp:
        bad = next(lv for lv in verdict.levels if not lv.gp)
        rep.counterexample = {"kind": "component_not_gp", "degree": bad.degree, "witness": bad.witness}
    return rep


def verify_theorem_C(perm: Perm) -> PermReport:
    perm, _ = _applicable(perm)
    rep = _grothendieck_report(perm)
    S = schubert(perm)
    rep.schubert_01 = is_zero_one(S)
    lv = level_check(S.support(), inversions(perm))
    rep.schubert_saturated = lv.gp and lv.saturated
    if rep.counterexample is None:
        if not rep.schubert_01:
            bad = next(e for e, c in S.terms.items() if c not in (0, 1))
            rep.counterexample = {"kind": "schubert_coefficient", "exp": list(bad), "coeff": S.terms[bad]}
        elif not rep.schubert_saturated:
            rep.counterexample = {"kind": "schubert_not_saturated", "witness": lv.witness}
    return rep


def one_dominant_permutations(size: int) -> list[Perm]:
    return [p for p in permutations(range(1, size + 1)) if is_one_dominant(p) is not None]


def default_jobs() -> int:
    env = os.environ.get("FLOWTOPE_JOBS")
    if env:
        return max(1, int(env))
    return max(1, min(8, os.cpu_count() or 1))


@dataclass
class ScanReport:
    n: int
    total: int
    reports: list[PermReport] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[PermReport]:
        return [r for r in self.reports if not r.ok]

    def summary(self) -> str:
        return f"{len(self.counterexamples)} counterexamples / {self.total} permutations"

    def to_json(self) -> dict:
        return {"n": self.n, "total": self.total, "counterexamples": len(self.counterexamples),
                "summary": self.summary(), "failures": [r.to_json() for r in self.counterexamples]}


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def conjecture_scan(size: int, jobs: int | None = None) -> ScanReport:
    """Check every permutation of ``[size]``; results are merged in lexicographic order."""
    if size > MAX_SIZE:
        raise PermutationError(f"permutation size {size} exceeds the limit {MAX_SIZE}")
    perms = list(permutations(range(1, size + 1)))
    reports = _map(_grothendieck_report, perms, jobs or default_jobs())
    return ScanReport(size, len(perms), reports)


def theorem_C_scan(size: int, jobs: int | None = None) -> ScanReport:
    perms = one_dominant_permutations(size)
    reports = _map(verify_theorem_C, perms, jobs or default_jobs())
    return ScanReport(size, len(perms), reports)
