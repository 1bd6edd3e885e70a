"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class SparsePolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        self.nvars = nvars
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(x < 0 for x in exp):
                raise ValueError(f"negative exponent {exp}")
            acc[exp] += int(c)
        self.terms = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def one(cls, nvars: int) -> SparsePolynomial:
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> SparsePolynomial:
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> SparsePolynomial:
        """The variable ``x_i`` (1-based)."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    def _aligned(self, other: SparsePolynomial) -> tuple[SparsePolynomial, SparsePolynomial]:
        n = max(self.nvars, other.nvars)
        return self.padded(n), other.padded(n)

    def padded(self, n: int) -> SparsePolynomial:
        if n == self.nvars:
            return self
        if n < self.nvars:
            return self.truncated(n)
        return SparsePolynomial(n, {e + (0,) * (n - self.nvars): c for e, c in self.terms.items()})

    def truncated(self, n: int) -> SparsePolynomial:
        """Drop trailing variables, which must not occur."""
        for e in self.terms:
            if any(e[n:]):
                raise ValueError(f"variable beyond x_{n} occurs in {e}")
        return SparsePolynomial(n, {e[:n]: c for e, c in self.terms.items()})

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        a, b = self._aligned(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(a.nvars, out)

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other) -> SparsePolynomial:
        if isinstance(other, int):
            return SparsePolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        a, b = self._aligned(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
        return SparsePolynomial(a.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePolynomial:
        out = SparsePolynomial.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Exponent]:
        return list(self.terms)

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def homogeneous_component(self, degree: int) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def homogeneous_components(self) -> dict[int, SparsePolynomial]:
        return {d: self.homogeneous_component(d) for d in self.degrees()}

    def lowest_component(self) -> SparsePolynomial:
        degs = self.degrees()
        return self.homogeneous_component(degs[0]) if degs else SparsePolynomial(self.nvars)

    def remap(self, mapping: Mapping[int, int], nvars: int) -> SparsePolynomial:
        """Substitute ``x_i -> x_{mapping[i]}`` (1-based indices)."""
        out: dict[Exponent, int] = defaultdict(int)
        for e, c in self.terms.items():
            new = [0] * nvars
            for i, x in enumerate(e, start=1):
                if x:
                    new[mapping[i] - 1] += x
            out[tuple(new)] += c
        return SparsePolynomial(nvars, out)

    def reversed_variables(self) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {e[::-1]: c for e, c in self.terms.items()})

    def evaluate(self, values: Sequence) -> Fraction | int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, x in zip(values, e):
                term *= v ** x
            total += term
        return total

    def coefficients(self) -> list[int]:
        return list(self.terms.values())

    def to_json(self) -> dict:
        return {"n": self.nvars, "terms": [{"exp": list(e), "coeff": c} for e, c in self.terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> SparsePolynomial:
        return cls(int(data["n"]), [(t["exp"], t["coeff"]) for t in data["terms"]])

    def format(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        pieces = []
        # highest degree first, then reverse-lex within a degree, matching usual printing
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[e]
            factors = []
            for i, x in enumerate(e, start=1):
                if x == 1:
                    factors.append(f"{var}{i}")
                elif x > 1:
                    factors.append(f"{var}{i}^{x}")
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {self.terms!r})"
