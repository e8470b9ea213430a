"""Monomial ideals stored by their minimal monic generators."""

from __future__ import annotations

from .fields import QQ
from .ideal import Ideal, UnitIdealError, min_transversal
from .polynomial import PolynomialContext, parse_polynomial, unpack


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    kept = []
    for g in gens:
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return kept


class MonomialIdeal:
    """Generators are exponent tuples; no generator divides another."""

    def __init__(self, n, generators=()):
        self.n = n
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != n:
                raise ValueError("exponent vector has the wrong length")
            gens.append(g)
        self.generators = tuple(sorted(_minimalize(gens), key=_sort_key))

    @classmethod
    def from_sets(cls, n, sets):
        """Squarefree generators x_F from 1-based vertex collections."""
        gens = []
        for F in sets:
            e = [0] * n
            for v in F:
                if not 1 <= v <= n:
                    raise IndexError(f"x{v} is outside a ring in {n} variables")
                e[v - 1] = 1
            gens.append(tuple(e))
        return cls(n, gens)

    @classmethod
    def from_masks(cls, n, masks):
        return cls(n, [tuple((m >> i) & 1 for i in range(n)) for m in masks])

    @classmethod
    def parse(cls, n, texts):
        ctx = PolynomialContext(n, QQ)
        gens = []
        for t in texts:
            p = parse_polynomial(t, ctx)
            if not p.is_monomial():
                raise ValueError(f"{t!r} is not a monomial")
            gens.append(unpack(p.leading_packed(), n))
        return cls(n, gens)

    # predicates -------------------------------------------------------

    def contains(self, exponents):
        exponents = tuple(exponents)
        return any(_divides(g, exponents) for g in self.generators)

    def contains_set(self, vertices):
        e = [0] * self.n
        for v in vertices:
            e[v - 1] = 1
        return self.contains(e)

    def is_squarefree(self):
        return all(all(x <= 1 for x in g) for g in self.generators)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(sum(g) == 0 for g in self.generators)

    def degrees(self):
        return [sum(g) for g in self.generators]

    def squarefree_masks(self):
        if not self.is_squarefree():
            raise ValueError("ideal is not squarefree")
        return [sum(1 << i for i, x in enumerate(g) if x) for g in self.generators]

    def support_masks(self):
        return [sum(1 << i for i, x in enumerate(g) if x) for g in self.generators]

    def variables(self):
        """1-based indices i with x_i a minimal generator."""
        return [g.index(1) + 1 for g in self.generators if sum(g) == 1]

    def height(self):
        if self.is_zero():
            return 0
        if self.is_unit():
            raise UnitIdealError("the unit ideal has no height")
        return min_transversal(self.support_masks())

    def dimension(self):
        return self.n - self.height()

    # constructions ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, MonomialIdeal):
            if other.n != self.n:
                raise ValueError("ideals live in different rings")
            return MonomialIdeal(self.n, self.generators + other.generators)
        return NotImplemented

    def add_variables(self, indices):
        extra = []
        for i in indices:
            e = [0] * self.n
            e[i - 1] = 1
            extra.append(tuple(e))
        return MonomialIdeal(self.n, self.generators + tuple(extra))

    def colon(self, exponents):
        """(I : m) for a monomial m."""
        exponents = tuple(exponents)
        return MonomialIdeal(
            self.n, [tuple(max(a - b, 0) for a, b in zip(g, exponents)) for g in self.generators]
        )

    def to_ideal(self, ctx=None):
        if ctx is None:
            ctx = PolynomialContext(self.n, QQ)
        if ctx.n != self.n:
            raise ValueError("context has the wrong number of variables")
        return Ideal(ctx, [ctx.monomial(g) for g in self.generators])

    def __eq__(self, other):
        if isinstance(other, MonomialIdeal):
            return self.n == other.n and self.generators == other.generators
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.generators))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def strings(self):
        ctx = PolynomialContext(self.n, QQ)
        return [str(ctx.monomial(g)) for g in self.generators]

    def __str__(self):
        return "(" + ", ".join(self.strings()) + ")"

    def __repr__(self):
        return f"MonomialIdeal({self.strings()}, n={self.n})"


def _sort_key(e):
    # degree, then lexicographically with x1 first
    return (sum(e), tuple(-x for x in e))

