"""Ideals of a polynomial ring and the predicates built on Groebner bases."""

from __future__ import annotations

from .fields import GF2, QQ
from .groebner import groebner_basis, leading_monomials, normal_form
from .polynomial import (
    ContextMismatch,
    FIELD_BITS,
    Polynomial,
    PolynomialContext,
    mono_support,
    unpack,
)


class UnitIdealError(ValueError):
    """Raised when a dimension-type invariant is requested for the unit ideal."""


class Ideal:
    """A finitely generated ideal with a fill-once reduced Groebner basis."""

    def __init__(self, ctx, generators=()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ctx.parse(g)
            if not isinstance(g, Polynomial):
                g = ctx.constant(g)
            if g.ctx != ctx:
                raise ContextMismatch("generator lives in a different ring")
            if g:
                gens.append(g)
        self.ctx = ctx
        self.generators = tuple(gens)
        self._gb = None

    @classmethod
    def parse(cls, ctx, texts):
        return cls(ctx, [ctx.parse(t) for t in texts])

    def groebner_basis(self):
        if self._gb is None:
            self._gb = tuple(groebner_basis(list(self.generators), self.ctx))
        return self._gb

    # predicates -------------------------------------------------------

    def contains(self, p):
        if isinstance(p, str):
            p = self.ctx.parse(p)
        if p.ctx != self.ctx:
            raise ContextMismatch("polynomial lives in a different ring")
        return not normal_form(p, list(self.groebner_basis()))

    __contains__ = contains

    def contains_ideal(self, other):
        _same(self, other)
        return all(self.contains(g) for g in other.generators)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_proper(self):
        return not self.is_unit()

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self):
        """True iff the ideal is generated by monomials (its reduced basis is)."""
        return all(g.is_monomial() for g in self.groebner_basis())

    def to_monomial_ideal(self):
        if not self.is_monomial():
            raise ValueError("ideal is not monomial")
        from .monomial_ideal import MonomialIdeal

        n = self.ctx.n
        return MonomialIdeal(n, [unpack(g.leading_packed(), n) for g in self.groebner_basis()])

    def dimension(self):
        return dimension(self)

    def height(self):
        return height(self)

    # constructions ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (list, tuple)):
            other = Ideal(self.ctx, other)
        if not isinstance(other, Ideal):
            other = other.to_ideal(self.ctx) if hasattr(other, "to_ideal") else Ideal(self.ctx, [other])
        _same(self, other)
        return Ideal(self.ctx, self.generators + other.generators)

    def scaled(self, f):
        """The ideal f * I."""
        if isinstance(f, str):
            f = self.ctx.parse(f)
        return Ideal(self.ctx, [f * g for g in self.generators])

    def __mul__(self, other):
        if isinstance(other, Ideal):
            _same(self, other)
            return Ideal(self.ctx, [a * b for a in self.generators for b in other.generators])
        return self.scaled(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ctx, frozenset(self.groebner_basis())))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens}; n={self.ctx.n}, field={self.ctx.field!r})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _same(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch("ideals live in different rings")


def buchberger(ideal):
    """Reduced Groebner basis of ``ideal``; cached on the ideal."""
    return list(ideal.groebner_basis())


def ideal_equal(a, b):
    _same(a, b)
    ga, gb = a.groebner_basis(), b.groebner_basis()
    return all(not normal_form(g, list(gb)) for g in ga) and all(
        not normal_form(g, list(ga)) for g in gb
    )


def min_transversal(supports, limit=None):
    """Size of a smallest set of variables meeting every bitmask in ``supports``."""
    sets = sorted(set(supports), key=lambda s: bin(s).count("1"))
    if any(s == 0 for s in sets):
        raise UnitIdealError("a constant cannot be hit by any variable set")
    sets = [s for s in sets if not any(t != s and t & s == t for t in sets)]
    best = [len(sets) if limit is None else min(limit, len(sets))]

    def solve(chosen, depth):
        if depth >= best[0]:
            return
        for s in sets:
            if not s & chosen:
                break
        else:
            best[0] = depth
            return
        bits = s
        while bits:
            low = bits & -bits
            solve(chosen | low, depth + 1)
            bits ^= low

    solve(0, 0)
    return best[0]


def dimension(ideal):
    """Krull dimension of the quotient ring."""
    if ideal.is_zero():
        return ideal.ctx.n
    gb = ideal.groebner_basis()
    if ideal.is_unit():
        raise UnitIdealError("the unit ideal has no dimension")
    n = ideal.ctx.n
    supports = [mono_support(m, n) for m in leading_monomials(gb, ideal.ctx)]
    return n - min_transversal(supports)


def height(ideal):
    return ideal.ctx.n - dimension(ideal)


def quotient_by_poly(ideal, f):
    """The colon ideal (I : f), via I cap (f) computed by eliminating one variable."""
    ctx = ideal.ctx
    if isinstance(f, str):
        f = ctx.parse(f)
    if f.ctx != ctx:
        raise ContextMismatch("polynomial lives in a different ring")
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    if ideal.is_zero():
        return Ideal(ctx, [])
    if ideal.contains(f):
        return Ideal(ctx, [ctx.one()])
    big = ctx.extended(1)
    t = big.var(ctx.n + 1)
    lifted = [g.change_context(big) for g in ideal.generators]
    f_big = f.change_context(big)
    gens = [t * g for g in lifted] + [(big.one() - t) * f_big]
    gb = groebner_basis(gens, big, eliminate_last=True)
    t_field = 0xFF << (FIELD_BITS * ctx.n)
    inter = [g for g in gb if not any(m & t_field for m in g.packed_terms)]
    quotients = [Polynomial(ctx, dict(g.packed_terms)).exact_divide(f) for g in inter]
    return Ideal(ctx, quotients)


def is_nzd(f, ideal):
    """True iff f is a non-zerodivisor on S/I, i.e. (I : f) = I."""
    if ideal.is_unit():
        raise UnitIdealError("non-zerodivisor test on the unit ideal")
    return ideal_equal(quotient_by_poly(ideal, f), ideal)


def gf2_specialize(generators, ctx=None):
    """Reduce integer-coefficient polynomials modulo 2."""
    generators = list(generators)
    if ctx is None:
        if not generators:
            raise ValueError("need a context for an empty generator list")
        ctx = generators[0].ctx
    target = PolynomialContext(ctx.n, GF2, ctx.order)
    out = []
    for g in generators:
        if g.ctx.n != ctx.n:
            raise ContextMismatch("generators live in different rings")
        if g.ctx.field is GF2:
            out.append(g.change_context(target))
            continue
        if not g.has_integer_coefficients():
            raise ValueError(f"{g} has a non-integer coefficient")
        out.append(g.change_context(target, lambda c: int(c) % 2))
    return Ideal(target, out)


def rational_context(n):
    return PolynomialContext(n, QQ)
