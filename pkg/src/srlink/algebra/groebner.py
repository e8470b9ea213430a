"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Over Q the engine works on primitive integer polynomials (fraction-free
reduction); over GF(2) a polynomial is just a set of packed monomials and
subtraction is symmetric difference.  Both representations are internal; the
public entry points take and return :class:`Polynomial` objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import GF2
from .polynomial import ContextMismatch, FIELD_BITS, Polynomial, mono_degree


class _IntegerArith:
    """Primitive integer polynomials with positive leading coefficient."""

    @staticmethod
    def from_poly(poly):
        den = 1
        for c in poly.packed_terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        return {m: int(c * den) for m, c in poly.packed_terms.items()}

    @staticmethod
    def to_poly(ctx, p, key):
        if not p:
            return ctx.zero()
        lc = p[max(p, key=key)]
        return Polynomial(ctx, {m: Fraction(c, lc) for m, c in p.items()})

    @staticmethod
    def primitive(p, key):
        if not p:
            return p
        g = 0
        for c in p.values():
            g = gcd(g, c)
            if g == 1:
                break
        if p[max(p, key=key)] < 0:
            g = -g
        if g == 1:
            return p
        return {m: c // g for m, c in p.items()}

    @staticmethod
    def lead(p, key):
        m = max(p, key=key)
        return m, p[m]

    @staticmethod
    def spoly(f, lmf, lcf, g, lmg, lcg, l):
        uf, ug = l - lmf, l - lmg
        d = gcd(lcf, lcg)
        a, b = lcg // d, lcf // d
        out = {}
        for m, c in f.items():
            out[m + uf] = a * c
        for m, c in g.items():
            k = m + ug
            v = out.get(k, 0) - b * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    @staticmethod
    def reduce(p, basis, key, divides):
        """Full reduction.  Returns (remainder, scale) with scale*p = q*G + remainder."""
        p = dict(p)
        r = {}
        scale = 1
        while p:
            m = max(p, key=key)
            for lm, g, lc in basis:
                if divides(lm, m):
                    break
            else:
                r[m] = p.pop(m)
                continue
            c = p[m]
            u = m - lm
            if lc == 1:
                for mg, cg in g.items():
                    k = u + mg
                    v = p.get(k, 0) - c * cg
                    if v:
                        p[k] = v
                    else:
                        del p[k]
            else:
                d = gcd(lc, c)
                a, b = lc // d, c // d
                if a != 1:
                    scale *= a
                    p = {k: a * v for k, v in p.items()}
                    r = {k: a * v for k, v in r.items()}
                for mg, cg in g.items():
                    k = u + mg
                    v = p.get(k, 0) - b * cg
                    if v:
                        p[k] = v
                    else:
                        del p[k]
        return r, scale


class _GF2Arith:
    @staticmethod
    def from_poly(poly):
        return frozenset(poly.packed_terms)

    @staticmethod
    def to_poly(ctx, p, key):
        return Polynomial(ctx, {m: 1 for m in p})

    @staticmethod
    def primitive(p, key):
        return p

    @staticmethod
    def lead(p, key):
        return max(p, key=key), 1

    @staticmethod
    def spoly(f, lmf, lcf, g, lmg, lcg, l):
        uf, ug = l - lmf, l - lmg
        return {m + uf for m in f} ^ {m + ug for m in g}

    @staticmethod
    def reduce(p, basis, key, divides):
        p = set(p)
        r = set()
        while p:
            m = max(p, key=key)
            for lm, g, _ in basis:
                if divides(lm, m):
                    u = m - lm
                    p ^= {u + mg for mg in g}
                    break
            else:
                p.remove(m)
                r.add(m)
        return frozenset(r), 1


def _arith(ctx):
    return _GF2Arith if ctx.field is GF2 else _IntegerArith


class _Order:
    """Bundles key/divides/lcm for one ring; optionally an elimination order."""

    def __init__(self, ctx, eliminate_last=False):
        self.ctx = ctx
        self.divides = ctx.divides
        self.lcm = ctx.lcm
        if not eliminate_last:
            self.key = ctx.key
        else:
            n = ctx.n - 1
            low_mask = (1 << (FIELD_BITS * n)) - 1
            shift_drl = 1 << (FIELD_BITS * n)
            big = FIELD_BITS * n + 16

            def key(m):
                rest = m & low_mask
                return ((m >> (FIELD_BITS * n)) << big) + mono_degree(rest) * shift_drl - rest

            self.key = key


def _groebner_internal(polys, order, arith):
    """Reduced Groebner basis of internal polynomials, as (lm, poly, lc) triples."""
    key, divides, lcm = order.key, order.divides, order.lcm
    basis = []
    G = []
    pairs = []

    def coprime(a, b):
        return lcm(a, b) == a + b

    def add(h):
        lm, lc = arith.lead(h, key)
        idx = len(basis)
        basis.append((lm, h, lc))
        nonlocal G, pairs
        cand = [(g, lcm(lm, basis[g][0])) for g in G]
        kept = []
        while cand:
            g, l = cand.pop()
            if coprime(lm, basis[g][0]) or (
                not any(divides(l2, l) for _, l2 in cand)
                and not any(divides(l2, l) for _, l2 in kept)
            ):
                kept.append((g, l))
        new_pairs = [
            (i, j, l)
            for (i, j, l) in pairs
            if not (
                divides(lm, l)
                and lcm(basis[i][0], lm) != l
                and lcm(basis[j][0], lm) != l
            )
        ]
        for g, l in kept:
            if not coprime(lm, basis[g][0]):
                new_pairs.append((g, idx, l))
        pairs = new_pairs
        G = [g for g in G if not divides(lm, basis[g][0])] + [idx]

    start = [arith.primitive(p, key) for p in polys if p]
    start.sort(key=lambda p: key(arith.lead(p, key)[0]))
    for p in start:
        h, _ = arith.reduce(p, [basis[g] for g in G], key, divides)
        if h:
            add(arith.primitive(h, key))
            if basis[-1][0] == 0:
                break

    while pairs and basis[G[-1]][0] != 0:
        best = min(range(len(pairs)), key=lambda t: (key(pairs[t][2]), pairs[t][0], pairs[t][1]))
        i, j, l = pairs.pop(best)
        lmi, fi, lci = basis[i]
        lmj, fj, lcj = basis[j]
        s = arith.spoly(fi, lmi, lci, fj, lmj, lcj, l)
        if not s:
            continue
        h, _ = arith.reduce(s, [basis[g] for g in G], key, divides)
        if h:
            add(arith.primitive(h, key))

    if any(basis[g][0] == 0 for g in G):
        one = {0: 1} if arith is _IntegerArith else frozenset({0})
        return [(0, one, 1)]

    minimal = [basis[g] for g in G]
    reduced = []
    for t, (lm, g, lc) in enumerate(minimal):
        others = minimal[:t] + minimal[t + 1:]
        h, _ = arith.reduce(g, others, key, divides)
        h = arith.primitive(h, key)
        m, c = arith.lead(h, key)
        reduced.append((m, h, c))
    reduced.sort(key=lambda item: key(item[0]), reverse=True)
    return reduced


def groebner_basis(polys, ctx, eliminate_last=False):
    """Reduced Groebner basis (monic) of a list of polynomials in ``ctx``."""
    for p in polys:
        if p.ctx != ctx:
            raise ContextMismatch("generator lives in a different ring")
    arith = _arith(ctx)
    order = _Order(ctx, eliminate_last)
    internal = [arith.from_poly(p) for p in polys if p]
    result = _groebner_internal(internal, order, arith)
    return [arith.to_poly(ctx, h, order.key) for _, h, _ in result]


def leading_monomials(polys, ctx):
    """Packed leading monomials of a reduced basis (degrevlex)."""
    key = ctx.key
    return [max(p.packed_terms, key=key) for p in polys]


def normal_form(p, basis):
    """Remainder of ``p`` on division by a Groebner basis (a list of Polynomial)."""
    ctx = p.ctx
    for g in basis:
        if g.ctx != ctx:
            raise ContextMismatch("basis element lives in a different ring")
    if not basis or not p:
        return p
    arith = _arith(ctx)
    key, divides = ctx.key, ctx.divides
    internal = []
    for g in basis:
        h = arith.primitive(arith.from_poly(g), key)
        lm, lc = arith.lead(h, key)
        internal.append((lm, h, lc))
    if arith is _GF2Arith:
        r, _ = arith.reduce(arith.from_poly(p), internal, key, divides)
        return arith.to_poly(ctx, r, key)
    den = 1
    for c in p.packed_terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    r, scale = arith.reduce(arith.from_poly(p), internal, key, divides)
    return Polynomial(ctx, {m: Fraction(c, scale * den) for m, c in r.items()})
