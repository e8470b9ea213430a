"""Reduced simplicial homology over Q or GF(2), and Reisner's criterion."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra.fields import GF2, QQ, field_from_name
from .algebra.ideal import Ideal
from .algebra.monomial_ideal import MonomialIdeal
from .simplicial import complex_of, popcount, vertices_of


def resolve_field(field):
    if field is None:
        return QQ
    if isinstance(field, str):
        return field_from_name(field)
    return field


# exact ranks ------------------------------------------------------------


def rank_rational(rows):
    """Rank of an integer matrix given as sparse rows {col: value}."""
    pivots = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = p[c], r[c]
            d = gcd(a, b)
            a, b = a // d, b // d
            out = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                w = out.get(k, 0) - b * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
            g = 0
            for v in out.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                out = {k: v // g for k, v in out.items()}
            r = out
    return len(pivots)


def rank_gf2(rows):
    """Rank over GF(2) of rows given as int bitmasks."""
    basis = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


@dataclass(frozen=True)
class ChainComplexRanks:
    """Face counts and boundary ranks of the augmented chain complex.

    ``face_counts[k]`` and ``ranks[k]`` refer to dimension ``k - 1``, so index 0
    is the empty face; ``ranks[k]`` is the rank of the boundary map leaving
    that dimension (zero for the empty face).
    """

    field: str
    face_counts: tuple
    ranks: tuple

    @property
    def top(self):
        return len(self.face_counts) - 2

    def betti(self, i):
        k = i + 1
        if k < 0 or k >= len(self.face_counts):
            return 0
        nxt = self.ranks[k + 1] if k + 1 < len(self.ranks) else 0
        return self.face_counts[k] - self.ranks[k] - nxt

    def betti_numbers(self):
        return [self.betti(i) for i in range(-1, self.top + 1)]


_rank_cache = {}


def chain_ranks(cx, field=QQ):
    field = resolve_field(field)
    key = (cx.compressed_key(), field.name)
    hit = _rank_cache.get(key)
    if hit is not None:
        return hit
    if cx.is_void:
        result = ChainComplexRanks(field.name, (), ())
        _rank_cache[key] = result
        return result
    levels = cx.faces_by_dim()
    index = [{F: j for j, F in enumerate(level)} for level in levels]
    ranks = [0]
    for k in range(1, len(levels)):
        lower = index[k - 1]
        if field is GF2:
            rows = []
            for F in levels[k]:
                r = 0
                sub = F
                while sub:
                    low = sub & -sub
                    r |= 1 << lower[F ^ low]
                    sub ^= low
                rows.append(r)
            ranks.append(rank_gf2(rows))
        else:
            rows = []
            for F in levels[k]:
                r = {}
                sign = 1
                sub = F
                while sub:
                    low = sub & -sub
                    r[lower[F ^ low]] = sign
                    sign = -sign
                    sub ^= low
                rows.append(r)
            ranks.append(rank_rational(rows))
    result = ChainComplexRanks(field.name, tuple(len(lv) for lv in levels), tuple(ranks))
    _rank_cache[key] = result
    return result


def reduced_betti(cx, field=QQ, i=0):
    """Dimension of the i-th reduced homology group; 0 outside the chain range."""
    return chain_ranks(cx, field).betti(i)


def _acyclic_below_top(cx, field):
    ranks = chain_ranks(cx, field)
    return all(ranks.betti(i) == 0 for i in range(-1, ranks.top))


# Cohen-Macaulay ---------------------------------------------------------


def cm_failure(cx, field=QQ):
    """None if the complex is CM, else the first face whose link has low homology."""
    field = resolve_field(field)
    if cx.is_void:
        raise ValueError("Cohen-Macaulayness of the void complex is undefined")
    if not cx.is_pure:
        return "not pure"
    seen = {}
    for level in cx.faces_by_dim():
        for F in level:
            lk = cx.link_of_face(F)
            if lk.is_empty_complex:
                continue
            key = lk.compressed_key()
            ok = seen.get(key)
            if ok is None:
                ok = seen[key] = _acyclic_below_top(lk, field)
            if not ok:
                ranks = chain_ranks(lk, field)
                bad = next(i for i in range(-1, ranks.top) if ranks.betti(i))
                return f"link of face {_fmt(F)} has reduced homology in degree {bad}"
    return None


def is_cohen_macaulay(cx, field=QQ):
    """Reisner: every face link has vanishing reduced homology below its dimension."""
    return cm_failure(cx, field) is None


def _fmt(mask):
    return "{" + ",".join(map(str, vertices_of(mask))) + "}"


def strip_variables(ideal):
    """Split a squarefree monomial ideal into (linear part mask, complex of the rest)."""
    if isinstance(ideal, Ideal):
        ideal = ideal.to_monomial_ideal()
    if not isinstance(ideal, MonomialIdeal):
        raise TypeError("expected a monomial ideal")
    if not ideal.is_squarefree():
        raise ValueError("ideal is not squarefree")
    if ideal.is_unit():
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    n = ideal.n
    linear = 0
    rest = []
    for m in ideal.squarefree_masks():
        if popcount(m) == 1:
            linear |= m
        else:
            rest.append(m)
    ground = ((1 << n) - 1) & ~linear
    cx = complex_of(MonomialIdeal.from_masks(n, rest), n, ground)
    return linear, cx


def is_cm_quotient(ideal, field=QQ):
    """CM verdict for S/I with I squarefree; degree-1 generators are allowed."""
    _, cx = strip_variables(ideal)
    return is_cohen_macaulay(cx, field)

