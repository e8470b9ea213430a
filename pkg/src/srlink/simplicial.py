"""Simplicial complexes on [n] and the Stanley-Reisner dictionary.

Faces are bitmasks (bit ``i - 1`` for vertex ``i``).  A complex carries an
ambient vertex set, ``ground``, which shrinks under link and deletion so that
Stanley-Reisner ideals of those subcomplexes live in the remaining variables.
The void complex (no faces at all) and ``{emptyset}`` are different values.
"""

from __future__ import annotations

import json
import warnings
from functools import cached_property

from .algebra.monomial_ideal import MonomialIdeal


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def _maximal(masks):
    masks = sorted(set(masks), key=popcount, reverse=True)
    kept = []
    for m in masks:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


class FacetReductionWarning(UserWarning):
    pass


class SimplicialComplex:
    """An abstract simplicial complex given by its facets."""

    def __init__(self, n, facets=(), ground=None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        full = (1 << n) - 1
        self.ground = full if ground is None else ground
        if self.ground & ~full:
            raise ValueError("ground set is not contained in [n]")
        masks = []
        for F in facets:
            m = F if isinstance(F, int) else mask_of(F)
            if m & ~self.ground:
                raise ValueError(f"face {vertices_of(m)} leaves the vertex set")
            masks.append(m)
        kept = _maximal(masks)
        self.was_reduced = len(kept) != len(masks)
        self.facet_masks = tuple(sorted(kept, key=lambda m: (popcount(m), vertices_of(m))))

    @classmethod
    def void(cls, n, ground=None):
        return cls(n, (), ground)

    @classmethod
    def empty(cls, n, ground=None):
        """The complex {emptyset}."""
        return cls(n, [0], ground)

    @classmethod
    def simplex(cls, vertices, n=None):
        vertices = list(vertices)
        if n is None:
            n = max(vertices, default=0)
        return cls(n, [vertices])

    # basic invariants -------------------------------------------------

    @property
    def facets(self):
        return [tuple(vertices_of(m)) for m in self.facet_masks]

    @property
    def is_void(self):
        return not self.facet_masks

    @property
    def is_empty_complex(self):
        return self.facet_masks == (0,)

    @property
    def dim(self):
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(m) for m in self.facet_masks) - 1

    @property
    def is_pure(self):
        return len({popcount(m) for m in self.facet_masks}) <= 1

    @property
    def is_simplex(self):
        return len(self.facet_masks) == 1

    @cached_property
    def vertex_mask(self):
        v = 0
        for m in self.facet_masks:
            v |= m
        return v

    @property
    def vertices(self):
        return vertices_of(self.vertex_mask)

    @cached_property
    def faces(self):
        """Frozen set of all face masks (memoized)."""
        out = set()
        for F in self.facet_masks:
            sub = F
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return frozenset(out)

    def faces_by_dim(self):
        if self.is_void:
            return []
        levels = [[] for _ in range(self.dim + 2)]
        for F in self.faces:
            levels[popcount(F)].append(F)
        for level in levels:
            level.sort()
        return levels

    def f_vector(self):
        return [len(level) for level in self.faces_by_dim()]

    def __contains__(self, face):
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & F == m for F in self.facet_masks)

    # link / deletion / cone ---------------------------------------------

    def _check_vertex(self, v):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} is outside [{self.n}]")

    def link(self, v):
        """lk(v): faces G missing v with G + v a face, on ground minus v."""
        self._check_vertex(v)
        bit = 1 << (v - 1)
        facets = [F & ~bit for F in self.facet_masks if F & bit]
        return SimplicialComplex(self.n, facets, self.ground & ~bit)

    def link_of_face(self, face):
        m = face if isinstance(face, int) else mask_of(face)
        facets = [F & ~m for F in self.facet_masks if F & m == m]
        return SimplicialComplex(self.n, facets, self.ground & ~m)

    def deletion(self, v):
        self._check_vertex(v)
        bit = 1 << (v - 1)
        facets = [F & ~bit for F in self.facet_masks]
        return SimplicialComplex(self.n, facets, self.ground & ~bit)

    def cone(self, k):
        """Cone with apex k; requires {k} not a face."""
        self._check_vertex(k)
        bit = 1 << (k - 1)
        if self.vertex_mask & bit:
            raise ValueError(f"{k} is already a vertex of the complex")
        return SimplicialComplex(self.n, [F | bit for F in self.facet_masks], self.ground | bit)

    def restrict_ground(self, ground):
        return SimplicialComplex(self.n, self.facet_masks, ground)

    # Stanley-Reisner ----------------------------------------------------

    def minimal_nonfaces(self):
        if self.is_void:
            return [0]
        faces = self.faces
        out = set()
        ground_vertices = [1 << i for i in range(self.n) if self.ground >> i & 1]
        for G in faces:
            for b in ground_vertices:
                if G & b:
                    continue
                N = G | b
                if N in faces or N in out:
                    continue
                sub = N
                ok = True
                while sub:
                    low = sub & -sub
                    if (N ^ low) not in faces:
                        ok = False
                        break
                    sub ^= low
                if ok:
                    out.add(N)
        return sorted(out, key=lambda m: (popcount(m), vertices_of(m)))

    def stanley_reisner(self):
        return stanley_reisner(self)

    # relabelling and keys ---------------------------------------------

    def relabel(self, perm):
        """Apply a vertex permutation given as a dict or 1-based list image."""
        if not isinstance(perm, dict):
            perm = {i + 1: p for i, p in enumerate(perm)}

        def image(mask):
            return mask_of(perm.get(v, v) for v in vertices_of(mask))

        return SimplicialComplex(self.n, [image(F) for F in self.facet_masks], image(self.ground))

    def compressed_key(self):
        """Facets after order-preserving relabelling of the vertices onto 0..k-1."""
        verts = vertices_of(self.vertex_mask)
        index = {v: i for i, v in enumerate(verts)}
        out = []
        for F in self.facet_masks:
            m = 0
            for v in vertices_of(F):
                m |= 1 << index[v]
            out.append(m)
        return tuple(sorted(out))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.n, self.ground, set(self.facet_masks)) == (
            other.n,
            other.ground,
            set(other.facet_masks),
        )

    def __hash__(self):
        return hash((self.n, self.ground, frozenset(self.facet_masks)))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(void, n={self.n})"
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(<{body}>, n={self.n})"

    # JSON ---------------------------------------------------------------

    def to_dict(self):
        d = {"n": self.n, "facets": [list(f) for f in self.facets]}
        if self.ground != (1 << self.n) - 1:
            d["ground"] = vertices_of(self.ground)
        return d

    @classmethod
    def from_dict(cls, data):
        try:
            n = int(data["n"])
            facets = [list(map(int, F)) for F in data["facets"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed complex description: {exc}") from exc
        ground = mask_of(data["ground"]) if "ground" in data else None
        cx = cls(n, facets, ground)
        if cx.was_reduced:
            warnings.warn(
                "non-maximal faces were dropped from the facet list",
                FacetReductionWarning,
                stacklevel=2,
            )
        return cx

    def dumps(self):
        return json.dumps(self.to_dict())


def stanley_reisner(cx):
    """I_Delta, generated by the minimal nonfaces inside the ground set."""
    return MonomialIdeal.from_masks(cx.n, cx.minimal_nonfaces())


def complex_of(ideal, n=None, ground=None):
    """The complex whose Stanley-Reisner ideal is the squarefree monomial ideal."""
    if n is None:
        n = ideal.n
    if ideal.n != n:
        raise ValueError("ideal lives in a ring with a different number of variables")
    if not ideal.is_squarefree():
        raise ValueError("complex_of needs a squarefree monomial ideal")
    gens = ideal.squarefree_masks()
    if ground is None:
        ground = (1 << n) - 1
    if any(g == 0 for g in gens):
        return SimplicialComplex.void(n, ground)
    by_top = [[] for _ in range(n)]
    for g in gens:
        by_top[g.bit_length() - 1].append(g)
    candidates = [i for i in range(n) if ground >> i & 1]
    facets = []

    def extend(face, pos):
        grew = False
        for t in range(pos, len(candidates)):
            v = candidates[t]
            nf = face | (1 << v)
            if any(g & nf == g for g in by_top[v]):
                continue
            grew = True
            extend(nf, t + 1)
        if not grew:
            # no larger vertex fits; check smaller ones for maximality
            for v in candidates:
                b = 1 << v
                if face & b:
                    continue
                nf = face | b
                if not any(g & nf == g for g in gens):
                    return
            facets.append(face)

    extend(0, 0)
    return SimplicialComplex(n, facets, ground)


def independence_sets_of(gens, n):
    """All faces of the complex of a squarefree ideal, as masks."""
    return complex_of(MonomialIdeal.from_masks(n, gens), n).faces


def load_complex(path):
    with open(path) as fh:
        return SimplicialComplex.from_dict(json.load(fh))
