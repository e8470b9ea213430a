"""Finite simple graphs, circulants, edge ideals and common-neighbour ideals."""

from __future__ import annotations

import json
from functools import cached_property

from .algebra.monomial_ideal import MonomialIdeal
from .simplicial import complex_of, vertices_of


class Graph:
    """Simple graph on vertices 1..n."""

    def __init__(self, n, edges=(), circulant_data=None):
        self.n = n
        es = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {e} leaves [1, {n}]")
            es.add((min(i, j), max(i, j)))
        self.edges = tuple(sorted(es))
        self.circulant_data = circulant_data

    @cached_property
    def adjacency(self):
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= 1 << (j - 1)
            adj[j] |= 1 << (i - 1)
        return tuple(adj)

    def neighbours(self, v):
        return vertices_of(self.adjacency[v])

    def neighbour_mask(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return bin(self.adjacency[v]).count("1")

    def common_neighbour_mask(self, support):
        support = list(support)
        if not support:
            raise ValueError("support must contain at least one vertex")
        if len(set(support)) != len(support):
            raise ValueError("support has a repeated vertex")
        m = (1 << self.n) - 1
        for v in support:
            m &= self.adjacency[v]
        return m

    def is_automorphism(self, perm):
        image = {(min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1])) for i, j in self.edges}
        return image == set(self.edges)

    def rotation(self):
        """The generator i -> i+1 (mod n) of the rotation action on a circulant."""
        if self.circulant_data is None:
            raise ValueError("rotation symmetry is only defined for circulant graphs")
        return [i % self.n + 1 for i in range(1, self.n + 1)]

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        if self.circulant_data:
            n, s = self.circulant_data
            return f"Graph(C_{n}({','.join(map(str, s))}))"
        return f"Graph(n={self.n}, edges={len(self.edges)})"

    def to_dict(self):
        if self.circulant_data:
            n, s = self.circulant_data
            return {"circulant": [n, list(s)]}
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data):
        if "circulant" in data:
            n, s = data["circulant"]
            return circulant(int(n), [int(x) for x in s])
        try:
            return cls(int(data["n"]), [tuple(map(int, e)) for e in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph description: {exc}") from exc


def circulant(n, connections):
    """C_n(S): i ~ j iff the difference of i and j mod n lies in +-S."""
    if n < 3:
        raise ValueError("circulant graphs need n >= 3")
    conn = sorted(set(connections))
    for s in conn:
        if not 1 <= s <= n // 2:
            raise ValueError(f"connection {s} is outside [1, {n // 2}]")
    edges = []
    for i in range(1, n + 1):
        for s in conn:
            edges.append((i, (i - 1 + s) % n + 1))
    return Graph(n, edges, circulant_data=(n, tuple(conn)))


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def edge_ideal(g):
    return MonomialIdeal.from_sets(g.n, g.edges)


def independence_complex(g):
    return complex_of(edge_ideal(g), g.n)


def nf_ideal(g, support):
    """Variables of the vertices adjacent to every vertex of ``support``."""
    m = g.common_neighbour_mask(support)
    return MonomialIdeal.from_masks(g.n, [1 << (v - 1) for v in vertices_of(m)])


def canonical_B(g, support):
    return edge_ideal(g) + nf_ideal(g, support)


def max_support_bound(g):
    return max((g.degree(v) for v in range(1, g.n + 1)), default=0)


def vertex_orbits(n, generators):
    """Orbits of [n] under the group generated by permutations (1-based images)."""
    seen = set()
    orbits = []
    for v in range(1, n + 1):
        if v in seen:
            continue
        orbit = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for p in generators:
                w = p[u - 1]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def load_graph(path):
    with open(path) as fh:
        return Graph.from_dict(json.load(fh))


