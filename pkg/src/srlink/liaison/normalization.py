"""Coefficient normalization by rescaling variables.

A form f = q_1 y_1 + ... + q_n y_n in monomials y_i can be brought to
y_1 + ... + y_n by substitutions x_v -> c_v x_v whenever the y_i admit a
triangular order: y_k contains a variable that occurs in none of
y_1, ..., y_{k-1}.  Scaling that private variable fixes the coefficient of y_k
without touching the earlier terms.  Such substitutions map monomial ideals to
themselves and preserve heights, so the rescaled problem is equivalent.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def _support(e):
    return [i for i, x in enumerate(e) if x]


def triangular_witness(ys):
    """[(index into ys, private variable)] in a triangular order, or None.

    Variables are 1-based.  The first order found in lexicographic order of
    permutations is returned, so the witness is deterministic.
    """
    ys = [tuple(y) for y in ys]
    for order in permutations(range(len(ys))):
        used = set()
        out = []
        for k in order:
            fresh = [i for i in _support(ys[k]) if i not in used]
            if not fresh:
                break
            out.append((k, fresh[0] + 1))
            used.update(_support(ys[k]))
        else:
            return out
    return None


def rescaling(ys, coeffs, witness=None):
    """Scalars c_v (1-based) with coeffs[k] * prod c^y_k = 1 for every k.

    ``witness`` defaults to triangular_witness(ys).  Raises ValueError when the
    terms admit no triangular order.
    """
    if witness is None:
        witness = triangular_witness(ys)
    if witness is None:
        raise ValueError("terms admit no triangular order")
    n = len(ys[0])
    scale = {v: Fraction(1) for v in range(1, n + 1)}
    for k, v in witness:
        y = ys[k]
        rest = Fraction(coeffs[k])
        for i, a in enumerate(y):
            if i + 1 != v:
                rest *= scale[i + 1] ** a
        # c_v^a * rest = 1; private variables of squarefree terms appear once
        a = y[v - 1]
        if a != 1:
            raise ValueError("private variable must occur to the first power")
        scale[v] = 1 / rest
    return scale


def apply_rescaling(ys, coeffs, scale):
    """The coefficients of sum coeffs[k] * y_k after x_v -> scale[v] * x_v."""
    out = []
    for y, q in zip(ys, coeffs):
        c = Fraction(q)
        for i, a in enumerate(y):
            c *= scale[i + 1] ** a
        out.append(c)
    return out


def term_graph(ys):
    """Edges (a, b), 1-based, for squarefree quadratic terms y = x_a x_b."""
    edges = []
    for y in ys:
        s = _support(y)
        if len(s) != 2 or any(y[i] != 1 for i in s):
            raise ValueError("term graph needs squarefree quadratic terms")
        edges.append((s[0] + 1, s[1] + 1))
    return edges


def free_term(ys):
    """Index of the term left with a free coefficient when the terms form a cycle.

    The terms x_a x_b are read as edges.  From the smallest cycle vertex u take
    its smaller neighbour v; the free edge joins v to its larger neighbour.
    Deleting it leaves a spanning path, whose terms are triangular.
    """
    edges = term_graph(ys)
    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if any(len(nb) != 2 for nb in adj.values()) or len(edges) != len(adj):
        raise ValueError("terms do not form a cycle")
    seen, stack = set(), [min(adj)]
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(adj[x])
    if len(seen) != len(adj):
        raise ValueError("terms do not form a single cycle")
    u = min(adj)
    v = min(adj[u])
    e = (v, max(adj[v]))
    key = (min(e), max(e))
    return edges.index(key)
