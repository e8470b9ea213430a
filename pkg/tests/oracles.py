"""Brute-force reference implementations used to cross-check the library.

Nothing here imports the code under test; complexes are frozensets of
frozensets of vertices and ideals are lists of vertex sets.
"""

from __future__ import annotations

from itertools import combinations


def subsets(vertices):
    vs = sorted(vertices)
    for r in range(len(vs) + 1):
        for c in combinations(vs, r):
            yield frozenset(c)


def faces_from_facets(facets):
    out = set()
    for F in facets:
        out.update(subsets(F))
    return frozenset(out)


def facets_of(faces):
    return sorted((F for F in faces if not any(F < G for G in faces)), key=lambda F: (len(F), sorted(F)))


def faces_of_ideal(n, gens, ground=None):
    """Faces of the complex of a squarefree monomial ideal, by checking every subset."""
    ground = set(range(1, n + 1)) if ground is None else set(ground)
    gens = [frozenset(g) for g in gens]
    return frozenset(F for F in subsets(ground) if not any(g <= F for g in gens))


def minimal_nonfaces(n, faces, ground=None):
    ground = set(range(1, n + 1)) if ground is None else set(ground)
    non = [F for F in subsets(ground) if F not in faces]
    return sorted((F for F in non if not any(G < F for G in non)), key=lambda F: (len(F), sorted(F)))


def min_vertex_cover(n, gens):
    """Height of a squarefree monomial ideal: the smallest set meeting every generator."""
    gens = [frozenset(g) for g in gens]
    for r in range(n + 1):
        for c in combinations(range(1, n + 1), r):
            s = set(c)
            if all(g & s for g in gens):
                return r
    raise ValueError("no cover (unit ideal)")


# Smith normal form ----------------------------------------------------------


def smith_diagonal(matrix):
    """Nonzero invariant factors of an integer matrix (list of rows)."""
    A = [list(r) for r in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for r in A:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    done = False
            if done:
                # the pivot must divide the rest of the matrix
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, rows):
                if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            A[t], A[i] = A[i], A[t]
            for r in A:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def boundary_matrix(faces, k):
    """Integer boundary map from k-faces to (k-1)-faces; -1-faces = {emptyset}."""
    hi = sorted((sorted(F) for F in faces if len(F) == k + 1))
    lo = sorted((sorted(F) for F in faces if len(F) == k))
    index = {tuple(F): i for i, F in enumerate(lo)}
    M = [[0] * len(hi) for _ in lo]
    for j, F in enumerate(hi):
        for pos in range(len(F)):
            G = tuple(F[:pos] + F[pos + 1 :])
            M[index[G]][j] = (-1) ** pos
    return M, len(lo), len(hi)


def reduced_betti_snf(faces, i, prime=0):
    """Reduced Betti number over Q (prime=0) or GF(p) from Smith normal forms."""

    def rank(k):
        M, r, c = boundary_matrix(faces, k)
        if r == 0 or c == 0:
            return 0
        d = smith_diagonal(M)
        return len(d) if prime == 0 else sum(1 for x in d if x % prime)

    n_i = sum(1 for F in faces if len(F) == i + 1)
    return n_i - rank(i) - rank(i + 1)


def link(faces, F):
    F = frozenset(F)
    return frozenset(G - F for G in faces if F <= G and not (G - F) & F)


def is_cm_reisner(faces, prime=0):
    """Reisner's criterion straight from the definition, with SNF homology."""
    for F in faces:
        lk = link(faces, F)
        d = max(len(G) for G in lk) - 1
        for i in range(-1, d):
            if reduced_betti_snf(lk, i, prime):
                return False
    return True


def is_pure(faces):
    fs = facets_of(faces)
    return len({len(F) for F in fs}) <= 1


# downsets ------------------------------------------------------------------


def all_complexes(n, max_faces):
    """Every simplicial complex on [n] (nonempty, as face sets) with at most max_faces faces."""
    start = frozenset([frozenset()])
    seen = {start}
    stack = [start]
    universe = list(subsets(range(1, n + 1)))
    while stack:
        cx = stack.pop()
        if len(cx) == max_faces:
            continue
        for S in universe:
            if S in cx:
                continue
            if all(S - {v} in cx for v in S):
                new = cx | {S}
                if new not in seen:
                    seen.add(new)
                    stack.append(new)
    return seen


def all_antichains(n):
    """Every antichain of nonempty subsets of [n]: the squarefree monomial ideals."""
    universe = [S for S in subsets(range(1, n + 1)) if S]
    out = []

    def rec(i, chosen):
        if i == len(universe):
            out.append(list(chosen))
            return
        rec(i + 1, chosen)
        S = universe[i]
        if not any(c <= S or S <= c for c in chosen):
            chosen.append(S)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def nzd_sum_of_variables(facets, support):
    """x_S = sum of variables over S is a NZD mod I_Delta iff S meets every facet."""
    S = set(support)
    return all(S & set(F) for F in facets)


def missing_family(n, gens, k):
    """Squarefree monomial ideals inside (gens) that contain all but exactly k generators.

    Each ideal is returned as its frozenset of minimal generators (vertex sets).
    """
    G = [frozenset(g) for g in gens]
    universe = list(subsets(range(1, n + 1)))
    in_C = [m for m in universe if any(g <= m for g in G)]
    out = set()
    for missing in combinations(G, k):
        base = [g for g in G if g not in missing]
        # monomials that may be added without putting a missing generator in A
        free = [m for m in in_C if not any(g <= m for g in base) and not any(m <= e for e in missing)]
        free.sort(key=len)

        def rec(i, chosen):
            if i == len(free):
                gens_ = base + chosen
                out.add(frozenset(g for g in gens_ if not any(h < g for h in gens_)))
                return
            rec(i + 1, chosen)
            m = free[i]
            if not any(c <= m for c in chosen):
                rec(i + 1, chosen + [m])

        rec(0, [])
    return out
