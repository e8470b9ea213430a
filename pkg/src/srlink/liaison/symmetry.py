"""Variable permutations preserving a monomial ideal."""

from __future__ import annotations

from itertools import permutations

from ..algebra.monomial_ideal import MonomialIdeal


def permute_exponents(e, perm):
    """Image of x^e under x_i -> x_{perm[i-1]}."""
    out = [0] * len(e)
    for i, a in enumerate(e):
        out[perm[i] - 1] += a
    return tuple(out)


def permute_ideal(ideal, perm):
    return MonomialIdeal(ideal.n, [permute_exponents(g, perm) for g in ideal.generators])


def is_ideal_automorphism(ideal, perm):
    if sorted(perm) != list(range(1, ideal.n + 1)):
        return False
    return permute_ideal(ideal, perm) == ideal


def ideal_automorphisms(ideal, limit_n=8):
    """All permutations of the variables fixing the ideal, by brute force."""
    n = ideal.n
    if n > limit_n:
        raise ValueError(f"brute-force automorphism search is limited to n <= {limit_n}")
    gens = set(ideal.generators)
    out = []
    for p in permutations(range(1, n + 1)):
        if all(permute_exponents(g, p) in gens for g in ideal.generators):
            out.append(list(p))
    return out


def transport_map(ideal, base=1):
    """{v: an automorphism sending x_base to x_v} over the orbit of x_base.

    The first automorphism in lexicographic order is kept for each image.
    """
    out = {}
    for p in ideal_automorphisms(ideal):
        out.setdefault(p[base - 1], p)
    return dict(sorted(out.items()))
