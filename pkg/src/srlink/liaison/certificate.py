"""Machine-checkable refutation certificates.

A certificate is a list of cases.  Every case carries a list of checks; a
check names a registered predicate, its raw arguments (generator strings,
vertex lists) and the value the search observed.  Replaying a certificate
re-evaluates every check from those arguments alone and compares values, and
re-runs the cheap candidate enumeration to confirm that the case list covers
the stated candidate space.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from ..algebra.fields import field_from_name
from ..algebra.ideal import Ideal
from ..algebra.monomial_ideal import MonomialIdeal
from ..algebra.polynomial import PolynomialContext
from ..homology import is_cm_quotient
from ..simplicial import complex_of

SCHEMA_VERSION = 1

CHECKS = {}


def register(name):
    def deco(fn):
        CHECKS[name] = fn
        return fn

    return deco


def _ctx(ring, args):
    return PolynomialContext(ring["n"], field_from_name(args.get("field", ring["field"])))


def _mono(ring, args, key="ideal"):
    return MonomialIdeal.parse(ring["n"], args[key])


# registered predicates -----------------------------------------------------


@register("cm")
def check_cm(args, ring):
    """CM verdict of S/I for a squarefree monomial I (linear generators allowed)."""
    return is_cm_quotient(_mono(ring, args), field_from_name(args.get("field", ring["field"])))


@register("height")
def check_height(args, ring):
    ctx = _ctx(ring, args)
    return Ideal(ctx, args["generators"]).height()


@register("height-range")
def check_height_range(args, ring):
    """[min, max] height over every ideal fixed + one pick from each choice list."""
    ctx = _ctx(ring, args)
    fixed = [ctx.parse(s) for s in args["fixed"]]
    choices = [[ctx.parse(s) for s in group] for group in args["choices"]]
    lo = hi = None
    for picks in product(*choices):
        h = Ideal(ctx, fixed + list(picks)).height()
        lo = h if lo is None else min(lo, h)
        hi = h if hi is None else max(hi, h)
    return [lo, hi]


@register("unmixed")
def check_unmixed(args, ring):
    I = _mono(ring, args)
    return complex_of(I, ring["n"]).is_pure


@register("multipliers")
def check_multipliers(args, ring):
    """Variables x_i with x_i * m in C for every listed monomial m."""
    C = _mono(ring, args)
    return multipliers(C, [_exps(ring["n"], s) for s in args["monomials"]])


@register("admissible-z")
def check_admissible_z(args, ring):
    """Squarefree quadrics z with x_j * z in C for every j in the support."""
    C = _mono(ring, args)
    return [_fmt_exps(z) for z in admissible_quadrics(C, args["support"])]


@register("generator-witness")
def check_generator_witness(args, ring):
    """Generators of C outside (y*w : w in W) that share a variable with y."""
    C = _mono(ring, args)
    n = ring["n"]
    y = _exps(n, args["y"])
    ys = [i for i in range(n) if y[i]]
    excluded = []
    for w in args["W"]:
        e = list(y)
        e[w - 1] += 1
        excluded.append(tuple(e))
    out = []
    for g in C.generators:
        if any(all(a >= b for a, b in zip(g, e)) for e in excluded):
            continue
        if any(g[i] for i in ys):
            out.append(_fmt_exps(g))
    return out


@register("triangular")
def check_triangular(args, ring):
    from .normalization import triangular_witness

    n = ring["n"]
    ys = [_exps(n, s) for s in args["monomials"]]
    wit = triangular_witness(ys)
    return None if wit is None else [[_fmt_exps(ys[k]), v] for k, v in wit]


@register("max-pair-multipliers")
def check_max_pair(args, ring):
    """Largest number of common multipliers of two distinct squarefree quadrics."""
    C = _mono(ring, args)
    qs = squarefree_quadrics(ring["n"])
    return max(len(multipliers(C, [a, b])) for a, b in combinations(qs, 2))


@register("multiplier-profile")
def check_multiplier_profile(args, ring):
    """Over all sums of k distinct monic quadrics: how many have a multiplier, max count."""
    C = _mono(ring, args)
    qs = all_quadrics(ring["n"])
    nonempty = 0
    biggest = 0
    for ys in combinations(qs, args["k"]):
        m = len(multipliers(C, list(ys)))
        if m:
            nonempty += 1
        biggest = max(biggest, m)
    return {"nonempty": nonempty, "max": biggest}


@register("sqfree-family")
def check_sqfree_family(args, ring):
    """Squarefree monomial A inside C missing exactly k generators of C: counts."""
    from .refute import missing_generator_family

    C = _mono(ring, args)
    fam = missing_generator_family(C, args["k"])
    field_ = field_from_name(args.get("field", ring["field"]))
    h2 = [A for A in fam if A.height() == args["height"]]
    return {
        "total": len(fam),
        "height": len(h2),
        "cm": sum(1 for A in h2 if is_cm_quotient(A, field_)),
    }


@register("listed-not-cm")
def check_listed(args, ring):
    """For each listed ideal: [height, CM verdict]."""
    field_ = field_from_name(args.get("field", ring["field"]))
    out = []
    for gens in args["ideals"]:
        A = MonomialIdeal.parse(ring["n"], gens)
        out.append([A.height(), is_cm_quotient(A, field_)])
    return out


@register("shared-variable")
def check_shared_variable(args, ring):
    n = ring["n"]
    a, b = (_exps(n, s) for s in args["monomials"])
    return [i + 1 for i in range(n) if a[i] and b[i]]


@register("conflicting-generators")
def check_conflict(args, ring):
    """Generators of C forced into A but sharing a variable with the monomial f."""
    C = _mono(ring, args)
    n = ring["n"]
    f = _exps(n, args["f"])
    terms = set()
    for u in args["U"]:
        e = list(f)
        e[u - 1] += 1
        terms.add(tuple(e))
    return [
        _fmt_exps(g) for g in C.generators if g not in terms and any(g[i] and f[i] for i in range(n))
    ]


@register("vertex-bdl")
def check_vertex_bdl(args, ring):
    from .bdl import vertex_bdl

    C = _mono(ring, args)
    cx = complex_of(C, ring["n"])
    res = vertex_bdl(cx, args["k"], field_from_name(args.get("field", ring["field"])))
    return res.accepted


@register("realizable")
def check_realizable(args, ring):
    from ..graphs import Graph

    g = Graph(ring["n"], [tuple(e) for e in args["edges"]])
    from .edge_search import realizing_supports

    return [list(s) for s in realizing_supports(g, args["anchor"], args["Y"])]


@register("automorphism")
def check_automorphism(args, ring):
    from .symmetry import is_ideal_automorphism

    return is_ideal_automorphism(_mono(ring, args), args["perm"])


# helpers shared with the engines ---------------------------------------------


def _exps(n, text):
    return MonomialIdeal.parse(n, [text]).generators[0]


def _fmt_exps(e):
    return MonomialIdeal(len(e), [e]).strings()[0]


def multipliers(C, monomials):
    n = C.n
    out = []
    for i in range(n):
        ok = True
        for m in monomials:
            e = list(m)
            e[i] += 1
            if not C.contains(e):
                ok = False
                break
        if ok:
            out.append(i + 1)
    return out


def squarefree_quadrics(n):
    out = []
    for a, b in combinations(range(n), 2):
        e = [0] * n
        e[a] = e[b] = 1
        out.append(tuple(e))
    return out


def all_quadrics(n):
    """All monic degree-2 monomials, squares included, in a fixed order."""
    out = []
    for a in range(n):
        for b in range(a, n):
            e = [0] * n
            e[a] += 1
            e[b] += 1
            out.append(tuple(e))
    return out


def admissible_quadrics(C, support):
    out = []
    for z in squarefree_quadrics(C.n):
        if all(C.contains(_times_var(z, j)) for j in support):
            out.append(z)
    return out


def _times_var(e, j):
    e = list(e)
    e[j - 1] += 1
    return tuple(e)


# the certificate object ----------------------------------------------------


@dataclass
class Case:
    id: str
    role: str
    data: dict
    checks: list
    note: str = ""

    def to_dict(self):
        d = {"id": self.id, "role": self.role, "data": self.data, "checks": self.checks}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class RefutationCertificate:
    kind: str
    claim: str
    ring: dict
    ideal: list
    cases: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    symmetry: dict | None = None
    mode: str | None = None
    refuted: bool = True
    unresolved: list = field(default_factory=list)

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "claim": self.claim,
            "mode": self.mode,
            "ring": self.ring,
            "ideal": self.ideal,
            "symmetry": self.symmetry,
            "summary": self.summary,
            "refuted": self.refuted,
            "unresolved": self.unresolved,
            "cases": [c.to_dict() for c in self.cases],
        }

    def dumps(self):
        return json.dumps(self.to_dict(), indent=1, sort_keys=False)

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.dumps())
            fh.write("\n")

    @classmethod
    def from_dict(cls, d):
        version = d.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported certificate schema version {version!r}")
        cases = [Case(c["id"], c["role"], c["data"], c["checks"], c.get("note", "")) for c in d["cases"]]
        return cls(
            kind=d["kind"],
            claim=d["claim"],
            ring=d["ring"],
            ideal=d["ideal"],
            cases=cases,
            summary=d.get("summary", {}),
            symmetry=d.get("symmetry"),
            mode=d.get("mode"),
            refuted=d.get("refuted", True),
            unresolved=d.get("unresolved", []),
        )

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


def make_check(name, args, ring):
    """Evaluate a registered check now and return its record."""
    return {"check": name, "args": args, "expect": _normalize(CHECKS[name](args, ring))}


def _normalize(value):
    return json.loads(json.dumps(value))


def evaluate_checks(specs, ring, jobs=1):
    """Evaluate many (name, args) pairs, optionally in worker processes, in order."""
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(specs) < 2:
        return [make_check(name, args, ring) for name, args in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_make_check_star, [(n, a, ring) for n, a in specs], chunksize=4))


def _make_check_star(item):
    return make_check(*item)


@dataclass
class ReplayReport:
    ok: bool
    checked: int
    mismatches: list

    def __str__(self):
        if self.ok:
            return f"replay ok: {self.checked} checks re-derived"
        return f"replay FAILED: {len(self.mismatches)} mismatches out of {self.checked}"


def replay(cert, jobs=1):
    """Re-evaluate every check of the certificate and confirm coverage."""
    ring = cert.ring
    specs = []
    where = []
    for case in cert.cases:
        for k, chk in enumerate(case.checks):
            if chk["check"] not in CHECKS:
                return ReplayReport(False, 0, [f"{case.id}: unknown check {chk['check']!r}"])
            specs.append((chk["check"], chk["args"]))
            where.append((case.id, k, chk["expect"]))
    results = evaluate_checks(specs, ring, jobs)
    mismatches = []
    for (cid, k, expect), got in zip(where, results):
        if got["expect"] != expect:
            mismatches.append(f"{cid} check {k}: recorded {expect!r}, recomputed {got['expect']!r}")
    from .refute import coverage_problems

    mismatches.extend(coverage_problems(cert))
    return ReplayReport(not mismatches, len(specs), mismatches)
