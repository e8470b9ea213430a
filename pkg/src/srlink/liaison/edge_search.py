"""Search for basic double G-links of edge ideals with monomial B.

Any such link needs f = x_{i_1} + ... + x_{i_r} (after rescaling) and
B = I(G) + N_f, where N_f is generated by the common neighbours of the
support.  If the support contains the anchor a, N_f is a subset Y of N(a).
The search therefore runs over anchors and subsets Y of N(a), applying in
order: N_f nonzero, S/B Cohen-Macaulay, Y realizable as the common
neighbourhood of a support containing a, and for single-variable f the
requirement that S/(I(G) + (x_a)) be Cohen-Macaulay.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..graphs import Graph, edge_ideal, independence_complex, vertex_orbits
from ..homology import resolve_field
from ..simplicial import vertices_of
from . import certificate as cert_mod
from .bdl import vertex_bdl
from .certificate import CHECKS, Case, RefutationCertificate, evaluate_checks

CLAIM = "no BDL I(G) = fB + A with B a monomial ideal"


def realizing_supports(g, anchor, Y):
    """Supports F containing ``anchor`` whose common neighbourhood is exactly Y.

    Every vertex of F must be adjacent to all of Y, so F lies inside
    T = common neighbours of Y.  Supports are listed by size, then
    lexicographically.
    """
    Y = sorted(set(Y))
    if not Y:
        raise ValueError("Y must be nonempty")
    want = sum(1 << (y - 1) for y in Y)
    T = vertices_of(g.common_neighbour_mask(Y))
    if anchor not in T:
        return []
    others = [v for v in T if v != anchor]
    out = []
    for r in range(len(others) + 1):
        for rest in combinations(others, r):
            F = (anchor,) + rest
            if g.common_neighbour_mask(F) == want:
                out.append(sorted(F))
    out.sort(key=lambda F: (len(F), F))
    return out


@dataclass
class EdgeSearchResult:
    certificate: RefutationCertificate
    counts: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)

    @property
    def refuted(self):
        return self.certificate.refuted

    def lines(self):
        out = [f"claim: {self.certificate.claim}"]
        for k, v in self.counts.items():
            out.append(f"{k}: {v}")
        for c in self.candidates:
            out.append(f"candidate f = {c['f']}, B = {c['B']}: {c['status']}")
        if self.refuted:
            reason = self.counts.get("reason")
            if reason:
                out.append(f"no valid candidate ({reason})")
            else:
                n = self.counts.get("CM candidates", 0)
                out.append(f"no basic double G-link; {n} CM candidates eliminated")
        else:
            out.append(f"{len(self.candidates)} surviving candidates")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _fmt_set(vs):
    return "{" + ",".join(map(str, vs)) + "}"


def _ring(g, fld):
    return {"n": g.n, "field": fld.name}


def _plan(g, fld, symmetry):
    ring = _ring(g, fld)
    C = edge_ideal(g)
    ideal = C.strings()
    edges = [list(e) for e in g.edges]
    cases = []
    spec = ("unmixed", {"ideal": ideal})
    cases.append(Case("edge/unmixed", "unmixed", {}, [spec], "a BDL C is unmixed"))
    if not CHECKS["unmixed"](spec[1], ring):
        return ring, cases
    if symmetry:
        anchors = [o[0] for o in vertex_orbits(g.n, symmetry)]
        checks = [("automorphism", {"ideal": ideal, "perm": list(p)}) for p in symmetry]
        cases.append(
            Case("edge/symmetry", "symmetry", {"generators": [list(p) for p in symmetry], "anchors": anchors},
                 checks, "every support meets the orbit of some anchor")
        )
    else:
        anchors = list(range(1, g.n + 1))
    for a in anchors:
        X = g.neighbours(a)
        for mask in range(1 << len(X)):
            Y = [X[i] for i in range(len(X)) if mask >> i & 1]
            cid = f"edge/a={a}/Y={_fmt_set(Y)}"
            if not Y:
                cases.append(Case(cid, "empty-nf", {"anchor": a, "Y": []}, [], "N_f = 0 forces A = I(G)"))
                continue
            B = C.add_variables(Y)
            checks = [
                ("cm", {"ideal": B.strings()}),
                ("realizable", {"edges": edges, "anchor": a, "Y": Y}),
            ]
            supports = CHECKS["realizable"](checks[1][1], ring)
            if not symmetry:
                # each support is examined once, at its smallest vertex
                supports = [F for F in supports if F[0] == a]
            for F in supports:
                if len(F) == 1:
                    checks.append(("cm", {"ideal": C.add_variables([a]).strings()}))
            data = {"anchor": a, "Y": Y, "B": B.strings(), "supports": supports}
            cases.append(Case(cid, "nf-subset", data, checks))
    return ring, cases


def _close(case):
    ex = [c.get("expect") for c in case.checks]
    if case.role == "unmixed":
        # a non-unmixed C closes everything; otherwise this is only a precondition
        return None
    if case.role == "symmetry":
        return None if all(ex) else "a generator is not an automorphism"
    if case.role == "empty-nf":
        return None
    if case.role == "nf-subset":
        if ex[0] is False:
            return None
        supports = case.data["supports"]
        if not supports:
            return None
        fisxi = iter(ex[2:])
        for F in supports:
            if len(F) > 1 or next(fisxi) is not False:
                return "survivor"
        return None
    return f"no closing rule for role {case.role!r}"


def _stage(case):
    """Which filter eliminated the case (or 'survivor')."""
    ex = [c.get("expect") for c in case.checks]
    if case.role == "empty-nf":
        return "empty"
    if ex[0] is False:
        return "cm"
    if not case.data["supports"]:
        return "realizability"
    return "fisxi" if _close(case) is None else "survivor"


def search_edge_bdl(g, field=None, symmetry=None, jobs=1, verify=True):
    """Enumerate candidate (f, B) for I(G) = fB + A and apply the necessary filters.

    ``symmetry`` is a list of automorphisms of G (1-based images), or
    "rotation" for a circulant.  Surviving single-variable candidates are
    tried as vertex constructions when ``verify`` is set.
    """
    if isinstance(g, dict):
        g = Graph.from_dict(g)
    if symmetry == "rotation":
        symmetry = [g.rotation()]
    if symmetry:
        for p in symmetry:
            if not g.is_automorphism(p):
                raise ValueError(f"{p} is not an automorphism of the graph")
    fld = resolve_field(field)
    ring, cases = _plan(g, fld, symmetry)
    specs = [c for case in cases for c in case.checks]
    records = evaluate_checks(specs, ring, jobs)
    k = 0
    for case in cases:
        case.checks = records[k : k + len(case.checks)]
        k += len(case.checks)
    unresolved = [c.id for c in cases if _close(c) is not None]
    sym = {"generators": [list(p) for p in symmetry]} if symmetry else None
    cert = RefutationCertificate(
        kind="edge",
        claim=CLAIM,
        ring=ring,
        ideal=edge_ideal(g).strings(),
        cases=cases,
        summary={"edges": [list(e) for e in g.edges]},
        symmetry=sym,
        mode=None,
        refuted=not unresolved,
        unresolved=unresolved,
    )
    counts = _counts(cases)
    candidates = _candidates(g, cases, fld, verify)
    return EdgeSearchResult(cert, counts, candidates)


def _counts(cases):
    out = {}
    if cases[0].checks[0]["expect"] is False:
        out["reason"] = "I(G) not unmixed"
        return out
    subsets = [c for c in cases if c.role in ("empty-nf", "nf-subset")]
    stages = [(c, _stage(c)) for c in subsets]
    cm = [c for c, s in stages if s not in ("empty", "cm")]
    # different anchors can reach the same Y; list each ideal once
    ideals = list(dict.fromkeys(f"I(G)+({','.join(f'x{y}' for y in c.data['Y'])})" for c in cm))
    out["subsets examined"] = len(subsets)
    out["CM candidates"] = len(ideals)
    out["CM candidate ideals"] = ideals
    out["eliminated by realizability"] = sum(1 for _, s in stages if s == "realizability")
    out["eliminated by C+(x_i) not CM"] = sum(1 for _, s in stages if s == "fisxi")
    out["survivors"] = sum(1 for _, s in stages if s == "survivor")
    return out


def _candidates(g, cases, fld, verify):
    out = []
    for c in cases:
        if c.role != "nf-subset" or _close(c) is None:
            continue
        B = "(" + ", ".join(c.data["B"]) + ")"
        fisxi = iter(c.checks[2:])
        for F in c.data["supports"]:
            f = "+".join(f"x{v}" for v in F)
            if len(F) > 1:
                out.append({"f": f, "B": B, "support": F, "status": "unverified (A not determined)"})
                continue
            if next(fisxi)["expect"] is False:
                continue
            status = "passes the necessary filters"
            if verify:
                res = vertex_bdl(independence_complex(g), F[0], fld)
                status = "verified BDL" if res.accepted else f"vertex construction refused: {res.reason}"
            out.append({"f": f, "B": B, "support": F, "status": status})
    return out


def edge_coverage_problems(cert):
    problems = []
    try:
        g = Graph(cert.ring["n"], [tuple(e) for e in cert.summary["edges"]])
    except (KeyError, ValueError) as exc:
        return [f"certificate does not describe a graph: {exc}"]
    if edge_ideal(g).strings() != cert.ideal:
        problems.append("recorded ideal is not the edge ideal of the recorded graph")
    symmetry = cert.symmetry["generators"] if cert.symmetry else None
    if symmetry:
        for p in symmetry:
            if not g.is_automorphism(p):
                problems.append(f"{p} is not an automorphism of the graph")
    fld = resolve_field(cert.ring["field"])
    _, planned = _plan(g, fld, symmetry)
    want = [(c.id, c.role, cert_mod._normalize(c.data), cert_mod._normalize(list(c.checks))) for c in planned]
    have = [
        (c.id, c.role, cert_mod._normalize(c.data), cert_mod._normalize([(k["check"], k["args"]) for k in c.checks]))
        for c in cert.cases
    ]
    if len(want) != len(have):
        problems.append(f"case count {len(have)} differs from the planned {len(want)}")
    for a, b in zip(want, have):
        if a != b:
            problems.append(f"case {b[0]} does not match the planned case {a[0]}")
    open_ids = [c.id for c in cert.cases if _close(c) is not None]
    if open_ids != list(cert.unresolved):
        problems.append("recorded open cases disagree with the closing rules")
    if cert.refuted != (not open_ids):
        problems.append("refuted flag disagrees with the closing rules")
    if cert.claim != CLAIM:
        problems.append("claim text does not match the search")
    return problems
