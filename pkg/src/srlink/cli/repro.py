"""Reproduction targets: fixed pipelines compared against a table of expected values."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import datasets
from ..algebra.monomial_ideal import MonomialIdeal
from ..decomposability import is_vertex_decomposable, is_weakly_vertex_decomposable
from ..graphs import Graph, edge_ideal, independence_complex
from ..homology import is_cohen_macaulay
from ..liaison.bdl import BDLWitness, fisxi_necessary, verify_bdl, vertex_bdl
from ..liaison.biliaison import BiliaisonWitness, verify_biliaison
from ..liaison.certificate import replay
from ..liaison.edge_search import search_edge_bdl
from ..liaison.refute import GENERAL, SQUAREFREE, refute_deg1, refute_deg2
from ..simplicial import SimplicialComplex, vertices_of

# the generators of I(C_16(1,4,8)) as printed alongside the graph
C16_PRINTED = (
    "x1*x2 x2*x3 x3*x4 x4*x5 x5*x6 x6*x7 x7*x8 x8*x9 x9*x10 x10*x11 x11*x12 x12*x13 "
    "x13*x14 x14*x15 x15*x16 x1*x16 x1*x9 x1*x5 x1*x13 x2*x6 x2*x14 x2*x10 x3*x7 x3*x11 "
    "x3*x15 x4*x8 x4*x12 x4*x16 x5*x9 x5*x13 x6*x10 x6*x14 x7*x11 x7*x15 x8*x12 x8*x16 "
    "x9*x13 x10*x14 x11*x15 x12*x16"
).split()

C16_CM_CANDIDATES = [
    "I(G)+(x2,x9,x16)",
    "I(G)+(x2,x5,x9,x16)",
    "I(G)+(x2,x9,x13,x16)",
    "I(G)+(x2,x5,x9,x13,x16)",
]


@dataclass
class Expectation:
    name: str
    expected: object
    got: object

    @property
    def ok(self):
        return self.expected == self.got

    def line(self):
        mark = "ok" if self.ok else "MISMATCH"
        if self.ok:
            return f"[{mark}] {self.name}: {self.got!r}"
        return f"[{mark}] {self.name}: expected {self.expected!r}, got {self.got!r}"


@dataclass
class ReproReport:
    target: str
    checks: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)

    def expect(self, name, expected, got):
        self.checks.append(Expectation(name, expected, got))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def lines(self):
        out = [f"repro {self.target}"]
        out.extend("  " + c.line() for c in self.checks)
        out.append(f"{self.target}: {'PASS' if self.ok else 'FAIL'}")
        return out

    def to_dict(self):
        return {
            "target": self.target,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "expected": c.expected, "got": c.got, "ok": c.ok} for c in self.checks
            ],
        }


def _ideal(name):
    d = datasets.load(name)
    return MonomialIdeal.parse(int(d["n"]), d["gens"])


def _complex(name):
    return SimplicialComplex.from_dict(datasets.load(name))


def example_2_3(jobs=1):
    r = ReproReport("example-2.3")
    v = verify_bdl(BDLWitness.from_dict(datasets.load("ex23")))
    r.expect("every condition passes", True, all(c.status == "pass" for c in v.results.values()))
    r.expect("verdict", "valid", v.overall)
    square = _complex("square")
    vb = vertex_bdl(square, 1)
    r.expect("vertex construction at x1 recovers B", ["x3", "x2*x4"], vb.B.strings())
    r.expect("vertex construction at x1 recovers A", ["x2*x4"], vb.A.strings())
    return r


def prop_3_6(jobs=1):
    r = ReproReport("prop-3.6")
    g = Graph.from_dict(datasets.load("c16"))
    I = edge_ideal(g)
    r.expect("edge ideal generators", 40, len(I))
    r.expect("matches the printed list", sorted(C16_PRINTED), sorted(I.strings()))
    res = search_edge_bdl(g, symmetry="rotation", jobs=jobs)
    c = res.counts
    r.expect("subsets of N(x1) examined", 32, c["subsets examined"])
    r.expect("CM candidates for B", C16_CM_CANDIDATES, c["CM candidate ideals"])
    r.expect("eliminated by realizability", 3, c["eliminated by realizability"])
    r.expect("common neighbours of 2 and 16", [1], vertices_of(g.common_neighbour_mask([2, 16])))
    r.expect("fisxi_necessary(I(G), 1)", False, fisxi_necessary(I, 1))
    r.expect("eliminated by C+(x_1) not CM", 1, c["eliminated by C+(x_i) not CM"])
    r.expect("refuted", True, res.refuted)
    r.expect("certificate replays", True, replay(res.certificate, jobs).ok)
    r.certificates["search-edge"] = res.certificate
    return r


def example_4_1_cm(jobs=1):
    r = ReproReport("example-4.1-cm")
    cx = _complex("rp2")
    I = _ideal("rp2-ideal")
    r.expect("complex matches the ideal", I.strings(), cx.stanley_reisner().strings())
    r.expect("Cohen-Macaulay over Q", True, is_cohen_macaulay(cx, "Q"))
    r.expect("fisxi_necessary for x1..x6", [False] * 6, [fisxi_necessary(I, i) for i in range(1, 7)])
    r.expect("height", 3, I.height())
    return r


def prop_4_2(jobs=1):
    r = ReproReport("prop-4.2")
    C = _ideal("rp2-ideal")
    d1 = refute_deg1(C, mode=GENERAL, jobs=jobs)
    c = d1.counts
    r.expect("single variables excluded", 6, c["variable forms excluded"])
    r.expect("max multipliers j of a quadric z", 2, c["max multipliers of a quadric"])
    r.expect("each two-term f has exactly one z", {1: 15}, c["admissible quadrics per support"])
    r.expect("forced A' heights [min, max]", [3, 3], c["forced ideal heights"])
    r.expect("degree 1 refuted", True, d1.refuted)
    d2 = refute_deg2(C, mode=GENERAL, jobs=jobs)
    c = d2.counts
    r.expect("allowable w per single y", {0: 6, 2: 15}, c["allowable w per single term"])
    r.expect("f counts for n = 2..5", {2: 10, 3: 10, 4: 5, 5: 1}, c["sums per w by term count"]["x1"])
    r.expect("normalized branches min height >= 3", True, c["normalized min height"] >= 3)
    gf = c["GF(2) min heights"]
    r.expect("GF(2) branches", 3, len(gf))
    r.expect("every GF(2) branch has height >= 3", True, all(h >= 3 for h in gf.values()))
    r.expect("degree 2 refuted", True, d2.refuted)
    r.certificates["refute-deg1"] = d1.certificate
    r.certificates["refute-deg2"] = d2.certificate
    return r


def example_4_5_cm(jobs=1):
    r = ReproReport("example-4.5-cm")
    cx = _complex("ex45")
    I = _ideal("ex45-ideal")
    r.expect("complex matches the ideal", I.strings(), cx.stanley_reisner().strings())
    r.expect("Cohen-Macaulay over Q", True, is_cohen_macaulay(cx, "Q"))
    r.expect("weakly vertex decomposable", False, is_weakly_vertex_decomposable(cx).verdict)
    r.expect("vertex decomposable", False, is_vertex_decomposable(cx).verdict)
    r.expect("height", 3, I.height())
    return r


def prop_4_7(jobs=1):
    r = ReproReport("prop-4.7")
    C = _ideal("ex45-ideal")
    d1 = refute_deg1(C, mode=SQUAREFREE, jobs=jobs)
    fam1 = d1.counts["all-but-1 family"]
    r.expect("height-2 ideals missing one generator", 5, fam1["height"])
    r.expect("of which Cohen-Macaulay", 0, fam1["cm"])
    r.expect("degree 1 refuted", True, d1.refuted)
    d2 = refute_deg2(C, mode=SQUAREFREE, jobs=jobs)
    prof = d2.counts["three-term profile"]
    r.expect("three-term f with a nonempty multiplier set", 60, prof["nonempty"])
    r.expect("largest multiplier set", 1, prof["max"])
    fam2 = d2.counts["all-but-2 family"]
    r.expect("height-2 ideals missing two generators", 60, fam2["height"])
    r.expect("of which Cohen-Macaulay", 0, fam2["cm"])
    r.expect("degree 2 refuted", True, d2.refuted)
    r.certificates["refute-deg1"] = d1.certificate
    r.certificates["refute-deg2"] = d2.certificate
    return r


def example_5_5(jobs=1):
    r = ReproReport("example-5.5")
    w = BiliaisonWitness.from_dict(datasets.load("ex55"))
    v = verify_biliaison(w)
    r.expect("x4*J + N = x2*I + N", True, v.equality)
    r.expect("preconditions", True, all(v.preconditions.values()))
    r.expect("L monomial", False, v.L_monomial)
    r.expect("height shift", 0, v.shift)
    for name, label in (("ex55-bdl-J", "x4*J + (x1,x3)"), ("ex55-bdl-I", "x2*I + (x1,x3)")):
        b = verify_bdl(BDLWitness.from_dict(datasets.load(name)))
        r.expect(f"(x1, x2*x4, x3) = {label} is a BDL", "valid", b.overall)
    return r


TARGETS = {
    "example-2.3": example_2_3,
    "prop-3.6": prop_3_6,
    "example-4.1-cm": example_4_1_cm,
    "prop-4.2": prop_4_2,
    "example-4.5-cm": example_4_5_cm,
    "prop-4.7": prop_4_7,
    "example-5.5": example_5_5,
}


def run(target, jobs=1):
    try:
        fn = TARGETS[target]
    except KeyError:
        raise KeyError(f"unknown repro target {target!r}; known: {', '.join(TARGETS)}") from None
    return fn(jobs)
