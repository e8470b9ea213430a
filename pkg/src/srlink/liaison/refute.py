"""Exhaustive refutation of basic double G-links for cubic squarefree ideals.

Each engine is split into a planner and an evaluator.  The planner enumerates
the candidate space and lays out every case with the checks that close it;
it only evaluates cheap combinatorial checks (multiplier sets, normalization
witnesses) whose values decide the shape of later cases.  The evaluator runs
every check, including the expensive height and Cohen-Macaulay ones, and
decides which cases close.  Replaying a certificate re-runs the planner, so
the recorded case list is confirmed to cover the candidate space.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from ..algebra.fields import QQ, field_from_name
from ..algebra.ideal import gf2_specialize
from ..algebra.monomial_ideal import MonomialIdeal
from ..algebra.polynomial import PolynomialContext
from ..homology import resolve_field
from . import certificate as cert_mod
from .certificate import (
    CHECKS,
    Case,
    RefutationCertificate,
    _fmt_exps,
    _times_var,
    all_quadrics,
    evaluate_checks,
    multipliers,
    squarefree_quadrics,
)
from .normalization import free_term, triangular_witness
from .symmetry import transport_map

GENERAL, SQUAREFREE = "general-A", "squarefree-A"
MODES = (GENERAL, SQUAREFREE)

# (r, s) representatives of the parity classes of a reduced fraction r/s
PARITY_CLASSES = ((1, 2), (1, 1), (2, 1))


@dataclass
class RefutationResult:
    certificate: RefutationCertificate
    counts: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)

    @property
    def refuted(self):
        return self.certificate.refuted

    def lines(self):
        c = self.certificate
        out = [f"claim: {c.claim}", f"cases: {len(c.cases)}"]
        for k, v in self.counts.items():
            out.append(f"{k}: {v}")
        if self.refuted:
            out.append("verdict: refuted (no basic double G-link of the stated form)")
        else:
            out.append(f"verdict: not refuted; open cases: {', '.join(c.unresolved)}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


# validation -----------------------------------------------------------------


def _check_cubic(C):
    if not isinstance(C, MonomialIdeal):
        C = C.to_monomial_ideal()
    if not C.is_squarefree():
        raise ValueError("the ideal must be squarefree")
    bad = [s for s, d in zip(C.strings(), C.degrees()) if d != 3]
    if bad:
        raise ValueError(f"generators of degree other than 3: {', '.join(bad)}")
    return C


def _ring(C, field_):
    return {"n": C.n, "field": field_.name}


def _spec(name, args):
    return (name, args)


def _cheap(name, args, ring):
    return CHECKS[name](args, ring)


# missing-generator families --------------------------------------------------


def _masks_divide(a, b):
    return a & b == a


def missing_generator_family(C, k):
    """Squarefree monomial ideals A inside C containing all but exactly k generators.

    For each k-subset D of generators, A is generated by the other generators
    together with an up-closed set of extra squarefree monomials from C that
    lie outside the ideal of the kept generators and are not in D.  Returned
    in a deterministic order.
    """
    n = C.n
    gens = C.squarefree_masks()
    in_C = [m for m in range(1 << n) if any(_masks_divide(g, m) for g in gens)]
    out = []
    seen = set()
    for dropped in combinations(gens, k):
        keep = [g for g in gens if g not in dropped]
        extras = [
            m for m in in_C
            if not any(_masks_divide(g, m) for g in keep)
            and not any(_masks_divide(m, d) for d in dropped)
        ]
        extras.sort(key=lambda m: (bin(m).count("1"), m))
        found = []
        _antichains(extras, 0, [], found)
        for chosen in found:
            A = MonomialIdeal.from_masks(n, keep + chosen)
            if A not in seen:
                seen.add(A)
                out.append(A)
    return out


def _antichains(items, i, chosen, out):
    # items are sorted by size, so a later item is never below an earlier one
    if i == len(items):
        out.append(list(chosen))
        return
    _antichains(items, i + 1, chosen, out)
    m = items[i]
    if not any(_masks_divide(c, m) for c in chosen):
        chosen.append(m)
        _antichains(items, i + 1, chosen, out)
        chosen.pop()


# planners ---------------------------------------------------------------------


def _var_ideal(C, i):
    return C.add_variables([i]).strings()


def _poly_strings(ctx, C, minus):
    """Choice lists [mu, mu - minus] for every generator mu of C."""
    out = []
    for g in C.generators:
        mu = ctx.monomial(g)
        out.append([str(mu), str(mu - minus)])
    return out


def _plan_deg1(C, field_):
    ring = _ring(C, field_)
    ideal = C.strings()
    ctx = PolynomialContext(C.n, QQ)
    cases = []
    for i in range(1, C.n + 1):
        cases.append(
            Case(
                f"deg1/x{i}",
                "variable-form",
                {"f": f"x{i}"},
                [_spec("cm", {"ideal": _var_ideal(C, i)})],
                "C+(x_i) must be Cohen-Macaulay when f = x_i",
            )
        )
    quads = squarefree_quadrics(C.n)
    mult_specs = [_spec("multipliers", {"ideal": ideal, "monomials": [_fmt_exps(z)]}) for z in quads]
    cap = max(len(_cheap(n, a, ring)) for n, a in mult_specs)
    cases.append(
        Case(
            "deg1/term-cap",
            "term-cap",
            {"cap": cap},
            mult_specs,
            "a support S needs a quadric z in B with x_j z in C for all j in S, so |S| <= cap",
        )
    )
    for r in range(2, cap + 1):
        for S in combinations(range(1, C.n + 1), r):
            f = ctx.zero()
            for j in S:
                f = f + ctx.var(j)
            spec = _spec("admissible-z", {"ideal": ideal, "support": list(S)})
            zs = _cheap(*spec, ring)
            checks = [spec]
            role = "linear-sum"
            if len(zs) == 1 and r == 2:
                z = ctx.parse(zs[0])
                ze = MonomialIdeal.parse(C.n, zs).generators[0]
                pair = [str(ctx.var(j) * z) for j in S]
                rest = MonomialIdeal(C.n, [g for g in C.generators if not all(a >= b for a, b in zip(g, ze))])
                choices = [pair] + _poly_strings(ctx, rest, f * z)
                checks.append(_spec("height-range", {"fixed": [], "choices": choices}))
            elif zs:
                role = "unsupported"
            cases.append(Case(f"deg1/f={f}", role, {"f": str(f), "support": list(S)}, checks))
    return ring, cases


def _plan_deg1_squarefree(C, field_):
    """Variable forms via the vertex construction; sums via missing-generator families.

    With f a sum of the variables in S and Z the quadrics of B, A:f = A forces
    f*span(Z) to meet A in degree 3 trivially, so A misses exactly |Z|
    generators of C, and Z consists of quadrics admissible for S.
    """
    ring = _ring(C, field_)
    ideal = C.strings()
    ctx = PolynomialContext(C.n, QQ)
    cases = []
    for k in range(1, C.n + 1):
        cases.append(
            Case(
                f"deg1/x{k}",
                "vertex-form",
                {"f": f"x{k}"},
                [_spec("vertex-bdl", {"ideal": ideal, "k": k})],
                "a squarefree BDL with f = x_k is the link/cone construction",
            )
        )
    sums = []
    biggest = 0
    for r in range(2, C.n + 1):
        for S in combinations(range(1, C.n + 1), r):
            spec = _spec("admissible-z", {"ideal": ideal, "support": list(S)})
            zs = _cheap(*spec, ring)
            biggest = max(biggest, len(zs))
            f = ctx.zero()
            for j in S:
                f = f + ctx.var(j)
            sums.append(
                Case(f"deg1/f={f}", "monic-sum", {"f": str(f), "support": list(S), "quadrics": zs}, [spec])
            )
    for k in range(1, biggest + 1):
        cases.append(_missing_case(C, k, f"B has {k} quadrics: A misses exactly {k} generators"))
    return ring, cases + sums


def _missing_case(C, k, note):
    ht = C.height()
    return Case(
        f"lemma/missing-{k}",
        "missing-family",
        {"k": k, "height": ht - 1},
        [_spec("sqfree-family", {"ideal": C.strings(), "k": k, "height": ht - 1})],
        note,
    )


def _symmetry_plan(C, use_symmetry):
    """Multiplier representatives and the transport case, if symmetry is used."""
    if not use_symmetry:
        return list(range(1, C.n + 1)), None
    reps = []
    maps = {}
    remaining = set(range(1, C.n + 1))
    while remaining:
        base = min(remaining)
        tmap = transport_map(C, base)
        reps.append(base)
        for v, p in tmap.items():
            if v != base:
                maps[v] = {"base": base, "perm": p}
        remaining -= set(tmap)
    checks = [
        _spec("automorphism", {"ideal": C.strings(), "perm": maps[v]["perm"]}) for v in sorted(maps)
    ]
    case = Case(
        "symmetry/transport",
        "transport",
        {"representatives": reps, "maps": {str(v): maps[v] for v in sorted(maps)}},
        checks,
        "each listed permutation fixes C and carries its base variable to the key",
    )
    return reps, case


def _plan_deg2(C, field_, use_symmetry):
    ring = _ring(C, field_)
    ideal = C.strings()
    n = C.n
    ctx = PolynomialContext(n, QQ)
    cases = []
    for y in all_quadrics(n):
        ys = _fmt_exps(y)
        spec = _spec("multipliers", {"ideal": ideal, "monomials": [ys]})
        W = _cheap(*spec, ring)
        checks = [spec]
        if W:
            checks.append(_spec("generator-witness", {"ideal": ideal, "y": ys, "W": W}))
        cases.append(
            Case(f"deg2/single/{ys}", "single-term", {"y": ys}, checks,
                 "a generator outside (y*w) meeting y forces A:f != A")
        )
    reps, sym_case = _symmetry_plan(C, use_symmetry)
    if sym_case is not None:
        cases.append(sym_case)
    mus = [ctx.monomial(g) for g in C.generators]
    for w in reps:
        Yw = [y for y in all_quadrics(n) if C.contains(_times_var(y, w))]
        for r in range(2, len(Yw) + 1):
            for ys in combinations(Yw, r):
                cases.append(_deg2_sum_case(C, ctx, mus, w, list(ys), ring))
    return ring, cases


def _deg2_sum_case(C, ctx, mus, w, ys, ring):
    ideal = C.strings()
    names = [_fmt_exps(y) for y in ys]
    f = ctx.zero()
    for y in ys:
        f = f + ctx.monomial(y)
    xw = ctx.var(w)
    data = {"w": f"x{w}", "terms": names, "size": len(ys)}
    checks = [_spec("multipliers", {"ideal": ideal, "monomials": names})]
    tri = _spec("triangular", {"monomials": names})
    if _cheap(*tri, ring) is not None:
        checks.append(tri)
        choices = [[str(m), str(m - f * xw)] for m in mus]
        checks.append(_spec("height-range", {"fixed": [], "choices": choices}))
        return Case(f"deg2/w=x{w}/f={f}", "normalized-sum", data, checks)
    try:
        t = free_term(ys)
    except ValueError:
        return Case(f"deg2/w=x{w}/f={f}", "unsupported", data, checks + [tri])
    rest = [nm for k, nm in enumerate(names) if k != t]
    checks.append(_spec("triangular", {"monomials": rest}))
    data["free_term"] = names[t]
    gctx = PolynomialContext(ctx.n, field_from_name("GF2"))
    gw = gctx.var(w)
    gmus = [gctx.monomial(g) for g in C.generators]
    variants = []
    for r, s in PARITY_CLASSES:
        sf = ctx.zero()
        for k, y in enumerate(ys):
            sf = sf + ctx.monomial(y, r if k == t else s)
        gbar = gf2_specialize([sf]).generators[0]
        variants.append({"r": r, "s": s, "g": str(gbar)})
        choices = [[str(m), str(m - gbar * gw)] for m in gmus]
        checks.append(_spec("height-range", {"fixed": [], "choices": choices, "field": "GF2"}))
    data["gf2_variants"] = variants
    return Case(f"deg2/w=x{w}/f={f}", "gf2-family", data, checks)


def _plan_deg2_squarefree(C, field_):
    ring = _ring(C, field_)
    ideal = C.strings()
    n = C.n
    cases = [
        _missing_case(C, 1, "A misses exactly one generator"),
        _missing_case(C, 2, "A misses exactly two generators"),
        Case(
            "deg2/three-or-more-terms",
            "profile",
            {"k": 3},
            [_spec("multiplier-profile", {"ideal": ideal, "k": 3})],
            "at most one variable of B when f has three terms; more terms only shrink the set",
        ),
    ]
    quads = all_quadrics(n)
    for z in quads:
        zs = _fmt_exps(z)
        spec = _spec("multipliers", {"ideal": ideal, "monomials": [zs]})
        M = _cheap(*spec, ring)
        checks = [spec]
        for r in (2, 3):
            for U in combinations(M, r):
                checks.append(_spec("conflicting-generators", {"ideal": ideal, "f": zs, "U": list(U)}))
        cases.append(Case(f"deg2/one-term/{zs}", "one-term", {"f": zs, "multipliers": M}, checks))
    for z1, z2 in combinations(quads, 2):
        names = [_fmt_exps(z1), _fmt_exps(z2)]
        spec = _spec("multipliers", {"ideal": ideal, "monomials": names})
        M = _cheap(*spec, ring)
        checks = [spec]
        data = {"f": "+".join(names), "multipliers": M}
        if len(M) >= 3:
            checks.append(_spec("shared-variable", {"monomials": names}))
        data["two-variable"] = [_two_variable_split(C, z1, z2, U) for U in combinations(M, 2)]
        cases.append(Case(f"deg2/two-terms/{'+'.join(names)}", "two-terms", data, checks))
    return ring, cases


def _two_variable_split(C, z1, z2, U):
    """Missing generator sets for B with exactly the variables U (sizes or clash)."""
    u1, u2 = U
    rows = [(_times_var(z1, u1), _times_var(z2, u1)), (_times_var(z1, u2), _times_var(z2, u2))]
    out = []
    for a in (0, 1):
        for b in (0, 1):
            chosen = {rows[0][a], rows[1][b]}
            unchosen = {rows[0][1 - a], rows[1][1 - b]}
            if chosen & unchosen:
                out.append("clash")
            else:
                out.append(len(unchosen))
    return {"U": list(U), "missing": out}


# closing rules ------------------------------------------------------------------


def _expects(case):
    return [c.get("expect") for c in case.checks]


def _close(case, ht):
    """None if the recorded values close the case, else the reason it stays open."""
    role = case.role
    ex = _expects(case)
    if role in ("variable-form", "vertex-form"):
        return None if ex == [False] else "the variable case is not excluded"
    if role == "term-cap":
        cap = case.data["cap"]
        return None if max(len(v) for v in ex) == cap else "recorded cap disagrees"
    if role == "linear-sum":
        if not ex[0]:
            return None
        lo = ex[1][0]
        return None if lo >= ht else f"a forced ideal has height {lo}"
    if role == "missing-family":
        return None if ex[0]["cm"] == 0 else f"{ex[0]['cm']} Cohen-Macaulay ideals of the right height"
    if role == "monic-sum":
        return None
    if role == "profile":
        return None if ex[0]["max"] <= 1 else "several variables possible in B"
    if role == "single-term":
        if not ex[0]:
            return None
        return None if ex[1] else "no conflicting generator"
    if role == "transport":
        return None if all(ex) else "a listed permutation is not an automorphism"
    if role == "normalized-sum":
        if len(ex[0]) != 1:
            return "the multiplier w is not unique"
        return None if ex[1] is not None and ex[2][0] >= ht else "height bound fails"
    if role == "gf2-family":
        if len(ex[0]) != 1:
            return "the multiplier w is not unique"
        if ex[1] is None:
            return "the remaining terms cannot be normalized"
        lows = [v[0] for v in ex[2:]]
        return None if all(lo >= ht for lo in lows) else "a GF(2) branch has low height"
    if role == "one-term":
        return None if all(ex[1:]) else "a two- or three-variable B has no conflict"
    if role == "two-terms":
        if len(case.data["multipliers"]) >= 3 and not ex[1]:
            return "three variables in B without a shared variable"
        return None
    return f"no closing rule for role {role!r}"


def _lemma_dependencies(cases):
    # cases that reduce to the missing-generator lemmas
    need = set()
    for c in cases:
        if c.role == "monic-sum":
            need.update(range(1, len(c.data["quadrics"]) + 1))
        if c.role == "profile":
            need.add(1)
        if c.role == "one-term" and c.data["multipliers"]:
            need.add(1)
        if c.role == "two-terms":
            for split in c.data["two-variable"]:
                need.update(m for m in split["missing"] if m != "clash")
            if c.data["multipliers"]:
                need.add(1)
    return need


# evaluation ---------------------------------------------------------------


def _finish(kind, claim, mode, C, ring, cases, jobs, symmetry=None):
    specs = [(c["check"] if isinstance(c, dict) else c[0], c["args"] if isinstance(c, dict) else c[1])
             for case in cases for c in case.checks]
    records = evaluate_checks(specs, ring, jobs)
    k = 0
    for case in cases:
        filled = []
        for _ in case.checks:
            filled.append(records[k])
            k += 1
        case.checks = filled
    ht = C.height()
    unresolved = [c.id for c in cases if _close(c, ht) is not None]
    cert = RefutationCertificate(
        kind=kind,
        claim=claim,
        ring=ring,
        ideal=C.strings(),
        cases=cases,
        symmetry=symmetry,
        mode=mode,
        refuted=not unresolved,
        unresolved=unresolved,
    )
    return cert


CLAIMS = {
    ("deg1", GENERAL): "no BDL C = fB + A with B squarefree monomial and deg(f) = 1",
    ("deg1", SQUAREFREE): "no BDL C = fB + A with A, B squarefree monomial and f a degree-1 sum of monic monomials",
    ("deg2", GENERAL): "no BDL C = fB + A with B squarefree monomial and deg(f) = 2",
    ("deg2", SQUAREFREE): "no BDL C = fB + A with A, B squarefree monomial and f a degree-2 sum of monic monomials",
}


def _plan(kind, C, field_, mode, symmetry):
    if kind == "deg1":
        return _plan_deg1(C, field_) if mode == GENERAL else _plan_deg1_squarefree(C, field_)
    if kind == "deg2":
        return _plan_deg2(C, field_, symmetry) if mode == GENERAL else _plan_deg2_squarefree(C, field_)
    raise ValueError(f"unknown certificate kind {kind!r}")


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {', '.join(MODES)}")


def refute_deg1(C, field=None, mode=GENERAL, jobs=1):
    """Rule out degree-1 forms f in C = fB + A by the exhaustive case split."""
    _check_mode(mode)
    C = _check_cubic(C)
    fld = resolve_field(field)
    ring, cases = _plan("deg1", C, fld, mode, False)
    cert = _finish("deg1", CLAIMS[("deg1", mode)], mode, C, ring, cases, jobs)
    return RefutationResult(cert, _deg1_counts(cert), _candidates(cert))


def refute_deg2(C, field=None, mode=GENERAL, symmetry=True, jobs=1):
    """Rule out degree-2 forms f in C = fB + A by the exhaustive case split.

    ``symmetry`` quotients the multiplier variable w by the automorphisms of C
    (general-A mode only); the transport permutations are recorded.
    """
    _check_mode(mode)
    C = _check_cubic(C)
    fld = resolve_field(field)
    use = bool(symmetry) and mode == GENERAL
    ring, cases = _plan("deg2", C, fld, mode, use)
    sym = {"used": use}
    if mode == SQUAREFREE:
        sym = None
    cert = _finish("deg2", CLAIMS[("deg2", mode)], mode, C, ring, cases, jobs, sym)
    return RefutationResult(cert, _deg2_counts(cert), _candidates(cert))


def _candidates(cert):
    by_id = {c.id: c for c in cert.cases}
    return [by_id[i].data | {"id": i} for i in cert.unresolved]


# summaries -------------------------------------------------------------


def _deg1_counts(cert):
    out = {}
    if cert.mode == GENERAL:
        var = [c for c in cert.cases if c.role == "variable-form"]
        out["variable forms excluded"] = sum(1 for c in var if c.checks[0]["expect"] is False)
        cap = next(c for c in cert.cases if c.role == "term-cap")
        out["max multipliers of a quadric"] = cap.data["cap"]
        sums = [c for c in cert.cases if c.role in ("linear-sum", "unsupported")]
        out["supports"] = len(sums)
        zc = Counter(len(c.checks[0]["expect"]) for c in sums)
        out["admissible quadrics per support"] = dict(sorted(zc.items()))
        ranges = [c.checks[1]["expect"] for c in sums if len(c.checks) > 1]
        if ranges:
            out["forced ideal heights"] = [min(r[0] for r in ranges), max(r[1] for r in ranges)]
    else:
        var = [c for c in cert.cases if c.role == "vertex-form"]
        out["vertex constructions refused"] = sum(1 for c in var if c.checks[0]["expect"] is False)
        for c in cert.cases:
            if c.role == "missing-family":
                out[f"all-but-{c.data['k']} family"] = c.checks[0]["expect"]
        sums = [c for c in cert.cases if c.role == "monic-sum"]
        out["sums with an admissible quadric"] = sum(1 for c in sums if c.data["quadrics"])
        out["max admissible quadrics"] = max((len(c.data["quadrics"]) for c in sums), default=0)
    out["open cases"] = len(cert.unresolved)
    return out


def _deg2_counts(cert):
    out = {}
    if cert.mode == GENERAL:
        singles = [c for c in cert.cases if c.role == "single-term"]
        out["allowable w per single term"] = dict(
            sorted(Counter(len(c.checks[0]["expect"]) for c in singles).items())
        )
        sums = [c for c in cert.cases if c.role in ("normalized-sum", "gf2-family", "unsupported")]
        per_w = {}
        for c in sums:
            per_w.setdefault(c.data["w"], Counter())[c.data["size"]] += 1
        out["sums per w by term count"] = {w: dict(sorted(v.items())) for w, v in per_w.items()}
        norm = [c.checks[2]["expect"] for c in sums if c.role == "normalized-sum"]
        if norm:
            out["normalized min height"] = min(r[0] for r in norm)
        gf = {}
        for c in sums:
            if c.role == "gf2-family":
                for v, chk in zip(c.data["gf2_variants"], c.checks[2:]):
                    gf[f"{c.data['w']}: g = {v['g']}"] = chk["expect"][0]
        out["GF(2) min heights"] = gf
    else:
        for c in cert.cases:
            if c.role == "missing-family":
                out[f"all-but-{c.data['k']} family"] = c.checks[0]["expect"]
            if c.role == "profile":
                out["three-term profile"] = c.checks[0]["expect"]
        ones = [c for c in cert.cases if c.role == "one-term"]
        out["one-term forms with multipliers"] = sum(1 for c in ones if c.data["multipliers"])
        twos = [c for c in cert.cases if c.role == "two-terms"]
        out["two-term forms with multipliers"] = sum(1 for c in twos if c.data["multipliers"])
    out["open cases"] = len(cert.unresolved)
    return out


# coverage ----------------------------------------------------------------


def _skeleton(cases):
    out = []
    for c in cases:
        checks = [(k["check"], k["args"]) if isinstance(k, dict) else (k[0], k[1]) for k in c.checks]
        out.append((c.id, c.role, cert_mod._normalize(c.data), cert_mod._normalize(checks)))
    return out


def coverage_problems(cert):
    """Re-plan the case split and compare with the certificate; list discrepancies."""
    try:
        return _coverage_problems(cert)
    except (KeyError, TypeError, IndexError, ValueError, AttributeError) as exc:
        # closing rules read the recorded values; a malformed record lands here
        return [f"certificate cannot be checked: {type(exc).__name__}: {exc}"]


def _coverage_problems(cert):
    problems = []
    if cert.kind == "edge":
        from .edge_search import edge_coverage_problems

        return edge_coverage_problems(cert)
    if cert.kind not in ("deg1", "deg2"):
        return [f"unknown certificate kind {cert.kind!r}"]
    if cert.mode not in MODES:
        return [f"unknown mode {cert.mode!r}"]
    C = MonomialIdeal.parse(cert.ring["n"], cert.ideal)
    try:
        C = _check_cubic(C)
    except ValueError as exc:
        return [str(exc)]
    fld = field_from_name(cert.ring["field"])
    use = bool(cert.symmetry and cert.symmetry.get("used"))
    _, planned = _plan(cert.kind, C, fld, cert.mode, use)
    want = _skeleton(planned)
    have = _skeleton(cert.cases)
    if len(want) != len(have):
        problems.append(f"case count {len(have)} differs from the planned {len(want)}")
    for a, b in zip(want, have):
        if a != b:
            problems.append(f"case {b[0]} does not match the planned case {a[0]}")
    if cert.claim != CLAIMS[(cert.kind, cert.mode)]:
        problems.append("claim text does not match the case split")
    ht = C.height()
    open_ids = [c.id for c in cert.cases if _close(c, ht) is not None]
    if open_ids != list(cert.unresolved):
        problems.append("recorded open cases disagree with the closing rules")
    if cert.refuted != (not open_ids):
        problems.append("refuted flag disagrees with the closing rules")
    if cert.mode == SQUAREFREE:
        lemmas = {c.data["k"]: c for c in cert.cases if c.role == "missing-family"}
        for k in sorted(_lemma_dependencies(cert.cases)):
            if k not in lemmas:
                problems.append(f"cases rely on the missing-{k} family, which is absent")
    if cert.kind == "deg2" and cert.mode == GENERAL and use:
        sym = next((c for c in cert.cases if c.role == "transport"), None)
        if sym is None:
            problems.append("symmetry is used but no transport case is recorded")
        else:
            reps = sym.data["representatives"]
            covered = set(reps) | {int(v) for v in sym.data["maps"]}
            if covered != set(range(1, C.n + 1)):
                problems.append("transport maps do not cover every variable")
            for v, m in sym.data["maps"].items():
                if m["perm"][m["base"] - 1] != int(v):
                    problems.append(f"transport map for x{v} does not send x{m['base']} there")
    return problems
