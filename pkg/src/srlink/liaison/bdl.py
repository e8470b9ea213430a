"""Basic double G-link witnesses and their verification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..algebra.fields import QQ
from ..algebra.ideal import ContextMismatch, Ideal, ideal_equal, is_nzd
from ..algebra.monomial_ideal import MonomialIdeal
from ..algebra.polynomial import PolynomialContext
from ..homology import cm_failure, is_cm_quotient, resolve_field, strip_variables
from ..simplicial import stanley_reisner

PASS, FAIL, NOT_CHECKED = "pass", "fail", "not-checked"

CONDITIONS = (
    "1 <= deg(f) < d",
    "A in B",
    "ht(A)+1 = ht(B)",
    "ht(C) = ht(B)",
    "A unmixed",
    "B unmixed",
    "A Cohen-Macaulay",
    "A generically Gorenstein",
    "A:f = A",
    "C = fB + A",
)


@dataclass(frozen=True)
class CheckResult:
    status: str
    detail: str = ""

    def __str__(self):
        return self.status if not self.detail else f"{self.status} ({self.detail})"


@dataclass
class BDLWitness:
    """A claimed basic double G-link C = f*B + A."""

    C: Ideal
    f: object
    B: Ideal
    A: Ideal

    def __post_init__(self):
        ctx = self.C.ctx
        for name in ("B", "A"):
            if getattr(self, name).ctx != ctx:
                raise ContextMismatch(f"{name} lives in a different ring")
        if isinstance(self.f, str):
            self.f = ctx.parse(self.f)
        if self.f.ctx != ctx:
            raise ContextMismatch("f lives in a different ring")

    @property
    def ctx(self):
        return self.C.ctx

    @property
    def degree(self):
        return self.f.degree

    @property
    def fully_checkable(self):
        return self.A.is_monomial() and self.B.is_monomial()

    @classmethod
    def parse(cls, n, C, f, B, A, field=QQ):
        ctx = PolynomialContext(n, resolve_field(field))
        return cls(Ideal(ctx, C), ctx.parse(f), Ideal(ctx, B), Ideal(ctx, A))

    @classmethod
    def from_monomial(cls, C, f, B, A):
        ctx = PolynomialContext(C.n, QQ)
        if isinstance(f, str):
            f = ctx.parse(f)
        return cls(C.to_ideal(ctx), f, B.to_ideal(ctx), A.to_ideal(ctx))

    def to_dict(self):
        return {
            "n": self.ctx.n,
            "field": self.ctx.field.name,
            "C": [str(g) for g in self.C.generators],
            "f": str(self.f),
            "B": [str(g) for g in self.B.generators],
            "A": [str(g) for g in self.A.generators],
        }

    @classmethod
    def from_dict(cls, d):
        try:
            return cls.parse(int(d["n"]), d["C"], d["f"], d["B"], d["A"], d.get("field", "Q"))
        except KeyError as exc:
            raise ValueError(f"witness is missing the field {exc}") from exc

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


@dataclass
class BDLVerdict:
    results: dict
    c_unmixed: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def overall(self):
        statuses = [r.status for r in self.results.values()]
        if FAIL in statuses:
            return "refuted"
        if NOT_CHECKED in statuses:
            return "incomplete"
        return "valid"

    @property
    def valid(self):
        return self.overall == "valid"

    def failed(self):
        return [k for k, r in self.results.items() if r.status == FAIL]

    def lines(self):
        out = [f"{name}: {res}" for name, res in self.results.items()]
        c = "unknown" if self.c_unmixed is None else str(self.c_unmixed).lower()
        out.append(f"C unmixed (informational): {c}")
        out.extend(self.notes)
        out.append(f"verdict: {self.overall}")
        return out

    def to_dict(self):
        return {
            "verdict": self.overall,
            "conditions": {k: {"status": r.status, "detail": r.detail} for k, r in self.results.items()},
            "C_unmixed": self.c_unmixed,
        }

    def __str__(self):
        return "\n".join(self.lines())


def degree_window(C):
    """Maximal generator degree d; any BDL of C has 1 <= deg(f) < d."""
    if isinstance(C, MonomialIdeal):
        return max(C.degrees(), default=0)
    for g in C.generators:
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
    return max((g.degree for g in C.generators), default=0)


def _squarefree_monomial(I):
    if not I.is_monomial():
        return None
    M = I.to_monomial_ideal()
    return M if M.is_squarefree() else None


def _height(I):
    if I.is_unit():
        return None
    return I.height()


def _unmixed(I):
    """(status, detail) for unmixedness; decided for squarefree monomial ideals."""
    if I.is_unit():
        return CheckResult(FAIL, "unit ideal")
    M = _squarefree_monomial(I)
    if M is None:
        return CheckResult(NOT_CHECKED, "not a squarefree monomial ideal")
    _, cx = strip_variables(M)
    if cx.is_pure:
        return CheckResult(PASS)
    return CheckResult(FAIL, "Stanley-Reisner complex is not pure")


def verify_bdl(w, field=None):
    """Evaluate every condition of a basic double G-link that can be decided."""
    fld = resolve_field(field) if field is not None else w.ctx.field
    f = w.f
    if not f:
        raise ValueError("f must be nonzero")
    r = {}
    C, B, A = w.C, w.B, w.A

    if not f.is_homogeneous() or f.is_constant():
        r["1 <= deg(f) < d"] = CheckResult(FAIL, "f must be homogeneous of positive degree")
    else:
        try:
            d = degree_window(C)
        except ValueError as exc:
            r["1 <= deg(f) < d"] = CheckResult(NOT_CHECKED, str(exc))
        else:
            ok = 1 <= f.degree < d
            r["1 <= deg(f) < d"] = CheckResult(PASS if ok else FAIL, f"deg(f)={f.degree}, d={d}")

    r["A in B"] = CheckResult(PASS if B.contains_ideal(A) else FAIL)

    hA, hB, hC = _height(A), _height(B), _height(C)
    if hA is None or hB is None:
        r["ht(A)+1 = ht(B)"] = CheckResult(FAIL, "unit ideal")
    else:
        r["ht(A)+1 = ht(B)"] = CheckResult(PASS if hA + 1 == hB else FAIL, f"ht(A)={hA}, ht(B)={hB}")
    if hC is None or hB is None:
        r["ht(C) = ht(B)"] = CheckResult(FAIL, "unit ideal")
    else:
        r["ht(C) = ht(B)"] = CheckResult(PASS if hC == hB else FAIL, f"ht(C)={hC}, ht(B)={hB}")

    r["A unmixed"] = _unmixed(A)
    r["B unmixed"] = _unmixed(B)

    MA = None if A.is_unit() else _squarefree_monomial(A)
    if A.is_unit():
        r["A Cohen-Macaulay"] = CheckResult(FAIL, "unit ideal")
        r["A generically Gorenstein"] = CheckResult(FAIL, "unit ideal")
    elif MA is None:
        r["A Cohen-Macaulay"] = CheckResult(NOT_CHECKED, "not a squarefree monomial ideal")
        r["A generically Gorenstein"] = CheckResult(NOT_CHECKED, "not a squarefree monomial ideal")
    else:
        _, cx = strip_variables(MA)
        why = cm_failure(cx, fld)
        r["A Cohen-Macaulay"] = CheckResult(PASS, f"over {fld.name}") if why is None else CheckResult(FAIL, why)
        r["A generically Gorenstein"] = CheckResult(PASS, "radical")

    if A.is_unit():
        r["A:f = A"] = CheckResult(FAIL, "unit ideal")
    else:
        r["A:f = A"] = CheckResult(PASS if is_nzd(f, A) else FAIL)

    rhs = A + B.scaled(f)
    r["C = fB + A"] = CheckResult(PASS if ideal_equal(C, rhs) else FAIL)

    c_unmixed = None
    if not C.is_unit():
        u = _unmixed(C)
        c_unmixed = None if u.status == NOT_CHECKED else u.status == PASS
    return BDLVerdict(r, c_unmixed)


@dataclass
class VertexBDL:
    k: int
    C: MonomialIdeal
    B: MonomialIdeal
    A: MonomialIdeal
    verdict: BDLVerdict
    accepted: bool
    reason: str

    @property
    def witness(self):
        ctx = PolynomialContext(self.C.n, QQ)
        return BDLWitness.from_monomial(self.C, ctx.var(self.k), self.B, self.A)


def vertex_bdl(cx, k, field=None):
    """I_Delta = x_k * I_lk(k) + I_cone(del(k)); accepted iff the deletion is CM of full dimension."""
    fld = resolve_field(field)
    if not 1 <= k <= cx.n or not cx.vertex_mask >> (k - 1) & 1:
        raise ValueError(f"{k} is not a vertex of the complex")
    C = stanley_reisner(cx)
    lk, dl = cx.link(k), cx.deletion(k)
    B = stanley_reisner(lk)
    A = stanley_reisner(dl.cone(k))
    ctx = PolynomialContext(cx.n, QQ)
    verdict = verify_bdl(BDLWitness.from_monomial(C, ctx.var(k), B, A), fld)
    if not cx.is_pure:
        return VertexBDL(k, C, B, A, verdict, False, "complex is not pure")
    why = cm_failure(dl, fld)
    if why is not None:
        return VertexBDL(k, C, B, A, verdict, False, f"deletion not Cohen-Macaulay: {why}")
    if dl.dim != cx.dim:
        return VertexBDL(k, C, B, A, verdict, False, "deletion has smaller dimension")
    if not verdict.valid:
        return VertexBDL(k, C, B, A, verdict, False, "verification failed: " + ", ".join(verdict.failed()))
    return VertexBDL(k, C, B, A, verdict, True, "valid")


def fisxi_necessary(C, i, field=None):
    """CM verdict of S/(C + (x_i)); False rules out every BDL C = x_i*B + A."""
    if isinstance(C, Ideal):
        C = C.to_monomial_ideal()
    if not C.is_squarefree():
        raise ValueError("C must be a squarefree monomial ideal")
    return is_cm_quotient(C.add_variables([i]), resolve_field(field))


