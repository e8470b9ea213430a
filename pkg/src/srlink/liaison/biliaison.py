"""Elementary G-biliaison realized by a multiplier pair (a, x).

J/N is isomorphic to (I/N)(-l) by multiplication by x/a when a in J is a
non-zerodivisor on S/N and xJ + N = aI + N.  The ideal L = aI + N is then a
basic double G-link of both I and J on N, and when x = r*a it also gives
I = rJ + N directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..algebra.ideal import ContextMismatch, Ideal, ideal_equal, is_nzd
from ..algebra.polynomial import PolynomialContext
from ..homology import resolve_field
from .bdl import BDLWitness, verify_bdl


@dataclass
class BiliaisonWitness:
    I: Ideal
    J: Ideal
    N: Ideal
    a: object
    x: object

    def __post_init__(self):
        ctx = self.I.ctx
        for name in ("J", "N"):
            if getattr(self, name).ctx != ctx:
                raise ContextMismatch(f"{name} lives in a different ring")
        for name in ("a", "x"):
            p = getattr(self, name)
            if isinstance(p, str):
                p = ctx.parse(p)
                setattr(self, name, p)
            if p.ctx != ctx:
                raise ContextMismatch(f"{name} lives in a different ring")

    @property
    def ctx(self):
        return self.I.ctx

    @property
    def shift(self):
        """The height shift l = deg(x) - deg(a)."""
        return self.x.degree - self.a.degree

    @classmethod
    def parse(cls, n, I, J, N, a, x, field=None):
        ctx = PolynomialContext(n, resolve_field(field))
        return cls(Ideal(ctx, I), Ideal(ctx, J), Ideal(ctx, N), ctx.parse(a), ctx.parse(x))

    @classmethod
    def from_dict(cls, d):
        try:
            return cls.parse(int(d["n"]), d["I"], d["J"], d["N"], d["a"], d["x"], d.get("field", "Q"))
        except KeyError as exc:
            raise ValueError(f"biliaison witness is missing the field {exc}") from exc

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


@dataclass
class BiliaisonVerdict:
    preconditions: dict
    equality: bool | None
    L: Ideal | None
    L_monomial: bool | None
    shift: int
    direct: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def valid(self):
        return all(self.preconditions.values()) and bool(self.equality)

    def lines(self):
        out = [f"{k}: {'pass' if v else 'fail'}" for k, v in self.preconditions.items()]
        if self.equality is None:
            out.append("xJ + N = aI + N: not checked (preconditions failed)")
        else:
            out.append(f"xJ + N = aI + N: {'pass' if self.equality else 'fail'}")
        out.append(f"height shift l = {self.shift}")
        if self.L is not None:
            out.append(f"L = aI + N = {self.L}")
            out.append(f"L monomial: {str(self.L_monomial).lower()}")
        if self.direct is not None:
            out.append(f"x = r*a with r = {self.direct['r']}")
            out.append(f"I = rJ + N: {'pass' if self.direct['equal'] else 'fail'}")
        out.extend(self.notes)
        out.append(f"verdict: {'valid' if self.valid else 'refuted'}")
        return out

    def to_dict(self):
        return {
            "valid": self.valid,
            "preconditions": self.preconditions,
            "equality": self.equality,
            "L": None if self.L is None else [str(g) for g in self.L.generators],
            "L_monomial": self.L_monomial,
            "shift": self.shift,
            "direct": self.direct,
        }

    def __str__(self):
        return "\n".join(self.lines())


def _quotient(x, a):
    try:
        return x.exact_divide(a)
    except ArithmeticError:
        return None


def _height_or_none(I):
    return None if I.is_unit() else I.height()


def verify_biliaison(w, field=None):
    """Check the preconditions and the equality xJ + N = aI + N; build L."""
    if field is not None and resolve_field(field) is not w.ctx.field:
        raise ValueError("the witness lives over a different field")
    I, J, N, a, x = w.I, w.J, w.N, w.a, w.x
    pre = {}
    pre["a in J"] = J.contains(a)
    pre["x in I"] = I.contains(x)
    pre["a nonzerodivisor on S/N"] = (not N.is_unit()) and is_nzd(a, N)
    hI, hJ, hN = _height_or_none(I), _height_or_none(J), _height_or_none(N)
    pre["ht(I) = ht(J) = ht(N)+1"] = None not in (hI, hJ, hN) and hI == hJ == hN + 1
    notes = [f"heights: ht(I)={hI}, ht(J)={hJ}, ht(N)={hN}"]
    if not all(pre.values()):
        return BiliaisonVerdict(pre, None, None, None, w.shift, notes=notes)
    L = I.scaled(a) + N
    equal = ideal_equal(J.scaled(x) + N, L)
    direct = None
    r = _quotient(x, a)
    if r is not None:
        lhs = J.scaled(r) + N
        direct = {"r": str(r), "equal": ideal_equal(I, lhs)}
    return BiliaisonVerdict(pre, equal, L, L.is_monomial(), w.shift, direct, notes)


def linked_witnesses(w):
    """The two basic double G-links through L = aI + N = xJ + N (and I = rJ + N)."""
    L = w.I.scaled(w.a) + w.N
    out = {
        "L from I": BDLWitness(L, w.a, w.I, w.N),
        "L from J": BDLWitness(L, w.x, w.J, w.N),
    }
    r = _quotient(w.x, w.a)
    if r is not None:
        out["I from J"] = BDLWitness(w.I, r, w.J, w.N)
    return out


def check_linked(w, field=None):
    return {k: verify_bdl(v, field) for k, v in linked_witnesses(w).items()}
