"""Sparse multivariate polynomials with exact coefficients.

Monomials are packed into a single Python int, eight bits per variable with
the top bit of each field reserved as a guard.  Variable ``x_i`` (1-based)
lives in field ``i - 1``.  With this layout monomial multiplication is integer
addition and divisibility is one subtraction and a mask test, which keeps the
Groebner engine tolerable in pure Python.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .fields import GF2, QQ, field_from_name

FIELD_BITS = 8
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


class ContextMismatch(ValueError):
    pass


def _guard(n):
    g = 0
    for i in range(n):
        g |= 0x80 << (FIELD_BITS * i)
    return g


def pack(exponents):
    m = 0
    for i, e in enumerate(exponents):
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range")
        m |= e << (FIELD_BITS * i)
    return m


def unpack(m, n):
    return tuple((m >> (FIELD_BITS * i)) & 0xFF for i in range(n))


def mono_degree(m):
    # fields are base-256 digits and 256 = 1 mod 255
    return m % 255


def mono_support(m, n):
    """Bitmask of the variables occurring in ``m`` (bit i-1 for x_i)."""
    mask = 0
    i = 0
    while m:
        if m & 0xFF:
            mask |= 1 << i
        m >>= FIELD_BITS
        i += 1
    return mask


def squarefree_mask_to_mono(mask):
    m = 0
    i = 0
    while mask:
        if mask & 1:
            m |= 1 << (FIELD_BITS * i)
        mask >>= 1
        i += 1
    return m


@dataclass(frozen=True)
class PolynomialContext:
    """The ring k[x1..xn] with degree-reverse-lexicographic order x1 > ... > xn."""

    n: int
    field: object = QQ
    order: str = "degrevlex"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        if isinstance(self.field, str):
            object.__setattr__(self, "field", field_from_name(self.field))
        if self.order != "degrevlex":
            raise ValueError("only degrevlex is supported")

    @cached_property
    def guard(self):
        return _guard(self.n)

    @cached_property
    def _shift(self):
        return 1 << (FIELD_BITS * self.n)

    def key(self, m):
        """Sort key: larger key means larger monomial in degrevlex."""
        return mono_degree(m) * self._shift - m

    def divides(self, a, b):
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a, b):
        g = self.guard
        sel = ((((a | g) - b) & g) >> (FIELD_BITS - 1)) * 0xFF
        return (a & sel) | (b & ~sel)

    def check_product(self, m):
        if m & self.guard:
            raise OverflowError("exponent overflow")
        return m

    # constructors -----------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        return Polynomial(self, {0: c} if c else {})

    def var(self, i):
        if not 1 <= i <= self.n:
            raise IndexError(f"x{i} is not a variable of a ring in {self.n} variables")
        return Polynomial(self, {1 << (FIELD_BITS * (i - 1)): self.field.coerce(1)})

    def gens(self):
        return [self.var(i) for i in range(1, self.n + 1)]

    def monomial(self, exponents, coeff=1):
        exponents = tuple(exponents)
        if len(exponents) != self.n:
            raise ValueError("exponent vector has the wrong length")
        c = self.field.coerce(coeff)
        return Polynomial(self, {pack(exponents): c} if c else {})

    def from_terms(self, terms):
        """Build from ``{exponent_tuple: coefficient}``."""
        out = {}
        for exps, c in terms.items():
            if len(exps) != self.n:
                raise ValueError("exponent vector has the wrong length")
            m = pack(exps)
            c = self.field.coerce(c) + out.get(m, 0)
            if self.field is GF2:
                c %= 2
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return Polynomial(self, out)

    def squarefree_monomial(self, vertices):
        """x_F for a collection of 1-based indices."""
        exps = [0] * self.n
        for v in vertices:
            if not 1 <= v <= self.n:
                raise IndexError(f"x{v} is not a variable")
            exps[v - 1] = 1
        return self.monomial(exps)

    def parse(self, text):
        return parse_polynomial(text, self)

    def with_field(self, field):
        return PolynomialContext(self.n, field, self.order)

    def extended(self, extra=1):
        return PolynomialContext(self.n + extra, self.field, self.order)

    def __repr__(self):
        return f"PolynomialContext(n={self.n}, field={self.field!r})"


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self):
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        return format_monomial(pack(self.exponents), len(self.exponents)) or "1"


def format_monomial(m, n):
    parts = []
    for i, e in enumerate(unpack(m, n), start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


class Polynomial:
    """An immutable polynomial; ``terms`` maps packed monomials to nonzero scalars."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self._terms = terms
        self._hash = None

    # inspection ---------------------------------------------------------

    @property
    def packed_terms(self):
        return self._terms

    def terms(self):
        n = self.ctx.n
        return {unpack(m, n): c for m, c in self._terms.items()}

    def monomials(self):
        n = self.ctx.n
        return [Monomial(unpack(m, n)) for m in self.sorted_packed()]

    def sorted_packed(self):
        return sorted(self._terms, key=self.ctx.key, reverse=True)

    def coefficient(self, exponents):
        return self._terms.get(pack(exponents), 0)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(m == 0 for m in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    @property
    def degree(self):
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self._terms}
        return len(degs) <= 1

    def leading_packed(self):
        return max(self._terms, key=self.ctx.key)

    def leading_monomial(self):
        return Monomial(unpack(self.leading_packed(), self.ctx.n))

    def leading_coefficient(self):
        return self._terms[self.leading_packed()]

    def support_mask(self):
        mask = 0
        for m in self._terms:
            mask |= mono_support(m, self.ctx.n)
        return mask

    def has_integer_coefficients(self):
        return all(self.ctx.field.is_integral(c) for c in self._terms.values())

    # arithmetic -------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatch("polynomials live in different rings")
            return other
        return self.ctx.constant(other)

    def _combine(self, other, sign):
        other = self._check(other)
        out = dict(self._terms)
        gf2 = self.ctx.field is GF2
        for m, c in other._terms.items():
            v = out.get(m, 0) + (c if sign > 0 else -c)
            if gf2:
                v %= 2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ctx, out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        if self.ctx.field is GF2:
            return self
        return Polynomial(self.ctx, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ctx.field.coerce(other)
            if not c:
                return self.ctx.zero()
            if self.ctx.field is GF2:
                return self
            return Polynomial(self.ctx, {m: v * c for m, v in self._terms.items()})
        other = self._check(other)
        out = {}
        gf2 = self.ctx.field is GF2
        check = self.ctx.check_product
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = check(m1 + m2)
                v = out.get(m, 0) + c1 * c2
                if gf2:
                    v %= 2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self):
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return Polynomial(self.ctx, {m: c / lc for m, c in self._terms.items()})

    def exact_divide(self, divisor):
        """Return q with self == q * divisor, or raise ArithmeticError."""
        divisor = self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        ctx = self.ctx
        lm_d = divisor.leading_packed()
        lc_d = divisor._terms[lm_d]
        rest = dict(self._terms)
        quot = {}
        gf2 = ctx.field is GF2
        while rest:
            m = max(rest, key=ctx.key)
            if not ctx.divides(lm_d, m):
                raise ArithmeticError("not divisible")
            u = m - lm_d
            c = rest[m] if gf2 else rest[m] / lc_d
            quot[u] = c
            for md, cd in divisor._terms.items():
                k = u + md
                v = rest.get(k, 0) - c * cd
                if gf2:
                    v %= 2
                if v:
                    rest[k] = v
                else:
                    rest.pop(k, None)
        return Polynomial(ctx, quot)

    def rescale_variables(self, scales):
        """Substitute x_i -> scales[i] * x_i for the given 1-based indices."""
        out = {}
        n = self.ctx.n
        for m, c in self._terms.items():
            exps = unpack(m, n)
            for i, s in scales.items():
                if exps[i - 1]:
                    c = c * self.ctx.field.coerce(s) ** exps[i - 1]
            if c:
                out[m] = c
        return Polynomial(self.ctx, out)

    def change_context(self, ctx, coeff_map=None):
        """Move into ``ctx`` (same or larger n); ``coeff_map`` converts scalars."""
        if ctx.n < self.ctx.n and self.support_mask() >> ctx.n:
            raise ContextMismatch("polynomial uses variables missing from target ring")
        out = {}
        for m, c in self._terms.items():
            v = coeff_map(c) if coeff_map else ctx.field.coerce(c)
            if v:
                out[m] = v
        return Polynomial(ctx, out)

    # comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        try:
            return self == self.ctx.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.n, frozenset(self._terms.items())))
        return self._hash

    # printing ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        n = self.ctx.n
        out = []
        for i, m in enumerate(self.sorted_packed()):
            c = self._terms[m]
            neg = c < 0
            a = -c if neg else c
            mono = format_monomial(m, n)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("-" if neg else "+") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n={self.ctx.n}, field={self.ctx.field!r})"


_TOKEN = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*)")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text, ctx):
    """Parse the ASCII grammar ``3/2*x1^2*x4 - x2 + 5``."""
    if not isinstance(text, str):
        raise PolynomialSyntaxError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise PolynomialSyntaxError("empty polynomial")
    pos = 0
    acc = ctx.zero()
    first = True
    while pos < len(s):
        match = _TOKEN.match(s, pos)
        if not match or match.end() == pos:
            raise PolynomialSyntaxError(f"cannot parse {text!r} at offset {pos}")
        sign, body = match.group(1), match.group(2).strip()
        if sign is None and not first:
            raise PolynomialSyntaxError(f"missing operator in {text!r} at offset {pos}")
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * ctx.n
        for factor in body.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise PolynomialSyntaxError(f"bad factor {factor!r} in {text!r}")
            i = int(fm.group(1))
            if not 1 <= i <= ctx.n:
                raise PolynomialSyntaxError(f"x{i} is outside a ring in {ctx.n} variables")
            exps[i - 1] += int(fm.group(2) or 1)
        acc = acc + ctx.monomial(exps, coeff)
        pos = match.end()
        first = False
    return acc
