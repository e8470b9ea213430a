"""Coefficient fields: the rationals and the two-element field."""

from fractions import Fraction
from numbers import Rational


class RationalField:
    name = "Q"
    characteristic = 0

    def coerce(self, value):
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def is_integral(self, value):
        return Fraction(value).denominator == 1

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


class TwoElementField:
    """GF(2).  Nonzero coefficients are always the integer 1."""

    name = "GF2"
    characteristic = 2

    def coerce(self, value):
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Rational):
            value = Fraction(value)
            if value.denominator % 2 == 0:
                raise ZeroDivisionError(f"{value} has no image in GF(2)")
            return (value.numerator * value.denominator) % 2
        raise TypeError(f"cannot coerce {value!r} into GF(2)")

    def is_integral(self, value):
        return True

    def __repr__(self):
        return "GF2"

    def __reduce__(self):
        return "GF2"


QQ = RationalField()
GF2 = TwoElementField()


def field_from_name(name):
    key = str(name).strip().upper()
    if key in ("Q", "QQ", "RATIONAL", "RATIONALS"):
        return QQ
    if key in ("GF2", "GF(2)", "F2", "Z/2", "ZZ/2"):
        return GF2
    raise ValueError(f"unknown field {name!r}; expected Q or GF2")
