"""Coefficient domains for exact polynomial arithmetic.

A domain is a lightweight object that knows how to make 0, 1 and integer
constants of its element type, and how to divide exactly.  Elements carry
their own arithmetic via operator overloading; polynomials only ever ask
the domain for constants, coercions and exact division.
"""
from __future__ import annotations

from fractions import Fraction


class RationalDomain:
    """Field of rational numbers, elements are fractions.Fraction."""

    name = "QQ"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def is_zero(self, x) -> bool:
        return x == 0

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("QQ")


QQ = RationalDomain()


class NumberFieldDomain:
    """Field Q[u]/(f) with a fixed NumberField; elements are NFElement."""

    is_field = True

    def __init__(self, field):
        self.field = field
        self.name = f"QQ[u]/({field.short_label()})"

    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def from_int(self, n: int):
        return self.field.from_rational(Fraction(n))

    def coerce(self, x):
        return self.field.coerce(x)

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def exact_div(self, a, b):
        return a / b

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, NumberFieldDomain) and self.field == other.field

    def __hash__(self):
        return hash(("NF", self.field))


class ZqDomain:
    """Unramified local ring O/p^k behind a ZqContext; elements are ZqElement."""

    is_field = False

    def __init__(self, ctx):
        self.ctx = ctx
        self.name = f"Zq(p={ctx.p},n={ctx.n},k={ctx.k})"

    def zero(self):
        return self.ctx.zero()

    def one(self):
        return self.ctx.one()

    def from_int(self, n: int):
        return self.ctx.from_int(n)

    def coerce(self, x):
        return self.ctx.coerce(x)

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def exact_div(self, a, b):
        return a * b.inverse()

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, ZqDomain) and self.ctx.key() == other.ctx.key()

    def __hash__(self):
        return hash(("Zq", self.ctx.key()))


class ComplexDomain:
    """Arbitrary-precision complex numbers (mpmath mpc) at a stated precision."""

    is_field = True

    def __init__(self, dps: int):
        import mpmath

        self.dps = dps
        self._mp = mpmath
        self.name = f"CC({dps})"

    def zero(self):
        return self._mp.mpc(0)

    def one(self):
        return self._mp.mpc(1)

    def from_int(self, n: int):
        return self._mp.mpc(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            with self._mp.workdps(self.dps + 10):
                return self._mp.mpc(x.numerator) / x.denominator
        return self._mp.mpc(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def exact_div(self, a, b):
        with self._mp.workdps(self.dps):
            return a / b

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, ComplexDomain) and self.dps == other.dps

    def __hash__(self):
        return hash(("CC", self.dps))
