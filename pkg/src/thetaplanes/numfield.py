"""Number fields Q[u]/(f) with non-monic integer defining polynomials allowed.

Elements are residues of degree < deg f with rational coefficients.  The
defining polynomial is checked for irreducibility at construction: a cheap
mod-p witness is tried first, with sympy's exact factorization as the
fallback for polynomials (like u^4 + 1) that are reducible modulo every
prime.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from . import upoly
from .domains import QQ, NumberFieldDomain


class NotIrreducible(ValueError):
    pass


def _int_poly_content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
    return g


def _mod_p_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Distinct-degree test: f irreducible over F_p certifies irreducibility over Q."""
    from .padic import FpDomain

    dom = FpDomain(p)
    f = upoly.trim_dom([dom.coerce(c) for c in coeffs], dom)
    n = upoly.deg(f)
    if n < 1 or len(coeffs) - 1 != n:
        return False  # degree dropped mod p
    f = upoly.monic(f, dom)
    x = [dom.zero(), dom.one()]
    # x^(p^n) == x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for prime l | n
    xp = upoly.pow_mod(x, p**n, f, dom)
    if upoly.trim_dom(upoly.sub(xp, x, dom), dom):
        return False
    for l in set(_prime_factors(n)):
        xq = upoly.pow_mod(x, p ** (n // l), f, dom)
        g = upoly.gcd(upoly.sub(xq, x, dom), f, dom)
        if upoly.deg(g) != 0:
            return False
    return True


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_over_q(int_coeffs: Sequence[int]) -> bool:
    """Irreducibility of an integer polynomial (constant first) over Q."""
    c = list(int_coeffs)
    while c and c[-1] == 0:
        c.pop()
    n = len(c) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    # squarefree over Q is necessary
    fq = [Fraction(x) for x in c]
    g = upoly.gcd(fq, upoly.derivative(fq, QQ), QQ)
    if upoly.deg(g) > 0:
        return False
    p = 3
    tried = 0
    while tried < 25:
        p = _next_prime(p)
        if c[-1] % p == 0:
            continue
        tried += 1
        if _mod_p_irreducible(c, p):
            return True
    # fall back to exact factorization
    import sympy

    u = sympy.symbols("u")
    poly = sum(sympy.Integer(c[i]) * u**i for i in range(len(c)))
    _, factors = sympy.factor_list(poly)
    nontrivial = [(f, e) for f, e in factors if sympy.degree(f, u) >= 1]
    return len(nontrivial) == 1 and nontrivial[0][1] == 1


def _next_prime(p: int) -> int:
    p += 2
    while True:
        if all(p % q for q in range(3, int(p**0.5) + 1, 2)):
            return p
        p += 2


class NumberField:
    """Q[u]/(f) for an irreducible integer polynomial f (constant term first)."""

    def __init__(self, int_coeffs: Sequence[int], check: bool = True):
        coeffs = [int(c) for c in int_coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError("defining polynomial must have degree >= 1")
        cont = _int_poly_content(coeffs)
        if cont > 1:
            coeffs = [c // cont for c in coeffs]
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
        if check and not is_irreducible_over_q(coeffs):
            raise NotIrreducible(f"{coeffs} is not irreducible over Q")
        self.int_coeffs = tuple(coeffs)
        self.degree = len(coeffs) - 1
        # monic rational form used for reduction
        lc = Fraction(coeffs[-1])
        self._monic = [Fraction(c) / lc for c in coeffs]
        self.domain = NumberFieldDomain(self)

    def key(self):
        return self.int_coeffs

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.int_coeffs == other.int_coeffs

    def __hash__(self):
        return hash(self.int_coeffs)

    def short_label(self) -> str:
        return ",".join(str(c) for c in self.int_coeffs)

    def __repr__(self):
        return f"NumberField({list(self.int_coeffs)})"

    # -- element constructors -------------------------------------------------

    def element(self, coeffs: Sequence[Fraction]) -> "NFElement":
        c = [Fraction(x) for x in coeffs]
        if len(c) > self.degree:
            c = upoly.rem(c, self._monic, QQ)
        c = c + [Fraction(0)] * (self.degree - len(c))
        return NFElement(self, tuple(c[: self.degree]))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([Fraction(1)])

    def gen(self):
        """The class of u."""
        return self.element([Fraction(0), Fraction(1)])

    def from_rational(self, q) -> "NFElement":
        return self.element([Fraction(q)])

    def coerce(self, x):
        if isinstance(x, NFElement):
            if x.field != self:
                raise TypeError("element of a different number field")
            return x
        if isinstance(x, (int, Fraction)):
            return self.from_rational(Fraction(x))
        if isinstance(x, str):
            return self.from_rational(Fraction(x))
        raise TypeError(f"cannot coerce {x!r}")

    def is_rational_poly(self) -> bool:
        return self.degree == 1

    def to_json(self):
        return {"minpoly": list(self.int_coeffs)}

    @classmethod
    def from_json(cls, obj, check: bool = True):
        return cls(obj["minpoly"], check=check)


class NFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def _lift(self):
        return list(self.coeffs)

    def __add__(self, other):
        other = self.field.coerce(other)
        return NFElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        other = self.field.coerce(other)
        prod = upoly.mul(self._lift(), other._lift(), QQ)
        red = upoly.rem(prod, self.field._monic, QQ)
        red = red + [Fraction(0)] * (self.field.degree - len(red))
        return NFElement(self.field, tuple(red[: self.field.degree]))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = upoly.xgcd(self._lift(), self.field._monic, QQ)
        if upoly.deg(g) != 0:
            raise ZeroDivisionError("element not invertible (field modulus reducible?)")
        inv = upoly.scale(s, 1 / g[0], QQ)
        inv = inv + [Fraction(0)] * (self.field.degree - len(inv))
        return NFElement(self.field, tuple(inv[: self.field.degree]))

    def __truediv__(self, other):
        other = self.field.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(Fraction(other))
        return (
            isinstance(other, NFElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                bits.append(str(c))
            elif i == 1:
                bits.append(f"{c}*u" if c not in (1,) else "u")
            else:
                bits.append(f"{c}*u^{i}" if c not in (1,) else f"u^{i}")
        return " + ".join(bits).replace("+ -", "- ")

    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    def to_json(self):
        return [str(c) for c in self.coeffs]
