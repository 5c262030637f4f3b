"""Unramified p-adic arithmetic: Z_q to finite precision, and F_q = residue field.

An element of the unramified degree-n extension at precision k lives in
Z[t]/(p^k, m(t)) with m monic of degree n and irreducible mod p.  p = 2 and
ramified extensions are rejected.  Precision-1 contexts double as finite
fields F_{p^n} and carry the root-finding helpers (Cantor-Zassenhaus) used
for modulus discovery and minimal-polynomial root matching.
"""
from __future__ import annotations

import math
from typing import Sequence

from . import upoly
from .domains import ZqDomain


class FpDomain:
    """Prime field F_p with plain int elements."""

    is_field = True

    def __init__(self, p: int):
        self.p = p
        self.name = f"GF({p})"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.p

    def coerce(self, x):
        return int(x) % self.p

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def exact_div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def __eq__(self, other):
        return isinstance(other, FpDomain) and self.p == other.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


def poly_is_irreducible_mod_p(int_coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic-normalizable polynomial over F_p."""
    dom = FpDomain(p)
    f = upoly.trim_dom([dom.coerce(c) for c in int_coeffs], dom)
    n = upoly.deg(f)
    if n < 1:
        return False
    f = upoly.monic(f, dom)
    x = [0, 1]
    xp = upoly.pow_mod(x, p**n, f, dom)
    if upoly.trim_dom(upoly.sub(xp, x, dom), dom):
        return False
    m = n
    primes = set()
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.add(m)
    for l in primes:
        xq = upoly.pow_mod(x, p ** (n // l), f, dom)
        g = upoly.gcd(upoly.sub(xq, x, dom), f, dom)
        if upoly.deg(g) != 0:
            return False
    return True


def default_modulus(p: int, n: int) -> tuple:
    """Canonical irreducible degree-n modulus over F_p (constant term first).

    n=1 uses t; n=2 uses t^2 - r for the smallest quadratic non-residue r;
    otherwise the lexicographically first irreducible monic polynomial.
    """
    if n == 1:
        return (0, 1)
    if n == 2:
        for r in range(2, p):
            if pow(r, (p - 1) // 2, p) == p - 1:
                return (-r % p, 0, 1)
        raise ValueError("no quadratic non-residue found; is p prime?")
    # lexicographic scan over lower coefficients
    from itertools import product

    for tail in product(range(p), repeat=n):
        coeffs = list(tail) + [1]
        if poly_is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise ValueError("no irreducible modulus found")


def _is_probable_prime(x: int) -> bool:
    if x < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if x % q == 0:
            return x == q
    d = x - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        y = pow(a, d, x)
        if y in (1, x - 1):
            continue
        for _ in range(r - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


class ZqContext:
    """O/p^k for the unramified extension of Z_p with residue field F_{p^n}."""

    def __init__(self, p: int, n: int = 1, k: int = 1, modulus: Sequence[int] | None = None):
        if p == 2:
            raise ValueError("p = 2 is not supported")
        if not _is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1 or k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        self.p = p
        self.n = n
        self.k = k
        self.q = p**n
        self.pk = p**k
        if modulus is None:
            modulus = default_modulus(p, n)
        modulus = tuple(int(c) % p for c in modulus[:-1]) + (int(modulus[-1]),)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if n > 1 and not poly_is_irreducible_mod_p(list(modulus), p):
            raise ValueError("modulus is not irreducible mod p")
        self.modulus = modulus
        self.domain = ZqDomain(self)

    def key(self):
        return (self.p, self.n, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, ZqContext) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ZqContext(p={self.p}, n={self.n}, k={self.k})"

    # -- context conversions ----------------------------------------------------

    def with_precision(self, k: int) -> "ZqContext":
        if k == self.k:
            return self
        return ZqContext(self.p, self.n, k, self.modulus)

    def residue_field(self) -> "ZqContext":
        return self.with_precision(1)

    # -- element constructors -----------------------------------------------------

    def zero(self) -> "ZqElement":
        return ZqElement(self, (0,) * self.n)

    def one(self) -> "ZqElement":
        return ZqElement(self, (1,) + (0,) * (self.n - 1))

    def gen(self) -> "ZqElement":
        if self.n == 1:
            raise ValueError("trivial extension has no generator")
        c = [0] * self.n
        c[1] = 1
        return ZqElement(self, tuple(c))

    def from_int(self, x: int) -> "ZqElement":
        return ZqElement(self, (x % self.pk,) + (0,) * (self.n - 1))

    def from_coeffs(self, coeffs: Sequence[int]) -> "ZqElement":
        c = [int(x) % self.pk for x in coeffs]
        if len(c) > self.n:
            raise ValueError("too many coordinates")
        c += [0] * (self.n - len(c))
        return ZqElement(self, tuple(c))

    def from_rational(self, q) -> "ZqElement":
        from fractions import Fraction

        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise ValueError("denominator not invertible (bad reduction)")
        num = self.from_int(q.numerator)
        den = self.from_int(q.denominator)
        return num * den.inverse()

    def coerce(self, x):
        from fractions import Fraction

        if isinstance(x, ZqElement):
            if x.ctx.key() == self.key():
                return x
            if (x.ctx.p, x.ctx.n) == (self.p, self.n):
                if x.ctx.k >= self.k:
                    return x.reduce(self.k)
                raise ValueError("cannot raise precision implicitly")
            raise TypeError("element of an incompatible ring")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_rational(x)
        raise TypeError(f"cannot coerce {x!r}")

    def random_element(self, rng) -> "ZqElement":
        return ZqElement(self, tuple(rng.randrange(self.pk) for _ in range(self.n)))

    def all_residue_elements(self):
        """Iterate over all q elements (k must be 1)."""
        if self.k != 1:
            raise ValueError("enumeration only over the residue field")
        from itertools import product

        for tup in product(range(self.p), repeat=self.n):
            yield ZqElement(self, tup)


class ZqElement:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: ZqContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        other = self.ctx.coerce(other)
        pk = self.ctx.pk
        return ZqElement(
            self.ctx, tuple((a + b) % pk for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        pk = self.ctx.pk
        return ZqElement(self.ctx, tuple((-a) % pk for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self.ctx.coerce(other))

    def __rsub__(self, other):
        return self.ctx.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            pk = self.ctx.pk
            return ZqElement(self.ctx, tuple(a * other % pk for a in self.coeffs))
        other = self.ctx.coerce(other)
        ctx = self.ctx
        n, pk = ctx.n, ctx.pk
        if n == 1:
            return ZqElement(ctx, (self.coeffs[0] * other.coeffs[0] % pk,))
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        # reduce modulo the monic modulus
        m = ctx.modulus
        for d in range(2 * n - 2, n - 1, -1):
            c = prod[d] % pk
            if c:
                for i in range(n):
                    prod[d - n + i] -= c * m[i]
            prod[d] = 0
        return ZqElement(ctx, tuple(prod[i] % pk for i in range(n)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "ZqElement":
        ctx = self.ctx
        if self.valuation() > 0:
            raise ZeroDivisionError("element is not a unit")
        if ctx.n == 1:
            return ZqElement(ctx, (pow(self.coeffs[0], -1, ctx.pk),))
        # inverse in the residue field via xgcd over F_p, then Newton lift
        fp = FpDomain(ctx.p)
        a = upoly.trim_dom([c % ctx.p for c in self.coeffs], fp)
        g, s, _ = upoly.xgcd(a, list(ctx.modulus), fp)
        if upoly.deg(g) != 0:
            raise ZeroDivisionError("not invertible in residue field")
        y = ctx.from_coeffs(s)
        prec = 1
        two = ctx.from_int(2)
        while prec < ctx.k:
            y = y * (two - self * y)
            prec *= 2
        return y

    def __truediv__(self, other):
        other = self.ctx.coerce(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        return (
            isinstance(other, ZqElement)
            and self.ctx.key() == other.ctx.key()
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.key(), self.coeffs))

    def valuation(self) -> int:
        """min p-adic valuation of the coordinates; ctx.k for the zero element."""
        ctx = self.ctx
        if self.is_zero():
            return ctx.k
        v = ctx.k
        for c in self.coeffs:
            if c == 0:
                continue
            w = 0
            while c % ctx.p == 0:
                c //= ctx.p
                w += 1
            v = min(v, w)
        return v

    def reduce(self, j: int) -> "ZqElement":
        """Exact reduction to precision j <= k."""
        if j > self.ctx.k:
            raise ValueError("cannot reduce to higher precision")
        tgt = self.ctx.with_precision(j)
        pj = tgt.pk
        return ZqElement(tgt, tuple(c % pj for c in self.coeffs))

    def lift_into(self, ctx: "ZqContext") -> "ZqElement":
        """Re-embed the (exact) residue representative into a higher-precision ring."""
        if (ctx.p, ctx.n) != (self.ctx.p, self.ctx.n):
            raise ValueError("incompatible contexts")
        return ZqElement(ctx, tuple(c % ctx.pk for c in self.coeffs))

    def exact_divide_p(self, e: int = 1) -> "ZqElement":
        """Divide by p^e exactly; the result lives at precision k - e."""
        ctx = self.ctx
        pe = ctx.p**e
        if any(c % pe for c in self.coeffs):
            raise ValueError("not divisible by p^e")
        tgt = ctx.with_precision(ctx.k - e)
        return ZqElement(tgt, tuple((c // pe) % tgt.pk for c in self.coeffs))

    def centered(self) -> tuple:
        """Coordinates in (-p^k/2, p^k/2]."""
        half = self.ctx.pk // 2
        return tuple(c - self.ctx.pk if c > half else c for c in self.coeffs)

    def __repr__(self):
        if self.ctx.n == 1:
            return f"{self.coeffs[0]} + O({self.ctx.p}^{self.ctx.k})"
        return f"{list(self.coeffs)} + O({self.ctx.p}^{self.ctx.k})"

    def digit_strings(self) -> list[str]:
        """Base-p digits of each coordinate, least significant first, '.'-joined."""
        out = []
        for c in self.coeffs:
            digits = []
            x = c
            for _ in range(self.ctx.k):
                digits.append(str(x % self.ctx.p))
                x //= self.ctx.p
            out.append(".".join(digits))
        return out

    @classmethod
    def from_digit_strings(cls, ctx: ZqContext, strings: Sequence[str]) -> "ZqElement":
        coeffs = []
        for s in strings:
            digits = [int(d) for d in s.split(".")]
            x = 0
            for d in reversed(digits):
                x = x * ctx.p + d
            coeffs.append(x % ctx.pk)
        return ctx.from_coeffs(coeffs)


# -- finite-field polynomial root finding ----------------------------------------


def fq_roots(coeffs: Sequence[ZqElement], ctx: ZqContext, seed: int = 1) -> list[ZqElement]:
    """All roots in F_q of a polynomial with F_q coefficients (ctx.k == 1).

    Cantor-Zassenhaus equal-degree splitting on the linear part; the rng is
    seeded so results are deterministic.
    """
    import random

    if ctx.k != 1:
        raise ValueError("root finding runs over the residue field")
    dom = ctx.domain
    f = upoly.trim_dom(list(coeffs), dom)
    if upoly.deg(f) < 1:
        return []
    f = upoly.monic(f, dom)
    x = [ctx.zero(), ctx.one()]
    xq = upoly.pow_mod(x, ctx.q, f, dom)
    lin = upoly.gcd(upoly.sub(xq, x, dom), f, dom)
    roots: list[ZqElement] = []

    rng = random.Random(seed)

    def split(g):
        d = upoly.deg(g)
        if d == 0:
            return
        if d == 1:
            roots.append(-g[0])
            return
        while True:
            c = ctx.from_coeffs([rng.randrange(ctx.p) for _ in range(ctx.n)])
            h = upoly.pow_mod([c, ctx.one()], (ctx.q - 1) // 2, g, dom)
            h = upoly.sub(h, [ctx.one()], dom)
            w = upoly.gcd(h, g, dom)
            if 0 < upoly.deg(w) < d:
                split(w)
                split(upoly.divmod_poly(g, w, dom)[0])
                return

    split(lin)
    roots.sort(key=lambda r: r.coeffs)
    return roots


def univariate_hensel_root(
    int_coeffs: Sequence[int], root0: ZqElement, target_k: int
) -> ZqElement:
    """Lift a simple residue-field root of an integer polynomial to precision k."""
    ctx0 = root0.ctx
    ctx = ctx0.with_precision(target_k)
    x = root0.lift_into(ctx)
    f = [ctx.from_int(c) for c in int_coeffs]
    fp = upoly.derivative(f, ctx.domain)
    val = upoly.evaluate(fp, x, ctx.domain)
    if val.valuation() > 0:
        raise ValueError("root is not simple modulo p")
    prec = 1
    while prec < target_k:
        x = x - upoly.evaluate(f, x, ctx.domain) * upoly.evaluate(
            fp, x, ctx.domain
        ).inverse()
        prec *= 2
    if not upoly.evaluate(f, x, ctx.domain).is_zero():
        raise ArithmeticError("lift failed to converge")
    return x
