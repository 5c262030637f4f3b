"""Multivariate polynomials over exact coefficient domains.

Terms are stored sparsely as a map from exponent tuples to nonzero
coefficients.  The canonical term order is graded lexicographic; it fixes
display, serialization and sign normalization.  Resultants use the
subresultant polynomial remainder sequence, with a Sylvester-determinant
evaluation kept around as an independent cross-check.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .domains import QQ


class NotASquare(Exception):
    """Raised when an exact polynomial square root does not exist."""


class DegenerateChart(Exception):
    """Raised when a restriction/elimination collapses (wrong chart or plane form)."""


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("domain", "vars", "terms")

    def __init__(self, domain, vars: Sequence[str], terms: dict | None = None):
        self.domain = domain
        self.vars = tuple(vars)
        t = {}
        if terms:
            for e, c in terms.items():
                if not domain.is_zero(c):
                    t[tuple(e)] = c
        self.terms = t

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, domain, vars):
        return cls(domain, vars, {})

    @classmethod
    def const(cls, domain, vars, c):
        c = domain.coerce(c)
        z = (0,) * len(vars)
        return cls(domain, vars, {z: c})

    @classmethod
    def var(cls, domain, vars, name, power: int = 1):
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = power
        return cls(domain, vars, {tuple(e): domain.one()})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        z = (0,) * len(self.vars)
        return self.terms.get(z, self.domain.zero())

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used.add(self.vars[i])
        return used

    def leading_term(self):
        """(exps, coeff) of the grlex-largest term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, tuple(self.sorted_terms())))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars or self.domain != other.domain:
            raise ValueError("polynomial ring mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.domain, self.vars, other)
        self._check(other)
        t = dict(self.terms)
        dom = self.domain
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if dom.is_zero(s):
                    del t[e]
                else:
                    t[e] = s
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.vars, out.terms = dom, self.vars, t
        return out

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.vars = self.domain, self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.domain, self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.domain.coerce(other)
            if self.domain.is_zero(c):
                return MultiPoly.zero(self.domain, self.vars)
            out = MultiPoly.__new__(MultiPoly)
            out.domain, out.vars = self.domain, self.vars
            out.terms = {e: v * c for e, v in self.terms.items()}
            return out
        self._check(other)
        dom = self.domain
        t: dict = {}
        if len(other.terms) > len(self.terms):
            a, b = other, self
        else:
            a, b = self, other
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                s = t.get(e)
                if s is None:
                    t[e] = p
                else:
                    t[e] = s + p
        t = {e: c for e, c in t.items() if not dom.is_zero(c)}
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.vars, out.terms = dom, self.vars, t
        return out

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.domain, self.vars, self.domain.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- substitution and evaluation -----------------------------------------

    def subs(self, assignment: dict):
        """Substitute polynomials or constants for variables.

        Unmentioned variables stay.  Values may be MultiPoly in the same ring
        or domain constants.
        """
        dom = self.domain
        vals = {}
        for name, v in assignment.items():
            if not isinstance(v, MultiPoly):
                v = MultiPoly.const(dom, self.vars, v)
            vals[self.vars.index(name)] = v
        out = MultiPoly.zero(dom, self.vars)
        pow_cache: dict = {}
        for e, c in self.terms.items():
            piece = MultiPoly.const(dom, self.vars, c)
            rest = [0] * len(self.vars)
            for i, p in enumerate(e):
                if not p:
                    continue
                if i in vals:
                    key = (i, p)
                    pw = pow_cache.get(key)
                    if pw is None:
                        pw = vals[i] ** p
                        pow_cache[key] = pw
                    piece = piece * pw
                else:
                    rest[i] = p
            if any(rest):
                piece = piece * MultiPoly(dom, self.vars, {tuple(rest): dom.one()})
            out = out + piece
        return out

    def eval(self, point: dict):
        """Evaluate fully; every used variable must appear in `point`."""
        dom = self.domain
        acc = dom.zero()
        pcache: dict = {}
        for e, c in self.terms.items():
            v = c
            for i, p in enumerate(e):
                if not p:
                    continue
                key = (i, p)
                pw = pcache.get(key)
                if pw is None:
                    base = point[self.vars[i]]
                    pw = base
                    for _ in range(p - 1):
                        pw = pw * base
                    pcache[key] = pw
                v = v * pw
            acc = acc + v
        return acc

    def map_coeffs(self, fn, domain=None):
        dom = domain or self.domain
        t = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not dom.is_zero(v):
                t[e] = v
        return MultiPoly(dom, self.vars, t)

    def rename_vars(self, new_vars: Sequence[str]):
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise ValueError("variable count mismatch")
        return MultiPoly(self.domain, new_vars, dict(self.terms))

    def extend_vars(self, all_vars: Sequence[str]):
        """Re-embed into a larger variable tuple (superset, any order)."""
        all_vars = tuple(all_vars)
        idx = [all_vars.index(v) for v in self.vars]
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(all_vars)
            for i, p in enumerate(e):
                ne[idx[i]] = p
            t[tuple(ne)] = c
        return MultiPoly(self.domain, all_vars, t)

    def restrict_vars(self, sub_vars: Sequence[str]):
        """Drop variables that never occur (they must all have exponent 0)."""
        sub_vars = tuple(sub_vars)
        keep = [self.vars.index(v) for v in sub_vars]
        drop = [i for i in range(len(self.vars)) if self.vars[i] not in sub_vars]
        t = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise ValueError("polynomial uses a dropped variable")
            t[tuple(e[i] for i in keep)] = c
        return MultiPoly(self.domain, sub_vars, t)

    # -- univariate views -----------------------------------------------------

    def coeffs_in(self, name: str) -> list["MultiPoly"]:
        """Dense coefficient list [c0, c1, ...] w.r.t. `name`; ci keep all vars."""
        i = self.vars.index(name)
        d = self.degree_in(name)
        if d < 0:
            return []
        out = [MultiPoly.zero(self.domain, self.vars) for _ in range(d + 1)]
        for e, c in self.terms.items():
            p = e[i]
            ne = list(e)
            ne[i] = 0
            out[p] = out[p] + MultiPoly(self.domain, self.vars, {tuple(ne): c})
        return out

    @classmethod
    def from_coeffs_in(cls, coeffs: Sequence["MultiPoly"], name: str):
        if not coeffs:
            raise ValueError("empty coefficient list")
        dom = coeffs[0].domain
        vars = coeffs[0].vars
        i = vars.index(name)
        t = {}
        for p, cp in enumerate(coeffs):
            for e, c in cp.terms.items():
                if e[i]:
                    raise ValueError("coefficient uses the main variable")
                ne = list(e)
                ne[i] = p
                t[tuple(ne)] = c
        return cls(dom, vars, t)

    def derivative(self, name: str):
        i = self.vars.index(name)
        dom = self.domain
        t = {}
        for e, c in self.terms.items():
            p = e[i]
            if not p:
                continue
            ne = list(e)
            ne[i] = p - 1
            nc = c * dom.from_int(p)
            key = tuple(ne)
            if key in t:
                nc = t[key] + nc
            if not dom.is_zero(nc):
                t[key] = nc
        return MultiPoly(dom, self.vars, t)

    # -- display / serialization ----------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{self.vars[i]}^{p}" if p > 1 else self.vars[i]
                for i, p in enumerate(e)
                if p
            )
            cs = str(c)
            if mono:
                if cs == "1":
                    bits.append(mono)
                elif cs == "-1":
                    bits.append(f"-{mono}")
                else:
                    bits.append(f"{cs}*{mono}")
            else:
                bits.append(cs)
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, domain=QQ):
        vars = tuple(obj["vars"])
        terms = {}
        for t in obj["terms"]:
            terms[tuple(t["exps"])] = domain.coerce(t["coeff"])
        return cls(domain, vars, terms)


# -- rational-coefficient normalization ---------------------------------------


def integer_clear(p: MultiPoly) -> MultiPoly:
    """Scale a QQ-polynomial to integer coefficients with content 1.

    Sign convention: the grlex-leading coefficient is positive.
    """
    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = math.gcd(num, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, num if num else 1)
    q = p.map_coeffs(lambda c: c * scale)
    _, lc = q.leading_term()
    if lc < 0:
        q = -q
    return q


def content_int(p: MultiPoly) -> int:
    """gcd of integer coefficients (polynomial must already be integral)."""
    g = 0
    for c in p.terms.values():
        if c.denominator != 1:
            raise ValueError("not an integer polynomial")
        g = math.gcd(g, abs(c.numerator))
    return g


def divexact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact multivariate division a/b; raises ValueError if not exact.

    Works over any field domain (division happens only by b's leading
    coefficient).
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    a._check(b)
    dom = a.domain
    if b.is_constant():
        inv = dom.exact_div(dom.one(), b.constant_value())
        return a.map_coeffs(lambda c: c * inv)
    q = MultiPoly.zero(dom, a.vars)
    r = a
    be, bc = b.leading_term()
    while not r.is_zero():
        re, rc = r.leading_term()
        de = tuple(x - y for x, y in zip(re, be))
        if any(d < 0 for d in de):
            raise ValueError("division not exact")
        coef = dom.exact_div(rc, bc)
        mono = MultiPoly(dom, a.vars, {de: coef})
        q = q + mono
        r = r - mono * b
    return q


def try_divexact(a: MultiPoly, b: MultiPoly):
    try:
        return divexact(a, b)
    except (ValueError, ZeroDivisionError):
        return None


# -- resultants ----------------------------------------------------------------


def _upoly_mul(a, b, dom, vars):
    if not a or not b:
        return []
    out = [MultiPoly.zero(dom, vars) for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return _upoly_trim(out)


def _upoly_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _upoly_scale(a, s):
    return _upoly_trim([c * s for c in a])


def _pseudo_rem(a, b):
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b for dense lists."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - la * b[i]
        a = _upoly_trim(a)
        e -= 1
    if e > 0:
        scale = lb ** e
        a = [c * scale for c in a]
    return a


def resultant(F: MultiPoly, G: MultiPoly, var: str) -> MultiPoly:
    """Res_var(F, G) via the subresultant PRS.

    The result is a polynomial in the remaining variables (exponent 0 in
    `var`).  Raises if `var` occurs in neither input.  Sylvester convention:
    Res_x(x - a, x - b) = a - b.
    """
    F._check(G)
    dF, dG = F.degree_in(var), G.degree_in(var)
    if dF <= 0 and dG <= 0:
        raise ValueError(f"variable {var} absent from both inputs")
    if dF <= 0:
        return (F.coeffs_in(var)[0] if not F.is_zero() else F) ** dG
    if dG <= 0:
        return (G.coeffs_in(var)[0] if not G.is_zero() else G) ** dF

    dom = F.domain
    vars = F.vars
    one = MultiPoly.const(dom, vars, dom.one())

    A, B = F.coeffs_in(var), G.coeffs_in(var)
    negate = False
    if dF < dG:
        A, B = B, A
        if (dF * dG) % 2:
            negate = True
    g = one
    h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if (dA % 2) and (dB % 2):
            negate = not negate
        R = _pseudo_rem(A, B)
        if not R:
            return MultiPoly.zero(dom, vars)
        denom = g * (h ** delta)
        A = B
        B = [divexact(c, denom) for c in R]
        g = A[-1]
        if delta >= 1:
            h = divexact(g ** delta, h ** (delta - 1))
        if len(B) - 1 == 0:
            break
    dA = len(A) - 1
    lB = B[0]
    if dA <= 1:
        res = lB if dA == 1 else one
    else:
        res = divexact(lB ** dA, h ** (dA - 1))
    return -res if negate else res


def sylvester_matrix(F: MultiPoly, G: MultiPoly, var: str):
    a = F.coeffs_in(var)
    b = G.coeffs_in(var)
    m, n = len(a) - 1, len(b) - 1
    dom = F.domain
    size = m + n
    Z = MultiPoly.zero(dom, F.vars)
    M = [[Z for _ in range(size)] for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(reversed(a)):
            M[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(reversed(b)):
            M[n + i][i + j] = c
    return M


def sylvester_resultant(F: MultiPoly, G: MultiPoly, var: str) -> MultiPoly:
    """Resultant via fraction-free (Bareiss) expansion of the Sylvester matrix.

    Exponentially sized for symbolic entries; kept as the independent test
    oracle and for small systems.
    """
    M = sylvester_matrix(F, G, var)
    n = len(M)
    dom = F.domain
    one = MultiPoly.const(dom, F.vars, dom.one())
    prev = one
    M = [row[:] for row in M]
    sign = 1
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(dom, F.vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = divexact(num, prev)
            M[i][k] = MultiPoly.zero(dom, F.vars)
        prev = M[k][k]
    res = M[n - 1][n - 1]
    return -res if sign < 0 else res


def discriminant(P: MultiPoly, var: str) -> MultiPoly:
    """disc(P) = (-1)^(d(d-1)/2) Res(P, P') / lc(P) for deg P >= 2."""
    d = P.degree_in(var)
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    lc = P.coeffs_in(var)[-1]
    if lc.is_zero():
        raise ValueError("zero leading coefficient")
    r = resultant(P, P.derivative(var), var)
    r = divexact(r, lc)
    if (d * (d - 1) // 2) % 2:
        r = -r
    return r


# -- exact square root and squareness equations ---------------------------------


def exact_list_sqrt(coeffs: list, dom):
    """P = l * Q^2 for a dense univariate coefficient list over a field.

    Returns (l, monic Q as dense list) or raises NotASquare.  Characteristic 2
    is the caller's responsibility to exclude.
    """
    coeffs = list(coeffs)
    while coeffs and dom.is_zero(coeffs[-1]):
        coeffs.pop()
    if not coeffs:
        raise NotASquare("zero polynomial")
    deg = len(coeffs) - 1
    if deg % 2:
        raise NotASquare("odd degree")
    m = deg // 2
    l = coeffs[-1]
    two = dom.from_int(2)
    q = [dom.zero()] * (m + 1)
    q[m] = dom.one()
    # match q[m-1], ..., q[0] from the top coefficients of P/l
    for j in range(1, m + 1):
        # coefficient of x^(2m-j) in Q^2 is sum_{a+b=2m-j} q_a q_b
        acc = dom.zero()
        for a in range(m - j + 1, m + 1):
            b = 2 * m - j - a
            if 0 <= b <= m and b != m - j:
                acc = acc + q[a] * q[b]
        target = dom.exact_div(coeffs[2 * m - j], l)
        q[m - j] = dom.exact_div(target - acc, two)
    # full verification by expansion
    sq = [dom.zero()] * (deg + 1)
    for a in range(m + 1):
        for b in range(m + 1):
            sq[a + b] = sq[a + b] + q[a] * q[b]
    for i in range(deg + 1):
        if not dom.is_zero(coeffs[i] - l * sq[i]):
            raise NotASquare(f"coefficient mismatch at degree {i}")
    return l, q


def exact_poly_sqrt(P: MultiPoly, var: str | None = None):
    """Exact square root of a univariate MultiPoly over a field domain.

    Returns (l, Q: MultiPoly monic in `var`) with P = l*Q^2, or raises
    NotASquare.
    """
    used = P.variables_used()
    if var is None:
        if len(used) > 1:
            raise ValueError("ambiguous main variable")
        var = next(iter(used)) if used else P.vars[0]
    coeffs = P.coeffs_in(var)
    vals = []
    for c in coeffs:
        if not c.is_constant():
            raise ValueError("input is not univariate")
        vals.append(c.constant_value())
    l, q = exact_list_sqrt(vals, P.domain)
    Q = MultiPoly.from_coeffs_in(
        [MultiPoly.const(P.domain, P.vars, c) for c in q], var
    )
    return l, Q


def squareness_equations(
    F: MultiPoly, var: str, m: int, fresh_vars: Sequence[str]
) -> list[MultiPoly]:
    """Coefficient equations of F = lc(F) * (x^m + b1 x^(m-1) + ... + bm)^2.

    F is univariate in `var` of degree 2m with coefficients in the remaining
    variables; `fresh_vars` names the m square-root coefficients (b1 highest
    first, matching x^(m-1)..x^0).  Returns 2m equations, constant coefficient
    first, each integer-cleared.
    """
    if len(fresh_vars) != m:
        raise ValueError("need exactly m fresh variable names")
    deg = F.degree_in(var)
    if deg != 2 * m:
        raise ValueError(f"degree {deg} != 2m")
    big_vars = tuple(F.vars) + tuple(fresh_vars)
    dom = F.domain
    Fc = [c.extend_vars(big_vars) for c in F.coeffs_in(var)]
    l = Fc[-1]
    if l.is_zero():
        raise DegenerateChart("leading coefficient vanishes identically")
    # monic half polynomial q; q[m] = 1, q[m-1-i] = fresh_vars[i]
    q = [MultiPoly.zero(dom, big_vars) for _ in range(m + 1)]
    q[m] = MultiPoly.const(dom, big_vars, dom.one())
    for i, name in enumerate(fresh_vars):
        q[m - 1 - i] = MultiPoly.var(dom, big_vars, name)
    sq = [MultiPoly.zero(dom, big_vars) for _ in range(2 * m + 1)]
    for a in range(m + 1):
        for b in range(m + 1):
            sq[a + b] = sq[a + b] + q[a] * q[b]
    eqs = []
    for i in range(2 * m):
        e = Fc[i] - l * sq[i]
        eqs.append(integer_clear(e))
    return eqs


# -- parsing ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*\*|[-+*/()])")


def parse_poly(text: str, vars: Sequence[str], domain=QQ) -> MultiPoly:
    """Parse expressions like ``3*x^3*z - 3*x^2*y^2 + 2*y^4``.

    Supports + - * / ^ ( ) with integer literals; division only by integer
    constants.
    """
    vars = tuple(vars)
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad token at: {text[pos:pos+20]!r}")
        tokens.append(mt.group(1))
        pos = mt.end()
    tokens.append(None)
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    def parse_atom():
        t = take()
        if t == "(":
            e = parse_sum()
            if take() != ")":
                raise ValueError("unbalanced parenthesis")
            return e
        if t == "-":
            return -parse_power()
        if t == "+":
            return parse_power()
        if t is None:
            raise ValueError("unexpected end of expression")
        if t.isdigit():
            return MultiPoly.const(domain, vars, domain.from_int(int(t)))
        if t in vars:
            return MultiPoly.var(domain, vars, t)
        raise ValueError(f"unknown symbol {t!r}")

    def parse_power():
        base = parse_atom()
        while peek() in ("^", "**"):
            take()
            e = take()
            if not (e and e.isdigit()):
                raise ValueError("exponent must be a literal integer")
            base = base ** int(e)
        return base

    def parse_product():
        p = parse_power()
        while peek() in ("*", "/"):
            op = take()
            q = parse_power()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    raise ValueError("division only by constants")
                p = p * domain.exact_div(domain.one(), q.constant_value())
        return p

    def parse_sum():
        p = parse_product()
        while peek() in ("+", "-"):
            op = take()
            q = parse_product()
            p = p + q if op == "+" else p - q
        return p

    out = parse_sum()
    if peek() is not None:
        raise ValueError(f"trailing tokens: {tokens[idx:]}")
    return out
