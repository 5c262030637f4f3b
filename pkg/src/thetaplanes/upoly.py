"""Dense univariate polynomial helpers over a coefficient domain.

Polynomials are plain lists, constant term first.  These are the workhorses
behind number-field reduction, p-adic lifting and finite-field root finding;
the symbolic layer lives in qpoly.
"""
from __future__ import annotations


def trim(a: list) -> list:
    while a and (a[-1] == 0 if not hasattr(a[-1], "is_zero") else a[-1].is_zero()):
        a.pop()
    return a


def deg(a: list) -> int:
    return len(a) - 1


def add(a, b, dom):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else dom.zero()
        y = b[i] if i < len(b) else dom.zero()
        out.append(x + y)
    return trim_dom(out, dom)


def sub(a, b, dom):
    return add(a, [-c for c in b], dom)


def mul(a, b, dom):
    if not a or not b:
        return []
    out = [dom.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if dom.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim_dom(out, dom)


def scale(a, s, dom):
    return trim_dom([c * s for c in a], dom)


def trim_dom(a, dom):
    while a and dom.is_zero(a[-1]):
        a.pop()
    return a


def divmod_poly(a, b, dom):
    """Quotient and remainder over a field (or with unit leading coefficient)."""
    b = trim_dom(list(b), dom)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim_dom(list(a), dom)
    q = [dom.zero()] * max(len(a) - len(b) + 1, 0)
    inv_lb = dom.exact_div(dom.one(), b[-1])
    while a and len(a) >= len(b):
        c = a[-1] * inv_lb
        k = len(a) - len(b)
        q[k] = q[k] + c
        for i in range(len(b)):
            a[k + i] = a[k + i] - c * b[i]
        a = trim_dom(a, dom)
    return trim_dom(q, dom), a


def rem(a, b, dom):
    return divmod_poly(a, b, dom)[1]


def monic(a, dom):
    if not a:
        return a
    inv = dom.exact_div(dom.one(), a[-1])
    return [c * inv for c in a]


def gcd(a, b, dom):
    a, b = trim_dom(list(a), dom), trim_dom(list(b), dom)
    while b:
        a, b = b, rem(a, b, dom)
    return monic(a, dom)


def xgcd(a, b, dom):
    """(g, s, t) with s*a + t*b = g, g monic (over a field)."""
    r0, r1 = trim_dom(list(a), dom), trim_dom(list(b), dom)
    s0, s1 = [dom.one()], []
    t0, t1 = [], [dom.one()]
    while r1:
        q, r = divmod_poly(r0, r1, dom)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, dom), dom)
        t0, t1 = t1, sub(t0, mul(q, t1, dom), dom)
    if not r0:
        return [], s0, t0
    inv = dom.exact_div(dom.one(), r0[-1])
    return scale(r0, inv, dom), scale(s0, inv, dom), scale(t0, inv, dom)


def evaluate(a, x, dom):
    acc = dom.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def derivative(a, dom):
    return trim_dom([a[i] * dom.from_int(i) for i in range(1, len(a))], dom)


def pow_mod(a, e: int, mod, dom):
    """a^e mod `mod` by square and multiply."""
    result = [dom.one()]
    base = rem(a, mod, dom)
    while e:
        if e & 1:
            result = rem(mul(result, base, dom), mod, dom)
        base = rem(mul(base, base, dom), mod, dom)
        e >>= 1
    return result
