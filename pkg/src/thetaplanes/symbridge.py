"""Bridge to sympy for multivariate factorization over Q.

Used for case splitting (reducible base equations, non-vanishing conditions
with several factors) and for squarefree normalization of guard conditions.
Everything returned is converted back to MultiPoly and exactly re-verified
where it matters.
"""
from __future__ import annotations

from fractions import Fraction

from .domains import QQ
from .qpoly import MultiPoly, integer_clear


def to_sympy(p: MultiPoly):
    import sympy

    syms = sympy.symbols(list(p.vars))
    if len(p.vars) == 1:
        syms = [syms] if not isinstance(syms, (list, tuple)) else list(syms)
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, ex in zip(syms, e):
            if ex:
                term *= s**ex
        expr += term
    return expr, syms


def from_sympy(expr, vars) -> MultiPoly:
    import sympy

    syms = sympy.symbols(list(vars))
    if not isinstance(syms, (list, tuple)):
        syms = [syms]
    poly = sympy.Poly(expr, *syms)
    terms = {}
    for monom, coeff in poly.terms():
        q = sympy.Rational(coeff)
        terms[tuple(int(m) for m in monom)] = Fraction(int(q.p), int(q.q))
    return MultiPoly(QQ, tuple(vars), terms)


def factor_multipoly(p: MultiPoly) -> list[tuple[MultiPoly, int]]:
    """Irreducible factorization over Q; constant content is dropped.

    Factors come back integer-cleared with positive leading sign, sorted
    canonically, and the product is re-verified exactly.
    """
    import sympy

    if p.is_zero() or p.is_constant():
        return []
    expr, _ = to_sympy(p)
    _, factors = sympy.factor_list(expr)
    out = []
    for f, mult in factors:
        mp = integer_clear(from_sympy(f, p.vars))
        if mp.is_constant():
            continue
        out.append((mp, int(mult)))
    out.sort(key=lambda fm: sorted(fm[0].terms.items()))
    # exact verification: product of factors times a constant equals p
    prod = MultiPoly.const(QQ, p.vars, 1)
    for f, m in out:
        prod = prod * f**m
    if integer_clear(prod) != integer_clear(p):
        raise ArithmeticError("factorization failed verification")
    return out


def condition_radical(p: MultiPoly) -> MultiPoly:
    """Squarefree part of a non-vanishing condition, integer-cleared."""
    factors = factor_multipoly(p)
    if not factors:
        raise ValueError("condition is constant")
    prod = MultiPoly.const(QQ, p.vars, 1)
    for f, _ in factors:
        prod = prod * f
    return integer_clear(prod)
