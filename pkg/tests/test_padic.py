import random

import pytest

from thetaplanes import upoly
from thetaplanes.padic import (
    ZqContext,
    ZqElement,
    default_modulus,
    fq_roots,
    poly_is_irreducible_mod_p,
    univariate_hensel_root,
)


def test_construction_rules():
    with pytest.raises(ValueError):
        ZqContext(2, 1, 5)
    with pytest.raises(ValueError):
        ZqContext(15, 1, 5)
    ctx = ZqContext(17, 2, 3)
    assert ctx.q == 289 and ctx.pk == 17**3


def test_default_modulus_f289():
    m = default_modulus(17, 2)
    assert m[-1] == 1 and len(m) == 3
    assert poly_is_irreducible_mod_p(list(m), 17)


def test_reduce_lift_exactness():
    ctx = ZqContext(17, 2, 8)
    rng = random.Random(2)
    for _ in range(30):
        x = ctx.random_element(rng)
        for j in (1, 3, 5, 8):
            y = x.reduce(j)
            assert y.reduce(1) == x.reduce(1)
            # reducing a precision-k value to j <= k is exact
            assert y == x.reduce(j)


def test_field_arithmetic_and_inverse():
    ctx = ZqContext(17, 2, 6)
    rng = random.Random(9)
    for _ in range(40):
        x = ctx.random_element(rng)
        if x.valuation() > 0:
            continue
        assert (x * x.inverse()) == ctx.one()
    # associativity/commutativity spot checks
    a, b, c = (ctx.random_element(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_valuation():
    ctx = ZqContext(17, 1, 5)
    assert ctx.from_int(17 * 17 * 3).valuation() == 2
    assert ctx.zero().valuation() == 5
    assert ctx.from_int(5).valuation() == 0


def test_rational_embedding():
    ctx = ZqContext(17, 2, 10)
    x = ctx.from_rational("3/5")
    assert x * ctx.from_int(5) == ctx.from_int(3)
    with pytest.raises(ValueError):
        ctx.from_rational("1/17")


def test_digit_strings_roundtrip():
    ctx = ZqContext(17, 2, 7)
    rng = random.Random(4)
    for _ in range(10):
        x = ctx.random_element(rng)
        s = x.digit_strings()
        assert ZqElement.from_digit_strings(ctx, s) == x


def test_fq_roots():
    ctx = ZqContext(17, 2, 1)
    # x^2 - 2: 2 is a QR mod 17 (6^2 = 36 = 2), roots in F_17 c F_289
    f = [ctx.from_int(-2), ctx.zero(), ctx.one()]
    roots = fq_roots(f, ctx)
    assert len(roots) == 2
    for r in roots:
        assert (r * r) == ctx.from_int(2)
    # u^2 + u - 1 has roots in F_289 (disc 5 is a non-residue mod 17)
    g = [ctx.from_int(-1), ctx.one(), ctx.one()]
    roots = fq_roots(g, ctx)
    assert len(roots) == 2
    for r in roots:
        assert (r * r + r - ctx.one()).is_zero()


def test_univariate_hensel_sqrt2_over_z7():
    # x^2 - 2 over Z_7, seed 3 -> 10 mod 49 -> 108 mod 343
    ctx1 = ZqContext(7, 1, 1)
    seed = ctx1.from_int(3)
    x = univariate_hensel_root([-2, 0, 1], seed, 2)
    assert x.coeffs[0] == 10
    x = univariate_hensel_root([-2, 0, 1], seed, 3)
    assert x.coeffs[0] == 108
    # verification oracle: square and reduce
    assert (x * x) == x.ctx.from_int(2)
    x = univariate_hensel_root([-2, 0, 1], seed, 60)
    assert (x * x) == x.ctx.from_int(2)
    assert x.reduce(3).coeffs[0] == 108


def test_polynomial_evaluation_over_zq():
    ctx = ZqContext(11, 1, 4)
    dom = ctx.domain
    f = [ctx.from_int(c) for c in (1, 0, 3)]
    x = ctx.from_int(5)
    assert upoly.evaluate(f, x, dom) == ctx.from_int(76)
