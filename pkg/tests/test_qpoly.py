import random
from fractions import Fraction

import pytest

from thetaplanes.domains import QQ
from thetaplanes.qpoly import (
    MultiPoly,
    NotASquare,
    discriminant,
    divexact,
    exact_poly_sqrt,
    integer_clear,
    parse_poly,
    resultant,
    squareness_equations,
    sylvester_resultant,
)

V = ("x", "y", "a", "b")


def P(s, vars=V):
    return parse_poly(s, vars)


def test_parse_and_repr_roundtrip():
    p = P("3*x^2*y - 2*a + 1/2")
    q = MultiPoly.from_json(p.to_json())
    assert p == q


def test_arithmetic_basics():
    x, y = P("x"), P("y")
    assert (x + y) * (x - y) == P("x^2 - y^2")
    assert (x + 1) ** 3 == P("x^3 + 3*x^2 + 3*x + 1")
    assert P("0").is_zero()


def test_subs_and_eval():
    f = P("x^2 + y")
    g = f.subs({"x": P("a + 1")})
    assert g == P("a^2 + 2*a + 1 + y")
    v = f.eval({"x": Fraction(2), "y": Fraction(3)})
    assert v == 7


def test_divexact():
    a = P("x^2 - y^2")
    b = P("x + y")
    assert divexact(a, b) == P("x - y")
    with pytest.raises(ValueError):
        divexact(P("x^2 + 1"), P("x + y"))


def test_resultant_shared_root_vanishes():
    # shared root forces vanishing
    r = resultant(P("x^2 - 1"), P("x - 1"), "x")
    assert r.is_zero()


def test_resultant_sylvester_convention():
    # det [[1, -a], [1, -b]] = a - b
    r = resultant(P("x - a"), P("x - b"), "x")
    assert r == P("a - b")


def test_resultant_matches_sylvester_oracle_on_random_inputs():
    rng = random.Random(7)
    vars = ("x", "s", "t")
    for _ in range(25):
        def rnd_poly(dx):
            t = {}
            for ex in range(dx + 1):
                for es in range(2):
                    for et in range(2):
                        if rng.random() < 0.6:
                            t[(ex, es, et)] = Fraction(rng.randint(-4, 4))
            return MultiPoly(QQ, vars, t)

        F = rnd_poly(rng.randint(1, 3))
        G = rnd_poly(rng.randint(1, 3))
        if F.degree_in("x") < 1 or G.degree_in("x") < 1:
            continue
        assert resultant(F, G, "x") == sylvester_resultant(F, G, "x")


def test_resultant_zero_iff_common_factor():
    rng = random.Random(11)
    vars = ("x",)
    for _ in range(40):
        def rnd(d):
            c = [Fraction(rng.randint(-5, 5)) for _ in range(d)] + [Fraction(1)]
            return MultiPoly(QQ, vars, {(i,): v for i, v in enumerate(c) if v})

        f, g = rnd(rng.randint(1, 4)), rnd(rng.randint(1, 4))
        share = rng.random() < 0.5
        if share:
            h = rnd(1)
            f, g = f * h, g * h
        r = resultant(f, g, "x")
        if share:
            assert r.is_zero()
        else:
            # gcd check via the Euclidean algorithm over Q
            from thetaplanes import upoly

            fc = [c.constant_value() for c in f.coeffs_in("x")]
            gc = [c.constant_value() for c in g.coeffs_in("x")]
            gcd = upoly.gcd(fc, gc, QQ)
            assert (upoly.deg(gcd) > 0) == r.is_zero()


def test_discriminant_quadratic_and_cubic():
    vars = ("x", "b", "c", "p", "q")
    f = parse_poly("x^2 + b*x + c", vars)
    assert discriminant(f, "x") == parse_poly("b^2 - 4*c", vars)
    g = parse_poly("x^3 + p*x + q", vars)
    assert discriminant(g, "x") == parse_poly("-4*p^3 - 27*q^2", vars)


def test_discriminant_integer_cubic():
    # (x-1)(x-2)(x-3): product of squared root differences (1*2*1)^2 = 4
    f = parse_poly("x^3 - 6*x^2 + 11*x - 6", ("x",))
    d = discriminant(f, "x")
    assert d.constant_value() == 4


def test_exact_poly_sqrt_examples():
    l, q = exact_poly_sqrt(parse_poly("x^2 + 2*x + 1", ("x",)))
    assert l == 1 and q == parse_poly("x + 1", ("x",))
    l, q = exact_poly_sqrt(parse_poly("4*x^2 - 4*x + 1", ("x",)))
    assert l == 4 and q == parse_poly("x - 1/2", ("x",))
    with pytest.raises(NotASquare):
        exact_poly_sqrt(parse_poly("x^2 + 1", ("x",)))


def test_exact_poly_sqrt_roundtrip_over_q():
    rng = random.Random(3)
    for _ in range(50):
        m = rng.randint(1, 4)
        q = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m)] + [
            Fraction(1)
        ]
        l = Fraction(rng.choice([c for c in range(-7, 8) if c]))
        Q = MultiPoly(QQ, ("x",), {(i,): c for i, c in enumerate(q) if c})
        Pp = Q * Q * l
        l2, Q2 = exact_poly_sqrt(Pp)
        assert l2 == l and Q2 == Q


def test_squareness_equations_symbolic_quartic():
    # F = c4 x^4 + ... + c0 == c4 (x^2 + a3 x + a4)^2
    vars = ("x", "c0", "c1", "c2", "c3", "c4")
    F = parse_poly("c4*x^4 + c3*x^3 + c2*x^2 + c1*x + c0", vars)
    eqs = squareness_equations(F, "x", 2, ("a3", "a4"))
    ext = vars + ("a3", "a4")
    assert eqs[3] == integer_clear(parse_poly("c3 - 2*c4*a3", ext))
    assert eqs[2] == integer_clear(parse_poly("c2 - c4*a3^2 - 2*c4*a4", ext))
    assert eqs[1] == integer_clear(parse_poly("c1 - 2*c4*a3*a4", ext))
    assert eqs[0] == integer_clear(parse_poly("c0 - c4*a4^2", ext))


def test_squareness_equations_identity_case():
    # F = (x^2+1)^2 has (a3, a4) = (0, 1)
    F = parse_poly("x^4 + 2*x^2 + 1", ("x",))
    eqs = squareness_equations(F, "x", 2, ("a3", "a4"))
    point = {"x": Fraction(0), "a3": Fraction(0), "a4": Fraction(1)}
    for e in eqs:
        assert e.eval(point) == 0


def test_integer_clear_sign_and_content():
    p = P("-2/3*x^2 - 4*y")
    q = integer_clear(p)
    assert q == P("x^2 + 6*y")
