import pytest

from thetaplanes.curves import (
    CanonicalCurve,
    ChartSpec,
    CurveShapeError,
    builtin_curve,
    restrict_to_plane,
)
from thetaplanes.qpoly import DegenerateChart, MultiPoly, integer_clear, parse_poly
from thetaplanes.schemes import (
    ThetaScheme,
    build_bitangent_scheme,
    build_quadritangent_schemes,
    build_tritangent_scheme,
    eliminate_linear,
    eliminate_quadratic_pair,
    strip_guarded,
    subs_rational,
)

AV8 = tuple(f"a{i}" for i in range(1, 9))


def test_curve_shape_validation():
    with pytest.raises(CurveShapeError):
        # (x^2+y^2+z^2)^2 is a degenerate quartic
        CanonicalCurve.from_json(
            {
                "genus": 3,
                "vars": ["x", "y", "z"],
                "polynomials": ["(x^2 + y^2 + z^2) * (x^2 + y^2 + z^2)"],
            }
        )
    with pytest.raises(CurveShapeError):
        CanonicalCurve.from_json(
            {"genus": 4, "vars": ["x", "y", "z", "w"], "polynomials": ["x^2 - y*z"]}
        )


def test_bitangent_scheme_matches_published_equations():
    curve = builtin_curve("x075w25")
    chart = ChartSpec.build(curve.vars, chart_var="z", solve_var="x")
    s = build_bitangent_scheme(curve, chart)
    assert s.vars == ("a1", "a2", "a3", "a4")
    assert len(s.equations) == 4 and not s.guards
    A = ("a1", "a2", "a3", "a4")
    e1 = parse_poly(
        "3*a1^2*a4^2 + 3*a1*a4^2 + 3*a2^3 + 5*a2^2 + 3*a2 - 2*a4^2", A
    )
    e2 = parse_poly(
        "6*a1^2*a3*a4 + 9*a1*a2^2 + 10*a1*a2 + 6*a1*a3*a4 + 3*a1 - a2 - 4*a3*a4 - 3",
        A,
    )
    e3 = parse_poly(
        "9*a1^2*a2 + 3*a1^2*a3^2 + 6*a1^2*a4 + 5*a1^2 + 3*a1*a3^2 + 6*a1*a4 - a1"
        " - 3*a2^2 - 19*a2 - 2*a3^2 - 4*a4 - 7",
        A,
    )
    e4 = parse_poly(
        "3*a1^3 + 6*a1^2*a3 - 6*a1*a2 + 6*a1*a3 - 19*a1 - 3*a2 - 4*a3 + 7", A
    )
    assert list(s.base_eqs) == [integer_clear(e) for e in (e1, e2, e3, e4)]


def test_bitangent_scheme_rejects_degenerate_chart():
    # z divides f, so the restriction to z=1 with x = a1*y + a2 has y-degree
    # 3 < 4: the leading coefficient vanishes identically and the chart must
    # be changed.
    curve = CanonicalCurve.from_json(
        {
            "genus": 3,
            "vars": ["x", "y", "z"],
            "polynomials": ["z*x^3 + z*y^3 + z^4 + x*y*z^2"],
        }
    )
    chart = ChartSpec.build(curve.vars, chart_var="z", solve_var="x")
    with pytest.raises(DegenerateChart):
        build_bitangent_scheme(curve, chart)


def test_tritangent_scheme_shape():
    curve = builtin_curve("x054")
    chart = ChartSpec.build(curve.vars, chart_var="w", solve_var="x")
    s = build_tritangent_scheme(curve, chart)
    assert s.vars == tuple(f"a{i}" for i in range(1, 8))
    assert len(s.base_eqs) == 6
    assert len(s.guards) == 1
    cond, aux = s.guards[0]
    assert aux == "a7"
    # guard equation a7*Delta + 1 cannot vanish when Delta = 0
    eqs = s.equations
    assert len(eqs) == 7
    # restriction is the degree-6 resultant in y
    assert len(s.restriction) == 7


def test_eliminate_linear_examples():
    V = ("x", "y")
    F = parse_poly("x + 1", V)
    sv, guards, note = eliminate_linear(F, "x", coeff_vars=("y",))
    assert not guards and sv.num == parse_poly("1", V)
    # common-factor case: y*x + y solves to -1 with guard y != 0
    F = parse_poly("y*x + y", V)
    sv, guards, note = eliminate_linear(F, "x", coeff_vars=("y",))
    assert guards == [parse_poly("y", V)]
    assert sv.num == sv.den  # phi = -g2/g1 = -1


def test_eliminate_quadratic_pair_examples():
    V = ("x", "u", "v")
    F1 = parse_poly("x^2 + u", V)
    F2 = parse_poly("x^2 + v", V)
    with pytest.raises(DegenerateChart):
        eliminate_quadratic_pair(F1, F2, "x", coeff_vars=("u", "v"))
    F1 = parse_poly("x^2 + x + u", V)
    F2 = parse_poly("x^2 + 2*x + v", V)
    sv, guards, notes = eliminate_quadratic_pair(F1, F2, "x", coeff_vars=("u", "v"))
    assert not guards
    # x = -T2/T1 should simplify to u - v
    x_num = -sv.num
    x_den = sv.den
    assert x_num == parse_poly("u - v", V) * x_den or x_num == -(
        parse_poly("u - v", V) * -x_den
    )


X42_RING = ("x2", "x3", "x4", "a1", "a2", "a3", "a4")


def _x42_stage1():
    curve = builtin_curve("x042")
    chart = ChartSpec.build(curve.vars, chart_var="x5", solve_var="x1")
    ring_vars, polys = restrict_to_plane(curve, chart)
    return curve, chart, ring_vars, polys


def test_x042_restricted_polynomials_match_published():
    _, _, ring_vars, polys = _x42_stage1()
    F1 = parse_poly(
        "-x2^2 + a1*x2*x3 + a2*x3^2 + (a3 + 1)*x3*x4 + a4*x3", ring_vars
    )
    F2 = parse_poly(
        "(a1 - 1)*x2 - x3^2 + a2*x3 + (a3 + 1)*x4 + a4 - 1", ring_vars
    )
    F3 = parse_poly(
        "-x2*x3 + (a1 + 1)*x2*x4 - x3^2 + (a2 + 1)*x3*x4 + x3 + (a3 - 1)*x4^2"
        " + (a4 - 2)*x4",
        ring_vars,
    )
    assert polys[0] == F1
    assert polys[1] == F2
    assert polys[2] == F3


def test_x042_stage1_elimination_matches_published_g1_g2():
    _, _, ring_vars, polys = _x42_stage1()
    sv, guards, _ = eliminate_linear(polys[1], "x2", coeff_vars=ring_vars[3:])
    assert guards == [parse_poly("a1 - 1", ring_vars)]
    G1 = strip_guarded(subs_rational(polys[0], "x2", -sv.num, sv.den), guards)
    G2 = strip_guarded(subs_rational(polys[2], "x2", -sv.num, sv.den), guards)
    G1p = parse_poly(
        "-x3^4 + (a1^2 - a1 + 2*a2)*x3^3 + (2*a3 + 2)*x3^2*x4"
        " + (-a1*a2 - a2^2 + a2 + 2*a4 - 2)*x3^2"
        " + (-a1*a3 - a1 - 2*a2*a3 - 2*a2 + a3 + 1)*x3*x4"
        " + (a1^2 - a1*a4 - a1 - 2*a2*a4 + 2*a2 + a4)*x3"
        " + (-a3^2 - 2*a3 - 1)*x4^2 + (-2*a3*a4 + 2*a3 - 2*a4 + 2)*x4"
        " - a4^2 + 2*a4 - 1",
        ring_vars,
    )
    G2p = parse_poly(
        "-x3^3 + (a1 + 1)*x3^2*x4 + (-a1 + a2 + 1)*x3^2 + (a1 - 2*a2 + a3)*x3*x4"
        " + (a1 + a4 - 2)*x3 + (-2*a1 - 2*a3)*x4^2 + (-a1 - 2*a4 + 3)*x4",
        ring_vars,
    )
    assert G1 == integer_clear(G1p)
    assert G2 == integer_clear(G2p)
    # leading x4^2 coefficients as printed
    assert G1.coeffs_in("x4")[2] == parse_poly("-(a3 + 1)^2", ring_vars)
    assert G2.coeffs_in("x4")[2] == parse_poly("-2*(a1 + a3)", ring_vars)


def test_x042_case_schemes_match_published_structure():
    curve, chart, _, _ = _x42_stage1()
    schemes = build_quadritangent_schemes(curve, chart)
    A = tuple(f"a{i}" for i in range(1, 9))
    s1p = integer_clear(
        parse_poly("a3*a4 - a3*a8 - a3 - 2*a4^2 + 5*a4 + a8 - 3", A)
    )
    s2p = integer_clear(
        parse_poly("a3*a4 + a3*a8 - a3 - 2*a4^2 + 5*a4 - a8 - 3", A)
    )
    t1p = integer_clear(parse_poly("a1*a3 - 3*a1 - 3*a3 + 1", A))
    k1p = integer_clear(parse_poly("a1 + 2*a2 + a3", A))
    k2p = integer_clear(parse_poly("2*a1 + a3 - 1", A))
    t3p = integer_clear(
        parse_poly("a1*a3 - 4*a1*a4 + 5*a1 - 2*a3*a4 + a3 + 2*a4 - 3", A)
    )

    # two branches from the split base equation
    bases = [s for s in schemes if s.case_label.endswith(":base")]
    assert len(bases) == 2
    branch_factors = {b.base_eqs[0].restrict_vars(A) for b in bases}
    assert branch_factors == {s1p, s2p}

    # the split equation is the constant-coefficient one (first)
    for b in bases:
        assert len(b.base_eqs) == 8
        assert len(b.equations) == 12 and len(b.vars) == 12
        # guard order: disc, a1-1, a3+1, a1+a3 on a9..a12
        conds = [c for c, _ in b.guards]
        auxs = [a for _, a in b.guards]
        assert auxs == ["a9", "a10", "a11", "a12"]
        assert conds[1].restrict_vars(A) == integer_clear(parse_poly("a1 - 1", A))
        assert conds[2].restrict_vars(A) == integer_clear(parse_poly("a3 + 1", A))
        assert conds[3].restrict_vars(A) == integer_clear(parse_poly("a1 + a3", A))

    # case conditions are t1, k1, k2, t3 as published
    full = [
        s
        for s in schemes
        if s.nonzero_conditions and len(s.nonzero_conditions) == 4
    ]
    assert full  # the all-nonzero case exists per branch
    cond_polys = {c.restrict_vars(A) for _, c in full[0].nonzero_conditions}
    assert cond_polys == {t1p, k1p, k2p, t3p}
    # all-nonzero case: 16 equations in 16 variables
    assert len(full[0].equations) == 16 and len(full[0].vars) == 16

    # a single k2=0 case per branch has 16 equations in 15 variables
    k2zero = [
        s
        for s in schemes
        if len(s.zero_conditions) == 1
        and s.zero_conditions[0][1].restrict_vars(A) == k2p
    ]
    assert k2zero
    assert len(k2zero[0].equations) == 16 and len(k2zero[0].vars) == 15


def test_x042_scheme_json_roundtrip():
    curve, chart, _, _ = _x42_stage1()
    schemes = build_quadritangent_schemes(curve, chart)
    s = schemes[0]
    s2 = ThetaScheme.from_json(s.to_json())
    assert s2.equations == s.equations
    assert s2.case_label == s.case_label
    assert s2.guards == s.guards
