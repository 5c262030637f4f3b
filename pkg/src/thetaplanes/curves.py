"""Canonically embedded curves of genus 3-5 over Q and affine chart/plane setup."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .domains import QQ
from .qpoly import MultiPoly, integer_clear, parse_poly

GENUS_SHAPES = {3: [4], 4: [2, 3], 5: [2, 2, 2]}


class CurveShapeError(ValueError):
    pass


def _is_homogeneous(p: MultiPoly) -> bool:
    degs = {sum(e) for e in p.terms}
    return len(degs) <= 1


def _is_squarefree_q(p: MultiPoly) -> bool:
    import sympy

    syms = sympy.symbols(list(p.vars))
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, ex in zip(syms, e):
            term *= s**ex
        expr += term
    _, factors = sympy.factor_list(sympy.Poly(expr, *syms))
    return all(mult == 1 for _, mult in factors)


@dataclass(frozen=True)
class CanonicalCurve:
    genus: int
    vars: tuple
    polys: tuple
    name: str = ""

    @classmethod
    def build(cls, genus: int, vars: Sequence[str], polys: Sequence[MultiPoly], name=""):
        vars = tuple(vars)
        if genus not in GENUS_SHAPES:
            raise CurveShapeError(f"genus must be 3, 4 or 5, got {genus}")
        expected_nvars = genus  # g homogeneous coordinates in P^(g-1)... g-1+1
        if len(vars) != genus:
            raise CurveShapeError(
                f"genus {genus} needs {genus} coordinates, got {len(vars)}"
            )
        polys = tuple(integer_clear(p) for p in polys)
        degs = sorted(p.total_degree() for p in polys)
        if degs != sorted(GENUS_SHAPES[genus]):
            raise CurveShapeError(
                f"genus {genus} expects polynomial degrees {GENUS_SHAPES[genus]}, got {degs}"
            )
        for p in polys:
            if not _is_homogeneous(p):
                raise CurveShapeError("defining polynomials must be homogeneous")
            if p.vars != vars:
                raise CurveShapeError("polynomial ring mismatch")
        if genus == 3 and not _is_squarefree_q(polys[0]):
            raise CurveShapeError("quartic has a repeated factor")
        return cls(genus=genus, vars=vars, polys=polys, name=name)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "genus": self.genus,
            "vars": list(self.vars),
            "polynomials": [p.to_json() for p in self.polys],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CanonicalCurve":
        vars = tuple(obj["vars"])
        polys = []
        for p in obj["polynomials"]:
            if isinstance(p, str):
                polys.append(parse_poly(p, vars))
            elif "expr" in p:
                polys.append(parse_poly(p["expr"], vars))
            else:
                polys.append(MultiPoly.from_json(p))
        return cls.build(obj["genus"], vars, polys, name=obj.get("name", ""))

    @classmethod
    def load(cls, path) -> "CanonicalCurve":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class ChartSpec:
    """Affine chart {chart_var = 1} with planes solved for `solve_var`.

    The plane is solve_var = sum(coeff_names[i] * assignment[coeff_names[i]]),
    where the assignment enumerates every coordinate except solve_var, the
    chart variable last (it carries the inhomogeneous constant).
    """

    chart_var: str
    solve_var: str
    coeff_names: tuple
    assignment: dict = field(compare=False)

    @classmethod
    def build(cls, curve_vars: Sequence[str], chart_var: str, solve_var: str,
              coeff_prefix: str = "a"):
        curve_vars = tuple(curve_vars)
        if chart_var not in curve_vars or solve_var not in curve_vars:
            raise ValueError("chart/solve variables must be coordinates")
        if chart_var == solve_var:
            raise ValueError("solved-for variable equals the chart variable")
        rest = [v for v in curve_vars if v not in (chart_var, solve_var)]
        order = rest + [chart_var]
        names = tuple(f"{coeff_prefix}{i+1}" for i in range(len(order)))
        return cls(
            chart_var=chart_var,
            solve_var=solve_var,
            coeff_names=names,
            assignment={n: v for n, v in zip(names, order)},
        )

    def remaining_vars(self, curve_vars) -> tuple:
        return tuple(
            v for v in curve_vars if v not in (self.chart_var, self.solve_var)
        )

    def to_json(self):
        return {
            "chart_var": self.chart_var,
            "solve_var": self.solve_var,
            "coeffs": list(self.coeff_names),
            "assignment": dict(self.assignment),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            chart_var=obj["chart_var"],
            solve_var=obj["solve_var"],
            coeff_names=tuple(obj["coeffs"]),
            assignment=dict(obj["assignment"]),
        )


def restrict_to_plane(curve: CanonicalCurve, chart: ChartSpec):
    """Substitute the solved plane form and chart into the defining polynomials.

    Returns (ring_vars, restricted polys): ring_vars = remaining coordinates +
    plane coefficients.
    """
    rest = chart.remaining_vars(curve.vars)
    ring_vars = rest + chart.coeff_names
    out = []
    plane = MultiPoly.zero(QQ, ring_vars)
    for name in chart.coeff_names:
        target = chart.assignment[name]
        coeff = MultiPoly.var(QQ, ring_vars, name)
        if target == chart.chart_var:
            plane = plane + coeff
        else:
            plane = plane + coeff * MultiPoly.var(QQ, ring_vars, target)
    one = MultiPoly.const(QQ, ring_vars, 1)
    for f in curve.polys:
        sub = {}
        for v in curve.vars:
            if v == chart.chart_var:
                sub[v] = one
            elif v == chart.solve_var:
                sub[v] = plane
            else:
                sub[v] = MultiPoly.var(QQ, ring_vars, v)
        g = f.extend_vars(curve.vars + chart.coeff_names).subs(
            {k: v.extend_vars(curve.vars + chart.coeff_names) for k, v in sub.items()}
        )
        out.append(g.restrict_vars(ring_vars))
    return ring_vars, out


def builtin_curve(name: str) -> CanonicalCurve:
    ref = resources.files("thetaplanes").joinpath(f"data/{name}.json")
    with ref.open() as fh:
        return CanonicalCurve.from_json(json.load(fh))
