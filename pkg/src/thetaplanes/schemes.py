"""Zero-dimensional schemes whose points are theta hyperplanes.

Genus 3 and 4 are fully automatic (squareness of the restriction, resp. of
the eliminating resultant, plus a discriminant guard).  Genus 5 runs a
composable elimination plan down to a single variable, extracts the degree-8
factor, and enumerates case schemes: one branch per irreducible factor of a
reducible base equation, times the zero/nonzero lattice of the coefficients
of the final linear-combination denominator.

Every non-vanishing condition c gets a fresh auxiliary variable b with the
equation b*c + 1 = 0.  Elimination denominators that are guarded nonzero are
divided out of later polynomials ("stripping"), which is what keeps the
equations content-1 and matches the published fixture systems.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .curves import CanonicalCurve, ChartSpec, restrict_to_plane
from .domains import QQ
from .qpoly import (
    DegenerateChart,
    MultiPoly,
    discriminant,
    integer_clear,
    resultant,
    squareness_equations,
    try_divexact,
)
from .symbridge import condition_radical, factor_multipoly


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class EliminationStep:
    kind: str  # linear-solve | quadratic-pair-combine | resultant
    var: str
    expression: str = ""
    guards: tuple = ()


@dataclass(frozen=True)
class ThetaScheme:
    vars: tuple
    base_eqs: tuple           # squareness system (branch factor included for g=5)
    guards: tuple             # ((condition poly, aux var name), ...)
    zero_eqs: tuple           # case constraints "condition = 0"
    chart: ChartSpec
    genus: int
    free_vars: tuple          # plane coefficients
    sqrt_vars: tuple          # square-root coefficients (g-1 of them)
    restriction: tuple        # dense coeffs (const first) of the final univariate poly
    restriction_var: str
    case_label: str = "main"
    curve_name: str = ""
    notes: tuple = ()
    nonzero_conditions: tuple = ()   # named case conditions ((name, poly), ...)
    zero_conditions: tuple = ()

    @property
    def equations(self) -> tuple:
        eqs = list(self.base_eqs)
        for cond, aux in self.guards:
            a = MultiPoly.var(QQ, self.vars, aux)
            eqs.append(a * cond.extend_vars(self.vars) + MultiPoly.const(QQ, self.vars, 1))
        eqs.extend(self.zero_eqs)
        return tuple(eqs)

    @property
    def aux_vars(self) -> tuple:
        return tuple(aux for _, aux in self.guards)

    def core_equations(self) -> tuple:
        """Equations in the free+sqrt variables only (guards dropped)."""
        return tuple(self.base_eqs) + tuple(self.zero_eqs)

    def core_vars(self) -> tuple:
        return self.free_vars + self.sqrt_vars

    def core_key(self) -> str:
        """Stable identity of the guard-free square system (shared across cases)."""
        import hashlib

        blob = json.dumps(
            [e.restrict_vars(self.core_vars()).to_json() for e in self.base_eqs],
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "equations": [e.to_json() for e in self.equations],
            "guards": [
                {"condition": c.to_json(), "aux": a} for c, a in self.guards
            ],
            "chart": self.chart.to_json(),
            "case_label": self.case_label,
            "meta": {
                "genus": self.genus,
                "curve": self.curve_name,
                "free_vars": list(self.free_vars),
                "sqrt_vars": list(self.sqrt_vars),
                "restriction": [c.to_json() for c in self.restriction],
                "restriction_var": self.restriction_var,
                "base_eqs": [e.to_json() for e in self.base_eqs],
                "zero_eqs": [e.to_json() for e in self.zero_eqs],
                "nonzero_conditions": [
                    [n, c.to_json()] for n, c in self.nonzero_conditions
                ],
                "zero_conditions": [
                    [n, c.to_json()] for n, c in self.zero_conditions
                ],
                "notes": list(self.notes),
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ThetaScheme":
        meta = obj["meta"]
        return cls(
            vars=tuple(obj["vars"]),
            base_eqs=tuple(MultiPoly.from_json(e) for e in meta["base_eqs"]),
            guards=tuple(
                (MultiPoly.from_json(g["condition"]), g["aux"]) for g in obj["guards"]
            ),
            zero_eqs=tuple(MultiPoly.from_json(e) for e in meta["zero_eqs"]),
            chart=ChartSpec.from_json(obj["chart"]),
            genus=meta["genus"],
            free_vars=tuple(meta["free_vars"]),
            sqrt_vars=tuple(meta["sqrt_vars"]),
            restriction=tuple(MultiPoly.from_json(c) for c in meta["restriction"]),
            restriction_var=meta["restriction_var"],
            case_label=obj["case_label"],
            curve_name=meta["curve"],
            notes=tuple(meta.get("notes", ())),
            nonzero_conditions=tuple(
                (n, MultiPoly.from_json(c)) for n, c in meta.get("nonzero_conditions", [])
            ),
            zero_conditions=tuple(
                (n, MultiPoly.from_json(c)) for n, c in meta.get("zero_conditions", [])
            ),
        )

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, sort_keys=True, indent=1)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# -- elimination toolkit --------------------------------------------------------


def subs_rational(F: MultiPoly, var: str, num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Numerator of F with var := num/den, i.e. F(num/den) * den^deg_var(F)."""
    coeffs = F.coeffs_in(var)
    d = len(coeffs) - 1
    acc = MultiPoly.zero(F.domain, F.vars)
    num_p = MultiPoly.const(F.domain, F.vars, F.domain.one())
    den_pows = [MultiPoly.const(F.domain, F.vars, F.domain.one())]
    for _ in range(d):
        den_pows.append(den_pows[-1] * den)
    for i, ci in enumerate(coeffs):
        if not ci.is_zero():
            acc = acc + ci * num_p * den_pows[d - i]
        if i < d:
            num_p = num_p * num
    return acc


def _pure_coeff_condition(p: MultiPoly, coeff_vars) -> bool:
    return p.variables_used() <= set(coeff_vars)


@dataclass
class SolvedVar:
    """var = -num/den after one elimination step."""

    var: str
    num: MultiPoly
    den: MultiPoly
    step: EliminationStep


def eliminate_linear(F: MultiPoly, var: str, coeff_vars=()):
    """Solve F = g1*var + g2 = 0 for var.

    Returns (SolvedVar with var = -g2/g1, guard conditions).  Conditions on
    the plane coefficients become polynomials; a g1 that still involves
    intersection variables is recorded symbolically in the step notes.
    """
    if F.degree_in(var) != 1:
        raise ValueError(f"{var} does not occur linearly")
    g2, g1 = F.coeffs_in(var)
    guards = []
    note = ""
    if g1.is_constant():
        pass  # nonzero constant, nothing to guard
    elif _pure_coeff_condition(g1, coeff_vars):
        guards.append(condition_radical(g1))
    else:
        note = f"nonvanishing assumed symbolically: {g1}"
    step = EliminationStep(
        kind="linear-solve",
        var=var,
        expression=f"{var} = -({g2})/({g1})",
        guards=tuple(repr(g) for g in guards),
    )
    sv = SolvedVar(var=var, num=g2, den=g1, step=step)
    return sv, guards, note


def eliminate_quadratic_pair(F1: MultiPoly, F2: MultiPoly, var: str, coeff_vars=()):
    """Kill the var^2 term of two quadratics and solve the linear remainder.

    Returns (SolvedVar with var = -T2/T1, guard conditions from the leading
    coefficients).  Raises DegenerateChart when the combination has no var
    term left (alpha identically zero).
    """
    if F1.degree_in(var) != 2 or F2.degree_in(var) != 2:
        raise ValueError(f"both inputs must be quadratic in {var}")
    a1 = F1.coeffs_in(var)[2]
    a2 = F2.coeffs_in(var)[2]
    guards = []
    notes = []
    for a in (a1, a2):
        if a.is_constant():
            continue
        if _pure_coeff_condition(a, coeff_vars):
            guards.append(condition_radical(a))
        else:
            notes.append(f"leading coefficient nonvanishing assumed: {a}")
    combo = a2 * F1 - a1 * F2
    if combo.degree_in(var) > 1:
        raise ArithmeticError("var^2 failed to cancel")
    cc = combo.coeffs_in(var)
    T2 = cc[0] if cc else MultiPoly.zero(F1.domain, F1.vars)
    T1 = cc[1] if len(cc) > 1 else MultiPoly.zero(F1.domain, F1.vars)
    if T1.is_zero():
        raise DegenerateChart("combination degenerates: no linear term in " + var)
    step = EliminationStep(
        kind="quadratic-pair-combine",
        var=var,
        expression=f"{var} = -({T2})/({T1})",
        guards=tuple(repr(g) for g in guards),
    )
    return SolvedVar(var=var, num=T2, den=T1, step=step), guards, notes


def strip_guarded(p: MultiPoly, conditions) -> MultiPoly:
    """Divide out guarded-nonzero factors and integer content."""
    if p.is_zero():
        return p
    changed = True
    while changed:
        changed = False
        for c in conditions:
            ce = c.extend_vars(p.vars)
            q = try_divexact(p, ce)
            while q is not None:
                p = q
                changed = True
                q = try_divexact(p, ce)
    return integer_clear(p)


# -- genus 3 ---------------------------------------------------------------------


def build_bitangent_scheme(curve: CanonicalCurve, chart: ChartSpec) -> ThetaScheme:
    if curve.genus != 3:
        raise ValueError("genus-3 curve required")
    ring_vars, (F,) = restrict_to_plane(curve, chart)
    xvar = chart.remaining_vars(curve.vars)[0]
    if F.degree_in(xvar) != 4 or F.coeffs_in(xvar)[4].is_zero():
        raise DegenerateChart(
            "restriction does not have full degree 4; use another chart or plane form"
        )
    r = len(chart.coeff_names)
    sqrt_names = tuple(f"a{r + i + 1}" for i in range(2))
    eqs = squareness_equations(F, xvar, 2, sqrt_names)
    scheme_vars = chart.coeff_names + sqrt_names
    eqs = tuple(e.restrict_vars(scheme_vars) for e in eqs)
    restriction = tuple(
        c.restrict_vars(chart.coeff_names).extend_vars(scheme_vars)
        for c in F.coeffs_in(xvar)
    )
    return ThetaScheme(
        vars=scheme_vars,
        base_eqs=eqs,
        guards=(),
        zero_eqs=(),
        chart=chart,
        genus=3,
        free_vars=chart.coeff_names,
        sqrt_vars=sqrt_names,
        restriction=restriction,
        restriction_var=xvar,
        curve_name=curve.name,
        notes=(f"squareness of the restriction in {xvar}",) * len(eqs),
    )


# -- genus 4 ---------------------------------------------------------------------


def build_tritangent_scheme(curve: CanonicalCurve, chart: ChartSpec) -> ThetaScheme:
    if curve.genus != 4:
        raise ValueError("genus-4 curve required")
    ring_vars, polys = restrict_to_plane(curve, chart)
    rest = chart.remaining_vars(curve.vars)
    keep, elim = rest[0], rest[1]
    R = resultant(polys[0], polys[1], elim)
    if R.is_zero():
        raise DegenerateChart("resultant vanishes identically; change chart")
    if R.degree_in(keep) != 6 or R.coeffs_in(keep)[6].is_zero():
        raise DegenerateChart(
            "eliminating resultant does not have full degree 6; change chart"
        )
    R = integer_clear(R)
    r = len(chart.coeff_names)
    sqrt_names = tuple(f"a{r + i + 1}" for i in range(3))
    eqs = squareness_equations(R, keep, 3, sqrt_names)
    core_vars = chart.coeff_names + sqrt_names
    eqs = tuple(e.restrict_vars(core_vars) for e in eqs)
    aux = f"a{r + 4}"
    scheme_vars = core_vars + (aux,)
    delta = _monic_disc(sqrt_names, core_vars)
    restriction = tuple(
        c.restrict_vars(chart.coeff_names).extend_vars(scheme_vars)
        for c in R.coeffs_in(keep)
    )
    return ThetaScheme(
        vars=scheme_vars,
        base_eqs=tuple(e.extend_vars(scheme_vars) for e in eqs),
        guards=((delta.extend_vars(scheme_vars), aux),),
        zero_eqs=(),
        chart=chart,
        genus=4,
        free_vars=chart.coeff_names,
        sqrt_vars=sqrt_names,
        restriction=restriction,
        restriction_var=keep,
        curve_name=curve.name,
        notes=(f"squareness of Res_{elim} in {keep}",) * len(eqs)
        + ("discriminant guard",),
    )


def _monic_disc(sqrt_names, ring_vars):
    """Discriminant of t^m + b1 t^(m-1) + ... + bm in the given coefficients."""
    m = len(sqrt_names)
    tvars = ("_t",) + tuple(ring_vars)
    q = MultiPoly.var(QQ, tvars, "_t", m)
    for i, name in enumerate(sqrt_names):
        q = q + MultiPoly.var(QQ, tvars, name) * MultiPoly.var(QQ, tvars, "_t", m - 1 - i)
    d = discriminant(q, "_t")
    return integer_clear(d.restrict_vars(tuple(ring_vars)))


# -- genus 5 ---------------------------------------------------------------------


def load_plan(path_or_obj) -> dict:
    if isinstance(path_or_obj, dict):
        return path_or_obj
    with open(path_or_obj) as fh:
        return json.load(fh)


def builtin_plan(name: str) -> dict:
    ref = resources.files("thetaplanes").joinpath(f"data/{name}_plan.json")
    with ref.open() as fh:
        return json.load(fh)


def auto_plan(polys, xvars, coeff_vars) -> dict:
    """Derive an elimination plan: prefer a linear solve with a pure-coefficient
    leading term, then a quadratic pair combine, falling back to a resultant."""
    steps = []
    # stage 1: 3 polys, 3 vars
    best = None
    for i, P in enumerate(polys):
        for v in xvars:
            if P.degree_in(v) == 1:
                g1 = P.coeffs_in(v)[1]
                pure = _pure_coeff_condition(g1, coeff_vars)
                cand = (0 if pure else 1, i, v)
                if best is None or cand < best:
                    best = cand
    if best is not None:
        _, i, v = best
        steps.append({"kind": "linear-solve", "poly": i, "var": v})
        remaining = [v2 for v2 in xvars if v2 != v]
    else:
        for v in xvars:
            if all(P.degree_in(v) == 2 for P in polys[:2]):
                steps.append({"kind": "quadratic-pair-combine", "polys": [0, 1], "var": v})
                remaining = [v2 for v2 in xvars if v2 != v]
                break
        else:
            raise PlanError("no first elimination step found")
    # stage 2 decided at build time from the two surviving polynomials
    return {"steps": steps, "keep": remaining[0], "stage2": "auto"}


def build_quadritangent_schemes(
    curve: CanonicalCurve, chart: ChartSpec, plan: dict | None = None
) -> list[ThetaScheme]:
    if curve.genus != 5:
        raise ValueError("genus-5 curve required")
    ring_vars, polys = restrict_to_plane(curve, chart)
    xvars = list(chart.remaining_vars(curve.vars))
    coeff_vars = chart.coeff_names
    if plan is None:
        plan = auto_plan(polys, xvars, coeff_vars)

    guards: list[MultiPoly] = []
    notes: list[str] = []
    steps = list(plan["steps"])

    # -- stage 1: eliminate one variable from three quadrics
    st = steps[0]
    if st["kind"] == "linear-solve":
        sv, g, note = eliminate_linear(polys[st["poly"]], st["var"], coeff_vars)
        if note:
            notes.append(note)
        guards.extend(g)
        others = [P for i, P in enumerate(polys) if i != st["poly"]]
    elif st["kind"] == "quadratic-pair-combine":
        i, j = st["polys"]
        sv, g, ns = eliminate_quadratic_pair(polys[i], polys[j], st["var"], coeff_vars)
        guards.extend(g)
        notes.extend(ns)
        others = [P for k, P in enumerate(polys) if k not in (i, j)] + [polys[i]]
    else:
        raise PlanError(f"unsupported first step {st['kind']}")
    elim1 = st["var"]
    stage2_polys = []
    for P in others:
        Q = subs_rational(P, elim1, -sv.num, sv.den)
        stage2_polys.append(strip_guarded(Q, guards))
    if any(p.is_zero() for p in stage2_polys):
        raise DegenerateChart("a defining polynomial collapsed after substitution")

    keep = plan.get("keep") or [v for v in xvars if v != elim1][0]
    elim2 = [v for v in xvars if v not in (elim1, keep)][0]

    # -- stage 2: eliminate the second variable, keep `keep`
    h1, h2 = stage2_polys[0], stage2_polys[1]
    case_conditions: list[tuple[str, MultiPoly]] = []
    if len(steps) > 1 and steps[1].get("kind") == "resultant":
        r = resultant(h1, h2, elim2)
        step2 = EliminationStep(kind="resultant", var=elim2, expression="Res")
    elif h1.degree_in(elim2) == 2 and h2.degree_in(elim2) == 2:
        sv2, g2, ns2 = eliminate_quadratic_pair(h1, h2, elim2, coeff_vars)
        guards.extend(g2)
        notes.extend(ns2)
        # nonvanishing of the linear-term polynomial: case lattice on its
        # coefficients (top degree first), each factored into irreducibles
        T1s = strip_guarded(sv2.den, guards)
        tcoeffs = T1s.coeffs_in(keep)
        idx = 1
        for ci in reversed(list(enumerate(tcoeffs))):
            pos, cpoly = ci
            if cpoly.is_zero():
                continue
            cpoly = integer_clear(cpoly)
            factors = factor_multipoly(cpoly)
            if len(factors) == 1 and factors[0][1] == 1:
                case_conditions.append((f"t{idx}", factors[0][0]))
                idx += 1
            else:
                for j, (f, _) in enumerate(factors):
                    case_conditions.append((f"t{idx}.k{j+1}", f))
                idx += 1
        r = subs_rational(h1, elim2, -sv2.num, sv2.den)
        step2 = sv2.step
    elif h1.degree_in(elim2) == 1 or h2.degree_in(elim2) == 1:
        src = h1 if h1.degree_in(elim2) == 1 else h2
        other = h2 if src is h1 else h1
        sv2, g2, note = eliminate_linear(src, elim2, coeff_vars)
        if note:
            notes.append(note)
        guards.extend(g2)
        r = subs_rational(other, elim2, -sv2.num, sv2.den)
        step2 = sv2.step
    else:
        r = resultant(h1, h2, elim2)
        step2 = EliminationStep(kind="resultant", var=elim2, expression="Res")
    notes.append(f"stage1: {sv.step.expression}")
    notes.append(f"stage2: {step2.expression}")

    h = strip_guarded(r, guards)
    if h.degree_in(keep) != 8:
        raise PlanError(
            f"no degree-8 factor: elimination left degree {h.degree_in(keep)} in {keep}"
        )
    if not _degree8_irreducible_heuristic(h, keep, coeff_vars):
        notes.append("warning: degree-8 factor not certified irreducible")

    # -- squareness system
    r0 = len(coeff_vars)
    sqrt_names = tuple(f"a{r0 + i + 1}" for i in range(4))
    eqs_raw = squareness_equations(h, keep, 4, sqrt_names)
    core_vars = coeff_vars + sqrt_names
    base_eqs = [
        strip_guarded(e, guards).restrict_vars(core_vars) for e in eqs_raw
    ]
    delta = _monic_disc(sqrt_names, core_vars)
    restriction_coeffs = tuple(
        c.restrict_vars(coeff_vars).extend_vars(core_vars) for c in h.coeffs_in(keep)
    )
    # normalize guard/case polynomials into the core ring (they are pure-a)
    guards = [g.restrict_vars(coeff_vars).extend_vars(core_vars) for g in guards]
    case_conditions = [
        (n, c.restrict_vars(coeff_vars).extend_vars(core_vars))
        for n, c in case_conditions
    ]

    # -- branch split on reducible base equations
    branches: list[tuple[str, list[MultiPoly]]] = [("", base_eqs)]
    for i, e in enumerate(base_eqs):
        factors = factor_multipoly(e)
        if len(factors) > 1 or (factors and factors[0][1] > 1):
            parts = [f for f, _ in factors]
            new_branches = []
            for label, eqs in branches:
                for j, f in enumerate(parts):
                    eqs2 = list(eqs)
                    eqs2[i] = f
                    new_branches.append((f"{label}s{j+1}" if not label else f"{label}.s{j+1}", eqs2))
            branches = new_branches
            notes.append(f"base equation {i+1} splits into {len(parts)} factors")

    schemes: list[ThetaScheme] = []
    for branch_label, eqs in branches:
        label = branch_label or "s1"
        schemes.extend(
            _assemble_g5_cases(
                curve, chart, label, eqs, guards, delta, case_conditions,
                core_vars, sqrt_names, restriction_coeffs, keep, tuple(notes),
            )
        )
    return schemes


def _degree8_irreducible_heuristic(h, keep, coeff_vars, tries=12) -> bool:
    """Certify irreducibility of h over Q(a1..a4) by an irreducible specialization."""
    import random

    from .padic import FpDomain, poly_is_irreducible_mod_p

    rng = random.Random(20)
    coeffs = h.coeffs_in(keep)
    for _ in range(tries):
        p = rng.choice([101, 211, 307, 401, 503])
        point = {v: QQ.coerce(rng.randint(-30, 30)) for v in coeff_vars}
        spec = [c.eval(point) for c in coeffs]
        ints = []
        ok = True
        for c in spec:
            if c.denominator % p == 0:
                ok = False
                break
            ints.append(c.numerator * pow(c.denominator, -1, p) % p)
        if not ok or ints[-1] % p == 0:
            continue
        if poly_is_irreducible_mod_p(ints, p):
            return True
    return False


def _assemble_g5_cases(
    curve, chart, branch_label, base_eqs, stage_guards, delta, case_conditions,
    core_vars, sqrt_names, restriction_coeffs, keep, notes,
):
    schemes = []
    ncond = len(case_conditions)
    # base scheme (no case constraints), then the zero/nonzero lattice
    masks = [None] + [m for m in _masks_by_weight(ncond)]
    for mask in masks:
        if mask is None:
            zero_idx, nonzero_idx = [], []
            tag = "base"
        else:
            zero_idx = [i for i in range(ncond) if mask >> i & 1]
            nonzero_idx = [i for i in range(ncond) if not (mask >> i & 1)]
            if _t1_vanishes(case_conditions, zero_idx):
                continue
            bits = []
            for i, (name, _) in enumerate(case_conditions):
                bits.append(f"{name}{'=0' if i in zero_idx else '!=0'}")
            tag = ",".join(bits)

        guard_list = [(delta, None)] + [(g, None) for g in stage_guards]
        if mask is not None:
            guard_list += [(case_conditions[i][1], None) for i in nonzero_idx]
        r0 = len(core_vars)
        vars_all = tuple(core_vars) + tuple(
            f"a{r0 + i + 1}" for i in range(len(guard_list))
        )
        guards = tuple(
            (c.extend_vars(vars_all) if c.vars != vars_all else c, f"a{r0 + i + 1}")
            for i, (c, _) in enumerate(guard_list)
        )
        zero_eqs = ()
        if mask is not None:
            zero_eqs = tuple(
                case_conditions[i][1].extend_vars(vars_all) for i in zero_idx
            )
        schemes.append(
            ThetaScheme(
                vars=vars_all,
                base_eqs=tuple(e.extend_vars(vars_all) for e in base_eqs),
                guards=guards,
                zero_eqs=zero_eqs,
                chart=chart,
                genus=5,
                free_vars=chart.coeff_names,
                sqrt_vars=sqrt_names,
                restriction=tuple(c.extend_vars(vars_all) for c in restriction_coeffs),
                restriction_var=keep,
                case_label=f"{branch_label}:{tag}",
                curve_name=curve.name,
                notes=notes,
                nonzero_conditions=tuple(
                    (case_conditions[i][0], case_conditions[i][1]) for i in nonzero_idx
                )
                if mask is not None
                else (),
                zero_conditions=tuple(
                    (case_conditions[i][0], case_conditions[i][1]) for i in zero_idx
                )
                if mask is not None
                else (),
            )
        )
    return schemes


def _masks_by_weight(n):
    masks = list(range(1 << n))
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    return masks


def _t1_vanishes(case_conditions, zero_idx) -> bool:
    """True when the zero pattern forces every coefficient of T1 to vanish."""
    zset = {case_conditions[i][0] for i in zero_idx}
    groups: dict[str, list[str]] = {}
    for name, _ in case_conditions:
        root = name.split(".")[0]
        groups.setdefault(root, []).append(name)
    # coefficient t_i vanishes iff any of its factors is in the zero set
    all_zero = True
    for root, names in groups.items():
        coeff_zero = any(n in zset for n in names)
        if not coeff_zero:
            all_zero = False
    return all_zero


def build_schemes(curve: CanonicalCurve, chart: ChartSpec, plan=None):
    """Genus-dispatching front door used by the CLI."""
    if curve.genus == 3:
        return [build_bitangent_scheme(curve, chart)]
    if curve.genus == 4:
        return [build_tritangent_scheme(curve, chart)]
    return build_quadritangent_schemes(curve, chart, plan)
