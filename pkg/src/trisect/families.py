"""Generators for the two explicit surface families.

Family one carries a trisection with a triple point at Q and a double
point at R, hence genus zero.  Family two sits on the degenerate branch
f(t0) = -(a t0 + b)^4 / 3 and carries a whole pencil of genus-zero
trisections through Q and R.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import SingularSystemError, UPoly, interpolate, rational_roots, root_multiplicity, solve_linear
from .surface import EllipticSurface, SurfacePoint, classify_fibre, is_dp1_blowup
from .trisection import (
    PencilParams,
    Trisection,
    build_trisection_closed,
    condition_poly,
    curve_poly,
    genus,
    multiplicity_of,
)


class FamilyInputError(ValueError):
    pass


class ResidualError(ArithmeticError):
    """A defining condition of a family failed to vanish after substitution."""


# Monomials coef * a^i b^j t0^k t1^l f_p f_q of the quadratic-in-f term used by g2.
G_TERMS = (
    ("-5/4", 3, 0, 7, 2, 4, 4),
    ("-1", 3, 0, 6, 3, 4, 4),
    ("-2", 3, 0, 6, 2, 3, 4),
    ("-3/4", 3, 0, 5, 4, 4, 4),
    ("-3/2", 3, 0, 5, 3, 3, 4),
    ("-3/4", 3, 0, 5, 2, 3, 3),
    ("-3/2", 3, 0, 5, 2, 2, 4),
    ("-1/2", 3, 0, 4, 5, 4, 4),
    ("-1", 3, 0, 4, 4, 3, 4),
    ("-1/2", 3, 0, 4, 3, 3, 3),
    ("-1", 3, 0, 4, 3, 2, 4),
    ("-1", 3, 0, 4, 2, 2, 3),
    ("-1", 3, 0, 4, 2, 1, 4),
    ("-1/4", 3, 0, 3, 6, 4, 4),
    ("-1/2", 3, 0, 3, 5, 3, 4),
    ("-1/4", 3, 0, 3, 4, 3, 3),
    ("-1/2", 3, 0, 3, 4, 2, 4),
    ("-1/2", 3, 0, 3, 3, 2, 3),
    ("-1/2", 3, 0, 3, 3, 1, 4),
    ("-1/4", 3, 0, 3, 2, 2, 2),
    ("-1/2", 3, 0, 3, 2, 1, 3),
    ("-1/2", 3, 0, 3, 2, 0, 4),
    ("-1/2", 3, 0, 1, 1, 0, 1),
    ("-1/4", 3, 0, 1, 0, 0, 0),
    ("-1/2", 3, 0, 0, 1, 0, 0),
    ("-5/2", 2, 1, 7, 1, 4, 4),
    ("-15/4", 2, 1, 6, 2, 4, 4),
    ("-4", 2, 1, 6, 1, 3, 4),
    ("-3", 2, 1, 5, 3, 4, 4),
    ("-6", 2, 1, 5, 2, 3, 4),
    ("-3/2", 2, 1, 5, 1, 3, 3),
    ("-3", 2, 1, 5, 1, 2, 4),
    ("-9/4", 2, 1, 4, 4, 4, 4),
    ("-9/2", 2, 1, 4, 3, 3, 4),
    ("-9/4", 2, 1, 4, 2, 3, 3),
    ("-9/2", 2, 1, 4, 2, 2, 4),
    ("-2", 2, 1, 4, 1, 2, 3),
    ("-2", 2, 1, 4, 1, 1, 4),
    ("-3/2", 2, 1, 3, 5, 4, 4),
    ("-3", 2, 1, 3, 4, 3, 4),
    ("-3/2", 2, 1, 3, 3, 3, 3),
    ("-3", 2, 1, 3, 3, 2, 4),
    ("-3", 2, 1, 3, 2, 2, 3),
    ("-3", 2, 1, 3, 2, 1, 4),
    ("-1/2", 2, 1, 3, 1, 2, 2),
    ("-1", 2, 1, 3, 1, 1, 3),
    ("-1", 2, 1, 3, 1, 0, 4),
    ("-3/4", 2, 1, 2, 6, 4, 4),
    ("-3/2", 2, 1, 2, 5, 3, 4),
    ("-3/4", 2, 1, 2, 4, 3, 3),
    ("-3/2", 2, 1, 2, 4, 2, 4),
    ("-3/2", 2, 1, 2, 3, 2, 3),
    ("-3/2", 2, 1, 2, 3, 1, 4),
    ("-3/4", 2, 1, 2, 2, 2, 2),
    ("-3/2", 2, 1, 2, 2, 1, 3),
    ("-3/2", 2, 1, 2, 2, 0, 4),
    ("1/2", 2, 1, 1, 1, 1, 1),
    ("1", 2, 1, 1, 1, 0, 2),
    ("1/2", 2, 1, 0, 1, 0, 1),
    ("-3/4", 2, 1, 0, 0, 0, 0),
    ("-5/4", 1, 2, 7, 0, 4, 4),
    ("-9/2", 1, 2, 6, 1, 4, 4),
    ("-2", 1, 2, 6, 0, 3, 4),
    ("-15/4", 1, 2, 5, 2, 4, 4),
    ("-15/2", 1, 2, 5, 1, 3, 4),
    ("-3/4", 1, 2, 5, 0, 3, 3),
    ("-3/2", 1, 2, 5, 0, 2, 4),
    ("-3", 1, 2, 4, 3, 4, 4),
    ("-6", 1, 2, 4, 2, 3, 4),
    ("-3", 1, 2, 4, 1, 3, 3),
    ("-6", 1, 2, 4, 1, 2, 4),
    ("-1", 1, 2, 4, 0, 2, 3),
    ("-1", 1, 2, 4, 0, 1, 4),
    ("-9/4", 1, 2, 3, 4, 4, 4),
    ("-9/2", 1, 2, 3, 3, 3, 4),
    ("-9/4", 1, 2, 3, 2, 3, 3),
    ("-9/2", 1, 2, 3, 2, 2, 4),
    ("-9/2", 1, 2, 3, 1, 2, 3),
    ("-9/2", 1, 2, 3, 1, 1, 4),
    ("-1/4", 1, 2, 3, 0, 2, 2),
    ("-1/2", 1, 2, 3, 0, 1, 3),
    ("-1/2", 1, 2, 3, 0, 0, 4),
    ("-3/2", 1, 2, 2, 5, 4, 4),
    ("-3", 1, 2, 2, 4, 3, 4),
    ("-3/2", 1, 2, 2, 3, 3, 3),
    ("-3", 1, 2, 2, 3, 2, 4),
    ("-3", 1, 2, 2, 2, 2, 3),
    ("-3", 1, 2, 2, 2, 1, 4),
    ("-3/2", 1, 2, 2, 1, 2, 2),
    ("-3", 1, 2, 2, 1, 1, 3),
    ("-3", 1, 2, 2, 1, 0, 4),
    ("-3/4", 1, 2, 1, 6, 4, 4),
    ("-3/2", 1, 2, 1, 5, 3, 4),
    ("-3/4", 1, 2, 1, 4, 3, 3),
    ("-3/2", 1, 2, 1, 4, 2, 4),
    ("-3/2", 1, 2, 1, 3, 2, 3),
    ("-3/2", 1, 2, 1, 3, 1, 4),
    ("-3/4", 1, 2, 1, 2, 2, 2),
    ("-3/2", 1, 2, 1, 2, 1, 3),
    ("-3/2", 1, 2, 1, 2, 0, 4),
    ("-3/2", 1, 2, 1, 1, 1, 2),
    ("-3/2", 1, 2, 1, 1, 0, 3),
    ("1/4", 1, 2, 1, 0, 1, 1),
    ("1/2", 1, 2, 1, 0, 0, 2),
    ("1", 1, 2, 0, 0, 0, 1),
    ("-7/4", 0, 3, 6, 0, 4, 4),
    ("-3/2", 0, 3, 5, 1, 4, 4),
    ("-3", 0, 3, 5, 0, 3, 4),
    ("-5/4", 0, 3, 4, 2, 4, 4),
    ("-5/2", 0, 3, 4, 1, 3, 4),
    ("-5/4", 0, 3, 4, 0, 3, 3),
    ("-5/2", 0, 3, 4, 0, 2, 4),
    ("-1", 0, 3, 3, 3, 4, 4),
    ("-2", 0, 3, 3, 2, 3, 4),
    ("-1", 0, 3, 3, 1, 3, 3),
    ("-2", 0, 3, 3, 1, 2, 4),
    ("-2", 0, 3, 3, 0, 2, 3),
    ("-2", 0, 3, 3, 0, 1, 4),
    ("-3/4", 0, 3, 2, 4, 4, 4),
    ("-3/2", 0, 3, 2, 3, 3, 4),
    ("-3/4", 0, 3, 2, 2, 3, 3),
    ("-3/2", 0, 3, 2, 2, 2, 4),
    ("-3/2", 0, 3, 2, 1, 2, 3),
    ("-3/2", 0, 3, 2, 1, 1, 4),
    ("-3/4", 0, 3, 2, 0, 2, 2),
    ("-3/2", 0, 3, 2, 0, 1, 3),
    ("-3/2", 0, 3, 2, 0, 0, 4),
    ("-1/2", 0, 3, 1, 5, 4, 4),
    ("-1", 0, 3, 1, 4, 3, 4),
    ("-1/2", 0, 3, 1, 3, 3, 3),
    ("-1", 0, 3, 1, 3, 2, 4),
    ("-1", 0, 3, 1, 2, 2, 3),
    ("-1", 0, 3, 1, 2, 1, 4),
    ("-1/2", 0, 3, 1, 1, 2, 2),
    ("-1", 0, 3, 1, 1, 1, 3),
    ("-1", 0, 3, 1, 1, 0, 4),
    ("-1", 0, 3, 1, 0, 1, 2),
    ("-1", 0, 3, 1, 0, 0, 3),
    ("-1/4", 0, 3, 0, 6, 4, 4),
    ("-1/2", 0, 3, 0, 5, 3, 4),
    ("-1/4", 0, 3, 0, 4, 3, 3),
    ("-1/2", 0, 3, 0, 4, 2, 4),
    ("-1/2", 0, 3, 0, 3, 2, 3),
    ("-1/2", 0, 3, 0, 3, 1, 4),
    ("-1/4", 0, 3, 0, 2, 2, 2),
    ("-1/2", 0, 3, 0, 2, 1, 3),
    ("-1/2", 0, 3, 0, 2, 0, 4),
    ("-1/2", 0, 3, 0, 1, 1, 2),
    ("-1/2", 0, 3, 0, 1, 0, 3),
    ("-1/4", 0, 3, 0, 0, 1, 1),
    ("-1/2", 0, 3, 0, 0, 0, 2),)


def _quadratic_f_term(a, b, t0, t1, fs) -> Fraction:
    total = Fraction(0)
    for coef, i, j, k, l, p, q in G_TERMS:
        total += Fraction(coef) * a**i * b**j * t0**k * t1**l * fs[p] * fs[q]
    return total


def _rats(obj, names):
    for name in names:
        object.__setattr__(obj, name, Fraction(getattr(obj, name)))


FAM1_FIELDS = ("f0", "f1", "f2", "f3", "f4", "g4", "g5", "g6", "a", "b", "t0", "t1", "x1")
FAM2_FIELDS = ("f2", "f3", "f4", "g5", "g6", "a", "b", "t0", "t1", "x1")


@dataclass(frozen=True)
class Fam1Inputs:
    f0: Fraction
    f1: Fraction
    f2: Fraction
    f3: Fraction
    f4: Fraction
    g4: Fraction
    g5: Fraction
    g6: Fraction
    a: Fraction
    b: Fraction
    t0: Fraction
    t1: Fraction
    x1: Fraction

    def __post_init__(self):
        _rats(self, FAM1_FIELDS)

    @property
    def f(self) -> UPoly:
        return UPoly((self.f0, self.f1, self.f2, self.f3, self.f4))

    @classmethod
    def from_json(cls, data: dict) -> "Fam1Inputs":
        return cls(*(Fraction(data[k]) for k in FAM1_FIELDS))

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in FAM1_FIELDS}


@dataclass(frozen=True)
class Fam2Inputs:
    f2: Fraction
    f3: Fraction
    f4: Fraction
    g5: Fraction
    g6: Fraction
    a: Fraction
    b: Fraction
    t0: Fraction
    t1: Fraction
    x1: Fraction

    def __post_init__(self):
        _rats(self, FAM2_FIELDS)

    @classmethod
    def from_json(cls, data: dict) -> "Fam2Inputs":
        return cls(*(Fraction(data[k]) for k in FAM2_FIELDS))

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in FAM2_FIELDS}


@dataclass
class Fam1Output:
    surface: EllipticSurface
    trisection: Trisection
    Q: SurfacePoint
    R: SurfacePoint

    def to_json(self) -> dict:
        return {
            "surface": self.surface.to_json(),
            "trisection": self.trisection.to_json(),
            "Q": self.Q.to_json(),
            "R": self.R.to_json(),
        }


@dataclass
class Fam2Output:
    inputs: Fam2Inputs
    surface: EllipticSurface
    Q: SurfacePoint
    R: SurfacePoint

    def member(self, h) -> Trisection:
        """Pencil member with constant term h; every defining condition is rechecked."""
        return fam2_member(self, h)

    def to_json(self, samples: Sequence = (0,)) -> dict:
        return {
            "surface": self.surface.to_json(),
            "Q": self.Q.to_json(),
            "R": self.R.to_json(),
            "pencil": {str(Fraction(h)): self.member(h).to_json() for h in samples},
        }


@dataclass
class FamilyReport:
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list:
        return [name for name, ok in self.checks.items() if not ok]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": self.checks, "details": self.details}


# Family one


def _fam1_g2(inp: Fam1Inputs, g3: Fraction) -> Fraction:
    a, b, t0, t1, x1 = inp.a, inp.b, inp.t0, inp.t1, inp.x1
    f0, f1, f2, f3, f4 = inp.f0, inp.f1, inp.f2, inp.f3, inp.f4
    g4, g5, g6 = inp.g4, inp.g5, inp.g6
    F = Fraction
    l0, l1 = a * t0 + b, a * t1 + b
    ft1 = inp.f(t1)
    dt = t0 - t1
    first = l0**4 * l1**2 * (
        a * (
            f4 * (F(5, 6) * t0**5 - t0**4 * t1)
            + f3 * (F(2, 3) * t0**4 - F(5, 6) * t0**3 * t1)
            + f2 * (F(1, 2) * t0**3 - F(2, 3) * t0**2 * t1)
            + f1 * (F(1, 3) * t0**2 - F(1, 2) * t0 * t1)
            + f0 * (F(1, 6) * t0 - F(1, 3) * t1)
        )
        + b * (
            f4 * (F(1, 2) * t0**4 - F(2, 3) * t0**3 * t1)
            + f3 * (F(1, 3) * t0**3 - F(1, 2) * t0**2 * t1)
            + f2 * (F(1, 6) * t0**2 - F(1, 3) * t0 * t1)
            - F(1, 6) * f1 * t1
            - F(1, 6) * f0
        )
    )
    quad = dt**2 * _quadratic_f_term(a, b, t0, t1, (f0, f1, f2, f3, f4))
    at_r = x1 * l0**3 * (l1**2 * (x1**2 + ft1) - (F(9, 4) * x1**3 + F(3, 2) * x1 * ft1))
    high_g = dt**2 * l0**3 * l1**2 * (
        g6 * (5 * t0**4 + 4 * t0**3 * t1 + 3 * t0**2 * t1**2 + 2 * t0 * t1**3 + t1**4)
        + g5 * (4 * t0**3 + 3 * t0**2 * t1 + 2 * t0 * t1**2 + t1**3)
        + g4 * (3 * t0**2 + 2 * t0 * t1 + t1**2)
        + g3 * (2 * t0 + t1)
    )
    tail = l0**8 * l1**2 * (F(1, 18) * a * t1 - F(5, 108) * a * t0 + F(1, 108) * b)
    return -(first + quad + at_r + high_g - tail) / (l0**3 * l1**2 * dt**2)


def _fam1_g1(inp: Fam1Inputs, g2, g3) -> Fraction:
    a, t0 = inp.a, inp.t0
    l0 = a * t0 + inp.b
    ft0, dft0 = inp.f(t0), inp.f.derivative()(t0)
    high = 6 * inp.g6 * t0**5 + 5 * inp.g5 * t0**4 + 4 * inp.g4 * t0**3 + 3 * g3 * t0**2 + 2 * g2 * t0
    num = (
        -a * ft0**2 / 2
        + l0 * ft0 * dft0 / 2
        - a * l0**4 * ft0 / 3
        - dft0 * l0**5 / 6
        - a * l0**8 / 18
        - l0**3 * high
    )
    return num / l0**3


def _fam1_g0(inp: Fam1Inputs, g1, g2, g3) -> Fraction:
    t0 = inp.t0
    l0 = inp.a * t0 + inp.b
    ft0 = inp.f(t0)
    high = inp.g6 * t0**6 + inp.g5 * t0**5 + inp.g4 * t0**4 + g3 * t0**3 + g2 * t0**2 + g1 * t0
    return (ft0**2 / 4 - l0**4 * ft0 / 6 - l0**8 / 108 - l0**2 * high) / l0**2


def fam1_g3_denominator(inp: Fam1Inputs) -> Fraction:
    a, b, t0, t1, x1 = inp.a, inp.b, inp.t0, inp.t1, inp.x1
    l0, l1 = a * t0 + b, a * t1 + b
    bracket = l1 * (
        inp.f4 * (t0 + t1) * (t0**2 + t1**2)
        + inp.f3 * (t0**2 + t1 * t0 + t1**2)
        + inp.f2 * (t0 + t1)
        + inp.f1
    ) - a * inp.f(t0)
    inner = l1 * l0**4 - 9 * l0 * x1**2 - 3 * (t1 - t0) * bracket
    return (t0 - t1) ** 3 * l0**3 * l1**2 * inner


def _check_fam1_inputs(inp: Fam1Inputs):
    l0, l1 = inp.a * inp.t0 + inp.b, inp.a * inp.t1 + inp.b
    if inp.t0 == inp.t1:
        raise FamilyInputError("t0 and t1 must differ")
    if inp.t0 * l0 == 0:
        raise FamilyInputError("t0(at0+b) = 0")
    if l1 == 0:
        raise FamilyInputError("at1+b = 0")
    if inp.f(inp.t0) == -l0**4 / 3:
        raise FamilyInputError("degenerate branch: f(t0) = -(at0+b)^4/3")
    if fam1_g3_denominator(inp) == 0:
        raise FamilyInputError("the denominator of g3 vanishes")


def _fam1_surface(inp: Fam1Inputs, g3: Fraction) -> EllipticSurface:
    g2 = _fam1_g2(inp, g3)
    g1 = _fam1_g1(inp, g2, g3)
    g0 = _fam1_g0(inp, g1, g2, g3)
    return EllipticSurface(inp.f, UPoly((g0, g1, g2, g3, inp.g4, inp.g5, inp.g6)))


def _fam1_target_y(inp: Fam1Inputs) -> Fraction:
    # H_x = 0 at R fixes the trisection's value there
    return (3 * inp.x1**2 + inp.f(inp.t1)) / (2 * (inp.a * inp.t1 + inp.b))


def _fam1_candidate(inp: Fam1Inputs, g3) -> tuple[EllipticSurface, Trisection]:
    s = _fam1_surface(inp, Fraction(g3))
    p = PencilParams(inp.a, inp.b, inp.t0)
    base = build_trisection_closed(s, p, 0)
    weight = (1 - inp.t1 / inp.t0) ** 3
    h = (_fam1_target_y(inp) - base.value(inp.x1, inp.t1)) / weight
    return s, build_trisection_closed(s, p, h)


def _fam1_residual(inp: Fam1Inputs, g3) -> Fraction:
    s, T = _fam1_candidate(inp, g3)
    return curve_poly(s, T).diff_t()(inp.x1, inp.t1)


def gen_fam1(inp: Fam1Inputs) -> Fam1Output:
    _check_fam1_inputs(inp)
    samples = [(k, _fam1_residual(inp, k)) for k in range(5)]
    residual = interpolate(samples)
    if residual.degree() != 1:
        raise ResidualError(f"condition at R is not linear in g3 (sampled degree {residual.degree()})")
    ((g3, _),) = rational_roots(residual)
    s, T = _fam1_candidate(inp, g3)
    p = PencilParams(inp.a, inp.b, inp.t0)
    Q = p.base_point(s)
    R = SurfacePoint(inp.x1, T.value(inp.x1, inp.t1), inp.t1)
    out = Fam1Output(s, T, Q, R)
    _require_fam1_conditions(out)
    return out


def _require_fam1_conditions(out: Fam1Output):
    H = curve_poly(out.surface, out.trisection)
    if multiplicity_of(H, out.Q.x, out.Q.t) < 3:
        raise ResidualError("triple point at Q not achieved")
    if multiplicity_of(H, out.R.x, out.R.t) < 2:
        raise ResidualError("double point at R not achieved")


def verify_fam1(out: Fam1Output) -> FamilyReport:
    s, T = out.surface, out.trisection
    H = curve_poly(s, T)
    report = FamilyReport()
    mq = multiplicity_of(H, out.Q.x, out.Q.t)
    mr = multiplicity_of(H, out.R.x, out.R.t)
    g = genus(s, T)
    report.checks["Q on surface"] = s.contains(out.Q)
    report.checks["R on surface"] = s.contains(out.R)
    report.checks["Q on trisection"] = T.contains(out.Q)
    report.checks["R on trisection"] = T.contains(out.R)
    report.checks["multiplicity 3 at Q"] = mq == 3
    report.checks["multiplicity >= 2 at R"] = mr >= 2
    report.checks["genus 0"] = g.complete and g.genus == 0
    report.checks["double root of P at t0"] = (
        root_multiplicity(condition_poly(s, T.a, T.b), out.Q.t) >= 2
    )
    report.details.update(
        multiplicity_Q=mq,
        multiplicity_R=mr,
        genus=g.genus,
        locus_complete=g.complete,
        dp1_blowup=is_dp1_blowup(s).value,
    )
    return report


# Family two


FAM2_CONSTRAINTS = ("F1", "F0", "G4", "G3", "G2", "G1", "G0")


def fam2_coefficients(inp: Fam2Inputs, offsets: Optional[dict] = None) -> tuple[UPoly, UPoly]:
    """(f, g) on the degenerate branch; ``offsets`` shifts named constraints for negative controls."""
    offsets = {k: Fraction(v) for k, v in (offsets or {}).items()}
    unknown = set(offsets) - set(FAM2_CONSTRAINTS)
    if unknown:
        raise ValueError(f"unknown constraint names {sorted(unknown)}")
    F = Fraction
    a, b, t0, t1, x1 = inp.a, inp.b, inp.t0, inp.t1, inp.x1
    f2, f3, f4, g5, g6 = inp.f2, inp.f3, inp.f4, inp.g5, inp.g6
    L = a * t0 + b
    dt = t0 - t1
    if dt == 0:
        raise FamilyInputError("t0 and t1 must differ")
    if t0 * L == 0:
        raise FamilyInputError("t0(at0+b) = 0")
    f1 = -(
        f4 * (t0**4 - t1**4) + L**4 / 3 + t0**3 * f3 + t0**2 * f2
        - 3 * x1**2 - t1**3 * f3 - t1**2 * f2
    ) / dt + offsets.get("F1", 0)
    f0 = -(L**4 / 3 + t0**4 * f4 + t0**3 * f3 + t0**2 * f2 + t0 * f1) + offsets.get("F0", 0)
    qf = f4 * (t0**2 + F(2, 3) * t0 * t1 + F(1, 3) * t1**2) + f3 * (F(2, 3) * t0 + F(1, 3) * t1) + f2 / 3
    g4 = 3 / (dt**4 * L**2) * (
        L**8 / 108 - x1 * L**6 / 9 + x1**2 * L**4 / 2
        - L**4 * dt**2 * (f4 * (t0**2 - 2 * t0 * t1 - t1**2) - t1 * f3 - f2 / 3) / 6
        + dt**4 * (-2 * L**2 * (g6 * (t0**2 + t0 * t1 + t1**2 / 2) + g5 * (t0 / 2 + t1 / 3)) + F(3, 4) * qf**2)
        + F(3, 4) * x1**4 - x1**3 * L**2 + F(3, 2) * x1**2 * dt**2 * qf
        - x1 * dt**2 * L**2 * (f4 * (t0**2 + 2 * t0 * t1 + 3 * t1**2) + f3 * (t0 + 2 * t1) + f2) / 3
    ) + offsets.get("G4", 0)
    g3 = -1 / (3 * dt**3 * L**2) * (
        L**8 / 18 - x1 * L**6 / 3 + 3 * x1**3 * L**2 - F(9, 2) * x1**4
        + dt**2 * (
            L**4 * (4 * f4 * t0**2 + 2 * f3 * t0 + F(2, 3) * f2)
            + 24 * L**2 * dt * (
                g6 * (t0**3 + F(3, 4) * t1 * t0**2 + F(1, 2) * t1**2 * t0 + F(1, 4) * t1**3)
                + g5 * (F(5, 8) * t0**2 + F(5, 12) * t1 * t0 + F(5, 24) * t1**2)
                + g4 * (t0 / 3 + t1 / 6)
            )
            - F(9, 2) * dt**2 * qf**2
            - x1 * L**2 * (f4 * (t0**2 + 2 * t1 * t0 + 3 * t1**2) + f3 * (t0 + 2 * t1) + f2)
            - 3 * x1**2 * (f4 * (3 * t0**2 + 2 * t0 * t1 + t1**2) + f3 * (2 * t0 + t1) + f2)
        )
    ) + offsets.get("G3", 0)
    g2 = -(
        L**4 * (4 * t0**2 * f4 + 2 * t0 * f3 + F(2, 3) * f2)
        + 2 * L**2 * (15 * t0**4 * g6 + 10 * t0**3 * g5 + 6 * t0**2 * g4 + 3 * t0 * g3)
        - 8 * (t0**3 * f4 + F(3, 4) * t0**2 * f3 + F(1, 2) * t0 * f2 + F(1, 4) * f1) ** 2
    ) / (2 * L**2) + offsets.get("G2", 0)
    g1 = (
        -L**2 * (F(4, 3) * t0**3 * f4 + t0**2 * f3 + F(2, 3) * t0 * f2 + f1 / 3)
        - 6 * t0**5 * g6 - 5 * t0**4 * g5 - 4 * t0**3 * g4 - 3 * t0**2 * g3 - 2 * t0 * g2
    ) + offsets.get("G1", 0)
    g0 = (
        F(2, 27) * L**6
        - t0**6 * g6 - t0**5 * g5 - t0**4 * g4 - t0**3 * g3 - t0**2 * g2 - t0 * g1
    ) + offsets.get("G0", 0)
    return UPoly((f0, f1, f2, f3, f4)), UPoly((g0, g1, g2, g3, g4, g5, g6))


def _fam2_solve(out: Fam2Output, h: Fraction) -> Trisection:
    inp, s = out.inputs, out.surface
    a, b, t0, t1, x1 = inp.a, inp.b, inp.t0, inp.t1, inp.x1
    L, L1 = a * t0 + b, a * t1 + b
    x0 = L**2 / 3
    dft0 = s.f.derivative()(t0)
    # e = e0 + ec*c + ed*d from H_xt = 0 at Q
    e0 = (dft0 - Fraction(2, 3) * a * L**3) / (2 * L)
    ec, ed = -3 * t0**2, -2 * t0
    # constant term: h = -a x0 t0 - b x0 - c t0^3 - d t0^2 - e t0
    row1 = [t0**3 + ec * t0, t0**2 + ed * t0]
    rhs1 = -h - a * x0 * t0 - b * x0 - e0 * t0
    # H_x = 0 at R: 2 (a t1 + b) Y(x1, t1) = 3 x1^2 + f(t1)
    row2 = [t1**3 + ec * t1, t1**2 + ed * t1]
    rhs2 = (3 * x1**2 + s.f(t1)) / (2 * L1) - L1 * x1 - h - e0 * t1
    try:
        c, d = solve_linear([row1, row2], [rhs1, rhs2])
    except SingularSystemError as exc:
        raise FamilyInputError("pencil member system is singular") from exc
    e = e0 + ec * c + ed * d
    return Trisection(a, b, c, d, e, h)



def fam2_member(out: Fam2Output, h) -> Trisection:
    h = Fraction(h)
    if out.inputs.a * out.inputs.t1 + out.inputs.b == 0:
        raise FamilyInputError("at1+b = 0")
    T = _fam2_solve(out, h)
    H = curve_poly(out.surface, T)
    if multiplicity_of(H, out.Q.x, out.Q.t) < 3:
        raise ResidualError(f"member h={h}: conditions at Q do not vanish")
    if multiplicity_of(H, out.R.x, out.R.t) < 2:
        raise ResidualError(f"member h={h}: conditions at R do not vanish")
    return T


def gen_fam2(inp: Fam2Inputs, offsets: Optional[dict] = None) -> Fam2Output:
    f, g = fam2_coefficients(inp, offsets)
    s = EllipticSurface(f, g)
    L = inp.a * inp.t0 + inp.b
    if s.f(inp.t0) != -L**4 / 3:
        raise ResidualError("f(t0) is off the degenerate branch")
    L1 = inp.a * inp.t1 + inp.b
    if L1 == 0:
        raise FamilyInputError("at1+b = 0")
    Q = SurfacePoint(L**2 / 3, Fraction(0), inp.t0)
    R = SurfacePoint(inp.x1, (3 * inp.x1**2 + s.f(inp.t1)) / (2 * L1), inp.t1)
    if not s.contains(R):
        raise ResidualError("R is not on the surface")
    out = Fam2Output(inp, s, Q, R)
    fam2_member(out, 0)
    return out


def verify_fam2(out: Fam2Output, samples: Sequence) -> FamilyReport:
    if len(samples) < 3:
        raise ValueError("need at least three pencil samples")
    s = out.surface
    report = FamilyReport()
    L = out.inputs.a * out.inputs.t0 + out.inputs.b
    report.checks["degenerate branch"] = s.f(out.inputs.t0) == -L**4 / 3
    report.checks["Q on surface"] = s.contains(out.Q)
    report.checks["R on surface"] = s.contains(out.R)
    disc_order = root_multiplicity(s.discriminant(), out.inputs.t0)
    fibre = classify_fibre(s, out.inputs.t0)
    report.checks["disc order >= 3 at t0"] = disc_order >= 3
    report.checks["reducible fibre at t0"] = not fibre.irreducible
    report.details.update(disc_order=disc_order, fibre_type=fibre.kodaira_type, members={})
    members = []
    for h in samples:
        T = out.member(h)
        members.append(T)
        H = curve_poly(s, T)
        g = genus(s, T)
        mq = multiplicity_of(H, out.Q.x, out.Q.t)
        mr = multiplicity_of(H, out.R.x, out.R.t)
        tag = f"h={Fraction(h)}"
        report.checks[f"{tag}: multiplicity 3 at Q"] = mq == 3
        report.checks[f"{tag}: multiplicity >= 2 at R"] = mr >= 2
        report.checks[f"{tag}: genus 0"] = g.complete and g.genus == 0
        report.details["members"][tag] = T.to_json()
    report.checks["distinct members"] = len(set(members)) == len(members)
    return report
