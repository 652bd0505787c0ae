"""Elliptic surfaces y^2 = x^3 + f(t) x + g(t) and their singular fibres."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    AlgNum,
    UPoly,
    ZeroDivisorSplit,
    rational_roots,
    remove_rational_roots,
    root_multiplicity,
    split_modulus,
    squarefree_decomposition,
)

INFINITY = "inf"
# factors above this degree are not searched with quotient-ring arithmetic
MAX_ALGEBRAIC_DEGREE = 4

Location = Union[Fraction, str, UPoly]


class DegenerateSurfaceError(ValueError):
    pass


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EllipticSurface:
    f: UPoly
    g: UPoly

    def __post_init__(self):
        if self.f.degree() > 4 or self.g.degree() > 6:
            raise DegenerateSurfaceError(
                f"need deg f <= 4 and deg g <= 6, got {self.f.degree()} and {self.g.degree()}"
            )
        if self.discriminant().is_zero():
            raise DegenerateSurfaceError("discriminant 4f^3 + 27g^2 vanishes identically")

    @classmethod
    def from_coeffs(cls, f, g) -> "EllipticSurface":
        return cls(UPoly(f), UPoly(g))

    def discriminant(self) -> UPoly:
        return 4 * self.f ** 3 + 27 * self.g ** 2

    def equation(self, x, y, t):
        """Value of y^2 - x^3 - f(t) x - g(t); zero exactly on the surface."""
        return y * y - x * x * x - self.f(t) * x - self.g(t)

    def contains(self, point: "SurfacePoint") -> bool:
        return self.equation(point.x, point.y, point.t) == 0

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "g": self.g.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "EllipticSurface":
        return cls(UPoly.from_json(data["f"]), UPoly.from_json(data["g"]))


@dataclass(frozen=True)
class SurfacePoint:
    x: object
    y: object
    t: object

    def to_json(self) -> dict:
        return {k: _coord_json(getattr(self, k)) for k in ("x", "y", "t")}

    def as_tuple(self) -> tuple:
        return (self.x, self.y, self.t)


def _coord_json(v):
    return v.to_json() if isinstance(v, AlgNum) else str(v)


@dataclass(frozen=True)
class FibreReport:
    location: Location
    kodaira_type: str
    irreducible: bool
    # raw valuations before minimal reduction; None stands for an identically zero coefficient
    valuations: tuple
    conjugate_degree: int = 1

    def to_json(self) -> dict:
        if isinstance(self.location, UPoly):
            loc = {"factor": self.location.to_json()}
        else:
            loc = str(self.location)
        vf, vg, vd = self.valuations
        return {
            "location": loc,
            "type": self.kodaira_type,
            "irreducible": self.irreducible,
            "valuations": {"f": _val_json(vf), "g": _val_json(vg), "disc": vd},
            "conjugate_degree": self.conjugate_degree,
        }


def _val_json(v):
    return "inf" if v is None else v


@dataclass
class FibreClassification:
    fibres: list = field(default_factory=list)
    complete: bool = True
    unresolved: list = field(default_factory=list)

    def verdict(self) -> Verdict:
        if any(not r.irreducible for r in self.fibres):
            return Verdict.NO
        return Verdict.YES if self.complete else Verdict.UNKNOWN

    def to_json(self) -> dict:
        return {
            "fibres": [r.to_json() for r in self.fibres],
            "complete": self.complete,
            "unresolved_factors": [m.to_json() for m in self.unresolved],
            "dp1_blowup": self.verdict().value,
        }


def discriminant(s: EllipticSurface) -> UPoly:
    return s.discriminant()


def _ge(v: Optional[int], n: int) -> bool:
    return v is None or v >= n


def kodaira_type(vf: Optional[int], vg: Optional[int], vd: int) -> str:
    """Kodaira symbol from valuations, reducing to a minimal model first."""
    while _ge(vf, 4) and _ge(vg, 6) and vd >= 12:
        vf = None if vf is None else vf - 4
        vg = None if vg is None else vg - 6
        vd -= 12
    if vd == 0:
        return "I0"
    if vf == 0 and vg == 0:
        return f"I{vd}"
    if vf == 2 and vg == 3 and vd > 6:
        return f"I{vd - 6}*"
    table = {2: "II", 3: "III", 4: "IV", 6: "I0*", 8: "IV*", 9: "III*", 10: "II*"}
    if vd not in table:
        raise DegenerateSurfaceError(f"valuations ({vf}, {vg}, {vd}) match no Kodaira type")
    return table[vd]


def is_irreducible_type(kind: str) -> bool:
    return kind in ("I0", "I1", "II")


def _report(location, vf, vg, vd, degree=1) -> FibreReport:
    kind = kodaira_type(vf, vg, vd)
    return FibreReport(location, kind, is_irreducible_type(kind), (vf, vg, vd), degree)


def _valuation(p: UPoly, r) -> Optional[int]:
    return None if p.is_zero() else root_multiplicity(p, r)


def _valuation_algebraic(p: UPoly, theta: AlgNum) -> Optional[int]:
    """Order of vanishing of ``p`` at a root of theta's modulus.

    Raises ZeroDivisorSplit if the roots of the modulus disagree.
    """
    if p.is_zero():
        return None
    lifted = UPoly(AlgNum(theta.modulus, UPoly((c,))) for c in p.coeffs)
    step = UPoly.linear_root(theta)
    m = 0
    while True:
        val = lifted(theta)
        if val.value.is_zero():
            lifted = lifted.exact_div(step)
            m += 1
            continue
        val.inverse()
        return m


def infinity_forms(s: EllipticSurface) -> tuple[UPoly, UPoly, UPoly]:
    """(f*, g*, disc*) in the chart s = 1/t around the fibre at infinity."""
    return s.f.reversed_to(4), s.g.reversed_to(6), s.discriminant().reversed_to(12)


def classify_fibre(s: EllipticSurface, location) -> FibreReport:
    if isinstance(location, str):
        if location != INFINITY:
            raise ValueError(f"unknown location {location!r}")
        fs, gs, ds = infinity_forms(s)
        zero = Fraction(0)
        return _report(INFINITY, _valuation(fs, zero), _valuation(gs, zero), _valuation(ds, zero))
    r = Fraction(location)
    return _report(r, _valuation(s.f, r), _valuation(s.g, r), _valuation(s.discriminant(), r))


def _classify_factor(s: EllipticSurface, modulus: UPoly, disc_exp: int, out: FibreClassification):
    if disc_exp == 1:
        # v(disc) = 1 only fits I1, so every conjugate root is settled without arithmetic
        out.fibres.append(FibreReport(modulus, "I1", True, (0, 0, 1), modulus.degree()))
        return
    if modulus.degree() > MAX_ALGEBRAIC_DEGREE:
        out.complete = False
        out.unresolved.append(modulus)
        return
    theta = AlgNum(modulus, UPoly.t())
    try:
        vf = _valuation_algebraic(s.f, theta)
        vg = _valuation_algebraic(s.g, theta)
    except ZeroDivisorSplit as exc:
        for part in split_modulus(exc):
            _classify_factor(s, part, disc_exp, out)
        return
    out.fibres.append(_report(modulus, vf, vg, disc_exp, modulus.degree()))


def classify_all_fibres(s: EllipticSurface) -> FibreClassification:
    """Bad fibres over every root of the discriminant and over infinity."""
    out = FibreClassification()
    disc = s.discriminant()
    for factor, e in squarefree_decomposition(disc):
        roots, rest = remove_rational_roots(factor)
        for r in roots:
            out.fibres.append(classify_fibre(s, r))
        if rest.degree() > 0:
            _classify_factor(s, rest, e, out)
    out.fibres.sort(key=_location_order)
    at_inf = classify_fibre(s, INFINITY)
    if at_inf.kodaira_type != "I0":
        out.fibres.append(at_inf)
    return out


def _location_order(report: FibreReport):
    # rational locations first, by value; then algebraic ones by degree
    loc = report.location
    if isinstance(loc, UPoly):
        return (1, loc.degree(), Fraction(0))
    return (0, 0, loc)


def is_dp1_blowup(s: EllipticSurface) -> Verdict:
    return classify_all_fibres(s).verdict()


def fibre_cubic(s: EllipticSurface, t1) -> UPoly:
    return UPoly((s.g(t1), s.f(t1), 0, 1))


def rational_bad_locations(s: EllipticSurface) -> list:
    return [r for r, _ in rational_roots(s.discriminant())]
