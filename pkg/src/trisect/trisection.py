"""Trisections y = a x t + b x + c t^3 + d t^2 + e t + h on an elliptic surface.

The pencil builders force a triple point of the curve

    H(x, t) = -Y(x, t)^2 + x^3 + f(t) x + g(t)

at Q = ((a t0 + b)^2 / 3, y0, t0); the remaining constant coefficient is the
free pencil parameter gamma.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    AlgNum,
    BiPoly,
    SingularSystemError,
    UPoly,
    ZeroDivisorSplit,
    is_nonzero,
    poly_gcd,
    rational_roots,
    remove_rational_roots,
    resultant_x,
    root_multiplicity,
    solve_linear,
    split_modulus,
    squarefree_part,
    taylor_shift,
)
from .surface import MAX_ALGEBRAIC_DEGREE, EllipticSurface, SurfacePoint


class AdmissibilityError(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NonReducedCurveError(ValueError):
    pass


REASON_ZERO = "t0(at0+b) = 0"
REASON_DEGENERATE = "degenerate branch: f(t0) = -(at0+b)^4/3"
REASON_NO_DOUBLE_ROOT = "condition polynomial has no double root at t0"
REASON_OK = "admissible"


@dataclass(frozen=True)
class Trisection:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    h: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "h"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not any(self.coeffs()):
            raise ValueError("the zero form is not a trisection")

    def coeffs(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e, self.h)

    def slope(self) -> UPoly:
        """Coefficient of x, the polynomial a t + b."""
        return UPoly((self.b, self.a))

    def intercept(self) -> UPoly:
        return UPoly((self.h, self.e, self.d, self.c))

    def y_poly(self) -> BiPoly:
        return BiPoly((self.intercept(), self.slope()))

    def value(self, x, t):
        return (self.a * t + self.b) * x + ((self.c * t + self.d) * t + self.e) * t + self.h

    def contains(self, point: SurfacePoint) -> bool:
        return self.value(point.x, point.t) == point.y

    def to_json(self) -> dict:
        return {k: str(v) for k, v in zip("abcdeh", self.coeffs())}

    @classmethod
    def from_json(cls, data: dict) -> "Trisection":
        return cls(*(Fraction(data[k]) for k in "abcdeh"))


@dataclass(frozen=True)
class PencilParams:
    a: Fraction
    b: Fraction
    t0: Fraction

    def __post_init__(self):
        for name in ("a", "b", "t0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def lead(self) -> Fraction:
        """The slope a t0 + b at the base fibre."""
        return self.a * self.t0 + self.b

    @property
    def x0(self) -> Fraction:
        return self.lead ** 2 / 3

    def y0(self, s: EllipticSurface) -> Fraction:
        if self.lead == 0:
            raise AdmissibilityError(REASON_ZERO)
        return self.lead ** 3 / 6 + s.f(self.t0) / (2 * self.lead)

    def base_point(self, s: EllipticSurface) -> SurfacePoint:
        return SurfacePoint(self.x0, self.y0(s), self.t0)


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SingularityReport:
    point: SurfacePoint
    multiplicity: int
    conjugate_degree: int = 1

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json(),
            "multiplicity": self.multiplicity,
            "conjugate_degree": self.conjugate_degree,
        }


@dataclass
class SingularLocus:
    singularities: list = field(default_factory=list)
    complete: bool = True
    unresolved: list = field(default_factory=list)


@dataclass
class GenusReport:
    genus: int
    singularities: list
    complete: bool

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "complete": self.complete,
            "singularities": [r.to_json() for r in self.singularities],
        }


@dataclass
class FibreIntersection:
    cubic: UPoly
    roots: list
    residual_sum: Optional[Fraction] = None
    residual_product: Optional[Fraction] = None

    def to_json(self) -> dict:
        out = {
            "cubic": self.cubic.to_json(),
            "rational_roots": [{"x": str(r), "multiplicity": m} for r, m in self.roots],
        }
        if self.residual_sum is not None:
            out["residual_sum"] = str(self.residual_sum)
            out["residual_product"] = str(self.residual_product)
        return out


@dataclass
class PencilStats:
    gammas: list
    max_collisions: int
    distinct: int


def condition_poly(s: EllipticSurface, a, b) -> UPoly:
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise ValueError("(a, b) must not both vanish")
    lin = UPoly((b, a))
    lin2 = lin * lin
    lin4 = lin2 * lin2
    return (
        s.f * s.f * Fraction(-1, 4)
        + lin4 * s.f * Fraction(1, 6)
        + lin2 * s.g
        + lin4 * lin4 * Fraction(1, 108)
    )


def is_fam_L_admissible(s: EllipticSurface, a, b, t0) -> Admissibility:
    a, b, t0 = Fraction(a), Fraction(b), Fraction(t0)
    lead = a * t0 + b
    if t0 * lead == 0:
        return Admissibility(False, REASON_ZERO)
    if s.f(t0) == -lead ** 4 / 3:
        return Admissibility(False, REASON_DEGENERATE)
    if root_multiplicity(condition_poly(s, a, b), t0) < 2:
        return Admissibility(False, REASON_NO_DOUBLE_ROOT)
    return Admissibility(True, REASON_OK)


def is_fam_k_member(s: EllipticSurface, a, t0) -> bool:
    a, t0 = Fraction(a), Fraction(t0)
    if a == 0 or t0 == 0:
        raise ValueError("a and t0 must be nonzero")
    shifted_f = s.f - UPoly((0, 0, 0, 0, a ** 4 / 3))
    shifted_g = s.g + UPoly((0, 0, 0, 0, 0, 0, a ** 6 / 27))
    if shifted_f(t0) != 0:
        return False
    return shifted_g.is_zero() or root_multiplicity(shifted_g, t0) >= 2


def _require_admissible(s: EllipticSurface, p: PencilParams):
    verdict = is_fam_L_admissible(s, p.a, p.b, p.t0)
    if not verdict:
        raise AdmissibilityError(verdict.reason)


def _closed_c1(a, b, t0, f0, f1, f2, f3, f4):
    F = Fraction
    return (
        5 * a**2 * t0**6 * f4 + 3 * a**2 * t0**5 * f3 + F(5, 3) * a**2 * t0**4 * f2
        + a**2 * t0**3 * f1 + a**2 * t0**2 * f0
        + 8 * a * b * t0**5 * f4 + F(13, 3) * a * b * t0**4 * f3 + 2 * a * b * t0**3 * f2
        + a * b * t0**2 * f1 + F(4, 3) * a * b * t0 * f0
        + F(8, 3) * b**2 * t0**4 * f4 + b**2 * t0**3 * f3 - F(1, 3) * b**2 * t0 * f1
    )


def _closed_c2(a, b, t0, f0, f1, f2, f3, f4):
    F = Fraction
    aa = (
        -F(13, 2) * t0**8 * f4**2 - 9 * t0**7 * f3 * f4 - 5 * t0**6 * f2 * f4 - 3 * t0**6 * f3**2
        - t0**5 * f1 * f4 - 3 * t0**5 * f2 * f3 + 3 * t0**4 * f0 * f4 - F(1, 2) * t0**4 * f2**2
        + 3 * t0**3 * f0 * f3 + t0**3 * f1 * f2 + 3 * t0**2 * f0 * f2 + t0**2 * f1**2
        + 3 * t0 * f0 * f1 + F(3, 2) * f0**2
    )
    ab = (
        -17 * t0**8 * f4**2 - 25 * t0**7 * f3 * f4 - 16 * t0**6 * f2 * f4 - 9 * t0**6 * f3**2
        - 7 * t0**5 * f1 * f4 - 11 * t0**5 * f2 * f3 + 2 * t0**4 * f0 * f4 - 4 * t0**4 * f1 * f3
        - 3 * t0**4 * f2**2 + 3 * t0**3 * f0 * f3 - t0**3 * f1 * f2 + 4 * t0**2 * f0 * f2
        + t0**2 * f1**2 + 5 * t0 * f0 * f1 + 3 * f0**2
    )
    bb = (
        -11 * t0**8 * f4**2 - 17 * t0**7 * f3 * f4 - 12 * t0**6 * f2 * f4 - F(13, 2) * t0**6 * f3**2
        - 7 * t0**5 * f1 * f4 - 9 * t0**5 * f2 * f3 - 2 * t0**4 * f0 * f4 - 5 * t0**4 * f1 * f3
        - 3 * t0**4 * f2**2 - t0**3 * f0 * f3 - 3 * t0**3 * f1 * f2 - F(1, 2) * t0**2 * f1**2
        + t0 * f0 * f1 + f0**2
    )
    return a**2 * t0**2 * aa + a * t0 * b * ab + b**2 * bb


def build_trisection_closed(s: EllipticSurface, p: PencilParams, gamma) -> Trisection:
    """Pencil member with constant term gamma, from closed-form coefficients."""
    _require_admissible(s, p)
    gamma = Fraction(gamma)
    a, b, t0 = p.a, p.b, p.t0
    lead = p.lead
    fs = [s.f.coeff(i) for i in range(5)]
    ft0 = s.f(t0)
    dft0 = s.f.derivative()(t0)
    ddg = s.g.derivative(2)(t0) if s.g.degree() >= 2 else Fraction(0)
    c1 = _closed_c1(a, b, t0, *fs)
    c2 = _closed_c2(a, b, t0, *fs)
    num_c = (
        -lead**8 * ((b - a * t0 / 2) ** 2 - Fraction(7, 4) * a**2 * t0**2) / 9
        - 2 * gamma * lead**7 / 3
        + lead**4 * (c1 + t0**2 * ddg)
        - 2 * gamma * lead**3 * ft0
        + c2
    )
    c = num_c / (2 * t0**3 * lead**3 * (ft0 + lead**4 / 3))
    d = (
        lead**4 * (b - 2 * a * t0) / 3
        + 2 * lead**2 * (gamma - 2 * c * t0**3)
        + lead * (t0 * dft0 - ft0)
        - a * t0 * ft0
    ) / (2 * t0**2 * lead**2)
    e = (ft0 - lead**4 / 3 - 2 * lead * (c * t0**3 + d * t0**2 + gamma)) / (2 * t0 * lead)
    return Trisection(a, b, c, d, e, gamma)


def build_trisection_generic(s: EllipticSurface, p: PencilParams, gamma) -> Trisection:
    """Same pencil member, found by matching the 2-jet of Y along x = x0 at t0."""
    if p.t0 * p.lead == 0:
        raise AdmissibilityError(REASON_ZERO)
    gamma = Fraction(gamma)
    a, b, t0, lead, x0 = p.a, p.b, p.t0, p.lead, p.x0
    df, ddf, ddg = s.f.derivative(), s.f.derivative(2), s.g.derivative(2)
    # H_x = 0, H_xt = 0, H_tt = 0 at Q pin down Y, Y_t, Y_tt there
    y_val = (3 * x0**2 + s.f(t0)) / (2 * lead)
    y_t = (df(t0) - 2 * a * y_val) / (2 * lead)
    if y_val == 0:
        raise AdmissibilityError(REASON_DEGENERATE)
    y_tt = (ddf(t0) * x0 + ddg(t0) - 2 * y_t**2) / (2 * y_val)
    matrix = [
        [t0**3, t0**2, t0],
        [3 * t0**2, 2 * t0, 1],
        [6 * t0, 2, 0],
    ]
    rhs = [y_val - a * x0 * t0 - b * x0 - gamma, y_t - a * x0, y_tt]
    try:
        c, d, e = solve_linear(matrix, rhs)
    except SingularSystemError as exc:
        raise AdmissibilityError(REASON_ZERO) from exc
    return Trisection(a, b, c, d, e, gamma)


def curve_poly(s: EllipticSurface, T: Trisection) -> BiPoly:
    y = T.y_poly()
    cubic = BiPoly((s.g, s.f, UPoly(), UPoly((1,))))
    return cubic - y * y


def _common_modulus(*coords):
    moduli = {c.modulus for c in coords if isinstance(c, AlgNum)}
    if len(moduli) > 1:
        raise ValueError("coordinates carry different moduli")
    return next(iter(moduli), None)


def multiplicity_of(H: BiPoly, x0, t0, order: str = "xt") -> int:
    """Lowest total degree present in H(x + x0, t + t0); 0 if H(x0, t0) != 0."""
    _common_modulus(x0, t0)
    terms = taylor_shift(H, x0, t0, order)
    degrees = [i + j for (i, j), c in terms.items() if is_nonzero(c)]
    if not degrees:
        raise NonReducedCurveError("curve polynomial is zero")
    return min(degrees)


def singularity_multiplicity(s: EllipticSurface, T: Trisection, x0, t0) -> int:
    return multiplicity_of(curve_poly(s, T), x0, t0)


def gamma_for_point(s: EllipticSurface, p: PencilParams, R: SurfacePoint) -> Fraction:
    """The pencil parameter whose member passes through R."""
    if R.t == p.t0:
        raise ValueError("R must lie off the base fibre t = t0")
    if not s.contains(R):
        raise ValueError(f"point {R} is not on the surface")
    base = build_trisection_closed(s, p, 0)
    weight = (1 - Fraction(R.t) / p.t0) ** 3
    gamma = (R.y - base.value(R.x, R.t)) / weight
    member = build_trisection_closed(s, p, gamma)
    if not member.contains(R):
        raise ArithmeticError("pencil member misses the prescribed point")
    return gamma


def fibre_intersection(s: EllipticSurface, T: Trisection, t1, known_x=None) -> FibreIntersection:
    """Meet T with the fibre over t1; optionally strip a known root x_R."""
    cubic = curve_poly(s, T).at_t(Fraction(t1))
    if cubic.is_zero():
        raise NonReducedCurveError(f"trisection contains the whole fibre t = {t1}")
    out = FibreIntersection(cubic, rational_roots(cubic))
    if known_x is not None:
        quot, rem = divmod(cubic, UPoly.linear_root(known_x))
        if rem:
            raise ValueError(f"x = {known_x} is not on T over t = {t1}")
        out.residual_sum = -quot.coeff(1)
        out.residual_product = quot.coeff(0)
    return out


def _poly_gcd_many(polys) -> UPoly:
    g = UPoly()
    for q in polys:
        if not q.is_zero():
            g = q if g.is_zero() else poly_gcd(g, q)
    return g.monic()


class _LocusSearch:
    def __init__(self, s: EllipticSurface, T: Trisection):
        self.T = T
        self.H = curve_poly(s, T)
        self.Hx = self.H.diff_x()
        self.Ht = self.H.diff_t()
        self.locus = SingularLocus()

    def add(self, x, t, degree):
        mult = multiplicity_of(self.H, x, t)
        if mult >= 2:
            y = self.T.value(x, t)
            self.locus.singularities.append(SingularityReport(SurfacePoint(x, y, t), mult, degree))

    def give_up(self, factor: UPoly):
        self.locus.complete = False
        self.locus.unresolved.append(factor)

    def fibre_common(self, t) -> UPoly:
        return _poly_gcd_many(q.at_t(t) for q in (self.H, self.Hx, self.Ht))

    def over_rational_t(self, tau: Fraction):
        # H(., tau) is a monic cubic, so a repeated root is unique and rational
        common = self.fibre_common(tau)
        if common.degree() == 1:
            self.add(-common.coeff(0), tau, 1)
        elif common.degree() > 1:
            xs, _ = remove_rational_roots(squarefree_part(common))
            for x in xs:
                self.add(x, tau, 1)

    def over_algebraic_t(self, modulus: UPoly):
        if modulus.degree() > MAX_ALGEBRAIC_DEGREE:
            self.give_up(modulus)
            return
        theta = AlgNum(modulus, UPoly.t())
        try:
            common = self.fibre_common(theta)
            if common.degree() < 1:
                return
            # same cubic argument: the repeated root lies in Q[t]/(modulus)
            self.add(-common.monic().coeff(0), theta, modulus.degree())
        except ZeroDivisorSplit as exc:
            for part in split_modulus(exc):
                self.over_algebraic_t(part)

    def run(self) -> SingularLocus:
        if self.H.is_zero():
            raise NonReducedCurveError("curve polynomial is zero")
        r1 = resultant_x(self.H, self.Hx)
        if r1.is_zero():
            raise NonReducedCurveError("curve polynomial has a repeated factor")
        candidates = r1 if self.Ht.is_zero() else poly_gcd(r1, resultant_x(self.H, self.Ht))
        if candidates.degree() < 1:
            return self.locus
        taus, rest = remove_rational_roots(squarefree_part(candidates))
        for tau in taus:
            self.over_rational_t(tau)
        if rest.degree() > 0:
            self.over_algebraic_t(rest)
        return self.locus


def singular_locus(s: EllipticSurface, T: Trisection) -> SingularLocus:
    """Affine singular points of the curve H = 0, found by elimination."""
    return _LocusSearch(s, T).run()


def genus_from_singularities(singularities: Sequence[SingularityReport]) -> int:
    drop = sum(r.conjugate_degree * r.multiplicity * (r.multiplicity - 1) // 2 for r in singularities)
    return 4 - drop


def genus(s: EllipticSurface, T: Trisection) -> GenusReport:
    locus = singular_locus(s, T)
    return GenusReport(genus_from_singularities(locus.singularities), locus.singularities, locus.complete)


def pencil_injectivity_check(
    s: EllipticSurface, p: PencilParams, t1, samples: Sequence[SurfacePoint]
) -> PencilStats:
    """How many sample points of one fibre share a pencil member."""
    t1 = Fraction(t1)
    if t1 == p.t0:
        raise ValueError("sample fibre must differ from the base fibre")
    for pt in samples:
        if pt.t != t1 or not s.contains(pt):
            raise ValueError(f"sample {pt} is not on the fibre t = {t1}")
    gammas = [gamma_for_point(s, p, pt) for pt in samples]
    counts = Counter(gammas)
    return PencilStats(gammas, max(counts.values(), default=0), len(counts))
