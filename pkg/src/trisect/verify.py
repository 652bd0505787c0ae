"""Reproduce the bundled worked examples and report one row per check."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import fixtures as fx
from .algebra import UPoly, rational_roots, root_multiplicity
from .families import Fam1Inputs, Fam2Inputs, gen_fam1, gen_fam2, verify_fam1, verify_fam2
from .surface import (
    EllipticSurface,
    SurfacePoint,
    Verdict,
    classify_all_fibres,
    classify_fibre,
    discriminant,
    fibre_cubic,
    is_dp1_blowup,
)
from .trisection import (
    REASON_DEGENERATE,
    PencilParams,
    build_trisection_closed,
    build_trisection_generic,
    condition_poly,
    curve_poly,
    fibre_intersection,
    gamma_for_point,
    genus,
    is_fam_k_member,
    is_fam_L_admissible,
    pencil_injectivity_check,
    singular_locus,
    singularity_multiplicity,
)


@dataclass(frozen=True)
class Check:
    fixture: str
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"fixture": self.fixture, "check": self.name, "ok": self.ok, "detail": self.detail}


class _Rows:
    def __init__(self, fixture: str):
        self.fixture = fixture
        self.rows: list[Check] = []

    def add(self, name: str, ok: bool, detail="") -> bool:
        self.rows.append(Check(self.fixture, name, bool(ok), str(detail)))
        return ok

    def guard(self, name: str, fn: Callable):
        """Run ``fn``; a raised exception becomes a failed row."""
        try:
            return fn()
        except Exception as exc:  # reported, not swallowed
            self.add(name, False, f"{type(exc).__name__}: {exc}")
            return None


def recover_pencil_params(
    s: EllipticSurface, Q: SurfacePoint, a_bound: int = 30, b_bound: int = 60
) -> list[tuple[int, int]]:
    """Integer (a, b) for which Q is the base point of an admissible pencil."""
    found = []
    leads = [r for r, _ in rational_roots(UPoly((-3 * Q.x, 0, 1)))] if Q.x else []
    for a in range(-a_bound, a_bound + 1):
        for lead in leads:
            b = lead - a * Q.t
            if b.denominator != 1 or abs(b) > b_bound:
                continue
            b = int(b)
            p = PencilParams(a, b, Q.t)
            if p.y0(s) == Q.y and is_fam_L_admissible(s, a, b, Q.t):
                found.append((a, b))
    return found


def check_intro(alpha, expected_genus: int = 1) -> list[Check]:
    rows = _Rows(f"intro[alpha={alpha}]")
    s = fx.intro_surface(alpha)
    p = PencilParams(1, 0, 1)
    Q = SurfacePoint(Fraction(1, 3), Fraction(1, 3), Fraction(1))
    R = SurfacePoint(Fraction(1), Fraction(1), Fraction(2))
    gamma_r = fx.intro_gamma_R(alpha)
    rows.add("Q on surface", s.contains(Q))
    rows.add("R on surface", s.contains(R))
    rows.add("admissible (1,0,1)", is_fam_L_admissible(s, 1, 0, 1).ok)
    rows.add("fam_k member (a=1, t0=1)", is_fam_k_member(s, 1, 1))
    rows.add("P double root at 1", root_multiplicity(condition_poly(s, 1, 0), 1) >= 2)
    for gamma in (Fraction(0), Fraction(1), gamma_r):
        T = build_trisection_closed(s, p, gamma)
        want = fx.intro_pencil_coeffs(alpha, gamma)
        rows.add(f"coefficients gamma={gamma}", (T.c, T.d, T.e) == want, T.to_json())
        rows.add(f"builders agree gamma={gamma}", build_trisection_generic(s, p, gamma) == T)
        rows.add(f"multiplicity 3 at Q gamma={gamma}", singularity_multiplicity(s, T, Q.x, Q.t) == 3)
    T_r = build_trisection_closed(s, p, gamma_r)
    rows.add("R on T_R", T_r.contains(R))
    rows.add("gamma for R", gamma_for_point(s, p, R) == gamma_r)
    rep = genus(s, build_trisection_closed(s, p, 1))
    rows.add("genus of generic member", rep.complete and rep.genus == expected_genus, rep.genus)
    cubic = fibre_cubic(s, 2)
    rows.add("fibre cubic at R", cubic(R.x) == R.y**2)
    inter = fibre_intersection(s, T_r, 2, R.x)
    rows.add(
        "residual roots over t=2",
        inter.residual_sum + R.x == (p.a * 2 + p.b) ** 2,
        f"sum={inter.residual_sum} product={inter.residual_product}",
    )
    stats = pencil_injectivity_check(s, p, 2, [R, SurfacePoint(R.x, -R.y, R.t)])
    rows.add("pencil at most 3-to-1", stats.max_collisions <= 3)
    if Fraction(alpha) == 0:
        classes = classify_all_fibres(s)
        rows.add(
            "only irreducible bad fibres",
            classes.complete and is_dp1_blowup(s) == Verdict.YES,
            [r.kodaira_type for r in classes.fibres],
        )
    return rows.rows


def check_degenerate_pencil(samples=(0, 1, -1)) -> list[Check]:
    rows = _Rows("degenerate-pencil")
    out = rows.guard("generate", lambda: gen_fam2(Fam2Inputs(**fx.DEGENERATE_INPUTS)))
    if out is None:
        return rows.rows
    s = out.surface
    rows.add("f reproduced", s.f == fx.DEGENERATE_F, s.f)
    rows.add("g reproduced", s.g == fx.DEGENERATE_G, s.g)
    rows.add("Q = (4/3, 0, 1)", out.Q.as_tuple() == (Fraction(4, 3), 0, 1))
    rows.add("R = (1, 0, 2)", out.R.as_tuple() == (1, 0, 2))
    verdict = is_fam_L_admissible(s, 1, 1, 1)
    rows.add("degenerate branch rejected by admissibility", verdict.reason == REASON_DEGENERATE)
    for h in samples:
        T = out.member(h)
        rows.add(f"member h={h}", T.coeffs() == fx.degenerate_member(h), T.to_json())
    locus = singular_locus(s, out.member(0))
    found = sorted((r.point.x, r.point.t, r.multiplicity) for r in locus.singularities)
    rows.add(
        "singular locus h=0",
        locus.complete and found == [(1, 2, 2), (Fraction(4, 3), 1, 3)],
        found,
    )
    inter = fibre_intersection(s, out.member(0), 2, 1)
    rows.add("fibre t=2 roots", inter.roots == [(1, 2), (7, 1)], inter.roots)
    report = verify_fam2(out, list(samples))
    rows.add("family checks", report.passed, report.failures())
    fibre = classify_fibre(s, 1)
    rows.add(
        "reducible fibre at t0",
        not fibre.irreducible and fibre.valuations[2] >= 3,
        f"type {fibre.kodaira_type}, valuations {fibre.valuations}",
    )
    rows.add("not a degree-one blow-up", is_dp1_blowup(s) == Verdict.NO)
    return rows.rows


def check_genus_zero_family() -> list[Check]:
    rows = _Rows("genus-zero-family")
    out = rows.guard("generate", lambda: gen_fam1(Fam1Inputs(**fx.GENUS_ZERO_INPUTS)))
    if out is None:
        return rows.rows
    rows.add("g reproduced", out.surface.g == fx.GENUS_ZERO_G, out.surface.g)
    rows.add("trisection reproduced", out.trisection.coeffs() == fx.GENUS_ZERO_TRISECTION, out.trisection.to_json())
    rows.add("Q reproduced", out.Q.as_tuple() == fx.GENUS_ZERO_Q)
    rows.add("R reproduced", out.R.as_tuple() == fx.GENUS_ZERO_R)
    report = verify_fam1(out)
    rows.add("family checks", report.passed, report.failures())
    rows.add("discriminant nonzero", not discriminant(out.surface).is_zero())
    return rows.rows


def check_model(fam: fx.ModelFamily, alpha, expected_genus: int = 1) -> list[Check]:
    rows = _Rows(f"{fam.name}[alpha={alpha}]")
    s = fam.surface(alpha)
    Q, R = fam.point_Q(), fam.point_R()
    rows.add("Q on surface", s.contains(Q))
    rows.add("R on surface", s.contains(R))
    found = recover_pencil_params(s, Q)
    if not rows.add("(a, b) recovered", len(found) == 1, found or "no integer (a, b) found"):
        return rows.rows
    a, b = found[0]
    p = PencilParams(a, b, Q.t)
    rows.add("P double root at t0", root_multiplicity(condition_poly(s, a, b), Q.t) >= 2)
    gamma = rows.guard("gamma for R", lambda: gamma_for_point(s, p, R))
    if gamma is None:
        return rows.rows
    T = build_trisection_closed(s, p, gamma)
    rows.add("R on T_R", T.contains(R))
    rows.add("multiplicity 3 at Q", singularity_multiplicity(s, T, Q.x, Q.t) == 3)
    rows.add("curve vanishes at R", curve_poly(s, T)(R.x, R.t) == 0)
    rep = genus(s, T)
    rows.add("genus of T_R", rep.complete and rep.genus == expected_genus, rep.genus)
    return rows.rows


def run_all(overrides: Optional[dict] = None) -> list[Check]:
    """Every fixture, ordered by fixture name.

    ``overrides`` maps a fixture label (e.g. ``"model-03[alpha=0]"``) to keyword
    arguments for its checker, which is how negative controls are injected.
    """
    overrides = overrides or {}
    jobs = []
    for alpha in fx.ALPHA_SAMPLES:
        jobs.append((f"intro[alpha={alpha}]", check_intro, (alpha,)))
        for fam in fx.MODEL_FAMILIES:
            jobs.append((f"{fam.name}[alpha={alpha}]", check_model, (fam, alpha)))
    jobs.append(("degenerate-pencil", check_degenerate_pencil, ()))
    jobs.append(("genus-zero-family", check_genus_zero_family, ()))
    rows = []
    for label, fn, args in sorted(jobs, key=lambda j: j[0]):
        rows.extend(fn(*args, **overrides.get(label, {})))
    return rows
