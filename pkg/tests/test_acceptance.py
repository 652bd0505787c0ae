"""Acceptance criteria, one test and one printed PASS/FAIL line each.

Every comparison is exact rational equality (tolerance 0). Run directly with
``python3 tests/test_acceptance.py`` or through pytest.
"""
import random
import sys
from collections import Counter
from fractions import Fraction

import pytest

from instances import admissible_instance, instance_with_point, small_rat
from trisect import fixtures as fx
from trisect.algebra import UPoly, root_multiplicity
from trisect.families import Fam1Inputs, Fam2Inputs, gen_fam1, gen_fam2
from trisect.surface import EllipticSurface, SurfacePoint, Verdict, classify_all_fibres, classify_fibre, is_dp1_blowup
from trisect.trisection import (
    PencilParams,
    Trisection,
    build_trisection_closed,
    build_trisection_generic,
    condition_poly,
    curve_poly,
    fibre_intersection,
    gamma_for_point,
    genus,
    multiplicity_of,
    pencil_injectivity_check,
    singularity_multiplicity,
)
from trisect.verify import recover_pencil_params

t = UPoly.t()


@pytest.fixture
def criterion(capsys):
    """Run a block of asserts and print one PASS/FAIL line for it."""

    def run(number, title, body):
        try:
            detail = body()
        except AssertionError as exc:
            with capsys.disabled():
                print(f"\nFAIL  criterion {number}: {title} [tolerance 0] :: {exc}")
            raise
        with capsys.disabled():
            print(f"\nPASS  criterion {number}: {title} [tolerance 0]" + (f" :: {detail}" if detail else ""))

    return run


def test_criterion_1_intro_reproduction(criterion):
    def body():
        p = PencilParams(1, 0, 1)
        for alpha in (0, 1):
            s = fx.intro_surface(alpha)
            gamma_r = -45 * Fraction(alpha) - Fraction(863, 9)
            for gamma in (Fraction(0), Fraction(1), gamma_r):
                T = build_trisection_closed(s, p, gamma)
                want = (
                    Fraction(-45, 2) * alpha - gamma - Fraction(454, 9),
                    45 * alpha + 3 * gamma + Fraction(926, 9),
                    Fraction(-45, 2) * alpha - 3 * gamma - Fraction(472, 9),
                )
                assert (T.c, T.d, T.e) == want, f"alpha={alpha} gamma={gamma}: {T.to_json()}"
                assert singularity_multiplicity(s, T, Fraction(1, 3), 1) == 3
            assert s.contains(SurfacePoint(Fraction(1, 3), Fraction(1, 3), 1))
            assert build_trisection_closed(s, p, gamma_r).contains(SurfacePoint(1, 1, 2))

    criterion(1, "intro example coefficients, triple point at Q, R on T_R", body)


def test_criterion_2_degenerate_pencil(criterion):
    def body():
        out = gen_fam2(Fam2Inputs(f2=1, f3=1, f4=1, g5=1, g6=1, a=1, b=1, t0=1, t1=2, x1=1))
        assert out.surface.f == UPoly((Fraction(43, 3), Fraction(-68, 3), 1, 1, 1)), out.surface.f
        assert out.surface.g == UPoly((
            Fraction(811, 108), Fraction(-433, 12), Fraction(501, 16),
            Fraction(4175, 216), Fraction(-2783, 144), 1, 1,
        )), out.surface.g
        q_xt, r_xt = (Fraction(4, 3), 1), (Fraction(1), 2)
        assert out.Q.as_tuple() == (Fraction(4, 3), 0, 1) and out.R.as_tuple() == (1, 0, 2)
        for h in (0, 1, -1):
            T = out.member(h)
            H = curve_poly(out.surface, T)
            assert multiplicity_of(H, *q_xt) == 3, f"h={h} at Q"
            assert multiplicity_of(H, *r_xt) == 2, f"h={h} at R"
            rep = genus(out.surface, T)
            assert rep.complete and rep.genus == 0, f"h={h}: genus {rep.genus}"

    criterion(2, "degenerate-branch pencil f, g and members h in {0, 1, -1}", body)


def test_criterion_3_genus_zero_family(criterion):
    def body():
        out = gen_fam1(Fam1Inputs(f0=1, f1=1, f2=1, f3=1, f4=1, g4=1, g5=1, g6=1, a=1, b=1, t0=1, t1=2, x1=3))
        want_g = (Fraction(68431, 3672), Fraction(-201749, 2448), Fraction(70331, 612), Fraction(-25936, 459))
        assert tuple(out.surface.g.coeffs[:4]) == want_g, out.surface.g
        want_T = (Fraction(5131, 1632), Fraction(-2387, 204), Fraction(22595, 1632), Fraction(-1461, 272))
        T = out.trisection
        assert (T.c, T.d, T.e, T.h) == want_T, T.to_json()
        rep = genus(out.surface, T)
        assert rep.complete and rep.genus == 0, rep.genus

    criterion(3, "genus-zero family example g0..g3, trisection, genus 0", body)


def test_criterion_4_genus_baseline(criterion):
    def body():
        smooth = genus(EllipticSurface(t, UPoly((1,))), Trisection(0, 0, 0, 0, 1, 0))
        assert smooth.complete and smooth.singularities == [] and smooth.genus == 4
        rng = random.Random(4)
        complete = 0
        for _ in range(50):
            s, p = admissible_instance(rng)
            rep = genus(s, build_trisection_closed(s, p, small_rat(rng, 9)))
            if rep.complete:
                complete += 1
                assert rep.genus <= 1, f"genus {rep.genus} on {s.to_json()} {p}"
        return f"smooth genus 4; {complete}/50 complete loci all genus <= 1"

    criterion(4, "smooth trisection genus 4, pencil members genus <= 1", body)


def test_criterion_5_builder_equivalence(criterion):
    def body():
        rng = random.Random(5)
        for _ in range(100):
            s, p = admissible_instance(rng)
            gamma = small_rat(rng, 9)
            closed = build_trisection_closed(s, p, gamma)
            assert closed == build_trisection_generic(s, p, gamma), f"{s.to_json()} {p} gamma={gamma}"
        return "100 instances"

    criterion(5, "closed-form builder equals jet linear solve", body)


def test_criterion_6_model_families(criterion):
    def body():
        failures = []
        for fam in fx.MODEL_FAMILIES:
            for alpha in (0, 1):
                label = f"{fam.name}[alpha={alpha}]"
                s = fam.surface(alpha)
                Q, R = fam.point_Q(), fam.point_R()
                if not (s.contains(Q) and s.contains(R)):
                    failures.append(f"{label}: Q or R off the surface")
                    continue
                found = recover_pencil_params(s, Q)
                if len(found) != 1:
                    failures.append(f"{label}: (a, b) recovery gave {found}")
                    continue
                a, b = found[0]
                if root_multiplicity(condition_poly(s, a, b), Q.t) < 2:
                    failures.append(f"{label}: P has no double root")
                    continue
                p = PencilParams(a, b, Q.t)
                T = build_trisection_closed(s, p, gamma_for_point(s, p, R))
                if singularity_multiplicity(s, T, Q.x, Q.t) != 3:
                    failures.append(f"{label}: multiplicity at Q is not 3")
        assert not failures, "; ".join(failures)
        return "11 families x 2 alpha samples"

    criterion(6, "model families: points, recovered (a, b), triple point", body)


def test_criterion_7_fibre_classification(criterion):
    def body():
        s = EllipticSurface(fx.DEGENERATE_F, fx.DEGENERATE_G)
        at_one = classify_fibre(s, 1)
        assert is_dp1_blowup(s) == Verdict.NO
        assert at_one.valuations[2] >= 3, at_one.valuations
        assert not at_one.irreducible
        intro = classify_all_fibres(fx.intro_surface(0))
        assert intro.complete and all(r.irreducible for r in intro.fibres)
        assert at_one.kodaira_type == "III", f"fibre at t=1 is {at_one.kodaira_type}, valuations {at_one.valuations}"

    criterion(7, "degenerate surface type III at t=1, intro fibres irreducible", body)


# integral points of y^2 = x^3 + 17
MORDELL_17 = [(-2, 3), (-1, 4), (2, 5), (4, 9), (8, 23), (43, 282), (52, 375), (5234, 378661)]


def test_criterion_8_three_to_one(criterion):
    def body():
        rng = random.Random(8)
        t1 = Fraction(2)
        while True:
            f = (t - t1) * UPoly(small_rat(rng) for _ in range(4))
            try:
                s, p = admissible_instance(rng, [(t1, Fraction(17))], f=f)
            except RuntimeError:
                continue
            break
        points = [SurfacePoint(x, sign * y, t1) for x, y in MORDELL_17 for sign in (1, -1)]
        assert all(s.contains(pt) for pt in points)
        stats = pencil_injectivity_check(s, p, t1, points)
        assert stats.max_collisions <= 3, Counter(stats.gammas).most_common(1)
        return f"{len(points)} points, {stats.distinct} distinct gamma, max collision {stats.max_collisions}"

    criterion(8, "gamma collides at most 3-to-1 on a fibre with 16 points", body)


def test_criterion_9_residual_symmetric_functions(criterion):
    def body():
        rng = random.Random(9)
        done = 0
        while done < 20:
            s, p, R = instance_with_point(rng)
            if R.t == p.t0:
                continue
            T = build_trisection_closed(s, p, gamma_for_point(s, p, R))
            meet = fibre_intersection(s, T, R.t, known_x=R.x)
            sigma, pi = meet.residual_sum, meet.residual_product
            assert isinstance(sigma, Fraction) and isinstance(pi, Fraction)
            assert UPoly.linear_root(R.x) * UPoly((pi, -sigma, 1)) == meet.cubic
            done += 1
        return "20 instances"

    criterion(9, "residual quadratic root sum and product are exact rationals", body)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
