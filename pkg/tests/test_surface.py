from fractions import Fraction

import pytest

from trisect import fixtures as fx
from trisect.algebra import UPoly
from trisect.surface import (
    INFINITY,
    DegenerateSurfaceError,
    EllipticSurface,
    SurfacePoint,
    Verdict,
    classify_all_fibres,
    classify_fibre,
    discriminant,
    fibre_cubic,
    is_dp1_blowup,
    kodaira_type,
)

t = UPoly.t()


def surf(f, g):
    return EllipticSurface(UPoly(f) if not isinstance(f, UPoly) else f, UPoly(g) if not isinstance(g, UPoly) else g)


def degenerate_surface():
    return EllipticSurface(fx.DEGENERATE_F, fx.DEGENERATE_G)


def test_discriminant_simple():
    assert discriminant(surf([0], [0, 1])) == UPoly((0, 0, 27))


def test_identically_zero_discriminant_rejected():
    with pytest.raises(DegenerateSurfaceError):
        surf([-3], [2])


def test_degree_bounds_enforced():
    with pytest.raises(DegenerateSurfaceError):
        surf([0, 0, 0, 0, 0, 1], [1])


def test_degenerate_surface_discriminant_triple_root():
    disc = discriminant(degenerate_surface())
    assert disc(1) == 0
    assert (disc % (t - 1) ** 3).is_zero()


@pytest.mark.parametrize(
    "vals, kind",
    [
        ((0, 0, 0), "I0"),
        ((0, 0, 5), "I5"),
        ((None, 1, 2), "II"),
        ((1, 2, 3), "III"),
        ((2, 2, 4), "IV"),
        ((2, 3, 6), "I0*"),
        ((2, 3, 9), "I3*"),
        ((3, 4, 8), "IV*"),
        ((3, 5, 9), "III*"),
        ((4, 5, 10), "II*"),
        ((4, 6, 12), "I0"),
        ((4, 6, 13), "I1"),
        ((5, 6, 12), "I0"),
    ],
)
def test_kodaira_table(vals, kind):
    assert kodaira_type(*vals) == kind


def test_type_two_at_zero():
    rep = classify_fibre(surf([0], [0, 1]), 0)
    assert rep.kodaira_type == "II"
    assert rep.irreducible
    assert rep.valuations == (None, 1, 2)


def test_good_fibre_is_I0():
    s = fx.intro_surface(0)
    rep = classify_fibre(s, 5)
    assert rep.kodaira_type == "I0" and rep.irreducible


def test_type_two_star():
    s = surf([0], t**5 * (t - 1))
    classes = classify_all_fibres(s)
    at_zero = next(r for r in classes.fibres if r.location == 0)
    assert at_zero.kodaira_type == "II*"
    assert at_zero.valuations[1:] == (5, 10)


def test_degenerate_surface_fibres():
    s = degenerate_surface()
    rep = classify_fibre(s, 1)
    # f(1) = -16/3 and g(1) = 128/27 are both nonzero, so the fibre is multiplicative
    assert s.f(1) == Fraction(-16, 3) and s.g(1) == Fraction(128, 27)
    assert rep.valuations == (0, 0, 3)
    assert rep.kodaira_type == "I3"
    assert not rep.irreducible
    assert classify_fibre(s, 2).kodaira_type == "I2"
    assert is_dp1_blowup(s) == Verdict.NO


def test_intro_surface_fibres():
    classes = classify_all_fibres(fx.intro_surface(0))
    assert classes.complete
    assert all(r.irreducible for r in classes.fibres)
    assert is_dp1_blowup(fx.intro_surface(0)) == Verdict.YES


def test_constant_discriminant():
    classes = classify_all_fibres(surf([-1], [1]))
    assert classes.fibres == []
    assert classes.complete


def test_unknown_for_high_degree_repeated_factor():
    s = surf([0], t**5 - t - 1)
    classes = classify_all_fibres(s)
    assert not classes.complete
    assert classes.verdict() == Verdict.UNKNOWN


def test_reducible_quintic_is_still_unresolved():
    # t^5 + t + 1 = (t^2 + t + 1)(t^3 - t^2 + 1) but no factoring is attempted
    classes = classify_all_fibres(surf([0], t**5 + t + 1))
    assert classes.unresolved == [t**5 + t + 1]


def test_conjugate_fibres_via_quotient_ring():
    classes = classify_all_fibres(surf([0], t * t - 2))
    finite = [r for r in classes.fibres if r.location != INFINITY]
    assert len(finite) == 1
    rep = finite[0]
    assert rep.location == t * t - 2
    assert rep.conjugate_degree == 2
    assert rep.kodaira_type == "II"


def test_quotient_ring_split_on_mixed_factor():
    # disc has the square of (t^2-1)(t^2-2); roots of t^2-1 are rational and peeled off,
    # roots of t^2-2 need the quotient ring
    g = (t * t - 1) * (t * t - 2)
    classes = classify_all_fibres(surf([0], g))
    kinds = {str(r.location): r.kodaira_type for r in classes.fibres}
    assert kinds["1"] == "II" and kinds["-1"] == "II"
    assert classes.complete


def test_fibre_at_infinity():
    s = surf([0], [0, 1])
    rep = classify_fibre(s, INFINITY)
    assert rep.valuations == (None, 5, 10)
    assert rep.kodaira_type == "II*"


@pytest.mark.parametrize("alpha", [0, 1])
def test_discriminant_degree_sum(alpha):
    for s in (fx.intro_surface(alpha), degenerate_surface(), surf([0], t**5 * (t - 1))):
        classes = classify_all_fibres(s)
        assert classes.complete
        finite = sum(r.conjugate_degree * r.valuations[2] for r in classes.fibres if r.location != INFINITY)
        assert finite + classify_fibre(s, INFINITY).valuations[2] == 12


def test_fibre_cubic_examples():
    s = degenerate_surface()
    assert fibre_cubic(s, 2)(1) == 0
    intro = fx.intro_surface(0)
    assert fibre_cubic(intro, 2)(1) == 1


def test_on_surface_points():
    s = fx.intro_surface(0)
    assert s.contains(SurfacePoint(Fraction(1, 3), Fraction(1, 3), Fraction(1)))
    assert not s.contains(SurfacePoint(0, 0, 0))


def test_verdict_no_when_any_reducible():
    for alpha in (0, 1):
        for fam in fx.MODEL_FAMILIES:
            classes = classify_all_fibres(fam.surface(alpha))
            if any(r.kodaira_type not in ("I0", "I1", "II") for r in classes.fibres):
                assert classes.verdict() == Verdict.NO
