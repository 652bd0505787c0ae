"""Worked examples with their expected values, used by the CLI and the test suite.

Surfaces that depend on a parameter alpha are stored as pairs
(constant, alpha coefficient) per coefficient of g.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import UPoly
from .surface import EllipticSurface, SurfacePoint

F = Fraction


def _alpha_poly(pairs, alpha) -> UPoly:
    alpha = Fraction(alpha)
    return UPoly(F(c) + F(k) * alpha for c, k in pairs)


@dataclass(frozen=True)
class ModelFamily:
    name: str
    f: tuple
    g: tuple  # ascending (constant, alpha coefficient) pairs
    R: tuple
    Q: tuple

    def surface(self, alpha) -> EllipticSurface:
        return EllipticSurface(UPoly(F(c) for c in self.f), _alpha_poly(self.g, alpha))

    def point_R(self) -> SurfacePoint:
        return SurfacePoint(*(F(v) for v in self.R))

    def point_Q(self) -> SurfacePoint:
        return SurfacePoint(*(F(v) for v in self.Q))


MODEL_FAMILIES = (
    ModelFamily(
        "model-01",
        ("-82", "-77", "7", "4", "16886"),
        (("196423636996/25", -9604), ("-196423631696/25", 9604), ("49105909849/25", -2401),
         ("-135", 0), ("11", 4), ("12", -4), ("-421875", 1)),
        (13, 31, 7),
        (300, 9000, 2),
    ),
    ModelFamily(
        "model-02",
        ("-12", "-8", "-9", "-10", "28/3"),
        (("-3107840/243", -2500), ("3117560/243", 2500), ("-775988/243", -625),
         ("14", 0), ("-37", 4), ("12", -4), ("-1/27", 1)),
        (3, 4, 5),
        ("4/3", "8/3", 2),
    ),
    ModelFamily(
        "model-03",
        ("-1", "0", "0", "0", "4/3"),
        (("-863/27", -16), ("1753/27", 32), ("-890/27", -16),
         ("0", 0), ("-1", 1), ("1", -2), ("-1/27", 1)),
        (1, 1, 2),
        ("1/3", "1/3", 1),
    ),
    ModelFamily(
        "model-04",
        ("-4", "0", "-3", "0", "4/3"),
        (("400/27", -4), ("-184/27", 4), ("-8/27", -1),
         ("6", 0), ("-7", 4), ("2", -4), ("-1/27", 1)),
        (1, 2, 1),
        ("4/3", "8/3", 2),
    ),
    ModelFamily(
        "model-05",
        ("-2", "1", "-12", "2", "2189"),
        (("1186391440/9", -2500), ("-1186391188/9", 2500), ("296597824/9", -625),
         ("-9", 0), ("-2", 4), ("2", -4), ("-19683", 1)),
        (8, 6, 5),
        (108, 1944, 2),
    ),
    ModelFamily(
        "model-06",
        ("0", "-10", "5", "-12", "19/3"),
        (("-7757/27", -1024), ("7757/27", 1024), ("-4733/108", -256),
         ("-28", 0), ("7", 4), ("0", -4), ("-1/27", 1)),
        (0, 3, 4),
        ("4/3", "8/3", 2),
    ),
    ModelFamily(
        "model-07",
        ("-39", "-38", "-40", "-50", "85/3"),
        (("-6264101/48", -131769), ("6282893/72", 87846), ("-6218741/432", -14641),
         ("176", 0), ("-191", 9), ("37", -6), ("-64/27", 1)),
        (5, 7, 11),
        (12, 72, 3),
    ),
    ModelFamily(
        "model-08",
        ("-4", "-11", "-9", "-1", "4/3"),
        (("1012/27", -256), ("1222/27", 128), ("3709/108", -16),
         ("-12", 0), ("-4", 16), ("1", -8), ("-1/27", 1)),
        (3, 4, 2),
        ("16/3", "64/3", 4),
    ),
    ModelFamily(
        "model-09",
        ("-4", "1", "0", "-4", "4/3"),
        (("-5288/27", -256), ("4372/27", 128), ("-2389/54", -16),
         ("20", 0), ("-8", 16), ("1", -8), ("-1/27", 1)),
        (1, 1, 2),
        ("16/3", "64/3", 4),
    ),
    ModelFamily(
        "model-10",
        ("-9", "7", "-4", "1", "32"),
        (("41631/2", -625), ("-41624", 1250), ("41613/2", -625),
         ("0", 0), ("-1", 1), ("3", -2), ("-27", 1)),
        (4, 1, 5),
        (3, 9, 1),
    ),
    ModelFamily(
        "model-11",
        ("-56", "1", "-55", "-6", "22/3"),
        (("-1826573/675", -784), ("786478/675", 224), ("19423/675", -16),
         ("197", 0), ("-66", 49), ("5", -14), ("-64/27", 1)),
        (1, 8, 2),
        ("196/3", "2744/3", 7),
    ),
)

ALPHA_SAMPLES = (0, 1)

# the first family's constant term of g as printed, without its alpha part;
# the alpha part must vanish at t = 7 for R to stay on every member
MODEL_01_PRINTED_G0 = ("196423636996/25", 0)


def intro_surface(alpha=0) -> EllipticSurface:
    return MODEL_FAMILIES[2].surface(alpha)


def intro_pencil_coeffs(alpha, gamma) -> tuple:
    """Expected (c, d, e) of the intro pencil member with constant term gamma."""
    alpha, gamma = F(alpha), F(gamma)
    return (
        F(-45, 2) * alpha - gamma - F(454, 9),
        45 * alpha + 3 * gamma + F(926, 9),
        F(-45, 2) * alpha - 3 * gamma - F(472, 9),
    )


def intro_gamma_R(alpha) -> Fraction:
    return -45 * F(alpha) - F(863, 9)


DEGENERATE_INPUTS = dict(f2=1, f3=1, f4=1, g5=1, g6=1, a=1, b=1, t0=1, t1=2, x1=1)
DEGENERATE_F = UPoly((F(43, 3), F(-68, 3), 1, 1, 1))
DEGENERATE_G = UPoly((F(811, 108), F(-433, 12), F(501, 16), F(4175, 216), F(-2783, 144), 1, 1))


def degenerate_member(h) -> tuple:
    """Expected (a, b, c, d, e, h) of the degenerate-branch pencil."""
    h = F(h)
    return (F(1), F(1), F(13, 4) - h / 2, 2 * h - F(103, 12), F(8, 3) - 5 * h / 2, h)


GENUS_ZERO_INPUTS = dict(f0=1, f1=1, f2=1, f3=1, f4=1, g4=1, g5=1, g6=1, a=1, b=1, t0=1, t1=2, x1=3)
GENUS_ZERO_G = UPoly((F(68431, 3672), F(-201749, 2448), F(70331, 612), F(-25936, 459), 1, 1, 1))
GENUS_ZERO_TRISECTION = (F(1), F(1), F(5131, 1632), F(-2387, 204), F(22595, 1632), F(-1461, 272))
GENUS_ZERO_Q = (F(4, 3), F(31, 12), F(1))
GENUS_ZERO_R = (F(3), F(29, 3), F(2))


def find_by_name(name: str) -> Optional[ModelFamily]:
    return next((fam for fam in MODEL_FAMILIES if fam.name == name), None)
