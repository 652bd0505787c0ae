"""Exact computations with low-genus trisections on rational elliptic surfaces."""

from .algebra import AlgNum, BiPoly, UPoly
from .surface import EllipticSurface, FibreReport, SurfacePoint, Verdict
from .trisection import PencilParams, SingularityReport, Trisection

__all__ = [
    "AlgNum",
    "BiPoly",
    "EllipticSurface",
    "FibreReport",
    "PencilParams",
    "SingularityReport",
    "SurfacePoint",
    "Trisection",
    "UPoly",
    "Verdict",
]
