"""Cyclic codes over F2[u,v]/<u^2-1, v^3-v, uv-vu> and their DNA images."""

from .codes import CyclicCode, CyclicCodeSpec, build, enumerate_code
from .poly import Poly, factor_xn1_f2
from .ring import F2Elem, R1Elem, RElem, RwElem

__all__ = [
    "CyclicCode",
    "CyclicCodeSpec",
    "F2Elem",
    "Poly",
    "R1Elem",
    "RElem",
    "RwElem",
    "build",
    "enumerate_code",
    "factor_xn1_f2",
]
