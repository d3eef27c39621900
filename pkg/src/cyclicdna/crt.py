"""The decomposition R = R1[v]/<v(1+v^2)> ~ R1 x Rw.

Writing x = a + b v + c v^2 with a, b, c in R1, the image in R1[v]/<v> is a
and the image in R1[v]/<1+v^2> is (a+b+c) + b w with w = v + v^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import Poly
from .ring import R1Elem, RElem, RwElem

__all__ = [
    "CrtPair",
    "split",
    "combine",
    "combine_printed",
    "split_vector",
    "combine_vector",
    "split_poly",
    "combine_poly",
]


@dataclass(frozen=True)
class CrtPair:
    first: R1Elem
    second: RwElem

    def __add__(self, other: "CrtPair") -> "CrtPair":
        return CrtPair(self.first + other.first, self.second + other.second)

    def __mul__(self, other: "CrtPair") -> "CrtPair":
        return CrtPair(self.first * other.first, self.second * other.second)


def split(x: RElem) -> CrtPair:
    a, b, c = x.r1_parts()
    return CrtPair(a, RwElem.of(a + b + c, b))


def combine(p: CrtPair) -> RElem:
    """Inverse of :func:`split`: (a, A + Bw) -> a + B v + (a+A+B) v^2."""
    a, big_a, big_b = p.first, p.second.r, p.second.s
    return RElem.of(a, big_b, a + big_a + big_b)


def combine_printed(p: CrtPair) -> RElem:
    """The inverse formula as printed, a + B w + (a+A+B) v^2, expanded literally.

    Since B w = B v + B v^2, the v^2 coefficient collapses to a + A.  Kept
    only so the errata report can show it fails to invert :func:`split`.
    """
    a, big_a, big_b = p.first, p.second.r, p.second.s
    return RElem.of(a, big_b, big_b + (a + big_a + big_b))


def split_vector(c: Sequence[RElem]) -> tuple[tuple[R1Elem, ...], tuple[RwElem, ...]]:
    pairs = [split(x) for x in c]
    return tuple(p.first for p in pairs), tuple(p.second for p in pairs)


def combine_vector(first: Sequence[R1Elem], second: Sequence[RwElem]) -> tuple[RElem, ...]:
    if len(first) != len(second):
        raise ValueError(f"length mismatch: {len(first)} vs {len(second)}")
    return tuple(combine(CrtPair(a, b)) for a, b in zip(first, second))


def split_poly(f: Poly) -> tuple[Poly, Poly]:
    if f.ring != "R":
        raise ValueError(f"expected a polynomial over R, got {f.ring}")
    first, second = split_vector(f.coeffs)
    return Poly("R1", first), Poly("Rw", second)


def combine_poly(f: Poly, g: Poly) -> Poly:
    """Coefficientwise inverse CRT of a polynomial over R1 and one over Rw."""
    if f.ring != "R1" or g.ring != "Rw":
        raise ValueError(f"expected (R1, Rw) polynomials, got ({f.ring}, {g.ring})")
    n = max(len(f.coeffs), len(g.coeffs))
    return Poly("R", combine_vector(f.to_vector(n), g.to_vector(n)))
