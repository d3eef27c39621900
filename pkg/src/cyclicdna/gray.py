"""Binary Gray map R -> F2^6, Lee weight, and the two cyclic shifts."""

from __future__ import annotations

from typing import Sequence

from .codes import DEFAULT_CAP, CyclicCode, enumerate_code
from .ring import RElem

__all__ = [
    "phi",
    "phi_vector",
    "lee_weight",
    "lee_distance",
    "hamming_bits",
    "sigma",
    "nu",
    "binary_image",
    "format_bits",
    "nu_closed",
]

BinaryWord = tuple[int, ...]


def phi(x: RElem) -> BinaryWord:
    """(a1, a2, a1+a3, a2+a4, a1+a5, a2+a6)."""
    a1, a2, a3, a4, a5, a6 = x.bits
    return (a1, a2, a1 ^ a3, a2 ^ a4, a1 ^ a5, a2 ^ a6)


def phi_vector(c: Sequence[RElem]) -> BinaryWord:
    out: list[int] = []
    for x in c:
        out.extend(phi(x))
    return tuple(out)


def lee_weight(x: RElem) -> int:
    """Number of nonzero coefficients a_i."""
    return sum(x.bits)


def lee_distance(x: RElem, y: RElem) -> int:
    return lee_weight(x - y)


def hamming_bits(b1: BinaryWord, b2: BinaryWord) -> int:
    if len(b1) != len(b2):
        raise ValueError("binary words of different lengths")
    return sum(p != q for p, q in zip(b1, b2))


def sigma(c: Sequence) -> tuple:
    """Right rotation by one coordinate."""
    c = tuple(c)
    return c[-1:] + c[:-1]


def nu(b: BinaryWord) -> BinaryWord:
    """Right rotation by six positions."""
    if len(b) % 6:
        raise ValueError(f"length {len(b)} is not a multiple of 6")
    b = tuple(b)
    return b[-6:] + b[:-6]


def binary_image(code: CyclicCode, cap: int = DEFAULT_CAP) -> frozenset[BinaryWord]:
    if code.ring != "R":
        raise ValueError("the Gray map is defined on codes over R")
    return frozenset(phi_vector(v) for v in enumerate_code(code, cap).vectors())


def nu_closed(words: frozenset[BinaryWord]) -> bool:
    return all(nu(b) in words for b in words)


def format_bits(b: BinaryWord) -> str:
    """0/1 string in blocks of six separated by spaces."""
    s = "".join(str(x) for x in b)
    return " ".join(s[i:i + 6] for i in range(0, len(s), 6))
