"""Exact arithmetic in F2, R1 = F2 + uF2 (u^2 = 1), Rw = R1 + wR1 (w^2 = 0)
and R = F2[u, v]/<u^2 - 1, v^3 - v, uv - vu>.

Every element is an immutable, interned object carrying its ring.  The
integer ``code`` packs the coefficient bits little-endian in the order the
element is written:

* F2: ``a``
* R1: ``a1 + u a2``                          -> bit0 = a1, bit1 = a2
* Rw: ``r + w s`` with r, s in R1            -> bits 0-1 = r, bits 2-3 = s
* R:  ``a1 + u a2 + v a3 + uv a4 + v^2 a5 + uv^2 a6`` -> bit j-1 = a_j

Textual syntax is the bit string in the same order, e.g. ``RElem.parse("110000")``
is ``1+u``.
"""

from __future__ import annotations

from itertools import product
from typing import ClassVar, Iterator, Sequence

__all__ = [
    "RingMismatchError",
    "RingElem",
    "F2Elem",
    "R1Elem",
    "RwElem",
    "RElem",
    "RING_TYPES",
    "ring_type",
    "add",
    "mul",
    "complement",
    "complement_r1",
    "embed_r1_in_r",
    "units",
    "monomial_mul_table",
]


class RingMismatchError(TypeError):
    """Operands belong to different rings."""


class RingElem:
    """Base class for interned ring elements."""

    __slots__ = ("code",)

    RING: ClassVar[str]
    NBITS: ClassVar[int]
    BASIS_NAMES: ClassVar[tuple[str, ...]]
    _elems: ClassVar[tuple["RingElem", ...]]
    _mul: ClassVar[tuple[int, ...]]

    code: int

    @classmethod
    def _init_ring(cls, mul_code) -> None:
        elems = []
        for code in range(1 << cls.NBITS):
            obj = object.__new__(cls)
            object.__setattr__(obj, "code", code)
            elems.append(obj)
        cls._elems = tuple(elems)
        size = 1 << cls.NBITS
        cls._mul = tuple(mul_code(x, y) for x in range(size) for y in range(size))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self).from_code, (self.code,))

    @classmethod
    def from_code(cls, code: int):
        try:
            return cls._elems[code]
        except (IndexError, TypeError):
            raise ValueError(f"invalid {cls.RING} code {code!r}") from None

    @classmethod
    def from_bits(cls, bits: Sequence[int]):
        if len(bits) != cls.NBITS:
            raise ValueError(f"{cls.RING} element needs {cls.NBITS} bits, got {len(bits)}")
        code = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"coefficient {b!r} is not in F2")
            code |= b << i
        return cls._elems[code]

    @classmethod
    def parse(cls, text: str):
        text = text.strip()
        if len(text) != cls.NBITS or set(text) - {"0", "1"}:
            raise ValueError(f"expected a {cls.NBITS}-bit string for {cls.RING}, got {text!r}")
        return cls.from_bits([int(ch) for ch in text])

    @classmethod
    def all(cls) -> tuple:
        return cls._elems

    @classmethod
    def zero(cls):
        return cls._elems[0]

    @classmethod
    def one(cls):
        return cls._elems[1]

    @classmethod
    def basis(cls) -> tuple:
        """The monomial F2-basis, in coefficient order."""
        return tuple(cls._elems[1 << i] for i in range(cls.NBITS))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.code >> i) & 1 for i in range(self.NBITS))

    def to_str(self) -> str:
        return "".join(str(b) for b in self.bits)

    def is_zero(self) -> bool:
        return self.code == 0

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise RingMismatchError(
                f"cannot combine {self.RING} element with {getattr(other, 'RING', type(other).__name__)}"
            )

    def __add__(self, other):
        self._check(other)
        return self._elems[self.code ^ other.code]

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        self._check(other)
        return self._elems[self._mul[(self.code << self.NBITS) | other.code]]

    def __pow__(self, k: int):
        result = self.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return type(other) is type(self) and other.code == self.code

    def __hash__(self):
        return hash((self.RING, self.code))

    def __lt__(self, other):
        self._check(other)
        return self.code < other.code

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        terms = [name for name, b in zip(self.BASIS_NAMES, self.bits) if b]
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"{type(self).__name__}({str(self)})"


def _r1_mul_code(x: int, y: int) -> int:
    a1, a2 = x & 1, x >> 1
    b1, b2 = y & 1, y >> 1
    # u^2 = 1
    return ((a1 & b1) ^ (a2 & b2)) | (((a1 & b2) ^ (a2 & b1)) << 1)


def _rw_mul_code(x: int, y: int) -> int:
    r1, s1 = x & 3, x >> 2
    r2, s2 = y & 3, y >> 2
    # w^2 = 0 drops s1*s2
    return _r1_mul_code(r1, r2) | ((_r1_mul_code(r1, s2) ^ _r1_mul_code(r2, s1)) << 2)


def _r_mul_code(x: int, y: int) -> int:
    # x = a + b v + c v^2 with a, b, c in R1; reduce v^3 -> v, v^4 -> v^2
    xa, xb, xc = x & 3, (x >> 2) & 3, x >> 4
    ya, yb, yc = y & 3, (y >> 2) & 3, y >> 4
    m = _r1_mul_code
    c0 = m(xa, ya)
    c1 = m(xa, yb) ^ m(xb, ya)
    c2 = m(xa, yc) ^ m(xb, yb) ^ m(xc, ya)
    c3 = m(xb, yc) ^ m(xc, yb)
    c4 = m(xc, yc)
    return c0 | ((c1 ^ c3) << 2) | ((c2 ^ c4) << 4)


class F2Elem(RingElem):
    __slots__ = ()
    RING = "F2"
    NBITS = 1
    BASIS_NAMES = ("1",)


class R1Elem(RingElem):
    __slots__ = ()
    RING = "R1"
    NBITS = 2
    BASIS_NAMES = ("1", "u")

    @property
    def a1(self) -> int:
        return self.code & 1

    @property
    def a2(self) -> int:
        return self.code >> 1


class RwElem(RingElem):
    __slots__ = ()
    RING = "Rw"
    NBITS = 4
    BASIS_NAMES = ("1", "u", "w", "uw")

    @classmethod
    def of(cls, r: R1Elem, s: R1Elem) -> "RwElem":
        """The element ``r + w s``."""
        return cls._elems[r.code | (s.code << 2)]

    @property
    def r(self) -> R1Elem:
        return R1Elem.from_code(self.code & 3)

    @property
    def s(self) -> R1Elem:
        return R1Elem.from_code(self.code >> 2)


class RElem(RingElem):
    __slots__ = ()
    RING = "R"
    NBITS = 6
    BASIS_NAMES = ("1", "u", "v", "uv", "v^2", "uv^2")

    @classmethod
    def of(cls, a: R1Elem, b: R1Elem, c: R1Elem) -> "RElem":
        """The element ``a + v b + v^2 c``."""
        return cls._elems[a.code | (b.code << 2) | (c.code << 4)]

    def r1_parts(self) -> tuple[R1Elem, R1Elem, R1Elem]:
        """``(a, b, c)`` with ``self = a + v b + v^2 c``."""
        c = self.code
        return R1Elem.from_code(c & 3), R1Elem.from_code((c >> 2) & 3), R1Elem.from_code(c >> 4)

    a1 = property(lambda self: self.code & 1)
    a2 = property(lambda self: (self.code >> 1) & 1)
    a3 = property(lambda self: (self.code >> 2) & 1)
    a4 = property(lambda self: (self.code >> 3) & 1)
    a5 = property(lambda self: (self.code >> 4) & 1)
    a6 = property(lambda self: (self.code >> 5) & 1)


F2Elem._init_ring(lambda x, y: x & y)
R1Elem._init_ring(_r1_mul_code)
RwElem._init_ring(_rw_mul_code)
RElem._init_ring(_r_mul_code)

RING_TYPES: dict[str, type[RingElem]] = {
    "F2": F2Elem,
    "R1": R1Elem,
    "Rw": RwElem,
    "R": RElem,
}


def ring_type(tag: str) -> type[RingElem]:
    try:
        return RING_TYPES[tag]
    except KeyError:
        raise ValueError(f"unknown ring {tag!r}; expected one of {sorted(RING_TYPES)}") from None


def _coerce(tag: str, x: RingElem, y: RingElem) -> None:
    cls = ring_type(tag)
    for z in (x, y):
        if type(z) is not cls:
            raise RingMismatchError(f"{z!r} is not an element of {tag}")


def add(tag: str, x: RingElem, y: RingElem) -> RingElem:
    _coerce(tag, x, y)
    return x + y


def mul(tag: str, x: RingElem, y: RingElem) -> RingElem:
    _coerce(tag, x, y)
    return x * y


_ONE_PLUS_U = 0b11


def complement(x: RElem) -> RElem:
    """Watson-Crick complement on R: ``x + (1+u)``."""
    if type(x) is not RElem:
        raise RingMismatchError(f"complement expects an R element, got {x!r}")
    return RElem.from_code(x.code ^ _ONE_PLUS_U)


def complement_r1(x: R1Elem) -> R1Elem:
    if type(x) is not R1Elem:
        raise RingMismatchError(f"complement_r1 expects an R1 element, got {x!r}")
    return R1Elem.from_code(x.code ^ _ONE_PLUS_U)


def embed_r1_in_r(x: R1Elem) -> RElem:
    if type(x) is not R1Elem:
        raise RingMismatchError(f"expected an R1 element, got {x!r}")
    return RElem.from_code(x.code)


_UNITS: dict[type, tuple] = {}


def units(cls: type[RingElem]) -> tuple:
    """Elements with a multiplicative inverse, found by table scan."""
    if cls not in _UNITS:
        one = cls.one()
        _UNITS[cls] = tuple(x for x in cls.all() if any(x * y == one for y in cls.all()))
    return _UNITS[cls]


def iter_pairs(cls: type[RingElem]) -> Iterator[tuple[RingElem, RingElem]]:
    return product(cls.all(), repeat=2)


def monomial_mul_table() -> list[list[int]]:
    """64x64 product table of R built by brute-force monomial expansion.

    Each element is expanded into monomials u^i v^j, products are taken
    term by term and reduced with u^2 -> 1 and v^3 -> v.  Kept separate
    from the R1-coefficient routine used by :class:`RElem` so the two can
    be compared.
    """
    # basis index -> (u exponent, v exponent)
    monos = [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
    index = {m: k for k, m in enumerate(monos)}

    def reduce(i: int, j: int) -> tuple[int, int]:
        i %= 2
        while j >= 3:
            j -= 2
        return i, j

    table = []
    for x in range(64):
        row = []
        for y in range(64):
            acc = 0
            for kx, (ix, jx) in enumerate(monos):
                if not (x >> kx) & 1:
                    continue
                for ky, (iy, jy) in enumerate(monos):
                    if (y >> ky) & 1:
                        acc ^= 1 << index[reduce(ix + iy, jx + jy)]
            row.append(acc)
        table.append(row)
    return table
