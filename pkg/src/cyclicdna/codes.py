"""Cyclic codes over R1, Rw and R: construction, enumeration, metrics.

Codewords are handled internally as packed integers: coordinate i of a
length-n vector occupies bits ``[i*B, (i+1)*B)`` where B is the bit width of
the ring element code (2 for R1, 4 for Rw, 6 for R).  With this layout the
lowest set bit of a word belongs to its lowest nonzero coordinate, and
within that coordinate to its lowest basis monomial, which is exactly the
pivot order used by the row reduction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, fields
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .crt import combine_poly
from .poly import (
    Poly,
    divides,
    divides_f2,
    f2_divmod,
    f2_mul,
    p_mod_xn1,
    p_add,
    p_scale,
    xn1,
)
from .ring import R1Elem, RingElem, RwElem, ring_type

__all__ = [
    "FORMS",
    "FORM_RING",
    "DEFAULT_CAP",
    "CodeSpecError",
    "DivisibilityError",
    "DegreeOrderError",
    "CapExceededError",
    "CyclicCodeSpec",
    "CyclicCode",
    "CodewordSet",
    "build",
    "ideal",
    "enumerate_code",
    "contains",
    "size_formula_r1",
    "min_hamming_distance",
    "shift_closed",
    "encode",
    "decode",
    "sigma_packed",
    "reverse_packed",
    "hamming_weight_packed",
]

FORMS = ("r1-odd", "r1-even-principal", "r1-even-two-gen", "rw", "r-crt")
FORM_RING = {
    "r1-odd": "R1",
    "r1-even-principal": "R1",
    "r1-even-two-gen": "R1",
    "rw": "Rw",
    "r-crt": "R",
}
_FORM_POLYS = {
    "r1-odd": ("g", "a"),
    "r1-even-principal": ("g", "p"),
    "r1-even-two-gen": ("g", "p", "a"),
    "rw": ("g1", "a1", "g1p", "a1p"),
    "r-crt": ("g2", "a2", "g1", "a1", "g1p", "a1p"),
}
DEFAULT_CAP = 20


class CodeSpecError(ValueError):
    pass


class DivisibilityError(CodeSpecError):
    pass


class DegreeOrderError(CodeSpecError):
    pass


class CapExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class CyclicCodeSpec:
    """Generator data of a cyclic code in one of the standard forms.

    All named polynomials are binary.
    """

    ring: str
    n: int
    form: str
    g: Poly | None = None
    a: Poly | None = None
    p: Poly | None = None
    g1: Poly | None = None
    a1: Poly | None = None
    g1p: Poly | None = None
    a1p: Poly | None = None
    g2: Poly | None = None
    a2: Poly | None = None

    def polys(self) -> dict[str, Poly]:
        return {
            f.name: getattr(self, f.name)
            for f in fields(self)
            if f.name not in ("ring", "n", "form") and getattr(self, f.name) is not None
        }

    @classmethod
    def parse(cls, text: str) -> "CyclicCodeSpec":
        """Read the line-based ``key=value`` code-spec format."""
        kv: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise CodeSpecError(f"line {lineno}: expected key=value, got {raw!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key in kv:
                raise CodeSpecError(f"line {lineno}: duplicate key {key!r}")
            kv[key] = value
        known = {f.name for f in fields(cls)}
        unknown = set(kv) - known
        if unknown:
            raise CodeSpecError(f"unknown keys: {', '.join(sorted(unknown))}")
        for key in ("ring", "n", "form"):
            if key not in kv:
                raise CodeSpecError(f"missing required key {key!r}")
        try:
            n = int(kv.pop("n"))
        except ValueError:
            raise CodeSpecError("n must be an integer") from None
        ring, form = kv.pop("ring"), kv.pop("form")
        polys = {k: Poly.from_bits(v) if v != "0" else Poly.zero("F2") for k, v in kv.items()}
        return cls(ring=ring, n=n, form=form, **polys)

    def dumps(self) -> str:
        lines = [f"ring={self.ring}", f"n={self.n}", f"form={self.form}"]
        lines += [f"{k}={v.to_str()}" for k, v in self.polys().items()]
        return "\n".join(lines) + "\n"


def _chain(name: str, lower: Poly, upper: Poly | int, n: int) -> None:
    """Check lower | upper over F2, where upper may be x^n - 1 given as int."""
    up = upper if isinstance(upper, int) else upper.to_int()
    if lower.is_zero() or not divides_f2(lower, up):
        raise DivisibilityError(f"divisibility chain failed: {name}")


def validate(spec: CyclicCodeSpec, strict: bool = True) -> list[str]:
    """Check the divisibility and degree conditions of the spec's form.

    Returns the list of warnings raised.  With ``strict=False`` divisibility
    failures are downgraded to warnings.
    """
    if spec.form not in FORMS:
        raise CodeSpecError(f"unknown form {spec.form!r}; expected one of {', '.join(FORMS)}")
    if spec.ring != FORM_RING[spec.form]:
        raise CodeSpecError(f"form {spec.form} lives over {FORM_RING[spec.form]}, not {spec.ring}")
    if spec.n < 1:
        raise CodeSpecError("n must be a positive integer")
    required = _FORM_POLYS[spec.form]
    polys = spec.polys()
    missing = [k for k in required if k not in polys]
    if missing:
        raise CodeSpecError(f"form {spec.form} needs {', '.join(missing)}")
    extra = sorted(set(polys) - set(required))
    if extra:
        raise CodeSpecError(f"form {spec.form} does not use {', '.join(extra)}")
    for k, f in polys.items():
        if f.ring != "F2":
            raise CodeSpecError(f"{k} must be a binary polynomial")

    n, xn = spec.n, (1 << spec.n) | 1
    notes: list[str] = []

    def check(name: str, lower: Poly, upper: Poly | int) -> None:
        try:
            _chain(name, lower, upper, n)
        except DivisibilityError as exc:
            if strict:
                raise
            notes.append(str(exc))
            warnings.warn(str(exc), stacklevel=3)

    form = spec.form
    if form == "r1-odd":
        if n % 2 == 0:
            notes.append(f"r1-odd form used with even length {n}")
            warnings.warn(notes[-1], stacklevel=2)
        check("g | x^n-1", spec.g, xn)
        check("a | g", spec.a, spec.g)
    elif form == "r1-even-principal":
        check("g | x^n-1", spec.g, xn)
        gen = p_add(spec.g.lift("R1"), p_scale(_T, spec.p.lift("R1")))
        ok = False
        try:
            ok = divides(gen, xn1(n, "R1"))
        except (ValueError, ZeroDivisionError):
            ok = False
        if not ok:
            msg = "divisibility chain failed: g+(1+u)p | x^n-1 in R1"
            if strict:
                raise DivisibilityError(msg)
            notes.append(msg)
            warnings.warn(msg, stacklevel=2)
    elif form == "r1-even-two-gen":
        g, p, a = spec.g, spec.p, spec.a
        check("g | x^n-1", g, xn)
        check("a | g", a, g)
        if not g.is_zero():
            cof = f2_divmod(xn, g.to_int())[0]
            check("a | p (x^n-1)/g", a, f2_mul(p.to_int(), cof))
        if not (g.deg >= a.deg > p.deg):
            raise DegreeOrderError(f"need deg g > deg a > deg p, got {g.deg}, {a.deg}, {p.deg}")
        if g.deg == a.deg:
            notes.append("deg g = deg a accepted although the form asks for deg g > deg a")
            warnings.warn(notes[-1], stacklevel=2)
    elif form == "rw":
        check("g1 | x^n-1", spec.g1, xn)
        check("a1 | g1", spec.a1, spec.g1)
        check("g1' | x^n-1", spec.g1p, xn)
        check("a1' | g1'", spec.a1p, spec.g1p)
    else:
        check("g2 | x^n-1", spec.g2, xn)
        check("a2 | g2", spec.a2, spec.g2)
        check("g1 | x^n-1", spec.g1, xn)
        check("a1 | g1", spec.a1, spec.g1)
        check("g1' | x^n-1", spec.g1p, xn)
        check("a1' | g1'", spec.a1p, spec.g1p)
    return notes


_T = R1Elem.parse("11")  # 1+u in R1


def _r1_gen(g: Poly, a: Poly) -> Poly:
    """g + (1+u) a over R1."""
    return p_add(g.lift("R1"), p_scale(_T, a.lift("R1")))


def _rw_gen(g1: Poly, a1: Poly, g1p: Poly, a1p: Poly) -> Poly:
    """(g1 + (1+u)a1) + w (g1' + (1+u)a1') over Rw."""
    first, second = _r1_gen(g1, a1), _r1_gen(g1p, a1p)
    m = max(len(first.coeffs), len(second.coeffs))
    return Poly("Rw", [RwElem.of(r, s) for r, s in zip(first.to_vector(m), second.to_vector(m))])


def generator_polys(spec: CyclicCodeSpec) -> tuple[Poly, ...]:
    """Generators over the target ring, before reduction mod x^n - 1."""
    s = spec
    if s.form == "r1-odd":
        return (_r1_gen(s.g, s.a),)
    if s.form == "r1-even-principal":
        return (_r1_gen(s.g, s.p),)
    if s.form == "r1-even-two-gen":
        return (_r1_gen(s.g, s.p), p_scale(_T, s.a.lift("R1")))
    if s.form == "rw":
        return (_rw_gen(s.g1, s.a1, s.g1p, s.a1p),)
    if s.form == "r-crt":
        return (combine_poly(_r1_gen(s.g2, s.a2), _rw_gen(s.g1, s.a1, s.g1p, s.a1p)),)
    raise CodeSpecError(f"unknown form {s.form!r}")


# -- packed vectors ------------------------------------------------------------


def encode(vec: Sequence[RingElem], width: int | None = None) -> int:
    if not vec:
        return 0
    b = width or vec[0].NBITS
    out = 0
    for i, c in enumerate(vec):
        out |= c.code << (b * i)
    return out


def decode(word: int, ring: str, n: int) -> tuple[RingElem, ...]:
    rt = ring_type(ring)
    b, mask = rt.NBITS, (1 << rt.NBITS) - 1
    return tuple(rt.from_code((word >> (b * i)) & mask) for i in range(n))


def sigma_packed(word: int, n: int, width: int) -> int:
    """Cyclic shift (c_0..c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})."""
    total = n * width
    return ((word << width) | (word >> (total - width))) & ((1 << total) - 1)


def reverse_packed(word: int, n: int, width: int) -> int:
    mask = (1 << width) - 1
    out = 0
    for i in range(n):
        out |= ((word >> (width * i)) & mask) << (width * (n - 1 - i))
    return out


def hamming_weight_packed(word: int, n: int, width: int) -> int:
    mask = (1 << width) - 1
    return sum(1 for i in range(n) if (word >> (width * i)) & mask)


def _scale_packed(word: int, scalar: RingElem, n: int) -> int:
    rt = type(scalar)
    b, mask = rt.NBITS, (1 << rt.NBITS) - 1
    out = 0
    for i in range(n):
        c = (word >> (b * i)) & mask
        if c:
            out |= (scalar * rt.from_code(c)).code << (b * i)
    return out


def _rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis; pivot = lowest set bit, rows sorted by pivot."""
    piv: dict[int, int] = {}
    for v in vectors:
        while v:
            low = v & -v
            row = piv.get(low)
            if row is None:
                piv[low] = v
                break
            v ^= row
    pivots = sorted(piv)
    # back-substitute so each pivot bit appears in exactly one row
    for p in reversed(pivots):
        row = piv[p]
        for q in pivots:
            if q != p and piv[q] & p:
                piv[q] ^= row
    return tuple(piv[p] for p in pivots)


def _reduce(word: int, piv: dict[int, int]) -> int:
    while word:
        row = piv.get(word & -word)
        if row is None:
            return word
        word ^= row
    return 0


# -- code objects --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CodewordSet:
    """A set of length-n vectors over a ring, stored packed.

    ``basis`` is set when the set is known to be an F2-linear space.
    """

    ring: str
    n: int
    words: frozenset[int] | None = None
    basis: tuple[int, ...] | None = None

    @classmethod
    def from_vectors(cls, ring: str, n: int, vectors: Iterable[Sequence[RingElem]]) -> "CodewordSet":
        words = set()
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in a length-{n} set")
            words.add(encode(v, ring_type(ring).NBITS))
        return cls(ring, n, frozenset(words))

    @property
    def width(self) -> int:
        return ring_type(self.ring).NBITS

    @property
    def k(self) -> int:
        """F2-dimension (linear sets only)."""
        if self.basis is None:
            raise ValueError("dimension is defined only for linear sets")
        return len(self.basis)

    @cached_property
    def _piv(self) -> dict[int, int]:
        return {b & -b: b for b in self.basis or ()}

    def __len__(self) -> int:
        if self.words is not None:
            return len(self.words)
        return 1 << self.k

    def __contains__(self, item) -> bool:
        word = item if isinstance(item, int) else encode(item, self.width)
        if self.words is not None:
            return word in self.words
        return _reduce(word, self._piv) == 0

    def __iter__(self) -> Iterator[int]:
        if self.words is not None:
            return iter(sorted(self.words))
        return iter(sorted(_span(self.basis)))

    def vectors(self) -> Iterator[tuple[RingElem, ...]]:
        for w in self:
            yield decode(w, self.ring, self.n)

    def materialize(self) -> "CodewordSet":
        if self.words is not None:
            return self
        return CodewordSet(self.ring, self.n, frozenset(_span(self.basis)), self.basis)


def _span(basis: Sequence[int]) -> list[int]:
    """All F2 combinations of the basis, Gray-code order."""
    out = [0]
    cur = 0
    for i in range(1, 1 << len(basis)):
        cur ^= basis[(i & -i).bit_length() - 1]
        out.append(cur)
    return out


@dataclass(frozen=True, eq=False)
class CyclicCode:
    """An ideal of S[x]/<x^n - 1> given by generators over the ring S."""

    ring: str
    n: int
    generators: tuple[Poly, ...]
    spec: CyclicCodeSpec | None = field(default=None, compare=False)
    notes: tuple[str, ...] = ()

    @property
    def generator(self) -> Poly:
        if len(self.generators) != 1:
            raise ValueError(f"code has {len(self.generators)} generators")
        return self.generators[0]

    @property
    def width(self) -> int:
        return ring_type(self.ring).NBITS

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """F2 basis of the ideal, from {b x^k gen} for monomial scalars b."""
        rt = ring_type(self.ring)
        n, w = self.n, self.width
        spanning = []
        for gen in self.generators:
            base = encode(gen.to_vector(n), w)
            for _ in range(n):
                for b in rt.basis():
                    spanning.append(_scale_packed(base, b, n))
                base = sigma_packed(base, n, w)
        return _rref(spanning)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.dimension

    def components(self) -> tuple["CyclicCode", "CyclicCode"]:
        """(C2 over R1, Cw over Rw) for a code assembled from CRT components."""
        s = self.spec
        if s is None or s.form != "r-crt":
            raise ValueError("components exist only for r-crt codes")
        c2 = ideal("R1", s.n, [_r1_gen(s.g2, s.a2)])
        cw = ideal("Rw", s.n, [_rw_gen(s.g1, s.a1, s.g1p, s.a1p)])
        return c2, cw


def ideal(ring: str, n: int, generators: Iterable[Poly], spec: CyclicCodeSpec | None = None,
          notes: Sequence[str] = ()) -> CyclicCode:
    if n < 1:
        raise ValueError("n must be a positive integer")
    gens = []
    for g in generators:
        if g.ring != ring:
            raise ValueError(f"generator over {g.ring} for a code over {ring}")
        gens.append(p_mod_xn1(g, n))
    return CyclicCode(ring, n, tuple(gens), spec, tuple(notes))


def build(spec: CyclicCodeSpec, strict: bool = True) -> CyclicCode:
    notes = validate(spec, strict=strict)
    return ideal(spec.ring, spec.n, generator_polys(spec), spec, notes)


def enumerate_code(code: CyclicCode, cap: int = DEFAULT_CAP, materialize: bool = True) -> CodewordSet:
    k = code.dimension
    if k > cap:
        raise CapExceededError(f"code has F2-dimension {k} > cap {cap}")
    cs = CodewordSet(code.ring, code.n, None, code.basis)
    return cs.materialize() if materialize else cs


def contains(code: CyclicCode, word: Sequence[RingElem]) -> bool:
    if len(word) != code.n:
        raise ValueError(f"word of length {len(word)} for a length-{code.n} code")
    piv = {b & -b: b for b in code.basis}
    return _reduce(encode(word, code.width), piv) == 0


def size_formula_r1(n: int, g: Poly, a: Poly) -> int:
    """|<g, (1+u)a>| = 4^(n - deg g) 2^(deg g - deg a) for a | g | x^n - 1."""
    _chain("g | x^n-1", g, (1 << n) | 1, n)
    _chain("a | g", a, g, n)
    return 4 ** (n - g.deg) * 2 ** (g.deg - a.deg)


def min_hamming_distance(cs: CodewordSet) -> int:
    if len(cs) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    n, w = cs.n, cs.width
    if cs.basis is not None:
        return min(hamming_weight_packed(c, n, w) for c in cs if c)
    words = sorted(cs.words)
    return min(
        hamming_weight_packed(x ^ y, n, w)
        for i, x in enumerate(words)
        for y in words[i + 1:]
    )


def shift_closed(cs: CodewordSet) -> bool:
    n, w = cs.n, cs.width
    if cs.basis is not None and cs.words is None:
        return all(sigma_packed(b, n, w) in cs for b in cs.basis)
    return all(sigma_packed(c, n, w) in cs for c in cs)


def scalar_closed(cs: CodewordSet) -> bool:
    rt = ring_type(cs.ring)
    gens = cs.basis if cs.basis is not None else list(cs)
    return all(_scale_packed(c, m, cs.n) in cs for c in gens for m in rt.all())


def add_closed(cs: CodewordSet) -> bool:
    words = list(cs)
    return all((x ^ y) in cs for x in words for y in words)
