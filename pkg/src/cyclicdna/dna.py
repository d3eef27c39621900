"""Codon and strand maps, Watson-Crick transforms and the DNA constraints."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .codes import (
    DEFAULT_CAP,
    CyclicCode,
    decode,
    enumerate_code,
    reverse_packed,
    shift_closed,
)
from .ring import R1Elem, RElem, RingElem, complement, complement_r1

__all__ = [
    "BASES",
    "WCC",
    "DnaStrand",
    "nt",
    "nt_inv",
    "gray_triple",
    "theta",
    "theta_inv",
    "strand_of_codeword",
    "codon_strand",
    "wcc_transform",
    "gc_content",
    "hamming",
    "ConstraintResult",
    "check_constraints",
    "reverse_vector",
    "complement_vector",
    "rc_vector",
    "DnaCodeReport",
    "dna_code_report",
    "is_dna_code",
    "LAYOUTS",
]

BASES = "ACGT"
WCC = {"A": "T", "T": "A", "C": "G", "G": "C"}
_NT = {0: "A", 1: "G", 2: "C", 3: "T"}  # R1 code -> base: 0, 1, u, 1+u
_NT_INV = {b: R1Elem.from_code(c) for c, b in _NT.items()}
LAYOUTS = ("codon", "def31")


@dataclass(frozen=True)
class DnaStrand:
    bases: str

    def __post_init__(self):
        bad = set(self.bases) - set(BASES)
        if bad:
            raise ValueError(f"not a DNA strand, bad symbols {''.join(sorted(bad))!r}")

    def __str__(self):
        return self.bases

    def __len__(self):
        return len(self.bases)

    def reverse(self) -> "DnaStrand":
        return DnaStrand(self.bases[::-1])

    def complement(self) -> "DnaStrand":
        return DnaStrand("".join(WCC[b] for b in self.bases))

    def reverse_complement(self) -> "DnaStrand":
        return self.complement().reverse()

    def gc(self) -> int:
        return gc_content(self)


def nt(x: R1Elem) -> str:
    if type(x) is not R1Elem:
        raise TypeError(f"nt expects an R1 element, got {x!r}")
    return _NT[x.code]


def nt_inv(base: str) -> R1Elem:
    try:
        return _NT_INV[base]
    except KeyError:
        raise ValueError(f"not a base: {base!r}") from None


def gray_triple(x: RElem) -> tuple[R1Elem, R1Elem, R1Elem]:
    """(a, a+b, a+c) for x = a + v b + v^2 c."""
    a, b, c = x.r1_parts()
    return a, a + b, a + c


def theta(x: RElem) -> str:
    return "".join(nt(y) for y in gray_triple(x))


def theta_inv(codon: str) -> RElem:
    if len(codon) != 3:
        raise ValueError(f"codon must have 3 bases, got {codon!r}")
    p, q, r = (nt_inv(ch) for ch in codon)
    return RElem.of(p, p + q, p + r)


def strand_of_codeword(c: Sequence[RElem]) -> DnaStrand:
    """Block layout: all first Gray components, then all second, then all third."""
    triples = [gray_triple(x) for x in c]
    return DnaStrand("".join(nt(t[j]) for j in range(3) for t in triples))


def codon_strand(c: Sequence[RingElem]) -> DnaStrand:
    """Codon layout: theta of each coordinate in turn (nt per coordinate over R1)."""
    if c and type(c[0]) is R1Elem:
        return DnaStrand("".join(nt(x) for x in c))
    return DnaStrand("".join(theta(x) for x in c))


def wcc_transform(s: DnaStrand | str, mode: str) -> DnaStrand:
    s = s if isinstance(s, DnaStrand) else DnaStrand(s)
    if mode == "reverse":
        return s.reverse()
    if mode == "complement":
        return s.complement()
    if mode in ("reverse-complement", "rc"):
        return s.reverse_complement()
    raise ValueError(f"unknown transform {mode!r}")


def gc_content(s: DnaStrand | str) -> int:
    text = str(s)
    return text.count("G") + text.count("C")


def hamming(x: DnaStrand | str, y: DnaStrand | str) -> int:
    a, b = str(x), str(y)
    if len(a) != len(b):
        raise ValueError("strands of different lengths")
    return sum(p != q for p, q in zip(a, b))


@dataclass(frozen=True)
class ConstraintResult:
    name: str
    passed: bool
    witness: tuple[str, str] | None = None

    def tsv(self) -> str:
        w = "\t".join(self.witness) if self.witness else "-\t-"
        return f"{self.name}\t{'pass' if self.passed else 'fail'}\t{w}"


CONSTRAINTS = ("hamming", "reverse", "rc", "gc")


def check_constraints(strands: Iterable[DnaStrand | str], d: int,
                      which: Iterable[str] = CONSTRAINTS) -> list[ConstraintResult]:
    """Evaluate the Hamming, reverse, reverse-complement and GC constraints.

    Witnesses are the first violating pair in input order.
    """
    items = [s if isinstance(s, DnaStrand) else DnaStrand(s) for s in strands]
    if d < 0:
        raise ValueError("d must be nonnegative")
    if len({len(s) for s in items}) > 1:
        raise ValueError("strands of mixed lengths")
    which = list(which)
    bad = [w for w in which if w not in CONSTRAINTS]
    if bad:
        raise ValueError(f"unknown constraints: {', '.join(bad)}")

    # dedupe while keeping input order
    uniq = list(dict.fromkeys(str(s) for s in items))
    out = []
    for name in CONSTRAINTS:
        if name not in which:
            continue
        witness = None
        if name == "hamming":
            witness = next(((x, y) for i, x in enumerate(uniq) for y in uniq[i + 1:]
                            if hamming(x, y) < d), None)
        elif name in ("reverse", "rc"):
            mode = "reverse" if name == "reverse" else "rc"
            for x, y in product(uniq, repeat=2):
                if hamming(wcc_transform(x, mode), y) < d:
                    witness = (x, y)
                    break
        else:
            if uniq:
                ref = gc_content(uniq[0])
                witness = next(((uniq[0], x) for x in uniq if gc_content(x) != ref), None)
        out.append(ConstraintResult(name, witness is None, witness))
    return out


# -- reverse / complement on ring vectors -----------------------------------------


def reverse_vector(c: Sequence[RingElem]) -> tuple[RingElem, ...]:
    return tuple(reversed(c))


def _comp(x: RingElem) -> RingElem:
    if type(x) is RElem:
        return complement(x)
    if type(x) is R1Elem:
        return complement_r1(x)
    raise TypeError(f"complement is defined on R and R1 only, got {x!r}")


def complement_vector(c: Sequence[RingElem]) -> tuple[RingElem, ...]:
    return tuple(_comp(x) for x in c)


def rc_vector(c: Sequence[RingElem]) -> tuple[RingElem, ...]:
    return complement_vector(reverse_vector(c))


def all_complement_of_zero(ring: str, n: int) -> int:
    """Packed all-(1+u) vector, i.e. the complement of the zero word."""
    if ring not in ("R", "R1"):
        raise ValueError(f"complement is not defined over {ring}")
    width = 6 if ring == "R" else 2
    return sum(0b11 << (width * i) for i in range(n))


@dataclass(frozen=True)
class DnaCodeReport:
    shift_closed: bool
    rc_closed: bool
    no_rc_fixed_word: bool
    failing_word: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.shift_closed and self.rc_closed and self.no_rc_fixed_word


def dna_code_report(code: CyclicCode, cap: int = DEFAULT_CAP) -> DnaCodeReport:
    """Check x != x^rc and x^rc in C for every codeword, plus shift closure."""
    cs = enumerate_code(code, cap)
    n, w = code.n, code.width
    comp0 = all_complement_of_zero(code.ring, n)
    rc_closed, no_fixed, failing = True, True, None
    for x in cs:
        y = reverse_packed(x, n, w) ^ comp0
        if y == x and no_fixed:
            no_fixed = False
            failing = failing or ("x = x^rc", x)
        if y not in cs and rc_closed:
            rc_closed = False
            failing = failing or ("x^rc not in C", x)
        if not (rc_closed or no_fixed):
            break
    if failing is not None:
        failing = (failing[0], decode(failing[1], code.ring, n))
    return DnaCodeReport(shift_closed(cs), rc_closed, no_fixed, failing)


def is_dna_code(code: CyclicCode, cap: int = DEFAULT_CAP) -> bool:
    return dna_code_report(code, cap).ok


def strands_of_code(code: CyclicCode, layout: str = "def31", cap: int = DEFAULT_CAP) -> list[DnaStrand]:
    if layout not in LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}; expected one of {', '.join(LAYOUTS)}")
    cs = enumerate_code(code, cap)
    if code.ring == "R":
        f = strand_of_codeword if layout == "def31" else codon_strand
    elif code.ring == "R1":
        f = codon_strand
    else:
        raise ValueError("DNA strands are defined for codes over R and R1")
    return [f(v) for v in cs.vectors()]
