"""Theorem predicates, brute-force oracles and the errata report.

Predicates look only at generator polynomials.  Oracles enumerate the code
and test every codeword literally.  The report never reconciles the two; it
records what each says.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fnmatch import fnmatchcase
from importlib import resources
from itertools import product
from typing import Callable, Iterable, Sequence

from . import crt as crt_mod
from .codes import (
    DEFAULT_CAP,
    CapExceededError,
    CodeSpecError,
    CyclicCode,
    CyclicCodeSpec,
    build,
    contains,
    enumerate_code,
    ideal,
    reverse_packed,
)
from .dna import (
    all_complement_of_zero,
    dna_code_report,
    nt_inv,
    strand_of_codeword,
    theta,
    theta_inv,
)
from .gray import binary_image, hamming_bits, lee_distance, nu, nu_closed, phi, phi_vector, sigma
from .poly import (
    Poly,
    divides_f2,
    divisors_xn1_f2,
    f2_deg,
    factor_xn1_f2,
    format_factors,
    is_self_reciprocal,
    p_add,
    p_mul,
    p_scale,
    p_shift,
    reciprocal,
)
from .ring import R1Elem, RElem, complement, complement_r1, monomial_mul_table, ring_type
from .tables import TABLE1, TABLE4, table2_cells, table3_strands

__all__ = [
    "Finding",
    "reversible_pred_r1",
    "reversible_pred_r",
    "rc_pred_r",
    "rc_necessary_condition_r1",
    "exhaustive_reversible",
    "exhaustive_rc",
    "run_errata",
    "run_suite",
    "load_spec",
    "load_allowlist",
    "blocking_mismatches",
    "parse_expr",
    "sweep_r1_odd",
    "sweep_r_crt",
    "crt_spec",
    "divisor_pairs",
    "sweep_r1_even",
    "even_specs",
    "lemma_findings",
    "example_n6_code",
    "table3_code",
    "theorem_findings",
    "MATCH",
    "MISMATCH",
    "INCONSISTENT",
    "SCOPES",
    "SUITES",
]

MATCH = "match"
MISMATCH = "mismatch"
INCONSISTENT = "paper-internal-inconsistency"

SCOPES = ("table1", "table2", "table3", "table4", "examples", "crt", "all")
SUITES = ("lemmas", "theorems", "examples", "crt", "tables", "all")


@dataclass(frozen=True)
class Finding:
    tag: str
    expected: str
    computed: str
    verdict: str
    note: str = ""

    def tsv(self) -> str:
        return "\t".join((self.tag, self.expected, self.computed, self.verdict, self.note))

    def text(self) -> str:
        line = f"[{self.verdict}] {self.tag}: expected {self.expected}; computed {self.computed}"
        return line + (f" ({self.note})" if self.note else "")


def _verdict(ok: bool) -> str:
    return MATCH if ok else MISMATCH


# -- data ------------------------------------------------------------------------


def load_spec(name: str) -> CyclicCodeSpec:
    """Load one of the bundled code-spec files, e.g. ``load_spec("table3")``."""
    text = resources.files("cyclicdna.data").joinpath(f"{name}.code").read_text()
    return CyclicCodeSpec.parse(text)


def load_allowlist() -> frozenset[str]:
    text = resources.files("cyclicdna.data").joinpath("errata_allowlist.txt").read_text()
    return frozenset(
        line.split("#", 1)[0].strip() for line in text.splitlines() if line.split("#", 1)[0].strip()
    )


def blocking_mismatches(findings: Iterable[Finding], allow: frozenset[str] | None = None) -> list[Finding]:
    """Mismatches whose tag matches no allowlist entry (entries may be glob patterns)."""
    allow = load_allowlist() if allow is None else allow
    return [
        f for f in findings
        if f.verdict == MISMATCH and not any(fnmatchcase(f.tag, pat) for pat in allow)
    ]


_MONO = {"1": 0, "u": 1, "v": 2, "uv": 3, "v^2": 4, "uv^2": 5}


def parse_expr(text: str, ring: str = "R") -> RElem | R1Elem:
    """Parse a sum of basis monomials such as ``"1+u+v^2+uv^2"``."""
    text = text.replace(" ", "")
    code = 0
    if text != "0":
        for term in text.split("+"):
            if term not in _MONO:
                raise ValueError(f"unknown monomial {term!r} in {text!r}")
            code ^= 1 << _MONO[term]
    if ring == "R1":
        if code > 3:
            raise ValueError(f"{text!r} is not in R1")
        return R1Elem.from_code(code)
    return RElem.from_code(code)


def _parse_triple(text: str) -> tuple[R1Elem, ...]:
    return tuple(parse_expr(t, "R1") for t in text.strip("()").split(","))


def _fmt_triple(t: Sequence[R1Elem]) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


# -- predicates --------------------------------------------------------------------


def _sr(f: Poly) -> bool:
    """Self-reciprocity of a binary polynomial; x^n - 1 counts as self-reciprocal."""
    return not f.is_zero() and is_self_reciprocal(f)


def _shifted_reciprocal(g: Poly, p: Poly) -> Poly:
    """x^i p*(x) with i = deg g - deg p (zero when p = 0)."""
    if p.is_zero():
        return p
    return p_shift(reciprocal(p), int(g.deg - p.deg))


def reversible_pred_r1(spec: CyclicCodeSpec) -> bool:
    """Reversibility criterion for codes over R1, from generator polynomials alone."""
    if spec.ring != "R1":
        raise CodeSpecError(f"expected an R1 spec, got form {spec.form}")
    if spec.form == "r1-odd":
        return _sr(spec.g) and _sr(spec.a)
    if spec.form == "r1-even-principal":
        xp = _shifted_reciprocal(spec.g, spec.p)
        return _sr(spec.g) and (xp == spec.p or spec.g == p_add(xp, spec.p))
    if spec.form == "r1-even-two-gen":
        xp = _shifted_reciprocal(spec.g, spec.p)
        return _sr(spec.g) and _sr(spec.a) and divides_f2(spec.a, p_add(xp, spec.p))
    raise CodeSpecError(f"no R1 reversibility criterion for form {spec.form}")


def reversible_pred_r(spec: CyclicCodeSpec) -> bool:
    """All six component generators self-reciprocal and of equal degree."""
    if spec.form != "r-crt":
        raise CodeSpecError(f"expected an r-crt spec, got form {spec.form}")
    if spec.n % 2 == 0:
        raise CodeSpecError("the criterion applies to odd lengths only")
    six = (spec.g2, spec.a2, spec.g1, spec.a1, spec.g1p, spec.a1p)
    return all(_sr(f) for f in six) and len({f.deg for f in six}) == 1


def _all_comp_zero_in(code: CyclicCode) -> bool:
    word = all_complement_of_zero(code.ring, code.n)
    piv = {b & -b: b for b in code.basis}
    while word:
        row = piv.get(word & -word)
        if row is None:
            return False
        word ^= row
    return True


def rc_pred_r(spec: CyclicCodeSpec, cap: int = DEFAULT_CAP, code: CyclicCode | None = None) -> bool:
    """Reversible by the six-generator criterion and the all-(1+u) word is a codeword."""
    if not reversible_pred_r(spec):
        return False
    code = code or build(spec)
    if code.dimension > cap:
        raise CapExceededError(f"code has F2-dimension {code.dimension} > cap {cap}")
    return _all_comp_zero_in(code)


def rc_necessary_condition_r1(spec: CyclicCodeSpec, cap: int = DEFAULT_CAP,
                              code: CyclicCode | None = None) -> bool:
    """(1+u)(x^n-1)/(x-1) is a codeword and g, a are self-reciprocal."""
    if spec.ring != "R1" or spec.g is None or spec.a is None:
        raise CodeSpecError("needs an R1 spec with g and a")
    code = code or build(spec)
    enumerate_code(code, cap, materialize=False)  # cap check
    return _all_comp_zero_in(code) and _sr(spec.g) and _sr(spec.a)


# -- oracles -------------------------------------------------------------------------


def _paired_words(basis: Sequence[int], image: Callable[[int], int]):
    """Yield (c, T(c)) for every codeword c of an F2-linear map T, Gray-code order."""
    imgs = [image(b) for b in basis]
    c = t = 0
    yield c, t
    for i in range(1, 1 << len(basis)):
        j = (i & -i).bit_length() - 1
        c ^= basis[j]
        t ^= imgs[j]
        yield c, t


def exhaustive_reversible(code: CyclicCode, cap: int = DEFAULT_CAP) -> bool:
    cs = enumerate_code(code, cap)
    n, w = code.n, code.width
    return all(r in cs.words for _, r in _paired_words(cs.basis, lambda b: reverse_packed(b, n, w)))


def exhaustive_rc(code: CyclicCode, cap: int = DEFAULT_CAP) -> bool:
    cs = enumerate_code(code, cap)
    n, w = code.n, code.width
    comp0 = all_complement_of_zero(code.ring, n)
    return all(
        (r ^ comp0) in cs.words for _, r in _paired_words(cs.basis, lambda b: reverse_packed(b, n, w))
    )


# -- sweeps ----------------------------------------------------------------------------


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    divs = divisors_xn1_f2(n)
    return [(a, g) for g in divs for a in divs if divides_f2(a, g)]


def sweep_r1_odd(n: int, cap: int = DEFAULT_CAP) -> list[tuple[int, int, bool, bool]]:
    """(a, g, predicate, oracle) for every divisor pair a | g | x^n - 1."""
    out = []
    for a, g in divisor_pairs(n):
        spec = CyclicCodeSpec("R1", n, "r1-odd", g=Poly.from_int(g), a=Poly.from_int(a))
        code = build(spec)
        out.append((a, g, reversible_pred_r1(spec), exhaustive_reversible(code, cap)))
    return out


def even_specs(n: int, form: str) -> list[CyclicCodeSpec]:
    """Every spec of an even-length R1 form that passes strict validation."""
    divs = divisors_xn1_f2(n)
    out = []
    for g in divs:
        uppers = [g] if form == "r1-even-principal" else [a for a in divs if divides_f2(a, g)]
        for a in uppers:
            for p in range(1 << max(f2_deg(a), 0)):
                polys = {"g": Poly.from_int(g), "p": Poly.from_int(p)}
                if form == "r1-even-two-gen":
                    polys["a"] = Poly.from_int(a)
                spec = CyclicCodeSpec("R1", n, form, **polys)
                try:
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        build(spec)
                except CodeSpecError:
                    continue
                out.append(spec)
    return out


def sweep_r1_even(n: int, form: str, cap: int = DEFAULT_CAP) -> list[tuple[CyclicCodeSpec, bool, bool]]:
    """(spec, predicate, oracle) over :func:`even_specs`."""
    out = []
    for spec in even_specs(n, form):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code = build(spec)
        out.append((spec, reversible_pred_r1(spec), exhaustive_reversible(code, cap)))
    return out


@dataclass(frozen=True)
class CrtSweepRow:
    gens: tuple[int, ...]  # g2, a2, g1, a1, g1p, a1p
    pred: bool
    oracle: bool
    rc_pred: bool | None
    rc_oracle: bool | None


def crt_spec(n: int, gens: Sequence[int]) -> CyclicCodeSpec:
    g2, a2, g1, a1, g1p, a1p = (Poly.from_int(f) for f in gens)
    return CyclicCodeSpec("R", n, "r-crt", g2=g2, a2=a2, g1=g1, a1=a1, g1p=g1p, a1p=a1p)


def sweep_r_crt(n: int = 3, cap: int = DEFAULT_CAP) -> list[CrtSweepRow]:
    """Every six-tuple of divisor-chain generators of x^n - 1 over R."""
    pairs = divisor_pairs(n)
    rows = []
    for (a2, g2), (a1, g1), (a1p, g1p) in product(pairs, repeat=3):
        spec = crt_spec(n, (g2, a2, g1, a1, g1p, a1p))
        code = build(spec)
        pred = reversible_pred_r(spec)
        oracle = exhaustive_reversible(code, cap)
        rc_pred = rc_oracle = None
        if pred:
            rc_pred = rc_pred_r(spec, cap, code)
            rc_oracle = exhaustive_rc(code, cap)
        rows.append(CrtSweepRow((g2, a2, g1, a1, g1p, a1p), pred, oracle, rc_pred, rc_oracle))
    return rows


def _fmt_poly_int(f: int) -> str:
    return format_factors({f: 1}) if f2_deg(f) > 0 else "1"


# -- errata: tables ----------------------------------------------------------------------


def errata_table1() -> list[Finding]:
    out = []
    for i, (elem_txt, triple_txt, codon) in enumerate(TABLE1):
        x = parse_expr(elem_txt)
        a, b, c = x.r1_parts()
        triple = (a, a + b, a + c)
        codon_ok = theta(x) == codon
        triple_ok = _parse_triple(triple_txt) == triple
        if codon_ok and triple_ok:
            verdict = MATCH
        elif codon_ok:
            verdict = INCONSISTENT
        else:
            verdict = MISMATCH
        note = "" if triple_ok or not codon_ok else "printed Gray image disagrees with its own codon"
        out.append(Finding(
            f"table1/row{i + 1:02d}/{elem_txt}",
            f"{triple_txt} {codon}",
            f"{_fmt_triple(triple)} {theta(x)}",
            verdict,
            note,
        ))
    return out


def errata_table2() -> list[Finding]:
    elems = [parse_expr(e) for e, _, _ in TABLE1]
    out = []
    for pos, codon, bits in table2_cells():
        x = elems[pos]
        want_codon = theta(x)
        computed = "".join(map(str, phi(x)))
        label_ok = codon == want_codon
        bits_ok = bits == computed
        if label_ok and bits_ok:
            verdict, note = MATCH, ""
        elif bits_ok:
            verdict = INCONSISTENT
            note = (f"printed label {codon} (its image is "
                    f"{''.join(map(str, phi(theta_inv(codon))))}); "
                    f"the bits belong to {want_codon}, which is missing from the printed table")
        else:
            verdict, note = MISMATCH, ""
        tag = f"table2/col{pos // 16 + 1}/row{pos % 16 + 1:02d}/{want_codon}"
        out.append(Finding(tag, f"{codon} {bits}", f"{want_codon} {computed}", verdict, note))
    return out


def table3_code() -> CyclicCode:
    return build(load_spec("table3"))


def errata_table3() -> list[Finding]:
    code = table3_code()
    computed = {str(strand_of_codeword(v)) for v in enumerate_code(code).vectors()}
    printed = table3_strands()
    out = [
        Finding(f"table3/{s}", "printed strand", "present" if s in computed else "absent",
                _verdict(s in computed))
        for s in printed
    ]
    for s in sorted(computed - set(printed)):
        out.append(Finding(f"table3/extra/{s}", "absent", "codeword strand", MISMATCH,
                           "codeword strand missing from the printed table"))
    return out


def example_n6_code() -> CyclicCode:
    """The length-6 R1 code as printed, built leniently since a does not divide g."""
    spec = load_spec("ex_n6_r1")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build(spec, strict=False)


def errata_table4() -> list[Finding]:
    code = example_n6_code()
    cs = enumerate_code(code)
    alt = ideal("R1", 6, [Poly.from_bits("10101").lift("R1")])
    out = []
    for s in (x for row in TABLE4 for x in row):
        word = tuple(nt_inv(ch) for ch in s)
        inside = word in cs
        note = "advisory; in <(x^2+x+1)^2>" if contains(alt, word) else "advisory"
        out.append(Finding(f"table4/{s}", "codeword of the printed code",
                           "codeword" if inside else "not a codeword", _verdict(inside), note))
    out.append(Finding(
        "table4/count", "16 codewords claimed", f"{len(TABLE4) * 2} strands printed, {len(cs)} codewords",
        INCONSISTENT, "advisory; no set equality asserted",
    ))
    return out


# -- errata: examples ----------------------------------------------------------------------


_UVV = RElem.parse("010101")  # u + uv + uv^2


def _const_times(c: RElem, f: Poly) -> Poly:
    return p_scale(c, f.lift("R"))


def errata_examples(cap: int = DEFAULT_CAP) -> list[Finding]:
    out: list[Finding] = []

    def add(tag, expected, computed, ok, note=""):
        out.append(Finding(tag, str(expected), str(computed), _verdict(ok), note))

    # length 3, generators x+1
    f3 = format_factors(factor_xn1_f2(3))
    add("ex-n3/factorization", "(x+1)(x^2+x+1)", f3, f3 == "(x+1)(x^2+x+1)")
    spec = load_spec("ex_n3")
    code = build(spec)
    want = _const_times(_UVV, Poly.from_bits("11"))
    add("ex-n3/generator", want, code.generator, code.generator == want)
    six_sr = all(_sr(f) for f in spec.polys().values())
    add("ex-n3/self-reciprocal", True, six_sr, six_sr)
    add("ex-n3/generator-reciprocal", want, reciprocal(code.generator), reciprocal(code.generator) == code.generator)
    pred, orac = reversible_pred_r(spec), exhaustive_reversible(code, cap)
    add("ex-n3/reversible", "predicate True, oracle True", f"predicate {pred}, oracle {orac}", pred and orac)

    # the 64-word follow-up code
    t3 = table3_code()
    add("ex-n3-f2/size", 64, len(t3), len(t3) == 64)
    rep = dna_code_report(t3, cap)
    add("ex-n3-f2/dna-code", True, rep.ok, rep.ok)

    # length 5
    f5 = format_factors(factor_xn1_f2(5))
    add("ex-n5/factorization", "(x+1)(x^4+x^3+x^2+x+1)", f5, f5 == "(x+1)(x^4+x^3+x^2+x+1)")
    spec5 = load_spec("ex_n5")
    code5 = build(spec5)
    want5 = _const_times(_UVV, Poly.from_bits("11111"))
    add("ex-n5/generator", want5, code5.generator, code5.generator == want5)
    add("ex-n5/self-reciprocal", True, all(_sr(f) for f in spec5.polys().values()),
        all(_sr(f) for f in spec5.polys().values()))
    add("ex-n5/generator-reciprocal", code5.generator, reciprocal(code5.generator),
        reciprocal(code5.generator) == code5.generator)
    pred5, orac5 = reversible_pred_r(spec5), exhaustive_reversible(code5, cap)
    add("ex-n5/reversible", "predicate True, oracle True", f"predicate {pred5}, oracle {orac5}", pred5 and orac5)

    # length 8 over R1
    f8 = format_factors(factor_xn1_f2(8))
    add("ex-n8-r1/factorization", "(x+1)^8", f8, f8 == "(x+1)^8")
    spec8 = load_spec("ex_n8_r1")
    code8 = build(spec8)
    xp = _shifted_reciprocal(spec8.g, spec8.p)
    add("ex-n8-r1/g-self-reciprocal", True, _sr(spec8.g), _sr(spec8.g))
    add("ex-n8-r1/x^i p* = p", spec8.p, xp, xp == spec8.p)
    pred8, orac8 = reversible_pred_r1(spec8), exhaustive_reversible(code8, cap)
    add("ex-n8-r1/reversible", "predicate True, oracle True", f"predicate {pred8}, oracle {orac8}",
        pred8 and orac8)

    # length 6 over R1
    f6 = format_factors(factor_xn1_f2(6))
    add("ex-n6-r1/factorization", "(x+1)^2(x^2+x+1)^2", f6, f6 == "(x+1)^2(x^2+x+1)^2")
    spec6 = load_spec("ex_n6_r1")
    add("ex-n6-r1/self-reciprocal", True, _sr(spec6.g) and _sr(spec6.a), _sr(spec6.g) and _sr(spec6.a))
    chain = divides_f2(spec6.a, spec6.g)
    add("ex-n6-r1/a-divides-g", True, chain, chain,
        "a = (x^2+x+1)^2 does not divide g = (x+1)^2(x^2+x+1)")
    code6 = example_n6_code()
    size = len(code6)
    alt = len(ideal("R1", 6, [spec6.a.lift("R1")]))
    add("ex-n6-r1/size", 16, size, size == 16,
        f"<g,(1+u)a> has {size} codewords; g = a = (x^2+x+1)^2 would give {alt}")
    return out


# -- errata: crt -----------------------------------------------------------------------------


def errata_crt() -> list[Finding]:
    out = []
    images = {crt_mod.split(x) for x in RElem.all()}
    out.append(Finding("crt/forward-bijective", "64 distinct images", f"{len(images)} distinct images",
                       _verdict(len(images) == 64)))
    hom = all(
        crt_mod.split(x + y) == crt_mod.split(x) + crt_mod.split(y)
        and crt_mod.split(x * y) == crt_mod.split(x) * crt_mod.split(y)
        for x, y in product(RElem.all(), repeat=2)
    )
    out.append(Finding("crt/forward-homomorphism", "additive and multiplicative on 4096 pairs",
                       "holds" if hom else "fails", _verdict(hom)))
    ok = sum(crt_mod.combine(crt_mod.split(x)) == x for x in RElem.all())
    out.append(Finding("crt/inverse-implemented", "64/64 round trips", f"{ok}/64 round trips", _verdict(ok == 64),
                       "a + Bv + (a+A+B)v^2"))
    ok_p = sum(crt_mod.combine_printed(crt_mod.split(x)) == x for x in RElem.all())
    out.append(Finding("crt/inverse-printed", "64/64 round trips", f"{ok_p}/64 round trips", _verdict(ok_p == 64),
                       "a + Bw + (a+A+B)v^2 expands to v^2-coefficient a+A"))
    return out


# -- lemma and theorem suites ------------------------------------------------------------------


def lemma_findings(seed: int = 0) -> list[Finding]:
    out = []
    elems = RElem.all()
    table = monomial_mul_table()
    agree = all((x * y).code == table[x.code][y.code] for x, y in product(elems, repeat=2))
    out.append(Finding("ring/mul-table", "symbolic product = monomial reducer", str(agree), _verdict(agree)))

    ok = True
    for x, y, z in product(elems, repeat=3):
        xy = x * y
        if (x + y) + z != x + (y + z) or xy * z != x * (y * z) or x * (y + z) != xy + x * z or xy != y * x:
            ok = False
            break
    out.append(Finding("ring/axioms", "64^3 triples", "hold" if ok else "fail", _verdict(ok)))

    t = RElem.parse("110000")
    l35 = all(x + complement(x) == t and complement(complement(x)) == x for x in elems)
    out.append(Finding("lemma-complement-sum", "a + comp(a) = 1+u", str(l35), _verdict(l35)))
    l36 = all(complement(x + y) == complement(x) + complement(y) + t for x, y in product(elems, repeat=2))
    out.append(Finding("lemma-complement-additive", "comp(a+b) = comp(a)+comp(b)+(1+u)", str(l36), _verdict(l36)))
    t1 = R1Elem.parse("11")
    l37 = all(t1 + complement_r1(t1 * R1Elem.from_code(a)) == t1 * R1Elem.from_code(a) for a in (0, 1))
    out.append(Finding("lemma-complement-scaled", "(1+u) + comp((1+u)a) = (1+u)a", str(l37), _verdict(l37)))

    # distance preservation with the coefficient-count Lee weight
    bad = [(x, y) for x, y in product(elems, repeat=2) if lee_distance(x, y) != hamming_bits(phi(x), phi(y))]
    ex = f"e.g. x={bad[0][0]}, y={bad[0][1]}" if bad else ""
    out.append(Finding("lemma-gray-isometry", "d_L(x,y) = d_H(phi(x),phi(y)) on 4096 pairs",
                       f"{4096 - len(bad)}/4096 pairs agree", _verdict(not bad),
                       f"{ex}; Lee weight taken as the number of nonzero a_i" if bad else ""))
    lin = all(
        phi(x + y) == tuple(p ^ q for p, q in zip(phi(x), phi(y))) for x, y in product(elems, repeat=2)
    )
    out.append(Finding("lemma-gray-linear", "phi F2-linear", str(lin), _verdict(lin)))

    # reciprocal product / sum rules: the unconditional statement vs the degree hypothesis
    rng = random.Random(seed)
    uncond_fail = None
    cond_ok = True
    for ring in ("R1", "Rw", "R"):
        rt = ring_type(ring)
        for _ in range(300):
            f = Poly(ring, [rng.choice(rt.all()) for _ in range(rng.randint(1, 4))])
            g = Poly(ring, [rng.choice(rt.all()) for _ in range(rng.randint(1, 4))])
            if f.is_zero() or g.is_zero():
                continue
            fg = p_mul(f, g)
            if fg.is_zero():
                continue
            holds = reciprocal(fg) == p_mul(reciprocal(f), reciprocal(g))
            if fg.deg == f.deg + g.deg:
                cond_ok &= holds
            elif not holds and uncond_fail is None:
                uncond_fail = (f, g)
    out.append(Finding("lemma-reciprocal-product/degree-additive", "(fg)* = f* g*", str(cond_ok),
                       _verdict(cond_ok), "when deg fg = deg f + deg g"))
    if uncond_fail is not None:
        f, g = uncond_fail
        out.append(Finding("lemma-reciprocal-product/unconditional", "(fg)* = f* g* for all f, g",
                           f"fails for f={f}, g={g} over {f.ring}", MISMATCH,
                           "leading coefficients multiply to zero"))
    return out


def theorem_findings(cap: int = DEFAULT_CAP, seed: int = 0) -> list[Finding]:
    out = []
    for n in (3, 5, 7):
        rows = sweep_r1_odd(n, cap)
        dis = [(a, g) for a, g, p, o in rows if p != o]
        out.append(Finding(
            f"thm-r1-odd-reversible/n{n}", "predicate <=> oracle",
            f"{len(rows) - len(dis)}/{len(rows)} divisor pairs agree", _verdict(not dis),
            "; ".join(f"a={_fmt_poly_int(a)} g={_fmt_poly_int(g)}" for a, g in dis[:5]),
        ))
    for n in (3, 5, 7):
        necessary_fail = sufficient_fail = 0
        pairs = divisor_pairs(n)
        for a, g in pairs:
            spec = CyclicCodeSpec("R1", n, "r1-odd", g=Poly.from_int(g), a=Poly.from_int(a))
            code = build(spec)
            cond, orac = rc_necessary_condition_r1(spec, cap, code), exhaustive_rc(code, cap)
            necessary_fail += orac and not cond
            sufficient_fail += cond and not orac
        out.append(Finding(
            f"thm-r1-rc-condition/n{n}", "rc-closed => condition",
            f"{necessary_fail} failures over {len(pairs)} divisor pairs; "
            f"{sufficient_fail} where the condition holds but the code is not rc-closed",
            _verdict(necessary_fail == 0),
        ))

    for form in ("r1-even-principal", "r1-even-two-gen"):
        for n in (2, 4, 6, 8):
            rows = sweep_r1_even(n, form, cap)
            fwd = sum(p and not o for _, p, o in rows)
            conv = sum(o and not p for _, p, o in rows)
            out.append(Finding(
                f"thm-{form}-reversible/n{n}", "predicate => oracle",
                f"{fwd} failures over {len(rows)} specs; {conv} reversible codes fail the predicate",
                _verdict(fwd == 0),
            ))

    rows = sweep_r_crt(3, cap)
    fwd = [r for r in rows if r.pred and not r.oracle]
    conv = [r for r in rows if r.oracle and not r.pred]
    out.append(Finding("thm-r-reversible/n3/implication", "predicate => oracle",
                       f"{len(fwd)} failures over {len(rows)} codes", _verdict(not fwd)))
    out.append(Finding(
        "thm-r-reversible/n3/converse", "oracle => predicate",
        f"{len(conv)} of {sum(r.oracle for r in rows)} reversible codes fail the predicate",
        _verdict(not conv),
        "equal-degree clause is not necessary" if conv else "",
    ))
    if conv:
        g = conv[0].gens
        out[-1] = Finding(out[-1].tag, out[-1].expected, out[-1].computed, out[-1].verdict,
                          out[-1].note + "; e.g. (g2,a2,g1,a1,g1',a1') = ("
                          + ", ".join(_fmt_poly_int(f) for f in g) + ")")
    rc_rows = [r for r in rows if r.pred]
    rc_dis = [r for r in rc_rows if r.rc_pred != r.rc_oracle]
    out.append(Finding("thm-r-rc/n3", "rc predicate <=> oracle on predicate-reversible codes",
                       f"{len(rc_rows) - len(rc_dis)}/{len(rc_rows)} agree", _verdict(not rc_dis)))

    # same criterion with reversibility read off the oracle instead of the predicate
    ok = total = 0
    for r in rows:
        if not r.oracle:
            continue
        code = build(crt_spec(3, r.gens))
        total += 1
        ok += _all_comp_zero_in(code) == exhaustive_rc(code, cap)
    out.append(Finding("thm-r-rc/n3/oracle-reversible",
                       "rc-closed <=> all-(1+u) word in C, over all reversible codes",
                       f"{ok}/{total} agree", _verdict(ok == total)))

    # phi sigma = nu phi
    ok = True
    for n in (1, 2):
        for vec in product(RElem.all(), repeat=n):
            ok &= phi_vector(sigma(vec)) == nu(phi_vector(vec))
    rng = random.Random(seed)
    elems = RElem.all()
    for _ in range(10_000):
        vec = tuple(rng.choice(elems) for _ in range(3))
        ok &= phi_vector(sigma(vec)) == nu(phi_vector(vec))
    out.append(Finding("thm-gray-shift", "phi(sigma c) = nu(phi c)",
                       "holds on all n<=2 and 10^4 random n=3" if ok else "fails", _verdict(ok)))
    img = binary_image(table3_code(), cap)
    qc = nu_closed(img) and len(img) == 64 and all(len(b) == 18 for b in img)
    out.append(Finding("thm-gray-quasicyclic/table3", "nu-closed binary image, 64 words of length 18",
                       f"{len(img)} words, nu-closed {nu_closed(img)}", _verdict(qc)))
    return out


# -- entry points --------------------------------------------------------------------------


def run_errata(scope: str = "all", cap: int = DEFAULT_CAP) -> list[Finding]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    parts = {
        "table1": errata_table1,
        "table2": errata_table2,
        "table3": errata_table3,
        "table4": errata_table4,
        "examples": lambda: errata_examples(cap),
        "crt": errata_crt,
    }
    keys = [k for k in parts if scope in (k, "all")]
    findings = []
    for k in keys:
        findings.extend(parts[k]())
    return sorted(findings, key=lambda f: f.tag)


def run_suite(suite: str = "all", cap: int = DEFAULT_CAP) -> list[Finding]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    out: list[Finding] = []
    if suite in ("lemmas", "all"):
        out += lemma_findings()
    if suite in ("theorems", "all"):
        out += theorem_findings(cap)
    if suite in ("examples", "all"):
        out += errata_examples(cap)
    if suite in ("crt", "all"):
        out += errata_crt()
    if suite in ("tables", "all"):
        for scope in ("table1", "table2", "table3", "table4"):
            out += run_errata(scope, cap)
    return sorted(out, key=lambda f: f.tag)
