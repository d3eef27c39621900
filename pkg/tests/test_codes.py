from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicdna.codes import (
    CapExceededError,
    CodeSpecError,
    CodewordSet,
    CyclicCodeSpec,
    DegreeOrderError,
    DivisibilityError,
    add_closed,
    build,
    contains,
    enumerate_code,
    ideal,
    min_hamming_distance,
    scalar_closed,
    shift_closed,
    size_formula_r1,
    validate,
)
from cyclicdna.crt import combine_vector, split_vector
from cyclicdna.poly import Poly, divides_f2, divisors_xn1_f2
from cyclicdna.ring import F2Elem, R1Elem, RElem, ring_type
from cyclicdna.verify import load_spec
from oracles import ideal_closure

B = Poly.from_bits


def spec_r1(n, g, a):
    return CyclicCodeSpec("R1", n, "r1-odd", g=B(g), a=B(a))


def divisor_pairs(n):
    divs = divisors_xn1_f2(n)
    return [(a, g) for g in divs for a in divs if divides_f2(a, g)]


# -- spec files ------------------------------------------------------------------------


def test_parse_and_dump_round_trip():
    text = "# c\nring=R1\nn=8\nform=r1-even-principal\ng=10001\np=0101\n"
    spec = CyclicCodeSpec.parse(text)
    assert spec.n == 8 and spec.g == B("10001") and spec.p == B("0101")
    assert CyclicCodeSpec.parse(spec.dumps()) == spec


@pytest.mark.parametrize("text", [
    "ring=R1\nn=3\nform=r1-odd\ng=11\na=11\nzz=1\n",
    "ring=R1\nn=3\nform=r1-odd\ng=11\ng=11\n",
    "ring=R1\nform=r1-odd\ng=11\na=11\n",
    "ring=R1\nn=x\nform=r1-odd\ng=11\na=11\n",
    "ring=R1\nn=3\nform=r1-odd\ng 11\n",
])
def test_parse_errors(text):
    with pytest.raises(CodeSpecError):
        CyclicCodeSpec.parse(text)


def test_validate_errors():
    with pytest.raises(DivisibilityError, match="g \\| x\\^n-1"):
        build(spec_r1(3, "1101", "1"))
    with pytest.raises(DivisibilityError, match="a \\| g"):
        build(spec_r1(3, "11", "111"))
    with pytest.raises(CodeSpecError):
        build(CyclicCodeSpec("R", 3, "r1-odd", g=B("11"), a=B("11")))
    with pytest.raises(CodeSpecError):
        build(CyclicCodeSpec("R1", 3, "r1-odd", g=B("11")))
    with pytest.raises(CodeSpecError):
        build(CyclicCodeSpec("R1", 3, "nonsense", g=B("11"), a=B("11")))
    with pytest.raises(DegreeOrderError):
        build(CyclicCodeSpec("R1", 6, "r1-even-two-gen", g=B("11011"), a=B("111"), p=B("001")))


def test_lenient_validation_keeps_notes():
    spec = load_spec("ex_n6_r1")
    with pytest.raises(DivisibilityError):
        build(spec)
    with pytest.warns(UserWarning):
        notes = validate(spec, strict=False)
    assert any("a | g" in n for n in notes)
    assert any("deg g = deg a" in n for n in notes)


# -- build ---------------------------------------------------------------------------------


def test_build_examples():
    u = R1Elem.parse("01")
    assert build(spec_r1(3, "11", "11")).generator == Poly("R1", [u, u])
    code = build(load_spec("ex_n3"))
    assert str(code.generator) == "(u+uv+uv^2)+(u+uv+uv^2)x"
    zero = build(load_spec("zero"))
    cs = enumerate_code(zero)
    assert zero.dimension == 0 and list(cs.vectors()) == [(R1Elem.zero(),) * 3]


def test_enumerate_examples():
    cs = enumerate_code(build(load_spec("table3")))
    assert len(cs) == 64
    assert all(len(set(v)) == 1 for v in cs.vectors())


def test_cap():
    code = build(load_spec("table3"))
    with pytest.raises(CapExceededError):
        enumerate_code(code, cap=5)
    assert len(enumerate_code(code, cap=6)) == 64


def test_basis_is_reduced_and_sorted():
    code = build(load_spec("ex_n3"))
    basis = code.basis
    pivots = [b & -b for b in basis]
    assert pivots == sorted(pivots)
    for b, p in zip(basis, pivots):
        assert all(not (other & p) for other in basis if other != b)


def _closure(ring, n, gens):
    rt = ring_type(ring)
    return ideal_closure(
        n,
        [g.to_vector(n) for g in gens],
        rt.all(),
        lambda s, c: s * c,
        lambda a, b: a + b,
        rt.zero(),
    )


@pytest.mark.parametrize("a,g", divisor_pairs(3))
def test_enumeration_matches_closure_r1(a, g):
    code = build(CyclicCodeSpec("R1", 3, "r1-odd", g=Poly.from_int(g), a=Poly.from_int(a)))
    words = set(enumerate_code(code).vectors())
    assert words == _closure("R1", 3, code.generators)


@pytest.mark.parametrize("text", ["010101,010101", "100000,001000", "111111", "0"])
def test_enumeration_matches_closure_r_length2(text):
    code = ideal("R", 2, [Poly.parse("R", text)])
    assert set(enumerate_code(code).vectors()) == _closure("R", 2, code.generators)


def test_enumeration_matches_closure_rw():
    spec = CyclicCodeSpec("Rw", 3, "rw", g1=B("111"), a1=B("111"), g1p=B("1001"), a1p=B("11"))
    code = build(spec)
    assert set(enumerate_code(code).vectors()) == _closure("Rw", 3, code.generators)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_size_formula_matches_enumeration(n):
    for a, g in divisor_pairs(n):
        ga, aa = Poly.from_int(g), Poly.from_int(a)
        assert size_formula_r1(n, ga, aa) == len(enumerate_code(build(CyclicCodeSpec("R1", n, "r1-odd", g=ga, a=aa))))


def test_size_formula_examples():
    assert size_formula_r1(3, B("11"), B("11")) == 16
    assert size_formula_r1(3, B("1001"), B("1001")) == 1
    with pytest.raises(DivisibilityError):
        size_formula_r1(6, B("11011"), B("10101"))


@st.composite
def small_codes(draw):
    n = draw(st.sampled_from([3, 5, 7]))
    a, g = draw(st.sampled_from(divisor_pairs(n)))
    return build(CyclicCodeSpec("R1", n, "r1-odd", g=Poly.from_int(g), a=Poly.from_int(a)))


@given(small_codes())
def test_codes_are_ideals(code):
    cs = enumerate_code(code)
    assert shift_closed(cs) and scalar_closed(cs)
    if len(cs) <= 256:
        assert add_closed(cs)


def test_r_codes_are_ideals():
    cs = enumerate_code(build(load_spec("ex_n3")))
    assert shift_closed(cs) and scalar_closed(cs) and add_closed(cs)


@pytest.mark.parametrize("name", ["ex_n3", "table3", "ex_n5"])
def test_crt_component_consistency(name):
    code = build(load_spec(name))
    c2, cw = code.components()
    words = list(enumerate_code(code).vectors())
    firsts, seconds = set(), set()
    for w in words:
        a, b = split_vector(w)
        assert contains(c2, a) and contains(cw, b)
        firsts.add(a)
        seconds.add(b)
    assert len(firsts) == len(c2) and len(seconds) == len(cw)
    for a, b in product(list(firsts)[:16], list(seconds)[:16]):
        assert contains(code, combine_vector(a, b))


def test_contains():
    code = build(load_spec("ex_n3"))
    one = RElem.one()
    assert contains(code, (RElem.zero(),) * 3)
    assert not contains(code, (one,) * 3)
    assert contains(code, code.generator.to_vector(3))
    with pytest.raises(ValueError):
        contains(code, (one,) * 2)


def test_min_distance():
    cs = enumerate_code(build(load_spec("table3")))
    assert min_hamming_distance(cs) == 3
    full = ideal("R", 2, [Poly.parse("R", "100000")])
    assert min_hamming_distance(enumerate_code(full)) == 1
    with pytest.raises(ValueError):
        min_hamming_distance(enumerate_code(build(load_spec("zero"))))


def test_shift_closed_on_raw_sets():
    one, zero = F2Elem.one(), F2Elem.zero()
    s = CodewordSet.from_vectors("F2", 3, [(one, zero, zero), (zero, zero, zero)])
    assert not shift_closed(s)
    assert shift_closed(CodewordSet.from_vectors("F2", 3, [(zero, zero, zero)]))


def test_components_of_crt_code():
    code = build(load_spec("ex_n3"))
    c2, cw = code.components()
    assert c2.ring == "R1" and cw.ring == "Rw"
    assert len(code) == len(c2) * len(cw)
    with pytest.raises(ValueError):
        build(spec_r1(3, "11", "11")).components()
