import pytest

from cyclicdna.codes import CapExceededError, CodeSpecError, CyclicCodeSpec, build, enumerate_code, ideal
from cyclicdna.dna import rc_vector
from cyclicdna.poly import Poly
from cyclicdna.ring import R1Elem, RElem
from cyclicdna.verify import (
    INCONSISTENT,
    MATCH,
    MISMATCH,
    Finding,
    blocking_mismatches,
    exhaustive_rc,
    exhaustive_reversible,
    load_allowlist,
    load_spec,
    parse_expr,
    rc_necessary_condition_r1,
    rc_pred_r,
    reversible_pred_r,
    reversible_pred_r1,
    run_errata,
    run_suite,
    sweep_r1_even,
    sweep_r1_odd,
)

B = Poly.from_bits


def crt(n, g2, rest):
    return CyclicCodeSpec("R", n, "r-crt", g2=B(g2), a2=B(g2), g1=B(rest), a1=B(rest), g1p=B(rest), a1p=B(rest))


def test_reversible_pred_r1_examples():
    assert reversible_pred_r1(CyclicCodeSpec("R1", 3, "r1-odd", g=B("11"), a=B("11")))
    assert reversible_pred_r1(load_spec("ex_n8_r1"))
    assert not reversible_pred_r1(CyclicCodeSpec("R1", 7, "r1-odd", g=B("1101"), a=B("1101")))
    with pytest.raises(CodeSpecError):
        reversible_pred_r1(load_spec("ex_n3"))


def test_reversible_pred_r_examples():
    assert reversible_pred_r(load_spec("ex_n3"))
    assert reversible_pred_r(load_spec("ex_n5"))
    assert not reversible_pred_r(CyclicCodeSpec(
        "R", 3, "r-crt", g2=B("11"), a2=B("11"), g1=B("111"), a1=B("111"), g1p=B("111"), a1p=B("111")))
    with pytest.raises(CodeSpecError):
        reversible_pred_r(crt(4, "11", "11"))
    with pytest.raises(CodeSpecError):
        reversible_pred_r(load_spec("ex_n8_r1"))


def test_rc_pred_r_examples():
    assert rc_pred_r(load_spec("table3"))
    assert not rc_pred_r(load_spec("ex_n3"))
    assert not rc_pred_r(crt(3, "1001", "1001"))
    with pytest.raises(CapExceededError):
        rc_pred_r(load_spec("table3"), cap=2)


def test_rc_necessary_condition_examples():
    assert rc_necessary_condition_r1(CyclicCodeSpec("R1", 3, "r1-odd", g=B("111"), a=B("111")))
    assert not rc_necessary_condition_r1(CyclicCodeSpec("R1", 3, "r1-odd", g=B("11"), a=B("11")))
    assert not rc_necessary_condition_r1(load_spec("zero"))


def test_oracles_examples():
    table3 = build(load_spec("table3"))
    assert exhaustive_reversible(table3) and exhaustive_rc(table3)
    zero = build(load_spec("zero"))
    assert exhaustive_reversible(zero) and not exhaustive_rc(zero)
    full = ideal("R", 2, [Poly.parse("R", "100000")])
    assert exhaustive_reversible(full) and exhaustive_rc(full)


def test_oracles_agree_with_literal_sets():
    for name in ("ex_n3", "ex_n5", "table3"):
        code = build(load_spec(name))
        words = set(enumerate_code(code).vectors())
        assert exhaustive_reversible(code) == all(tuple(reversed(w)) in words for w in words)
        assert exhaustive_rc(code) == all(rc_vector(w) in words for w in words)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_r1_predicate_is_equivalent_to_oracle(n):
    rows = sweep_r1_odd(n)
    assert rows and all(p == o for _, _, p, o in rows)


@pytest.mark.parametrize("form", ["r1-even-principal", "r1-even-two-gen"])
@pytest.mark.parametrize("n", [2, 4, 6])
def test_even_r1_predicates_imply_oracle(form, n):
    rows = sweep_r1_even(n, form)
    assert rows and all(o for _, p, o in rows if p)


def test_parse_expr():
    assert parse_expr("1+u+v^2") == RElem.parse("110010")
    assert parse_expr("0") == RElem.zero()
    assert parse_expr("u", "R1") == R1Elem.parse("01")
    with pytest.raises(ValueError):
        parse_expr("w")
    with pytest.raises(ValueError):
        parse_expr("v", "R1")


def test_errata_table1():
    fs = run_errata("table1")
    assert len(fs) == 64
    assert sum(f.verdict == MATCH for f in fs) == 62
    odd = [f for f in fs if f.verdict == INCONSISTENT]
    assert [f.tag.split("/")[-1] for f in odd] == ["v+uv+uv^2", "v+uv+v^2+uv^2"]


def test_errata_table2_flags_the_duplicate_label():
    fs = run_errata("table2")
    assert len(fs) == 64
    odd = [f for f in fs if f.verdict != MATCH]
    assert len(odd) == 1 and odd[0].verdict == INCONSISTENT
    assert odd[0].expected == "CGC 011000" and odd[0].computed == "CGA 011000"


def test_errata_table3():
    fs = run_errata("table3")
    assert len(fs) == 64 and all(f.verdict == MATCH for f in fs)


def test_errata_table4_is_advisory():
    fs = run_errata("table4")
    assert len(fs) == 9
    assert not blocking_mismatches(fs)


def test_errata_crt():
    fs = {f.tag: f for f in run_errata("crt")}
    assert fs["crt/forward-bijective"].verdict == MATCH
    assert fs["crt/forward-homomorphism"].verdict == MATCH
    assert fs["crt/inverse-implemented"].verdict == MATCH
    assert fs["crt/inverse-printed"].verdict == MISMATCH


def test_errata_examples():
    fs = {f.tag: f for f in run_errata("examples")}
    assert fs["ex-n3/generator"].verdict == MATCH
    assert fs["ex-n5/reversible"].verdict == MATCH
    assert fs["ex-n8-r1/x^i p* = p"].verdict == MATCH
    assert fs["ex-n6-r1/a-divides-g"].verdict == MISMATCH
    assert fs["ex-n6-r1/size"].computed == "64"


def test_report_is_deterministic_and_sorted():
    a = run_errata("all")
    assert a == run_errata("all")
    assert [f.tag for f in a] == sorted(f.tag for f in a)


def test_allowlist_covers_only_known_errata():
    allow = load_allowlist()
    assert "crt/inverse-printed" in allow
    assert blocking_mismatches(run_errata("all")) == []
    fake = Finding("table1/row01/0", "x", "y", MISMATCH)
    assert blocking_mismatches([fake]) == [fake]


def test_unknown_scope_and_suite():
    with pytest.raises(ValueError):
        run_errata("table9")
    with pytest.raises(ValueError):
        run_suite("everything")


def test_finding_formats():
    f = Finding("t", "e", "c", MATCH, "n")
    assert f.tsv() == "t\te\tc\tmatch\tn"
    assert f.text() == "[match] t: expected e; computed c (n)"
