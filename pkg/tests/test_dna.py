import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicdna.codes import CyclicCodeSpec, build, ideal
from cyclicdna.dna import (
    DnaStrand,
    check_constraints,
    codon_strand,
    complement_vector,
    dna_code_report,
    gc_content,
    hamming,
    is_dna_code,
    nt,
    nt_inv,
    rc_vector,
    reverse_vector,
    strand_of_codeword,
    strands_of_code,
    theta,
    theta_inv,
    wcc_transform,
)
from cyclicdna.poly import Poly
from cyclicdna.ring import R1Elem, RElem, complement, complement_r1
from cyclicdna.tables import TABLE1, table3_strands
from cyclicdna.verify import load_spec, parse_expr
from oracles import CODONS, WCC, rc_strand

strands = st.text(alphabet="ACGT", min_size=0, max_size=12)
r_vectors = st.lists(st.sampled_from(RElem.all()), min_size=1, max_size=5).map(tuple)


def test_nt():
    assert nt(R1Elem.parse("00")) == "A"
    assert nt(R1Elem.parse("10")) == "G"
    assert nt(R1Elem.parse("01")) == "C"
    assert nt(R1Elem.parse("11")) == "T"
    for x in R1Elem.all():
        assert nt_inv(nt(x)) == x
        assert nt(complement_r1(x)) == WCC[nt(x)]
    with pytest.raises(ValueError):
        nt_inv("U")
    with pytest.raises(TypeError):
        nt(RElem.one())


@pytest.mark.parametrize("bits,codon", sorted(CODONS.items()))
def test_theta_hand_values(bits, codon):
    assert theta(RElem.parse(bits)) == codon


def test_theta_bijection_and_complement():
    codons = {theta(x) for x in RElem.all()}
    assert len(codons) == 64
    for x in RElem.all():
        assert theta_inv(theta(x)) == x
        assert theta(complement(x)) == "".join(WCC[b] for b in theta(x))


def test_theta_matches_printed_codons():
    for elem, _, codon in TABLE1:
        assert theta(parse_expr(elem)) == codon


def test_strand_of_codeword_examples():
    z, u = RElem.zero(), RElem.parse("010000")
    assert str(strand_of_codeword((z, z, z))) == "AAAAAAAAA"
    assert str(strand_of_codeword((u, u, u))) == "CCCCCCCCC"
    for c in RElem.all():
        x, y, w = theta(c)
        assert str(strand_of_codeword((c,) * 3)) == x * 3 + y * 3 + w * 3
        assert str(strand_of_codeword((c,))) == theta(c)


@given(r_vectors)
def test_block_layout_under_reversal(c):
    n = len(c)
    s = str(strand_of_codeword(c))
    r = str(strand_of_codeword(reverse_vector(c)))
    blocks = [s[i * n:(i + 1) * n][::-1] for i in range(3)]
    assert r == "".join(blocks)


def test_ring_rc_for_length_one_is_base_complement():
    for x in RElem.all():
        assert str(strand_of_codeword(rc_vector((x,)))) == "".join(WCC[b] for b in theta(x))
    # the strand-level rc also reverses, so it differs whenever the codon is not a palindrome
    assert str(strand_of_codeword(rc_vector((RElem.parse("000010"),)))) != rc_strand(theta(RElem.parse("000010")))


@given(r_vectors)
def test_codon_layout_under_ring_rc(c):
    got = str(codon_strand(rc_vector(c)))
    codons = [theta(x) for x in c]
    assert got == "".join("".join(WCC[b] for b in cod) for cod in reversed(codons))


@given(r_vectors)
def test_block_layout_under_ring_rc(c):
    n = len(c)
    s = str(strand_of_codeword(c))
    blocks = ["".join(WCC[b] for b in s[i * n:(i + 1) * n][::-1]) for i in range(3)]
    assert str(strand_of_codeword(rc_vector(c))) == "".join(blocks)


def test_wcc_examples():
    assert str(wcc_transform("GCATAG", "complement")) == "CGTATC"
    assert str(wcc_transform("GCATAG", "reverse-complement")) == "CTATGC"
    assert str(wcc_transform("AAA", "reverse")) == "AAA"
    with pytest.raises(ValueError):
        wcc_transform("AAA", "flip")
    with pytest.raises(ValueError):
        DnaStrand("ACGU")


@given(strands)
def test_wcc_involutions(s):
    for mode in ("reverse", "complement", "rc"):
        once = wcc_transform(s, mode)
        assert len(once) == len(s)
        assert str(wcc_transform(once, mode)) == s
    d = DnaStrand(s)
    assert d.reverse().complement() == d.complement().reverse() == d.reverse_complement()


def test_gc_content():
    assert gc_content("AAA") == 0
    assert gc_content("GGG") == 3
    assert gc_content("GCATAG") == 3


def test_check_constraints_examples():
    res = check_constraints(table3_strands(), 3, ["hamming"])
    assert res[0].passed
    res = check_constraints(["AAA", "AAT", "GGG"], 3, ["hamming"])
    assert not res[0].passed and res[0].witness == ("AAA", "AAT")
    assert check_constraints(["AAA"], 1, ["gc"])[0].passed


def test_check_constraints_self_pairs_and_duplicates():
    # reverse of a palindrome hits itself
    res = check_constraints(["ACA"], 1, ["reverse"])
    assert not res[0].passed and res[0].witness == ("ACA", "ACA")
    # duplicates are one strand, so hamming is vacuous
    assert check_constraints(["ACG", "ACG"], 3, ["hamming"])[0].passed
    with pytest.raises(ValueError):
        check_constraints(["AA", "AAA"], 1)
    with pytest.raises(ValueError):
        check_constraints(["AA"], -1)
    with pytest.raises(ValueError):
        check_constraints(["AA"], 1, ["bogus"])


def test_constraint_report_tsv():
    r = check_constraints(["AAA", "AAT"], 2, ["hamming"])[0]
    assert r.tsv() == "hamming\tfail\tAAA\tAAT"
    ok = check_constraints(["AAA"], 2, ["gc"])[0]
    assert ok.tsv() == "gc\tpass\t-\t-"


def test_vector_transforms():
    z, o = RElem.zero(), RElem.one()
    assert reverse_vector((z, o)) == (o, z)
    assert complement_vector((z,)) == (RElem.parse("110000"),)
    assert rc_vector((z, o)) == (complement(o), complement(z))


def test_is_dna_code_examples():
    assert is_dna_code(build(load_spec("table3")))
    rep = dna_code_report(build(load_spec("zero")))
    assert not rep.ok and not rep.rc_closed and rep.no_rc_fixed_word
    full2 = ideal("R", 2, [Poly.parse("R", "100000")])
    rep = dna_code_report(full2)
    assert rep.rc_closed and not rep.no_rc_fixed_word and not rep.ok
    # odd length: no word equals its own rc (the middle coordinate would be self-complementary)
    full3 = ideal("R1", 3, [Poly.parse("R1", "10")])
    assert is_dna_code(full3)


def test_strands_of_code_layouts():
    code = build(load_spec("table3"))
    assert set(map(str, strands_of_code(code, "def31"))) == set(table3_strands())
    codon = set(map(str, strands_of_code(code, "codon")))
    assert len(codon) == 64 and all(s[:3] * 3 == s for s in codon)
    with pytest.raises(ValueError):
        strands_of_code(code, "zigzag")
    r1 = build(CyclicCodeSpec("R1", 3, "r1-odd", g=Poly.from_bits("11"), a=Poly.from_bits("11")))
    assert all(len(s) == 3 for s in strands_of_code(r1))


def test_hamming_length_check():
    assert hamming("ACGT", "ACGA") == 1
    with pytest.raises(ValueError):
        hamming("A", "AA")
