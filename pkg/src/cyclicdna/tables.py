"""Tables transcribed verbatim from the printed source, typos included.

Nothing here is computed; :mod:`cyclicdna.verify` regenerates each table
and compares.
"""

# (element of R, Gray image under (a, a+b, a+c), codon), in printed order
TABLE1 = [
    ("0", "(0,0,0)", "AAA"),
    ("v^2", "(0,0,1)", "AAG"),
    ("uv^2", "(0,0,u)", "AAC"),
    ("v^2+uv^2", "(0,0,1+u)", "AAT"),
    ("v", "(0,1,0)", "AGA"),
    ("v+v^2", "(0,1,1)", "AGG"),
    ("v+uv^2", "(0,1,u)", "AGC"),
    ("v+v^2+uv^2", "(0,1,1+u)", "AGT"),
    ("uv", "(0,u,0)", "ACA"),
    ("uv+v^2", "(0,u,1)", "ACG"),
    ("uv+uv^2", "(0,u,u)", "ACC"),
    ("uv+v^2+uv^2", "(0,u,1+u)", "ACT"),
    ("v+uv", "(0,1+u,0)", "ATA"),
    ("v+uv+v^2", "(0,1+u,1)", "ATG"),
    ("v+uv+uv^2", "(0,u,u)", "ATC"),
    ("v+uv+v^2+uv^2", "(0,u,1+u)", "ATT"),
    ("u", "(u,u,u)", "CCC"),
    ("u+v^2", "(u,u,1+u)", "CCT"),
    ("u+uv^2", "(u,u,0)", "CCA"),
    ("u+v^2+uv^2", "(u,u,1)", "CCG"),
    ("u+v", "(u,1+u,u)", "CTC"),
    ("u+v+v^2", "(u,1+u,1+u)", "CTT"),
    ("u+v+uv^2", "(u,1+u,0)", "CTA"),
    ("u+v+v^2+uv^2", "(u,1+u,1)", "CTG"),
    ("u+uv", "(u,0,u)", "CAC"),
    ("u+uv+v^2", "(u,0,1+u)", "CAT"),
    ("u+uv+uv^2", "(u,0,0)", "CAA"),
    ("u+uv+v^2+uv^2", "(u,0,1)", "CAG"),
    ("u+v+uv", "(u,1,u)", "CGC"),
    ("u+v+uv+v^2", "(u,1,1+u)", "CGT"),
    ("u+v+uv+uv^2", "(u,1,0)", "CGA"),
    ("u+v+uv+v^2+uv^2", "(u,1,1)", "CGG"),
    ("1", "(1,1,1)", "GGG"),
    ("1+v^2", "(1,1,0)", "GGA"),
    ("1+uv^2", "(1,1,1+u)", "GGT"),
    ("1+v^2+uv^2", "(1,1,u)", "GGC"),
    ("1+v", "(1,0,1)", "GAG"),
    ("1+v+v^2", "(1,0,0)", "GAA"),
    ("1+v+uv^2", "(1,0,1+u)", "GAT"),
    ("1+v+v^2+uv^2", "(1,0,u)", "GAC"),
    ("1+uv", "(1,1+u,1)", "GTG"),
    ("1+uv+v^2", "(1,1+u,0)", "GTA"),
    ("1+uv+uv^2", "(1,1+u,1+u)", "GTT"),
    ("1+uv+v^2+uv^2", "(1,1+u,u)", "GTC"),
    ("1+v+uv", "(1,u,1)", "GCG"),
    ("1+v+uv+v^2", "(1,u,0)", "GCA"),
    ("1+v+uv+uv^2", "(1,u,1+u)", "GCT"),
    ("1+v+uv+v^2+uv^2", "(1,u,u)", "GCC"),
    ("1+u", "(1+u,1+u,1+u)", "TTT"),
    ("1+u+v^2", "(1+u,1+u,u)", "TTC"),
    ("1+u+uv^2", "(1+u,1+u,1)", "TTG"),
    ("1+u+v^2+uv^2", "(1+u,1+u,0)", "TTA"),
    ("1+u+v", "(1+u,u,1+u)", "TCT"),
    ("1+u+v+v^2", "(1+u,u,u)", "TCC"),
    ("1+u+v+uv^2", "(1+u,u,1)", "TCG"),
    ("1+u+v+v^2+uv^2", "(1+u,u,0)", "TCA"),
    ("1+u+uv", "(1+u,1,1+u)", "TGT"),
    ("1+u+uv+v^2", "(1+u,1,u)", "TGC"),
    ("1+u+uv+uv^2", "(1+u,1,1)", "TGG"),
    ("1+u+uv+v^2+uv^2", "(1+u,1,0)", "TGA"),
    ("1+u+v+uv", "(1+u,0,1+u)", "TAT"),
    ("1+u+v+uv+v^2", "(1+u,0,u)", "TAC"),
    ("1+u+v+uv+uv^2", "(1+u,0,1)", "TAG"),
    ("1+u+v+uv+v^2+uv^2", "(1+u,0,0)", "TAA"),
]

# printed rows: four (codon, 6-bit image) cells per row; column j, row r
# corresponds to TABLE1[16*j + r]
TABLE2 = [
    [("AAA", "000000"), ("CCC", "010101"), ("GGG", "101010"), ("TTT", "111111")],
    [("AAG", "000010"), ("CCT", "010111"), ("GGA", "101000"), ("TTC", "111101")],
    [("AAC", "000001"), ("CCA", "010100"), ("GGT", "101011"), ("TTG", "111110")],
    [("AAT", "000011"), ("CCG", "010110"), ("GGC", "101001"), ("TTA", "111100")],
    [("AGA", "001000"), ("CTC", "011101"), ("GAG", "100010"), ("TCT", "110111")],
    [("AGG", "001010"), ("CTT", "011111"), ("GAA", "100000"), ("TCC", "110101")],
    [("AGC", "001001"), ("CTA", "011100"), ("GAT", "100011"), ("TCG", "110110")],
    [("AGT", "001011"), ("CTG", "011110"), ("GAC", "100001"), ("TCA", "110100")],
    [("ACA", "000100"), ("CAC", "010001"), ("GTG", "101110"), ("TGT", "111011")],
    [("ACG", "000110"), ("CAT", "010011"), ("GTA", "101100"), ("TGC", "111001")],
    [("ACC", "000101"), ("CAA", "010000"), ("GTT", "101111"), ("TGG", "111010")],
    [("ACT", "000111"), ("CAG", "010010"), ("GTC", "101101"), ("TGA", "111000")],
    [("ATA", "001100"), ("CGC", "011001"), ("GCG", "100110"), ("TAT", "110011")],
    [("ATG", "001110"), ("CGT", "011011"), ("GCA", "100100"), ("TAC", "110001")],
    [("ATC", "001101"), ("CGC", "011000"), ("GCT", "100111"), ("TAG", "110010")],
    [("ATT", "001111"), ("CGG", "011010"), ("GCC", "100101"), ("TAA", "110000")],
]

# printed rows of four strands each
TABLE3 = [
    ["AAAAAAAAA", "TTTTTTTTT", "CCCCCCCCC", "GGGGGGGGG"],
    ["AAAAAAGGG", "TTTTTTCCC", "CCCCCCTTT", "GGGGGGAAA"],
    ["AAAAAACCC", "TTTTTTGGG", "CCCCCCAAA", "GGGGGGTTT"],
    ["AAAAAATTT", "TTTTTTAAA", "CCCCCCGGG", "GGGGGGCCC"],
    ["AAAGGGAAA", "TTTCCCTTT", "CCCTTTCCC", "GGGAAAGGG"],
    ["AAAGGGGGG", "TTTCCCCCC", "CCCTTTTTT", "GGGAAAAAA"],
    ["AAAGGGCCC", "TTTCCCGGG", "CCCTTTAAA", "GGGAAATTT"],
    ["AAAGGGTTT", "TTTCCCAAA", "CCCTTTGGG", "GGGAAACCC"],
    ["AAACCCAAA", "TTTGGGTTT", "CCCAAACCC", "GGGTTTGGG"],
    ["AAACCCGGG", "TTTGGGCCC", "CCCAAATTT", "GGGTTTAAA"],
    ["AAACCCCCC", "TTTGGGGGG", "CCCAAAAAA", "GGGTTTTTT"],
    ["AAACCCTTT", "TTTGGGAAA", "CCCAAAGGG", "GGGTTTCCC"],
    ["AAATTTAAA", "TTTAAATTT", "CCCGGGCCC", "GGGCCCGGG"],
    ["AAATTTGGG", "TTTAAACCC", "CCCGGGTTT", "GGGCCCAAA"],
    ["AAATTTCCC", "TTTAAAGGG", "CCCGGGAAA", "GGGCCCTTT"],
    ["AAATTTTTT", "TTTAAAAAA", "CCCGGGGGG", "GGGCCCCCC"],
]

TABLE4 = [
    ["AAAAAA", "TTTTTT"],
    ["ATATAT", "TATATA"],
    ["GGGGGG", "CCCCCC"],
    ["GCGCGC", "CGCGCG"],
]

TITLES = {
    1: "Table 1: codons identified with the elements of R, with Gray images",
    2: "Table 2: binary images of the codons",
    3: "Table 3: all 64 codewords of the length-3 code over R (length-9 DNA strands)",
    4: "Table 4: DNA code of length 6 over R1",
}


def table2_cells():
    """(position in TABLE1 order, codon, bits) for every printed cell."""
    out = []
    for r, row in enumerate(TABLE2):
        for j, (codon, bits) in enumerate(row):
            out.append((16 * j + r, codon, bits))
    return sorted(out)


def table3_strands():
    return [s for row in TABLE3 for s in row]


def table4_strands():
    return [s for row in TABLE4 for s in row]
