"""List r-crt codes of a given odd length that are DNA codes, with their strand statistics."""

import argparse
from itertools import product
from dataclasses import dataclass

from cyclicdna.codes import build, enumerate_code, min_hamming_distance
from cyclicdna.dna import dna_code_report, strands_of_code
from cyclicdna.verify import crt_spec, divisor_pairs


@dataclass(frozen=True)
class Config:
    n: int = 3
    max_dimension: int = 8


def run(cfg: Config) -> None:
    print("g2\ta2\tg1\ta1\tg1'\ta1'\twords\tring_dmin\tstrand_dmin")
    for (a2, g2), (a1, g1), (a1p, g1p) in product(divisor_pairs(cfg.n), repeat=3):
        gens = (g2, a2, g1, a1, g1p, a1p)
        code = build(crt_spec(cfg.n, gens))
        if code.dimension > cfg.max_dimension or code.dimension == 0:
            continue
        if not dna_code_report(code).ok:
            continue
        cs = enumerate_code(code)
        strands = sorted({str(s) for s in strands_of_code(code)})
        sd = min(sum(p != q for p, q in zip(x, y)) for i, x in enumerate(strands) for y in strands[i + 1:])
        print("\t".join(bin(f)[2:][::-1] for f in gens) + f"\t{len(cs)}\t{min_hamming_distance(cs)}\t{sd}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--max-dimension", type=int, default=Config.max_dimension)
    a = ap.parse_args()
    run(Config(a.n, a.max_dimension))
