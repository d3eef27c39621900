"""Compare each reversibility criterion with the brute-force oracle over whole families of codes.

Prints one TSV row per family plus the first few disagreements.
"""

import argparse
import time
from dataclasses import dataclass, field

from cyclicdna.poly import format_factors
from cyclicdna.verify import sweep_r1_even, sweep_r1_odd, sweep_r_crt


@dataclass(frozen=True)
class Config:
    odd_lengths: tuple[int, ...] = (3, 5, 7)
    even_lengths: tuple[int, ...] = (2, 4, 6, 8)
    crt_length: int = 3
    show: int = 5
    forms: tuple[str, ...] = field(default=("r1-even-principal", "r1-even-two-gen"))


def fmt(f: int) -> str:
    return format_factors({f: 1}) if f > 1 else "1"


def run(cfg: Config) -> None:
    print("family\tn\tcodes\tpred\toracle\tpred_not_oracle\toracle_not_pred\tseconds")

    def row(name, n, pairs, t0):
        pn = sum(p and not o for p, o in pairs)
        on = sum(o and not p for p, o in pairs)
        print(f"{name}\t{n}\t{len(pairs)}\t{sum(p for p, _ in pairs)}\t{sum(o for _, o in pairs)}"
              f"\t{pn}\t{on}\t{time.perf_counter() - t0:.2f}")

    for n in cfg.odd_lengths:
        t0 = time.perf_counter()
        rows = sweep_r1_odd(n)
        row("r1-odd", n, [(p, o) for _, _, p, o in rows], t0)
    for form in cfg.forms:
        for n in cfg.even_lengths:
            t0 = time.perf_counter()
            rows = sweep_r1_even(n, form)
            row(form, n, [(p, o) for _, p, o in rows], t0)

    t0 = time.perf_counter()
    rows = sweep_r_crt(cfg.crt_length)
    row("r-crt", cfg.crt_length, [(r.pred, r.oracle) for r in rows], t0)
    converse = [r for r in rows if r.oracle and not r.pred]
    if converse:
        print(f"\n# reversible r-crt codes rejected by the equal-degree criterion (first {cfg.show}):")
        print("# g2\ta2\tg1\ta1\tg1'\ta1'")
        for r in converse[: cfg.show]:
            print("\t".join(fmt(f) for f in r.gens))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show", type=int, default=Config.show)
    ap.add_argument("--crt-length", type=int, default=Config.crt_length)
    a = ap.parse_args()
    run(Config(show=a.show, crt_length=a.crt_length))
