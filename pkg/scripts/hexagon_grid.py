"""Exact verdicts over the hexagon family +-(1, a), +-(1, -a) with a vertical or horizontal apex pair."""

import argparse
from fractions import Fraction

from polyradon import gen_hexagon, irregularity, is_radon_oracle, is_radon_tep

ALPHAS = "1/4 1/3 1/2 1 3/2 2 3"
SCALES = "3/2 2 5/2"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", default=ALPHAS)
    ap.add_argument("--scales", default=SCALES)
    args = ap.parse_args()

    print(f"{'alpha':>6} {'apex':>10} {'scale':>6} {'tep':>9} {'oracle':>9} {'cv edges':>9}")
    for a in map(Fraction, args.alphas.split()):
        for apex in ("vertical", "horizontal"):
            for s in map(Fraction, args.scales.split()):
                p = gen_hexagon(a, apex, s)
                tep, orc = is_radon_tep(p), is_radon_oracle(p)
                verdict = lambda v: "Radon" if v.radon else "NotRadon"
                print(f"{str(a):>6} {apex:>10} {str(s):>6} {verdict(tep):>9} {verdict(orc):>9} "
                      f"{irregularity(p)[0]:>9.4f}")


if __name__ == "__main__":
    main()
