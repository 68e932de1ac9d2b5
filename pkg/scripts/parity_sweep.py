"""Regular m-gons: which vertex counts give a Radon plane?"""

import argparse
import time

from polyradon import gen_regular, is_radon_oracle, is_radon_tep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=40, help="largest vertex count")
    ap.add_argument("--eps", type=float, default=1e-9)
    args = ap.parse_args()

    print(f"{'m':>4} {'m mod 4':>8} {'tep':>9} {'oracle':>9} {'ms':>8}")
    for m in range(4, args.max + 1, 2):
        p = gen_regular(m, eps_rel=args.eps)
        t0 = time.perf_counter()
        tep, orc = is_radon_tep(p), is_radon_oracle(p)
        ms = 1000 * (time.perf_counter() - t0)
        name = lambda v: "Radon" if v.radon else "NotRadon"
        print(f"{m:>4} {m % 4:>8} {name(tep):>9} {name(orc):>9} {ms:>8.1f}")


if __name__ == "__main__":
    main()
