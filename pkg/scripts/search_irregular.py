"""Search for irregular Radon (4n+2)-gons over several seeds and summarize what was confirmed."""

import argparse
import time
from pathlib import Path

from polyradon import SearchConfig, search_irregular, serialize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, nargs="+", default=[6, 10, 14])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--restarts", type=int, default=4)
    ap.add_argument("--max-iter", type=int, default=400)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--out", type=Path, default=None, help="write confirmed polygons here")
    args = ap.parse_args()

    print(f"{'m':>3} {'seed':>4} {'found':>5} {'repaired':>8} {'max cv':>7} {'s':>6}")
    for m in args.vertices:
        for seed in range(args.seeds):
            cfg = SearchConfig(vertices=m, seed=seed, restarts=args.restarts,
                               max_iter=args.max_iter, template="free", workers=args.workers)
            t0 = time.perf_counter()
            res = search_irregular(cfg)
            dt = time.perf_counter() - t0
            cv = max((max(f.cv_edges, f.cv_angles) for f in res.found), default=0.0)
            rep = sum(f.repaired for f in res.found)
            print(f"{m:>3} {seed:>4} {len(res.found):>5} {rep:>8} {cv:>7.3f} {dt:>6.2f}")
            if args.out:
                args.out.mkdir(parents=True, exist_ok=True)
                for i, f in enumerate(res.found):
                    (args.out / f"radon_{m}_{seed}_{i}.json").write_text(serialize(f.polygon))


if __name__ == "__main__":
    main()
