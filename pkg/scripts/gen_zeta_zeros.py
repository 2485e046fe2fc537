#!/usr/bin/env python3
"""Regenerate the bundled Riemann zeta zero ordinates (data/zeros/zeta_zeros_1e4.txt).

Uses mpmath's zetazero root finder; ordinates are written to 12 decimal
places, far below any tolerance the test suite relies on.  One-time data
preparation, not part of the installed package.
"""

import argparse
import multiprocessing
import sys

import mpmath as mp


def ordinate(n: int):
    mp.mp.dps = 15
    return n, mp.nstr(mp.zetazero(n).imag, 14)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--height", type=float, default=10000.0)
    ap.add_argument("--max-n", type=int, default=10250,
                    help="compute this many zeros; must reach past --height")
    ap.add_argument("--out", default="data/zeros/zeta_zeros_1e4.txt")
    ap.add_argument("--workers", type=int, default=8)
    args = ap.parse_args()

    with multiprocessing.Pool(args.workers) as pool:
        results = []
        for i, item in enumerate(
            pool.imap_unordered(ordinate, range(1, args.max_n + 1), chunksize=20)
        ):
            results.append(item)
            if (i + 1) % 500 == 0:
                print(f"{i + 1}/{args.max_n}", file=sys.stderr, flush=True)
    results.sort()
    gammas = [float(g) for _, g in results]
    for a, b in zip(gammas, gammas[1:]):
        if not a < b:
            raise SystemExit(f"ordinates not increasing near {a}; rerun")
    if gammas[-1] <= args.height:
        raise SystemExit("--max-n too small to cover --height")

    kept = [(n_g, g) for n_g, g in zip(results, gammas) if g <= args.height]
    with open(args.out, "w") as fh:
        fh.write(f"# completeness {args.height:g}\n")
        fh.write("# half\n")
        fh.write("# source mpmath zetazero dps=15\n")
        for (_, gstr), _ in kept:
            fh.write(f"{gstr}\n")
    print(f"wrote {len(kept)} ordinates to {args.out}; last = {kept[-1][1]:.6f}")


if __name__ == "__main__":
    main()
