"""How often does the value-vs-packing step (S1) fail on random K_{k+2}-free graphs?

Usage:
    python scripts/s1_frequency.py [--k 2] [--samples 2000] [--seed 1]

Sweeps G(n, p) over a small grid and reports eligible samples and S1 failures.
"""

from __future__ import annotations

import argparse

from cliquevalue.harness import run_hunt


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 7, 8, 10])
    ap.add_argument("--p", type=float, nargs="+", default=[0.3, 0.5, 0.7])
    args = ap.parse_args()

    print(f"{'n':>3} {'p':>5} {'eligible':>9} {'S1 fails':>9}")
    for n in args.n:
        for p in args.p:
            doc = run_hunt(args.k, args.seed, args.samples, n=n, p_grid=[p], target="step:S1")
            print(f"{n:>3} {p:>5} {doc['eligible']:>9} {len(doc['findings']):>9}")


if __name__ == "__main__":
    main()
