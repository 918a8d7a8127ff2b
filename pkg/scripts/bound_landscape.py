"""Slack of the Mantel-type bounds over every labeled graph on n vertices.

Usage:
    python scripts/bound_landscape.py [--max-n 6] [--k 1 2 3]

Prints, per (n, k): eligible graphs, tight graphs (slack 0), minimum slack.
"""

from __future__ import annotations

import argparse

from cliquevalue import check_clique_mantel, enumerate_all_labeled_graphs, to_graph6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    args = ap.parse_args()

    print(f"{'n':>2} {'k':>2} {'eligible':>9} {'tight':>6} {'min slack':>10}  example tight graph")
    for n in range(1, args.max_n + 1):
        for k in args.k:
            eligible = tight = 0
            min_slack = None
            example = ""
            for g in enumerate_all_labeled_graphs(n):
                b = check_clique_mantel(g, k)
                if not b.eligible:
                    continue
                eligible += 1
                if min_slack is None or b.slack < min_slack:
                    min_slack = b.slack
                if b.slack == 0:
                    tight += 1
                    example = example or to_graph6(g)
            print(f"{n:>2} {k:>2} {eligible:>9} {tight:>6} {str(min_slack):>10}  {example}")


if __name__ == "__main__":
    main()
