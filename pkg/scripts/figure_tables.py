"""Print the K6 and K6,6 tables at r=3, by closed form and by the oracle."""

import argparse
import time

from betti_forge import formulas as F
from betti_forge import graph as G
from betti_forge.hochster import betti_hochster
from betti_forge.table import render_table, table_diff


def show(label, closed, g, r, fmt):
    start = time.perf_counter()
    oracle = betti_hochster(g, r)
    elapsed = time.perf_counter() - start
    print(f"== {label}, r={r}")
    print(render_table(closed, fmt), end="")
    diffs = table_diff(closed, oracle)
    print(f"oracle ({elapsed:.2f} s): {'agrees' if not diffs else f'{len(diffs)} differences'}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    args = ap.parse_args()
    show("K6", F.betti_complete(6, 3), G.complete(6), 3, args.format)
    show("K6,6", F.betti_multipartite([6, 6], 3), G.complete_multipartite([6, 6]), 3, args.format)


if __name__ == "__main__":
    main()
