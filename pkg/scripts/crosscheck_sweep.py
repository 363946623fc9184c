"""Oracle vs closed form over small family instances; one line per (graph, r)."""

import argparse
import sys
import time

from betti_forge.cli import run_crosscheck


def specs(max_vertices):
    for n in range(1, max_vertices + 1):
        yield f"complete:{n}"
        yield f"empty:{n}"
        for a in range(1, n // 2 + 1):
            yield f"multipartite:{n - a},{a}"
    for n in range(1, max_vertices):
        yield f"star:{n}"
    for n in range(3, max_vertices + 1):
        yield f"cycle:{n}"
    for n in range(4, max_vertices + 1):
        yield f"wheel:{n}"
    for a in range(3, max_vertices - 2):
        yield f"join(path:{a}, cycle:{min(max_vertices - a, 5)})"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=9)
    ap.add_argument("--r", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    statuses = {}
    for spec in specs(args.max_vertices):
        for r in args.r:
            rep = run_crosscheck(spec, r, threads=args.threads)
            statuses[rep.status] = statuses.get(rep.status, 0) + 1
            print("\n".join(rep.lines()))
    print(f"\n{statuses} in {time.perf_counter() - start:.1f} s")
    return 3 if statuses.get("MISMATCH") else 0


if __name__ == "__main__":
    sys.exit(main())
