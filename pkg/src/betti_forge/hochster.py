"""Brute-force Betti tables of R/I_r(G) from Hochster's formula.

beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Ind_r(G)[W]); every subset W
of the vertex set is visited, so this is exponential in |V(G)|.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .complex import ind_r
from .errors import OracleCapExceeded
from .graph import Graph, induced_subgraph, mask_of, vertices_of
from .homology import QQ, FieldSpec, reduced_betti_numbers
from .table import BettiTable, projective_dimension, regularity  # noqa: F401

DEFAULT_CAP = 14


def default_threads() -> int:
    env = os.environ.get("BETTI_FORGE_THREADS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def subsets_in_order(n: int):
    """All masks over 0..n-1 by increasing popcount, lexicographic within a size."""
    for k in range(n + 1):
        for c in combinations(range(n), k):
            yield mask_of(c)


def subset_contributions(g: Graph, r: int, field: FieldSpec, w: int, cache: dict | None = None) -> dict[int, int]:
    """{d: dim H~_{d-1}(Ind_r(g)[W])} for r <= d <= |W|, nonzero values only."""
    size = w.bit_count()
    if size < r:
        return {}
    sub = induced_subgraph(g, vertices_of(w))
    key = sub
    if cache is not None and key in cache:
        return cache[key]
    c = ind_r(sub, r)
    if c.cone_apex() is not None:
        dims = {}
    else:
        h = reduced_betti_numbers(c, field, range(r - 1, size))
        dims = {k + 1: v for k, v in h.items() if v}
    if cache is not None:
        cache[key] = dims
    return dims


def _accumulate(g: Graph, r: int, field: FieldSpec, masks: list[int]) -> Counter:
    cache: dict = {}
    acc: Counter = Counter()
    for w in masks:
        size = w.bit_count()
        for d, v in subset_contributions(g, r, field, w, cache).items():
            acc[(size - d, size)] += v
    return acc


def _chunks(items: list, parts: int) -> list[list]:
    step = -(-len(items) // parts)
    return [items[i:i + step] for i in range(0, len(items), step)]


def betti_hochster(g: Graph, r: int, field: FieldSpec = QQ, *, cap: int = DEFAULT_CAP,
                   force: bool = False, threads: int = 1) -> BettiTable:
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    if g.n > cap and not force:
        raise OracleCapExceeded(f"graph has {g.n} vertices, oracle cap is {cap}; pass force=True (--force) to run anyway")
    masks = list(subsets_in_order(g.n))
    if threads <= 1:
        acc = _accumulate(g, r, field, masks)
    else:
        acc = Counter()
        chunks = _chunks(masks, 4 * threads)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_accumulate, g, r, field, ch) for ch in chunks]
            for fut in futures:
                acc.update(fut.result())
    return BettiTable(g.n, r, dict(acc), field=field.label, method="oracle")
