"""Closed-form Betti tables of R/I_r(G) for joins and standard graph families.

All arithmetic is exact (Python ints, Fraction only where a quotient must be
checked for integrality).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .table import BettiTable


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 whenever k < 0, n < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _strand(t: BettiTable, i: int, d: int) -> int:
    return t.strand(i, d) if i >= 0 else 0


def join_bracket(i: int, d: int, j: int) -> int:
    """C(i+d-1, d) - C(i+d-1-j, d) - C(j-1, d): the mixed-subset term of the linear strand."""
    return binomial(i + d - 1, d) - binomial(i + d - 1 - j, d) - binomial(j - 1, d)


def betti_join(t1: BettiTable, n: int, t2: BettiTable, m: int, r: int) -> BettiTable:
    """Table of the join G1 * G2 from the tables of G1 (n vertices) and G2 (m vertices)."""
    if t1.r != r or t2.r != r:
        raise ValueError(f"tables computed for r={t1.r} and r={t2.r}, expected r={r}")
    if t1.ambient_n != n or t2.ambient_n != m:
        raise ValueError(f"ambient sizes {t1.ambient_n}, {t2.ambient_n} do not match n={n}, m={m}")
    total = n + m
    entries = {}
    for i in range(1, total + 1):
        for d in range(r, total - i + 1):
            s = 0
            for j in range(i + d):
                s += binomial(m, j) * _strand(t1, i - j, d) + binomial(n, j) * _strand(t2, i - j, d)
            if d == r:
                for j in range(1, i + r):
                    s += join_bracket(i, r, j) * binomial(m, j) * binomial(n, i + r - j)
            if s:
                entries[(i, i + d)] = s
    return BettiTable(total, r, entries, method="join_composition")


def reg_join(reg1: int, reg2: int) -> int:
    return max(reg1, reg2)


def betti_complete(n: int, r: int) -> BettiTable:
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    entries = {(i, i + r): binomial(i + r - 1, r) * binomial(n, i + r) for i in range(1, n - r + 1)}
    return BettiTable(n, r, entries)


def _compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Tuples (j_1..j_t) of nonnegative ints with sum `total` and j_s <= caps[s]."""
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    rest = sum(caps[1:])
    for j in range(max(0, total - rest), min(caps[0], total) + 1):
        for tail in _compositions(total - j, caps[1:]):
            yield (j,) + tail


def betti_multipartite(parts: Sequence[int], r: int) -> BettiTable:
    if not parts:
        raise ValueError("complete multipartite graph needs at least one part")
    if any(p < 1 for p in parts) or r < 1:
        raise ValueError("need every part >= 1 and r >= 1")
    total = sum(parts)
    entries = {}
    for i in range(1, total + 1):
        k = i + r
        value = binomial(total, k) * binomial(k - 1, r)
        for js in _compositions(k, parts):
            prod = 1
            for n_s, j_s in zip(parts, js):
                prod *= binomial(n_s, j_s)
            value -= prod * sum(binomial(j_s - 1, r) for j_s in js)
        if value > 0:
            entries[(i, k)] = value
        elif value < 0:
            raise ArithmeticError(f"negative multipartite Betti number at i={i}: {value}")
    return BettiTable(total, r, entries)


def betti_star(n: int, r: int) -> BettiTable:
    """K_{1,n}: n leaves, n + 1 variables."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 leaves and r >= 1")
    entries = {(i, i + r): binomial(i + r - 2, r - 1) * binomial(n, i + r - 1)
               for i in range(1, n - r + 2)}
    return BettiTable(n + 1, r, entries)


@dataclass(frozen=True)
class CycleParams:
    """n = (r+2) p + q with 0 <= q <= r+1."""

    n: int
    r: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or not 0 <= self.q <= self.r + 1 or self.n != (self.r + 2) * self.p + self.q:
            raise ValueError(f"inconsistent cycle parameters {self}")


def cycle_params(n: int, r: int) -> CycleParams:
    if n < 3 or not 1 <= r <= n - 1:
        raise ValueError(f"cycle formulas need n >= 3 and 1 <= r <= n-1, got n={n}, r={r}")
    p, q = divmod(n, r + 2)
    return CycleParams(n, r, p, q)


def betti_cycle(n: int, r: int) -> BettiTable:
    cp = cycle_params(n, r)
    p, q = cp.p, cp.q
    entries = {}
    if q == 0:
        entries[(2 * p, n)] = r + 1
    else:
        entries[(2 * p + 1, n)] = 1
    # nonzero strands only at d = l*r
    for ell in range(1, p + 1):
        d = ell * r
        rest = n - ell * (r + 1)
        if rest <= 0:
            raise ArithmeticError(f"singular strand coefficient at n={n}, r={r}, l={ell}")
        for i in range(ell, 2 * ell + 1):
            if i >= n - d:
                continue
            value = Fraction(n, rest) * binomial(ell, i - ell) * binomial(rest, ell)
            if value.denominator != 1:
                raise ArithmeticError(f"non-integral cycle Betti number {value} at i={i}, d={d}")
            if (i, i + d) in entries:
                raise ArithmeticError(f"cycle strand overlaps the top entry at {(i, i + d)}")
            if value:
                entries[(i, i + d)] = int(value)
    return BettiTable(n, r, entries)


def betti_wheel(n_plus_1: int, r: int) -> BettiTable:
    n = n_plus_1 - 1
    if n_plus_1 < 4 or not 1 <= r <= n - 1:
        raise ValueError(f"wheel formulas need n+1 >= 4 and 1 <= r <= n-1, got n+1={n_plus_1}, r={r}")
    cyc = betti_cycle(n, r)
    entries = {}
    for i in range(1, n_plus_1 + 1):
        for d in range(r, n_plus_1 - i + 1):
            value = _strand(cyc, i, d) + _strand(cyc, i - 1, d)
            if d == r:
                value += binomial(i + d - 2, d - 1) * binomial(n, i + d - 1)
            if value:
                entries[(i, i + d)] = value
    return BettiTable(n_plus_1, r, entries)


def reg_cycle(n: int, r: int) -> int:
    cp = cycle_params(n, r)
    return r * cp.p + cp.q - 1 if cp.q else r * cp.p


def reg_wheel(n_plus_1: int, r: int) -> int:
    if n_plus_1 < 4 or not 1 <= r <= n_plus_1 - 2:
        raise ValueError(f"wheel formulas need n+1 >= 4 and 1 <= r <= n-1, got n+1={n_plus_1}, r={r}")
    return reg_cycle(n_plus_1 - 1, r)
