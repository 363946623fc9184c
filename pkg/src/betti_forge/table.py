"""Sparse N-graded Betti tables of R/I_r(G), with text and json rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

METHODS = ("oracle", "closed_form", "join_composition")


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j} for a quotient R/I with I generated in degree r+1.

    ``entries`` maps (i, j) to a positive integer; lookups of absent or
    out-of-range indices return 0.
    """

    ambient_n: int
    r: int
    entries: Mapping[tuple[int, int], int]
    field: str = "formula"
    method: str = "closed_form"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        entries = {}
        for (i, j), v in self.entries.items():
            if v == 0:
                continue
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}: {v}")
            if (i, j) == (0, 0):
                if v != 1:
                    raise ValueError(f"beta_(0,0) must be 1, got {v}")
            elif i < 1 or j < i + self.r or i > self.ambient_n or j > self.ambient_n:
                raise ValueError(f"entry {(i, j)} impossible for r={self.r}, n={self.ambient_n}")
            entries[(i, j)] = int(v)
        entries[(0, 0)] = 1
        object.__setattr__(self, "entries", dict(sorted(entries.items())))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def strand(self, i: int, d: int) -> int:
        return self.entries.get((i, i + d), 0)

    def __len__(self):
        return len(self.entries)

    def with_meta(self, **kw) -> BettiTable:
        args = dict(ambient_n=self.ambient_n, r=self.r, entries=self.entries,
                    field=self.field, method=self.method)
        args.update(kw)
        return BettiTable(**args)


def trivial_table(n: int, r: int, **kw) -> BettiTable:
    """Table of R/0: only beta_{0,0} = 1."""
    return BettiTable(n, r, {}, **kw)


def regularity(t: BettiTable) -> int:
    return max(j - i for i, j in t.entries)


def projective_dimension(t: BettiTable) -> int:
    return max(i for i, _ in t.entries)


def table_diff(a: BettiTable, b: BettiTable) -> list[tuple[tuple[int, int], int, int]]:
    keys = sorted(set(a.entries) | set(b.entries))
    return [(k, a[k], b[k]) for k in keys if a[k] != b[k]]


# -- rendering -----------------------------------------------------------------

def render_text(t: BettiTable) -> str:
    """Betti diagram: columns i = 0..pd, rows d = j - i = 0..reg, zeros as '.'."""
    pd, reg = projective_dimension(t), regularity(t)
    cells = [[str(t.strand(i, d)) if t.strand(i, d) else "." for i in range(pd + 1)]
             for d in range(reg + 1)]
    header = [str(i) for i in range(pd + 1)]
    widths = [max(len(header[i]), *(len(row[i]) for row in cells)) for i in range(pd + 1)]
    label_w = len(f"{reg}:")
    lines = [" " * label_w + " " + " ".join(h.rjust(w) for h, w in zip(header, widths))]
    for d, row in enumerate(cells):
        lines.append(f"{d}:".rjust(label_w) + " " + " ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def to_json_obj(t: BettiTable) -> dict:
    return {
        "ambient_n": t.ambient_n,
        "r": t.r,
        "method": t.method,
        "field": t.field,
        "entries": [{"i": i, "j": j, "value": str(v)} for (i, j), v in t.entries.items()],
    }


def render_json(t: BettiTable) -> str:
    return json.dumps(to_json_obj(t), indent=2) + "\n"


def render_table(t: BettiTable, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(t)
    if fmt == "json":
        return render_json(t)
    raise ValueError(f"unknown format {fmt!r}")


def from_json(text: str) -> BettiTable:
    obj = json.loads(text)
    entries = {(int(e["i"]), int(e["j"])): int(e["value"]) for e in obj["entries"]}
    return BettiTable(int(obj["ambient_n"]), int(obj["r"]), entries,
                      field=obj["field"], method=obj["method"])
