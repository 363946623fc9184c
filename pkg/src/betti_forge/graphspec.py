"""Graph descriptions for the command line: family specs, joins and edge-list files.

Grammar (whitespace-insensitive, family names case-insensitive)::

    spec   := family ":" args | "join(" spec "," spec ")" | "file:" PATH
    family := complete | empty | path | cycle | star | wheel | multipartite
    args   := INT ("," INT)*        # more than one only for multipartite
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import graph as G
from .graph import Graph, make_graph

FAMILIES = {
    "complete": G.complete,
    "empty": G.empty,
    "path": G.path,
    "cycle": G.cycle,
    "star": G.star,
    "wheel": G.wheel,
}


class SpecError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    args: tuple[int, ...]

    def build(self) -> Graph:
        if self.name == "multipartite":
            return G.complete_multipartite(list(self.args))
        return FAMILIES[self.name](self.args[0])

    def __str__(self):
        return f"{self.name}:{','.join(map(str, self.args))}"


@dataclass(frozen=True)
class JoinSpec:
    left: GraphSpec
    right: GraphSpec

    def build(self) -> Graph:
        return G.join(self.left.build(), self.right.build())

    def __str__(self):
        return f"join({self.left}, {self.right})"


@dataclass(frozen=True)
class FileSpec:
    path: str

    def build(self) -> Graph:
        return load_edge_list(self.path)

    def __str__(self):
        return f"file:{self.path}"


GraphSpec = FamilySpec | JoinSpec | FileSpec


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise SpecError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            raise SpecError("expected a family name, 'join' or 'file'", start)
        return self.text[start:self.pos].lower()

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecError("expected a nonnegative integer", start)
        return int(self.text[start:self.pos])

    def spec(self, nested: bool) -> GraphSpec:
        start = self.pos
        name = self.word()
        if name == "join":
            self.expect("(")
            left = self.spec(nested=True)
            self.expect(",")
            right = self.spec(nested=True)
            self.expect(")")
            return JoinSpec(left, right)
        self.expect(":")
        if name == "file":
            stop = len(self.text)
            if nested:
                stops = [i for i in (self.text.find(",", self.pos), self.text.find(")", self.pos)) if i >= 0]
                stop = min(stops, default=stop)
            path = self.text[self.pos:stop].strip()
            if not path:
                raise SpecError("empty file path", self.pos)
            self.pos = stop
            return FileSpec(path)
        if name != "multipartite" and name not in FAMILIES:
            raise SpecError(f"unknown graph family {name!r}", start)
        args = [self.integer()]
        if name == "multipartite":
            # a comma followed by a digit continues the part list; otherwise it belongs to join
            while self.peek() == ",":
                save = self.pos
                self.pos += 1
                if self.peek().isdigit():
                    args.append(self.integer())
                else:
                    self.pos = save
                    break
        fam = FamilySpec(name, tuple(args))
        try:
            fam.build()
        except ValueError as e:
            raise SpecError(f"{fam}: {e}", start) from None
        return fam


def parse_spec(text: str) -> GraphSpec:
    p = _Parser(text)
    spec = p.spec(nested=False)
    if p.peek():
        raise SpecError(f"unexpected trailing input {p.text[p.pos:]!r}", p.pos)
    return spec


def load_edge_list(path: str | Path) -> Graph:
    """Read ``n m`` then m lines ``u v`` (0-indexed); blank and ``#`` lines are skipped."""
    header = None
    pairs = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise EdgeListError(f"expected two integers, got {line!r}", lineno)
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListError(f"expected two integers, got {line!r}", lineno) from None
            if header is None:
                if a < 0 or b < 0:
                    raise EdgeListError("vertex and edge counts must be nonnegative", lineno)
                header = (a, b)
                continue
            n = header[0]
            if a == b:
                raise EdgeListError(f"loop at vertex {a}", lineno)
            for x in (a, b):
                if not 0 <= x < n:
                    raise EdgeListError(f"endpoint {x} out of range for n={n}", lineno)
            pairs.append((a, b))
    if header is None:
        raise EdgeListError("missing 'n m' header line")
    if len(pairs) != header[1]:
        raise EdgeListError(f"header promises {header[1]} edges, found {len(pairs)}")
    return make_graph(header[0], pairs)
