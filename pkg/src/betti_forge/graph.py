"""Finite simple graphs on vertices 0..n-1, standard families and the graph join.

Vertex subsets are passed around as Python ints used as bitmasks
(bit v set <=> vertex v in the subset).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_VERTICES = 63

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        if self.n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {self.n}")
        adj = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {(u, v)} is not normalized or out of range for n={self.n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, normalizing each edge to (min, max) and dropping duplicates."""
    normalized = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < n:
                raise ValueError(f"endpoint {x} out of range for n={n}")
        normalized.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(normalized))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex map v -> perm[v] (perm must be a permutation)."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    return make_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Join of g1 and g2; g2's vertices are shifted by g1.n."""
    off = g1.n
    edges = set(g1.edges)
    edges.update((u + off, v + off) for u, v in g2.edges)
    edges.update((u, v + off) for u in range(g1.n) for v in range(g2.n))
    return Graph(g1.n + g2.n, frozenset(edges))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = set(g1.edges)
    edges.update((u + off, v + off) for u, v in g2.edges)
    return Graph(g1.n + g2.n, frozenset(edges))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on `vertices`, relabeled 0..k-1 in increasing vertex order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    edges = frozenset((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph(len(vs), edges)


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, vertices_of(mask))


def component_mask(g: Graph, start: int, within: int) -> int:
    """Vertices of the component of g[within] containing `start` (a bitmask)."""
    adj = g.adj
    seen = 1 << start
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nbrs = adj[low.bit_length() - 1] & within & ~seen
        seen |= nbrs
        frontier |= nbrs
    return seen


def mask_is_connected(g: Graph, mask: int) -> bool:
    if mask & (mask - 1) == 0:
        return True
    start = (mask & -mask).bit_length() - 1
    return component_mask(g, start, mask) == mask


def is_connected(g: Graph) -> bool:
    return mask_is_connected(g, g.full_mask)


def connected_components(g: Graph) -> list[list[int]]:
    remaining = g.full_mask
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g, start, remaining)
        comps.append(vertices_of(comp))
        remaining &= ~comp
    return comps


# -- families -----------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("empty graph needs n >= 0")
    return Graph(n, frozenset())


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, frozenset((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return make_graph(n, [(v, (v + 1) % n) for v in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: hub 0 joined to leaves 1..n."""
    if n < 1:
        raise ValueError("star needs n >= 1 leaves")
    return join(complete(1), empty(n))


def wheel(n_plus_1: int) -> Graph:
    """W_{n+1} = C_n * K_1, the hub is the last vertex."""
    if n_plus_1 < 4:
        raise ValueError("wheel needs at least 4 vertices")
    return join(cycle(n_plus_1 - 1), complete(1))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise ValueError("complete multipartite graph needs at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"every part must have size >= 1, got {list(parts)}")
    g = empty(parts[0])
    for p in parts[1:]:
        g = join(g, empty(p))
    return g
