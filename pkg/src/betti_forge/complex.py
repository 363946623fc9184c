"""Abstract simplicial complexes stored by facets, and the r-independence complex.

Faces are bitmasks over the ground set 0..n-1. The void complex (no faces)
has an empty facet set; the complex {emptyset} has the single facet 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import Graph, component_mask, mask_is_connected, mask_of, vertices_of

Face = tuple[int, ...]


def _maximal(masks: Iterable[int]) -> frozenset[int]:
    # largest first, so anything already kept is at least as big
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    ground_set: int
    facets: frozenset[int]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    def __post_init__(self):
        full = (1 << self.ground_set) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError(f"facet {vertices_of(f)} leaves the ground set 0..{self.ground_set - 1}")
        if _maximal(self.facets) != self.facets:
            raise ValueError("facet list is not an antichain; use SimplicialComplex.generated")

    @classmethod
    def generated(cls, ground_set: int, faces: Iterable[int | Iterable[int]]) -> SimplicialComplex:
        """Complex generated by the given faces (masks or vertex iterables)."""
        masks = [f if isinstance(f, int) else mask_of(f) for f in faces]
        return cls(ground_set, _maximal(masks))

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, frozenset([(1 << n) - 1]))

    @classmethod
    def void(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, frozenset())

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def contains(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def facet_list(self) -> list[Face]:
        return sorted(tuple(vertices_of(f)) for f in self.facets)

    def _set_cache_by_size(self, by_size: dict[int, list[int]]):
        with self._lock:
            for size, masks in by_size.items():
                self._cache.setdefault(size, sorted(masks, key=lambda m: vertices_of(m)))

    def face_masks(self, k: int) -> list[int]:
        """k-dimensional faces as masks, in lexicographic order of their vertex tuples."""
        size = k + 1
        if size < 0:
            return []
        with self._lock:
            cached = self._cache.get(size)
        if cached is not None:
            return cached
        found = set()
        for f in self.facets:
            if f.bit_count() >= size:
                found.update(mask_of(c) for c in combinations(vertices_of(f), size))
        out = sorted(found, key=vertices_of)
        with self._lock:
            self._cache.setdefault(size, out)
        return out

    def f_vector(self) -> list[int]:
        """[f_-1, f_0, ..., f_dim]; empty for the void complex."""
        if self.is_void:
            return []
        return [len(self.face_masks(k)) for k in range(-1, self.dim + 1)]

    def all_faces(self) -> set[int]:
        if self.is_void:
            return set()
        return {m for k in range(-1, self.dim + 1) for m in self.face_masks(k)}

    def cone_apex(self) -> int | None:
        """A vertex lying in every facet, if one exists (then the complex is a cone)."""
        if self.is_void:
            return None
        common = (1 << self.ground_set) - 1
        for f in self.facets:
            common &= f
        if not common:
            return None
        return (common & -common).bit_length() - 1


def faces_of_dim(c: SimplicialComplex, k: int) -> list[Face]:
    return [tuple(vertices_of(m)) for m in c.face_masks(k)]


def induced_subcomplex(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    vs = sorted(set(w))
    for v in vs:
        if not 0 <= v < c.ground_set:
            raise ValueError(f"vertex {v} out of range for ground set of size {c.ground_set}")
    if c.is_void:
        return SimplicialComplex.void(len(vs))
    wmask = mask_of(vs)
    relabeled = []
    for f in c.facets:
        part = f & wmask
        relabeled.append(mask_of(i for i, v in enumerate(vs) if part >> v & 1))
    return SimplicialComplex.generated(len(vs), relabeled)


def skeleton(c: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < -1:
        raise ValueError("skeleton dimension must be >= -1")
    if c.is_void:
        return c
    size = k + 1
    gens = []
    for f in c.facets:
        if f.bit_count() <= size:
            gens.append(f)
        else:
            gens.extend(mask_of(s) for s in combinations(vertices_of(f), size))
    return SimplicialComplex.generated(c.ground_set, gens)


# -- hypergraphs and the r-independence complex ------------------------------

@dataclass(frozen=True)
class Hypergraph:
    ground_set: int
    hyperedges: frozenset[int]

    def __post_init__(self):
        full = (1 << self.ground_set) - 1
        for e in self.hyperedges:
            if e & ~full:
                raise ValueError(f"hyperedge {vertices_of(e)} leaves the ground set")
            if e.bit_count() < 2:
                raise ValueError(f"hyperedge {vertices_of(e)} has fewer than 2 vertices")
        for a in self.hyperedges:
            for b in self.hyperedges:
                if a != b and a & b == a:
                    raise ValueError("hyperedges must be pairwise incomparable")

    def edge_list(self) -> list[Face]:
        return sorted(tuple(vertices_of(e)) for e in self.hyperedges)


def _check_r(r: int):
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")


def con_r(g: Graph, r: int) -> Hypergraph:
    """(r+1)-subsets of V(g) inducing a connected subgraph."""
    _check_r(r)
    edges = frozenset(
        m for m in (mask_of(c) for c in combinations(range(g.n), r + 1))
        if mask_is_connected(g, m)
    )
    return Hypergraph(g.n, edges)


def is_r_independent(g: Graph, mask: int, r: int) -> bool:
    remaining = mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g, start, mask)
        if comp.bit_count() > r:
            return False
        remaining &= ~comp
    return True


def r_independent_sets(g: Graph, r: int) -> list[int]:
    """All r-independent vertex subsets of g, as masks.

    Depth-first extension by increasing vertex; the property is hereditary so
    every face is reached exactly once through its sorted prefix chain.
    """
    _check_r(r)
    out = [0]
    stack = [(0, 0)]
    adj = g.adj
    while stack:
        face, nxt = stack.pop()
        for v in range(nxt, g.n):
            bigger = face | (1 << v)
            # only the component of v can have grown
            if adj[v] & face and component_mask(g, v, bigger).bit_count() > r:
                continue
            out.append(bigger)
            stack.append((bigger, v + 1))
    return out


def ind_r(g: Graph, r: int) -> SimplicialComplex:
    faces = r_independent_sets(g, r)
    face_set = set(faces)
    by_size: dict[int, list[int]] = {}
    facets = []
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
        if not any(not f >> v & 1 and (f | 1 << v) in face_set for v in range(g.n)):
            facets.append(f)
    c = SimplicialComplex(g.n, frozenset(facets))
    c._set_cache_by_size(by_size)
    return c


def minimal_nonfaces(c: SimplicialComplex) -> set[int]:
    """Minimal vertex subsets of the ground set that are not faces (brute force)."""
    faces = c.all_faces()
    out = set()
    for m in range(1 << c.ground_set):
        if m in faces:
            continue
        if all((m & ~(1 << v)) in faces for v in vertices_of(m)):
            out.add(m)
    return out
