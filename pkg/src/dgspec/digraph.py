"""Core directed-graph model: construction, degrees, reversal, weak
connectivity, and the named generators used throughout the package.

Vertices are dense integers 0..n-1.  Arcs are stored as a sorted tuple of
ordered pairs, so a ``Digraph`` is immutable, hashable and cheap to compare;
adjacency structure is materialized lazily.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .errors import BadParameterError, LoopArcError, OutOfRangeError


@dataclass(frozen=True)
class Digraph:
    """Simple digraph: no loops, no parallel arcs, vertices 0..n-1."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    @cached_property
    def _arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    @cached_property
    def _out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices w with an arc v -> w, ascending."""
        self._check_vertex(v)
        return self._out_adj[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices u with an arc u -> v, ascending."""
        self._check_vertex(v)
        return self._in_adj[v]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")


@dataclass(frozen=True)
class DegreeProfile:
    """Out/in degree vectors plus the derived maximum degree and arc count."""

    out_deg: tuple[int, ...]
    in_deg: tuple[int, ...]
    max_deg: int
    arc_count: int


def new_digraph(n: int, arcs) -> Digraph:
    """Build a digraph on n vertices from an iterable of ordered pairs.

    Endpoints must lie in 0..n-1 and loops are refused; repeated pairs
    collapse into the arc set (arcs form a set, not a multiset).
    """
    if n < 0:
        raise BadParameterError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in arcs:
        if not (0 <= u < n) or not (0 <= v < n):
            raise OutOfRangeError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopArcError(f"loop arc ({u}, {v}) not allowed")
        seen.add((int(u), int(v)))
    return Digraph(n, tuple(sorted(seen)))


def degree_profile(G: Digraph) -> DegreeProfile:
    """Per-vertex out/in degrees, the maximum over both, and the arc count."""
    out_deg = [0] * G.n
    in_deg = [0] * G.n
    for u, v in G.arcs:
        out_deg[u] += 1
        in_deg[v] += 1
    max_deg = max(max(out_deg, default=0), max(in_deg, default=0))
    return DegreeProfile(tuple(out_deg), tuple(in_deg), max_deg, len(G.arcs))


def reverse(G: Digraph) -> Digraph:
    """The digraph with every arc direction flipped."""
    return Digraph(G.n, tuple(sorted((v, u) for u, v in G.arcs)))


class UnionFind:
    """Disjoint sets over 0..size-1 with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def weak_components(G: Digraph) -> list[tuple[int, ...]]:
    """Partition the vertices into weakly connected components.

    Components are returned as sorted vertex tuples, ordered by their
    smallest vertex, so the output is deterministic.
    """
    uf = UnionFind(G.n)
    for u, v in G.arcs:
        uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda c: c[0])


def gen_cycle(n: int) -> Digraph:
    """Directed cycle: arcs i -> (i+1 mod n)."""
    if n < 2:
        raise BadParameterError(f"cycle needs at least 2 vertices, got {n}")
    return Digraph(n, tuple(sorted((i, (i + 1) % n) for i in range(n))))


def gen_path(n: int) -> Digraph:
    """Directed path: arcs i -> i+1."""
    if n < 1:
        raise BadParameterError(f"path needs at least 1 vertex, got {n}")
    return Digraph(n, tuple((i, i + 1) for i in range(n - 1)))


def gen_kbip(n: int, m: int) -> Digraph:
    """Complete source-to-sink bipartite digraph: n sources, m sinks, all n*m arcs."""
    if n < 1 or m < 1:
        raise BadParameterError(f"both parts must be nonempty, got ({n}, {m})")
    return Digraph(n + m, tuple((i, n + j) for i in range(n) for j in range(m)))


def gen_random(n: int, p: float, seed: int) -> Digraph:
    """Include each ordered pair (u, v), u != v, independently with probability p.

    Pairs are drawn in lexicographic order from ``random.Random(seed)``, so
    the result is bitwise reproducible for a fixed seed.
    """
    if n < 0:
        raise BadParameterError(f"vertex count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise BadParameterError(f"arc probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    arcs = tuple(
        (u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p
    )
    return Digraph(n, arcs)


def disjoint_union(*graphs: Digraph) -> Digraph:
    """Place the given digraphs side by side on a shifted common vertex range."""
    arcs: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        arcs.extend((u + offset, v + offset) for u, v in g.arcs)
        offset += g.n
    return Digraph(offset, tuple(sorted(arcs)))
