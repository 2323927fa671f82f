"""Structural classifiers for the two bound-equality cases.

A *splitting* covers the arcs of G by arc-disjoint sink-source digraphs
(every vertex of a part only emits or only receives) such that a part using
any of a vertex's out-arcs uses all of them, and likewise for in-arcs.
Parts may share vertices.

The lower bound 2R(G) is attained exactly when G splits into parts that are
each complete from their sources to their sinks; the upper bound
2 sqrt(max_degree) R(G) is attained exactly when G is a disjoint union of
directed paths, directed cycles and isolated vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .digraph import Digraph, UnionFind, degree_profile, weak_components


class ComponentTag(enum.Enum):
    ISOLATED_VERTEX = "isolated_vertex"
    DIRECTED_PATH = "directed_path"
    DIRECTED_CYCLE = "directed_cycle"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentKind:
    """Shape of one weak component; vertices realize the path/cycle order."""

    tag: ComponentTag
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class SplitPart:
    """One sink-source piece of a splitting."""

    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Splitting:
    parts: tuple[SplitPart, ...]


def is_sink(G: Digraph, v: int) -> bool:
    """A vertex with no outgoing arcs."""
    return len(G.out_neighbors(v)) == 0


def is_source(G: Digraph, v: int) -> bool:
    """A vertex with no incoming arcs."""
    return len(G.in_neighbors(v)) == 0


def is_sink_source(G: Digraph) -> bool:
    """True iff every vertex is a sink or a source (isolated counts as both)."""
    return all(is_sink(G, v) or is_source(G, v) for v in range(G.n))


def find_splitting(G: Digraph) -> Splitting | None:
    """The finest splitting of G into sink-source digraphs, or None.

    Any part containing an arc (u, v) must absorb u's whole out-star and
    v's whole in-star, so parts are forced to be the weakly connected
    components of the bipartite double pulled back to G: a component's
    minus copies become the part's sources, its plus copies the sinks.
    A splitting exists iff no component of the double contains both
    copies of one vertex (both non-isolated).
    """
    deg = degree_profile(G)
    uf = UnionFind(2 * G.n)
    for u, v in G.arcs:
        uf.union(u, G.n + v)
    for i in range(G.n):
        if deg.out_deg[i] and deg.in_deg[i] and uf.find(i) == uf.find(G.n + i):
            return None
    grouped: dict[int, list[tuple[int, int]]] = {}
    for u, v in G.arcs:
        grouped.setdefault(uf.find(u), []).append((u, v))
    parts = []
    for arcs in grouped.values():
        sources = tuple(sorted({u for u, _ in arcs}))
        sinks = tuple(sorted({v for _, v in arcs}))
        parts.append(SplitPart(sources, sinks, tuple(sorted(arcs))))
    parts.sort(key=lambda p: p.sources[0])
    return Splitting(tuple(parts))


def verify_splitting(G: Digraph, splitting: Splitting) -> bool:
    """Re-check the splitting invariants from scratch.

    Arc sets must partition the arcs of G; inside a part every arc must run
    from a labeled source to a labeled sink with no vertex both emitting
    and receiving; and a vertex with any out-arcs (in-arcs) in a part must
    have all of its out-arcs (in-arcs) there.
    """
    deg = degree_profile(G)
    covered: list[tuple[int, int]] = []
    for part in splitting.parts:
        sources, sinks = set(part.sources), set(part.sinks)
        out_here: dict[int, int] = {}
        in_here: dict[int, int] = {}
        for u, v in part.arcs:
            if u not in sources or v not in sinks:
                return False
            out_here[u] = out_here.get(u, 0) + 1
            in_here[v] = in_here.get(v, 0) + 1
        if set(out_here) & set(in_here):
            return False
        if any(deg.out_deg[u] != d for u, d in out_here.items()):
            return False
        if any(deg.in_deg[v] != d for v, d in in_here.items()):
            return False
        covered.extend(part.arcs)
    return len(covered) == len(set(covered)) and set(covered) == set(G.arcs)


def classify_lower_equality(G: Digraph) -> Splitting | None:
    """Witness splitting when E(G) = 2R(G), else None.

    Equality holds exactly when G splits into parts that are complete from
    sources to sinks, i.e. every part has |sources| * |sinks| arcs.
    """
    splitting = find_splitting(G)
    if splitting is None:
        return None
    for part in splitting.parts:
        if len(part.arcs) != len(part.sources) * len(part.sinks):
            return None
    return splitting


def classify_component(G: Digraph, vertices) -> ComponentKind:
    """Recognize one weak component as isolated vertex, path, cycle or other.

    With all in- and out-degrees at most 1 a weakly connected component is
    forced to be a directed path (walk from the unique in-degree-0 vertex)
    or a directed cycle (walk until the start returns).
    """
    verts = sorted(set(vertices))
    vset = set(verts)
    arcs = [(u, v) for u, v in G.arcs if u in vset and v in vset]
    if len(verts) == 1 and not arcs:
        return ComponentKind(ComponentTag.ISOLATED_VERTEX, (verts[0],))
    succ: dict[int, list[int]] = {v: [] for v in verts}
    in_deg: dict[int, int] = {v: 0 for v in verts}
    for u, v in arcs:
        succ[u].append(v)
        in_deg[v] += 1
    if any(len(succ[v]) > 1 or in_deg[v] > 1 for v in verts):
        return ComponentKind(ComponentTag.OTHER, tuple(verts))
    starts = [v for v in verts if in_deg[v] == 0]
    if starts:
        order = [starts[0]]
        while succ[order[-1]]:
            order.append(succ[order[-1]][0])
        if len(order) == len(verts) and len(arcs) == len(verts) - 1:
            return ComponentKind(ComponentTag.DIRECTED_PATH, tuple(order))
        return ComponentKind(ComponentTag.OTHER, tuple(verts))
    # no start vertex: every degree is exactly 1, walk closes a cycle
    order = [verts[0]]
    while succ[order[-1]]:
        nxt = succ[order[-1]][0]
        if nxt == order[0]:
            break
        order.append(nxt)
    if len(order) == len(verts) and len(arcs) == len(verts):
        return ComponentKind(ComponentTag.DIRECTED_CYCLE, tuple(order))
    return ComponentKind(ComponentTag.OTHER, tuple(verts))


def classify_upper_equality(G: Digraph) -> list[ComponentKind] | None:
    """Per-component classification when E(G) = 2 sqrt(max_degree) R(G).

    Equality holds exactly when every in- and out-degree is at most 1; the
    components are then paths, cycles and isolated vertices, never Other.
    Returns None when some degree is 2 or more.
    """
    deg = degree_profile(G)
    if any(d > 1 for d in deg.out_deg) or any(d > 1 for d in deg.in_deg):
        return None
    return [classify_component(G, comp) for comp in weak_components(G)]
