"""Intersection graphs of intervals and disks, and the graph properties.

The graph is simple and undirected: vertex i <-> object i, edge (i, j) iff the
open objects intersect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Sequence

from .geometry import Disk, Interval, disks_intersect, intervals_intersect, sort_intervals

DISK_CLIQUE_CAP = 25


@dataclass
class IntersectionGraph:
    vertex_count: int
    edges: list[tuple[int, int]]
    source: str = "intervals"  # "intervals" | "disks"
    adj: list[set[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.adj:
            self.adj = [set() for _ in range(self.vertex_count)]
            for u, v in self.edges:
                self.adj[u].add(v)
                self.adj[v].add(u)


def build_graph(objects: Sequence) -> IntersectionGraph:
    """Intersection graph of a collection of Intervals or Disks.

    Interval collections use an endpoint sweep (O(n log n + |E|)); disks use
    the quadratic pairwise test (desk scale only).
    """
    items = list(objects)
    if not items:
        return IntersectionGraph(0, [])
    if isinstance(items[0], Interval):
        return _build_interval_graph(items)
    if isinstance(items[0], Disk):
        edges = [
            (i, j)
            for i in range(len(items))
            for j in range(i + 1, len(items))
            if disks_intersect(items[i], items[j])
        ]
        return IntersectionGraph(len(items), edges, source="disks")
    raise TypeError(f"cannot build a graph from {type(items[0]).__name__}")


def _build_interval_graph(items: list[Interval]) -> IntersectionGraph:
    order = sorted(range(len(items)), key=lambda i: (items[i].left, items[i].id))
    edges: list[tuple[int, int]] = []
    active: list[tuple] = []  # heap of (right, index)
    for idx in order:
        iv = items[idx]
        # open semantics: an active interval whose right endpoint is <= our
        # left endpoint only touches us, so drop it.
        while active and active[0][0] <= iv.left:
            heappop(active)
        for _, j in active:
            a, b = (j, idx) if j < idx else (idx, j)
            edges.append((a, b))
        heappush(active, (iv.right, idx))
    return IntersectionGraph(len(items), edges, source="intervals")


def is_edgeless(g: IntersectionGraph) -> bool:
    return not g.edges


def is_acyclic(g: IntersectionGraph) -> bool:
    """Generic cycle check via union-find (valid for any intersection graph)."""
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def max_clique_interval(sorted_items: Sequence[Interval]) -> int:
    """Maximum clique of an interval graph: max open-interval overlap count."""
    items = list(sorted_items)
    if not all(items[i].center <= items[i + 1].center for i in range(len(items) - 1)):
        raise ValueError("max_clique_interval requires a center-sorted collection")
    if not items:
        return 0
    events = []
    for iv in items:
        events.append((iv.left, 1))
        events.append((iv.right, 0))
    # at a shared coordinate, close (0) before open (1): touching open
    # intervals do not intersect.
    events.sort()
    best = cur = 0
    for _, kind in events:
        if kind == 1:
            cur += 1
            best = max(best, cur)
        else:
            cur -= 1
    return best


def has_k_clique(g: IntersectionGraph, k: int, sorted_intervals: Sequence[Interval] | None = None) -> bool:
    """True iff the graph contains a k-clique.

    Interval sources use the overlap sweep; disk graphs fall back to
    exhaustive search and are capped at n <= 25.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return g.vertex_count >= 1
    if g.source == "intervals":
        if sorted_intervals is None:
            raise ValueError("interval clique check needs the sorted collection")
        return max_clique_interval(sorted_intervals) >= k
    if g.vertex_count > DISK_CLIQUE_CAP:
        raise ValueError(f"exhaustive clique search capped at n <= {DISK_CLIQUE_CAP}")
    return _has_clique_exhaustive(g, k)


def _has_clique_exhaustive(g: IntersectionGraph, k: int) -> bool:
    vertices = sorted(range(g.vertex_count), key=lambda v: -len(g.adj[v]))

    def extend(clique: list[int], candidates: list[int]) -> bool:
        if len(clique) == k:
            return True
        if len(clique) + len(candidates) < k:
            return False
        for i, v in enumerate(candidates):
            nxt = [u for u in candidates[i + 1 :] if u in g.adj[v]]
            if extend(clique + [v], nxt):
                return True
        return False

    return extend([], vertices)


def max_clique_exhaustive(g: IntersectionGraph) -> int:
    """Brute-force maximum clique (test oracle; tiny graphs only)."""
    best = 0
    while best < g.vertex_count and _has_clique_exhaustive(g, best + 1):
        best += 1
    return best


def edge_list_json(g: IntersectionGraph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
