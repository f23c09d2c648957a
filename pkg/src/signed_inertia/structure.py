"""Combinatorial invariants: connectivity, girth, shortest cycles, balance, layers.

Everything here is sign-blind except :func:`balance_witness` and the sign
carried by a :class:`CycleWitness`.  Distances are hop counts on the
underlying graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import SignedGraph, vertex_set

__all__ = [
    "CycleWitness",
    "LayerPartition",
    "balance_witness",
    "bfs_distances",
    "girth",
    "internally_disjoint_path_check",
    "is_balanced",
    "is_connected",
    "neighborhood_layers",
    "pendant_vertices",
    "shortest_cycle",
]


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_vertices(cls, g: SignedGraph, vertices: Iterable[int]) -> "CycleWitness":
        """Witness for the closed walk ``vertices`` in ``g``; raises if it is not a cycle."""
        vs = tuple(vertices)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"{vs} is not a cycle: need at least 3 distinct vertices")
        sm = g.sign_map()
        sign = 1
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if (a, b) not in sm:
                raise ValueError(f"{a} and {b} are not adjacent")
            sign *= sm[a, b]
        return cls(vs, sign)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])]


@dataclass(frozen=True)
class LayerPartition:
    """Layers ``N_1, N_2, ...`` by distance to a base vertex set; trailing empty layers dropped."""

    base: frozenset
    layers: tuple[frozenset, ...]

    def layer(self, j: int) -> frozenset:
        """``N_j`` (1-based); empty beyond the last nonempty layer."""
        if j < 1:
            raise ValueError("layers are indexed from 1")
        return self.layers[j - 1] if j <= len(self.layers) else frozenset()

    @property
    def depth(self) -> int:
        return len(self.layers)


def is_connected(g: SignedGraph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    return len(bfs_distances(g.adjacency_lists(), [0])) == g.n


def bfs_distances(adj: list[list[int]], sources: Iterable[int], blocked=frozenset()) -> dict[int, int]:
    """Hop distances from ``sources``, never entering ``blocked`` vertices."""
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist and w not in blocked:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: SignedGraph) -> Optional[int]:
    """Length of a shortest cycle of the underlying graph, ``None`` if acyclic."""
    adj = g.adjacency_lists()
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # no shorter cycle through root can appear past this depth
            if best is not None and 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def shortest_cycle(g: SignedGraph) -> Optional[CycleWitness]:
    """Canonical shortest cycle, or ``None`` for forests.

    Among all cycles of length ``girth(g)``, each written from its smallest
    vertex toward the smaller of that vertex's two cycle neighbours, the
    lexicographically least sequence is returned.
    """
    gr = girth(g)
    if gr is None:
        return None
    adj = g.adjacency_lists()
    for s in range(g.n):
        # lower bound on the remaining steps back to s, within vertices >= s
        allowed = frozenset(range(s))
        back = bfs_distances(adj, [s], blocked=allowed)
        path = [s]
        on_path = {s}

        def extend() -> bool:
            u = path[-1]
            if len(path) == gr:
                return s in adj[u] and path[1] < path[-1]
            for w in adj[u]:
                if w <= s or w in on_path:
                    continue
                if back.get(w, gr + 1) > gr - len(path):
                    continue
                path.append(w)
                on_path.add(w)
                if extend():
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if extend():
            return CycleWitness.from_vertices(g, path)
    raise AssertionError("girth found a cycle that the canonical search missed")


def balance_witness(g: SignedGraph) -> Optional[CycleWitness]:
    """A negative cycle of ``g``, or ``None`` when ``g`` is balanced.

    Builds a spanning forest potential ``theta`` with
    ``sigma(uv) = theta(u) * theta(v)`` on tree edges; the first non-tree
    edge breaking that identity closes a negative cycle with the tree paths.
    """
    adj = g.adjacency_lists()
    sm = g.sign_map()
    theta = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if theta[root]:
            continue
        theta[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not theta[w]:
                    theta[w] = theta[u] * sm[u, w]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
    for u, v, s in sorted(g.edges):
        if s == theta[u] * theta[v]:
            continue
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            left.append(a)
            right.append(b)
        cycle = left + right[-2::-1]
        return CycleWitness.from_vertices(g, cycle)
    return None


def is_balanced(g: SignedGraph) -> bool:
    return balance_witness(g) is None


def pendant_vertices(g: SignedGraph) -> frozenset[int]:
    return frozenset(i for i, d in enumerate(g.degrees()) if d == 1)


def neighborhood_layers(g: SignedGraph, h: Iterable[int]) -> LayerPartition:
    base = vertex_set(g, h)
    if not base:
        raise ValueError("base vertex set must be nonempty")
    dist = bfs_distances(g.adjacency_lists(), sorted(base))
    depth = max(dist.values())
    layers = [set() for _ in range(depth)]
    for x, d in dist.items():
        if d:
            layers[d - 1].add(x)
    return LayerPartition(base, tuple(frozenset(layer) for layer in layers))


def internally_disjoint_path_check(
    g: SignedGraph, cycle: CycleWitness
) -> list[tuple[int, tuple[int, int]]]:
    """Shortest paths between cycle vertices whose interiors avoid the cycle.

    For every pair ``y < y'`` of cycle vertices joined by such a path, report
    ``(length, (y, y'))`` for the shortest one.  Cycle edges themselves are
    not counted as paths.
    """
    adj = g.adjacency_lists()
    on_cycle = frozenset(cycle.vertices)
    cycle_edges = set(cycle.edges())
    found = []
    for y in sorted(on_cycle):
        # one BFS from y through off-cycle vertices only
        dist = {y: 0}
        queue = deque([y])
        hits: dict[int, int] = {}
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in on_cycle:
                    if w == y or (u == y and (min(u, w), max(u, w)) in cycle_edges):
                        continue
                    if w > y and w not in hits:
                        hits[w] = dist[u] + 1
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        found += [(k, (y, w)) for w, k in sorted(hits.items())]
    return found
