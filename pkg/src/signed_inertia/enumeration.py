"""Connected graphs up to isomorphism and signings up to switching.

Underlying graphs on ``n <= 8`` vertices are grown one vertex at a time
(every connected graph has a vertex whose removal leaves it connected) and
deduplicated by :func:`canonical_code`.  Switching classes of a connected
graph are in bijection with sign vectors on the edges outside a fixed
spanning tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, NamedTuple

from .core import SignedGraph, switch
from .structure import is_connected

__all__ = [
    "MAX_N",
    "CanonicalCode",
    "SwitchingClassRepresentative",
    "canonical_code",
    "canonical_form",
    "enumerate_connected_graphs",
    "enumerate_switching_classes",
    "gauge_fix",
    "spanning_tree",
    "switching_class_representatives",
]

MAX_N = 8


class CanonicalCode(NamedTuple):
    """Isomorphism key: ``bits`` is the adjacency upper triangle under a canonical labelling.

    Pair ``(0, 1)`` is the most significant bit, so comparing codes compares
    the row-major bit strings lexicographically.
    """

    n: int
    bits: int


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Colour refinement to a stable colouring, with colours ranked by an invariant signature."""
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _code_bits(n: int, edges: list[tuple[int, int]], pos: list[int]) -> int:
    total = n * (n - 1) // 2
    bits = 0
    for u, v in edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        idx = i * (2 * n - i - 1) // 2 + (j - i - 1)
        bits |= 1 << (total - 1 - idx)
    return bits


def canonical_form(g: SignedGraph) -> tuple[CanonicalCode, list[int]]:
    """Canonical code of the underlying graph and a labelling ``pos`` attaining it.

    Individualisation-refinement: refine degrees to a stable ordered
    partition, then branch on every vertex of the first non-singleton cell.
    The minimum code over all discrete leaves is an isomorphism invariant.
    """
    n = g.n
    if n > MAX_N:
        raise ValueError(f"canonical codes are supported for n <= {MAX_N}, got {n}")
    adj = g.adjacency_lists()
    edges = [(u, v) for u, v, _ in g.edges]
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            bits = _code_bits(n, edges, colors)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, colors
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                # v goes just ahead of its former cell-mates
                search([2 * c if w == v else 2 * c + 1 for w, c in enumerate(colors)])

    search([len(a) for a in adj])
    return CanonicalCode(n, best[0] or 0), (best[1] or [])


def canonical_code(g: SignedGraph) -> CanonicalCode:
    return canonical_form(g)[0]


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[tuple[CanonicalCode, SignedGraph], ...]:
    if n == 1:
        return ((CanonicalCode(1, 0), SignedGraph(1)),)
    found: dict[CanonicalCode, SignedGraph] = {}
    for _, smaller in _connected_graphs(n - 1):
        base = [(u, v) for u, v, _ in smaller.edges]
        new = n - 1
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                cand = SignedGraph.from_edges(n, base + [(x, new) for x in nbrs])
                code, pos = canonical_form(cand)
                if code not in found:
                    found[code] = cand.relabel(pos)
    return tuple(sorted(found.items()))


def enumerate_connected_graphs(n: int) -> Iterator[SignedGraph]:
    """One all-positive representative per isomorphism class, ordered by canonical code."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")
    for _, g in _connected_graphs(n):
        yield g


def connected_graphs_with_codes(n: int) -> tuple[tuple[CanonicalCode, SignedGraph], ...]:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")
    return _connected_graphs(n)


def spanning_tree(g: SignedGraph) -> tuple[dict[int, int], list[tuple[int, int]]]:
    """Depth-first spanning tree from vertex 0: ``(parent map, sorted non-tree edges)``."""
    adj = g.adjacency_lists()
    parent = {0: -1}
    stack = [0]
    tree = set()
    while stack:
        u = stack[-1]
        nxt = next((w for w in adj[u] if w not in parent), None)
        if nxt is None:
            stack.pop()
            continue
        parent[nxt] = u
        tree.add((min(u, nxt), max(u, nxt)))
        stack.append(nxt)
    if len(parent) != g.n:
        raise ValueError("graph is disconnected")
    free = sorted((u, v) for u, v, _ in g.edges if (u, v) not in tree)
    return parent, free


@dataclass(frozen=True)
class SwitchingClassRepresentative:
    graph: SignedGraph
    free_edges: tuple[tuple[int, int], ...]
    vector: tuple[int, ...]  # 1 marks a negative free edge


def switching_class_representatives(g: SignedGraph) -> Iterator[SwitchingClassRepresentative]:
    """All ``2**(m - n + 1)`` tree-positive signings of ``g``, vectors in lexicographic order."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("switching classes are enumerated for connected graphs only")
    if any(s < 0 for _, _, s in g.edges):
        raise ValueError("expected an all-positive graph")
    _, free = spanning_tree(g)
    base = [(u, v) for u, v, _ in g.edges]
    for vec in product((0, 1), repeat=len(free)):
        neg = {e for e, bit in zip(free, vec) if bit}
        yield SwitchingClassRepresentative(
            SignedGraph(g.n, frozenset((u, v, -1 if (u, v) in neg else 1) for u, v in base)),
            tuple(free),
            vec,
        )


def enumerate_switching_classes(g: SignedGraph) -> Iterator[SignedGraph]:
    for rep in switching_class_representatives(g):
        yield rep.graph


def gauge_fix(g: SignedGraph) -> SignedGraph:
    """The switching-equivalent signing whose spanning-tree edges are all positive."""
    parent, _ = spanning_tree(g)
    sm = g.sign_map()
    theta = {0: 1}
    # parents are discovered before children, so resolve along insertion order
    for v, p in parent.items():
        if p >= 0:
            theta[v] = theta[p] * sm[p, v]
    return switch(g, [v for v, t in theta.items() if t < 0])
