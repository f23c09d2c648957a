"""Signed graph data model, SGF interchange format, switching and induced subgraphs.

A :class:`SignedGraph` is an immutable value: ``n`` vertices labelled
``0..n-1`` and a frozenset of ``(u, v, s)`` triples with ``u < v`` and
``s`` in ``{+1, -1}``.  The all-positive signing stands in for an ordinary
graph.

The SGF text format is line oriented::

    # comment
    n m
    u v +
    u v -
    ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

__all__ = [
    "SGFError",
    "SignedGraph",
    "induced_subgraph",
    "parse_sgf",
    "read_sgf",
    "switch",
    "vertex_set",
    "write_sgf",
]


class SGFError(ValueError):
    """Malformed SGF input; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise ValueError(f"vertex count must be a non-negative integer, got {self.n!r}")
        edges = frozenset(self.edges)
        seen = set()
        for e in edges:
            u, v, s = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} must satisfy 0 <= u < v < n={self.n}")
            if s not in (1, -1):
                raise ValueError(f"edge {e} has sign {s!r}, expected +1 or -1")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SignedGraph":
        """Build from ``(u, v)`` or ``(u, v, s)`` tuples in any endpoint order."""
        out = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            s = int(e[2]) if len(e) > 2 else 1
            out.append((min(u, v), max(u, v), s))
        return cls(n, frozenset(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> np.ndarray:
        """Signed adjacency matrix as an ``int`` array."""
        a = np.zeros((self.n, self.n), dtype=int)
        for u, v, s in self.edges:
            a[u, v] = a[v, u] = s
        return a

    def adjacency_lists(self) -> list[list[int]]:
        """Sorted neighbour lists of the underlying graph."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nb in adj:
            nb.sort()
        return adj

    def sign_map(self) -> dict[tuple[int, int], int]:
        """``(u, v) -> s`` for both orientations of every edge."""
        d = {}
        for u, v, s in self.edges:
            d[u, v] = s
            d[v, u] = s
        return d

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def underlying(self) -> "SignedGraph":
        """Same graph with every sign set to +1."""
        return SignedGraph(self.n, frozenset((u, v, 1) for u, v, _ in self.edges))

    def with_signs(self, signs: dict[tuple[int, int], int]) -> "SignedGraph":
        """Reassign signs of the listed ``(u, v)`` pairs (``u < v``)."""
        return SignedGraph(self.n, frozenset((u, v, signs.get((u, v), s)) for u, v, s in self.edges))

    def relabel(self, perm) -> "SignedGraph":
        """Image under the vertex map ``i -> perm[i]``."""
        return SignedGraph.from_edges(self.n, ((perm[u], perm[v], s) for u, v, s in self.edges))

    def remove_vertices(self, drop: Iterable[int]) -> "SignedGraph":
        drop = set(drop)
        return induced_subgraph(self, [i for i in range(self.n) if i not in drop])

    def __repr__(self) -> str:
        body = ", ".join(f"{u}{'+' if s > 0 else '-'}{v}" for u, v, s in self.sorted_edges())
        return f"SignedGraph(n={self.n}, [{body}])"


def vertex_set(g: SignedGraph, members: Iterable[int]) -> frozenset[int]:
    """Validate ``members`` as a vertex subset of ``g``."""
    members = list(members)
    s = frozenset(members)
    if len(s) != len(members):
        raise ValueError("vertex set contains duplicates")
    bad = [x for x in s if not (0 <= x < g.n)]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} out of range for n={g.n}")
    return s


def parse_sgf(text: str) -> SignedGraph:
    header = None
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if header is None:
            if len(tok) != 2:
                raise SGFError(f"expected header 'n m', got {line!r}", lineno)
            try:
                n, m = int(tok[0]), int(tok[1])
            except ValueError:
                raise SGFError(f"non-integer header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise SGFError("negative vertex or edge count", lineno)
            if m > n * (n - 1) // 2:
                raise SGFError(f"{m} edges exceed the simple-graph maximum for n={n}", lineno)
            header = (n, m, lineno)
            continue
        n = header[0]
        if len(tok) != 3:
            raise SGFError(f"expected 'u v s', got {line!r}", lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise SGFError(f"non-integer vertex in {line!r}", lineno) from None
        if tok[2] not in ("+", "-"):
            raise SGFError(f"invalid sign token {tok[2]!r}", lineno)
        if u == v:
            raise SGFError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise SGFError(f"vertex index out of range for n={n}", lineno)
        if u > v:
            raise SGFError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno)
        if (u, v) in seen:
            raise SGFError(f"duplicate edge {u} {v} (first at line {seen[u, v]})", lineno)
        seen[u, v] = lineno
        edges.append((u, v, 1 if tok[2] == "+" else -1))
    if header is None:
        raise SGFError("missing header line")
    if len(edges) != header[1]:
        raise SGFError(f"header declares {header[1]} edges, found {len(edges)}", header[2])
    return SignedGraph(header[0], frozenset(edges))


def write_sgf(g: SignedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_sgf(path) -> SignedGraph:
    """Parse an SGF file; ``'-'`` reads standard input."""
    if str(path) == "-":
        import sys

        return parse_sgf(sys.stdin.read())
    with open(path, encoding="ascii") as fh:
        return parse_sgf(fh.read())


def switch(g: SignedGraph, u_set: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``u_set``."""
    u_set = vertex_set(g, u_set)
    return SignedGraph(
        g.n,
        frozenset((u, v, -s if (u in u_set) != (v in u_set) else s) for u, v, s in g.edges),
    )


def induced_subgraph(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Subgraph on ``s``; kept vertices are relabelled ``0..|s|-1`` in increasing order."""
    keep = sorted(vertex_set(g, s))
    index = {x: i for i, x in enumerate(keep)}
    return SignedGraph(
        len(keep),
        frozenset((index[u], index[v], sg) for u, v, sg in g.edges if u in index and v in index),
    )
