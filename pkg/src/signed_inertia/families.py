"""Constructors and recognizers for the extremal signed graph families.

Families: cycles, paths, stars, balanced complete multipartite graphs,
canonical unicyclic graphs (a cycle with pendant stars centred on cycle
vertices), a cycle joined to the centre of a star, and theta graphs
``B(k, l, m)``.  Several families overlap on small graphs (``K_3`` is both a
triangle and ``K_{1,1,1}``), so :func:`recognize_all` lists every match and
:func:`recognize` picks the first one in :data:`PRIORITY` order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from itertools import permutations
from typing import NamedTuple, Optional, Sequence, Union

from .core import SignedGraph
from .structure import is_balanced, is_connected

__all__ = [
    "BalancedCompleteMultipartite",
    "CanonicalUnicyclic",
    "Cycle",
    "CycleWithPendantStar",
    "FamilyLabel",
    "Shape",
    "Other",
    "ParityCondition",
    "Path",
    "Star",
    "StarDecomposition",
    "Theta",
    "cycle_core",
    "graph_shape",
    "is_balanced_complete_multipartite",
    "make_canonical_unicyclic",
    "make_complete_multipartite",
    "make_cycle",
    "make_cycle_with_pendant_star",
    "make_path",
    "make_star",
    "labels_from_shape",
    "make_theta",
    "parity_condition",
    "recognize",
    "recognize_all",
    "star_decomposition",
    "theta_label",
]


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


class _Label:
    kind = ""

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        d.update({k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()})
        return d


@dataclass(frozen=True)
class Cycle(_Label):
    n: int
    balanced: bool
    kind = "cycle"

    def __str__(self):
        return f"Cycle({self.n},{'balanced' if self.balanced else 'unbalanced'})"


@dataclass(frozen=True)
class Path(_Label):
    n: int
    kind = "path"

    def __str__(self):
        return f"Path({self.n})"


@dataclass(frozen=True)
class Star(_Label):
    leaves: int
    kind = "star"

    def __str__(self):
        return f"Star({self.leaves})"


@dataclass(frozen=True)
class BalancedCompleteMultipartite(_Label):
    parts: tuple[int, ...]
    kind = "balanced_complete_multipartite"

    def __str__(self):
        return f"BalancedCompleteMultipartite[{','.join(map(str, self.parts))}]"


@dataclass(frozen=True)
class CanonicalUnicyclic(_Label):
    girth: int
    gaps: tuple[int, ...]
    leaves: tuple[int, ...]
    balanced: bool
    kind = "canonical_unicyclic"

    @property
    def t(self) -> int:
        return len(self.gaps)

    def __str__(self):
        return (
            f"CanonicalUnicyclic({self.girth},t={self.t},"
            f"gaps=({','.join(map(str, self.gaps))}),leaves=({','.join(map(str, self.leaves))}))"
        )


@dataclass(frozen=True)
class CycleWithPendantStar(_Label):
    girth: int
    balanced: bool
    t: int
    kind = "cycle_with_pendant_star"

    def __str__(self):
        return f"CycleWithPendantStar({self.girth},{'balanced' if self.balanced else 'unbalanced'},t={self.t})"


@dataclass(frozen=True)
class Theta(_Label):
    """``B(k, l, m)`` with ``l`` the shortest path; ``signs`` are the cycle signs through (k, l) and (l, m)."""

    k: int
    l: int  # noqa: E741
    m: int
    signs: tuple[int, int]
    kind = "theta"

    @property
    def girth(self) -> int:
        return self.k + self.l - 2

    def __str__(self):
        base = f"Theta({self.k},{self.l},{self.m})"
        # the balanced signing is the unmarked default
        if self.signs == (1, 1):
            return base
        return f"{base}[{''.join(map(_sign_char, self.signs))}]"


@dataclass(frozen=True)
class Other(_Label):
    kind = "other"

    def __str__(self):
        return "Other"


FamilyLabel = Union[
    Cycle, Path, Star, BalancedCompleteMultipartite, CanonicalUnicyclic, CycleWithPendantStar, Theta, Other
]
PRIORITY = (Cycle, Path, Star, BalancedCompleteMultipartite, CanonicalUnicyclic, CycleWithPendantStar, Theta)


# --- constructors ---------------------------------------------------------------


def make_cycle(n: int, balanced: bool = True) -> SignedGraph:
    """``C_n`` on ``0..n-1``; the unbalanced version negates the closing edge ``(0, n-1)``."""
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got {n}")
    edges = [(i, i + 1, 1) for i in range(n - 1)]
    edges.append((0, n - 1, 1 if balanced else -1))
    return SignedGraph.from_edges(n, edges)


def make_path(n: int) -> SignedGraph:
    if n < 1:
        raise ValueError(f"a path needs n >= 1, got {n}")
    return SignedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_star(leaves: int) -> SignedGraph:
    """``S_{leaves+1}`` with centre 0."""
    if leaves < 1:
        raise ValueError(f"a star needs at least one leaf, got {leaves}")
    return SignedGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def make_complete_multipartite(parts: Sequence[int]) -> SignedGraph:
    parts = list(parts)
    if len(parts) < 2 or min(parts) < 1:
        raise ValueError(f"need at least two parts of size >= 1, got {parts}")
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return SignedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def make_canonical_unicyclic(girth: int, stars: Sequence[tuple[int, int]], balanced: bool = True) -> SignedGraph:
    """Cycle ``0..girth-1`` where each ``(position, count)`` hangs ``count`` leaves on that cycle vertex."""
    cycle = make_cycle(girth, balanced)
    positions = [p for p, _ in stars]
    if len(set(positions)) != len(positions):
        raise ValueError(f"duplicate star position in {positions}")
    for p, c in stars:
        if not 0 <= p < girth:
            raise ValueError(f"star position {p} outside the cycle 0..{girth - 1}")
        if c < 1:
            raise ValueError(f"star at {p} needs at least one leaf")
    edges = list(cycle.edges)
    nxt = girth
    for p, c in stars:
        for _ in range(c):
            edges.append((p, nxt, 1))
            nxt += 1
    return SignedGraph.from_edges(nxt, edges)


def make_cycle_with_pendant_star(girth: int, balanced: bool, t: int) -> SignedGraph:
    """Cycle ``0..girth-1`` with vertex 0 joined to the centre ``girth`` of a star with ``t`` leaves."""
    if t < 1:
        raise ValueError(f"star needs t >= 1 leaves, got {t}")
    edges = list(make_cycle(girth, balanced).edges)
    centre = girth
    edges.append((0, centre, 1))
    edges += [(centre, centre + i, 1) for i in range(1, t + 1)]
    return SignedGraph.from_edges(girth + t + 1, edges)


def _check_theta(k: int, l: int, m: int) -> None:  # noqa: E741
    if min(k, l, m) < 2 or sorted((k, l, m))[1] == 2:
        raise ValueError(f"theta graph needs k, l, m >= 2 with at most one equal to 2, got {(k, l, m)}")


def make_theta(k: int, l: int, m: int, signs: tuple[int, int] = (1, 1)) -> SignedGraph:  # noqa: E741
    """Hubs 0 and 1 joined by paths on ``k``, ``l`` and ``m`` vertices (hubs included).

    ``signs`` gives the signs of the cycles formed by paths (k, l) and
    (l, m); they are realised by negating the first edge of the k-path and
    of the m-path respectively.
    """
    _check_theta(k, l, m)
    if any(s not in (1, -1) for s in signs):
        raise ValueError(f"cycle signs must be +1/-1, got {signs}")
    edges = []
    nxt = 2
    for order, negate in ((k, signs[0] < 0), (l, False), (m, signs[1] < 0)):
        inner = list(range(nxt, nxt + order - 2))
        nxt += order - 2
        walk = [0] + inner + [1]
        for i, (a, b) in enumerate(zip(walk, walk[1:])):
            edges.append((a, b, -1 if (negate and i == 0) else 1))
    return SignedGraph.from_edges(nxt, edges)


# --- recognition helpers --------------------------------------------------------


def is_balanced_complete_multipartite(g: SignedGraph) -> Optional[tuple[int, ...]]:
    """Sorted part sizes when ``g`` is a balanced complete multipartite graph, else ``None``.

    The underlying graph qualifies when non-adjacency is an equivalence
    relation (the complement is a disjoint union of cliques) with at least
    two classes.
    """
    if g.n < 2:
        return None
    adj = [set(nb) for nb in g.adjacency_lists()]
    everyone = set(range(g.n))
    parts = []
    seen = set()
    for v in range(g.n):
        if v in seen:
            continue
        part = everyone - adj[v]
        for w in part:
            if everyone - adj[w] != part:
                return None
        seen |= part
        parts.append(len(part))
    if len(parts) < 2 or not is_balanced(g):
        return None
    return tuple(sorted(parts))


def cycle_core(g: SignedGraph) -> Optional[list[int]]:
    """Vertices of the unique cycle of a connected unicyclic graph, in cyclic order from its smallest vertex."""
    if g.m != g.n or g.n < 3:
        return None
    adj = [set(nb) for nb in g.adjacency_lists()]
    deg = [len(a) for a in adj]
    alive = set(range(g.n))
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    if len(alive) < 3 or any(len(adj[v] & alive) != 2 for v in alive):
        return None
    start = min(alive)
    order = [start]
    cur = min(adj[start] & alive)
    while cur != start:
        order.append(cur)
        cur = next(w for w in adj[cur] & alive if w != order[-2])
    return order


class StarDecomposition(NamedTuple):
    t: int
    gaps: tuple[int, ...]
    leaf_counts: tuple[int, ...]

    @property
    def girth(self) -> int:
        return self.t + sum(self.gaps)


def _normalize_stars(gaps: Sequence[int], leaves: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least ``(gaps, leaves)`` over rotations and reflections of the starred cycle.

    ``gaps[i]`` counts the cycle vertices between star ``i`` and star ``i+1``.
    """
    t = len(gaps)
    candidates = []
    for r in range(t):
        g = tuple(gaps[r:]) + tuple(gaps[:r])
        lv = tuple(leaves[r:]) + tuple(leaves[:r])
        candidates.append((g, lv))
        # reverse traversal from the same star
        candidates.append((tuple(reversed(g)), (lv[0],) + tuple(reversed(lv[1:]))))
    return min(candidates)


def star_decomposition(g: SignedGraph) -> Optional[StarDecomposition]:
    """Star layout of a canonical unicyclic graph with at least one star, else ``None``."""
    order = cycle_core(g)
    if order is None or len(order) == g.n:
        return None
    on_cycle = set(order)
    adj = g.adjacency_lists()
    counts = Counter()
    for v in range(g.n):
        if v in on_cycle:
            continue
        if len(adj[v]) != 1 or adj[v][0] not in on_cycle:
            return None
        counts[adj[v][0]] += 1
    starred = [i for i, v in enumerate(order) if counts[v]]
    girth = len(order)
    gaps = [(starred[(i + 1) % len(starred)] - starred[i] - 1) % girth for i in range(len(starred))]
    if len(starred) == 1:
        gaps = [girth - 1]
    leaves = [counts[order[i]] for i in starred]
    ng, nl = _normalize_stars(gaps, leaves)
    return StarDecomposition(len(starred), ng, nl)


class ParityCondition(NamedTuple):
    condition: str  # "t=1", "all-gaps-odd", "exactly-one-even-gap" or "neither"
    girth_mod4: int


def parity_condition(sd: StarDecomposition, girth: int) -> ParityCondition:
    """Which gap-parity pattern ``sd`` shows; makes no claim about ``p+``."""
    if sd.t < 1 or len(sd.gaps) != sd.t or sd.girth != girth or min(sd.gaps) < 0:
        raise ValueError(f"star decomposition {sd} inconsistent with girth {girth}")
    even = sum(1 for x in sd.gaps if x % 2 == 0)
    if sd.t == 1:
        cond = "t=1"
    elif even == 0:
        cond = "all-gaps-odd"
    elif even == 1:
        cond = "exactly-one-even-gap"
    else:
        cond = "neither"
    return ParityCondition(cond, girth % 4)


def theta_label(k: int, l: int, m: int, signs: tuple[int, int] = (1, 1)) -> Theta:  # noqa: E741
    """Normalised label of ``make_theta(k, l, m, signs)``."""
    _check_theta(k, l, m)
    return _theta_from_paths([(k, signs[0]), (l, 1), (m, signs[1])])


def _theta_from_paths(paths: list[tuple[int, int]]) -> Theta:
    """``paths`` holds (vertex count, product of edge signs) for the three hub-to-hub paths."""
    a, b, c = sorted(p[0] for p in paths)
    target = (b, a, c)
    best = None
    for (k, sk), (l, sl), (m, sm) in permutations(paths):  # noqa: E741
        if (k, l, m) != target:
            continue
        cand = (sk * sl, sl * sm)
        if best is None or cand < best:
            best = cand
    return Theta(b, a, c, best)


def _theta_paths(g: SignedGraph) -> Optional[tuple[tuple[int, ...], ...]]:
    """Vertex sequences of the three hub-to-hub paths when ``g`` is a theta graph."""
    if g.m != g.n + 1:
        return None
    adj = g.adjacency_lists()
    deg = [len(a) for a in adj]
    hubs = [v for v in range(g.n) if deg[v] == 3]
    if len(hubs) != 2 or any(d != 2 for v, d in enumerate(deg) if v not in hubs):
        return None
    h0, h1 = hubs
    paths = []
    for first in adj[h0]:
        walk = [h0, first]
        while walk[-1] not in hubs:
            a, b = adj[walk[-1]]
            walk.append(a if a != walk[-2] else b)
        if walk[-1] != h1:
            return None
        paths.append(tuple(walk))
    return tuple(paths)


def _pendant_star_size(g: SignedGraph, order: list[int]) -> Optional[int]:
    """Leaf count ``t`` when ``g`` is its cycle plus one edge to the centre of a star."""
    on_cycle = set(order)
    adj = g.adjacency_lists()
    off = [v for v in range(g.n) if v not in on_cycle]
    centres = [v for v in off if len(adj[v]) >= 2]
    if len(centres) != 1:
        return None
    c = centres[0]
    cycle_nbrs = [w for w in adj[c] if w in on_cycle]
    leaves = [w for w in adj[c] if w not in on_cycle]
    if len(cycle_nbrs) != 1 or len(leaves) + 1 != len(off) or any(len(adj[w]) != 1 for w in leaves):
        return None
    return len(leaves)


@dataclass(frozen=True)
class Shape:
    """Sign-blind family structure of a connected graph; shared by all its signings."""

    n: int
    cycle: bool = False
    path: bool = False
    star: bool = False
    multipartite: Optional[tuple[int, ...]] = None
    cycle_order: Optional[tuple[int, ...]] = None
    stars: Optional[StarDecomposition] = None
    pendant_star: Optional[int] = None
    theta: Optional[tuple[tuple[int, ...], ...]] = None


def graph_shape(g: SignedGraph) -> Shape:
    if g.n == 0 or not is_connected(g):
        raise ValueError("family recognition requires a connected graph")
    deg = g.degrees()
    tree = g.m == g.n - 1
    order = cycle_core(g)
    unicyclic_extra = order is not None and len(order) < g.n
    stars = star_decomposition(g) if unicyclic_extra else None
    return Shape(
        n=g.n,
        cycle=g.n >= 3 and g.m == g.n and all(d == 2 for d in deg),
        path=tree and max(deg, default=0) <= 2,
        star=tree and g.n >= 2 and max(deg) == g.n - 1,
        multipartite=is_balanced_complete_multipartite(g.underlying()),
        cycle_order=tuple(order) if order is not None else None,
        stars=stars,
        pendant_star=_pendant_star_size(g, order) if unicyclic_extra and stars is None else None,
        theta=_theta_paths(g),
    )


def labels_from_shape(shape: Shape, g: SignedGraph, balanced: Optional[bool] = None) -> list[FamilyLabel]:
    """Family labels of the signing ``g`` of a graph with structure ``shape``, in :data:`PRIORITY` order."""
    if balanced is None:
        balanced = is_balanced(g)
    out: list[FamilyLabel] = []
    if shape.cycle:
        out.append(Cycle(g.n, balanced))
    if shape.path:
        out.append(Path(g.n))
    if shape.star:
        out.append(Star(g.n - 1))
    if shape.multipartite is not None and balanced:
        out.append(BalancedCompleteMultipartite(shape.multipartite))
    if shape.stars is not None:
        sd = shape.stars
        out.append(CanonicalUnicyclic(len(shape.cycle_order), sd.gaps, sd.leaf_counts, balanced))
    if shape.pendant_star is not None:
        out.append(CycleWithPendantStar(len(shape.cycle_order), balanced, shape.pendant_star))
    if shape.theta is not None:
        sm = g.sign_map()
        paths = []
        for walk in shape.theta:
            sign = 1
            for a, b in zip(walk, walk[1:]):
                sign *= sm[a, b]
            paths.append((len(walk), sign))
        out.append(_theta_from_paths(paths))
    return out


def recognize_all(g: SignedGraph) -> list[FamilyLabel]:
    """Every family label matching the connected graph ``g``, in :data:`PRIORITY` order."""
    return labels_from_shape(graph_shape(g), g)


def recognize(g: SignedGraph) -> FamilyLabel:
    """Most specific family label of ``g``; :class:`Other` when none applies."""
    labels = recognize_all(g)
    return labels[0] if labels else Other()
