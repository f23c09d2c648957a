"""Inertia of signed adjacency matrices.

Two independent engines:

* :func:`exact_inertia` runs symmetric congruence elimination with 1x1 and
  2x2 pivots over exact integers.  Rational entries are kept as an integer
  matrix times a positive scalar that is dropped, which Sylvester's law of
  inertia allows.
* :func:`float_spectrum` runs a two-sided cyclic Jacobi rotation method in
  round-robin (parallel) ordering, vectorised over a batch of matrices.

Closed forms for cycles, pendant-vertex reduction and the combined
:func:`positive_inertia` sit on top.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import SignedGraph, induced_subgraph
from .structure import pendant_vertices

__all__ = [
    "ConvergenceError",
    "EngineMismatch",
    "InertiaTriple",
    "Spectrum",
    "cycle_inertia",
    "cycle_spectrum_closed_form",
    "exact_inertia",
    "exact_inertia_matrix",
    "float_spectrum",
    "jacobi_eigenvalues",
    "pendant_reduce",
    "positive_inertia",
]

ZERO_TOLERANCE = 1e-8
JACOBI_RTOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


class EngineMismatch(RuntimeError):
    """Exact and floating engines disagree on a sign count."""


class InertiaTriple(NamedTuple):
    p_plus: int
    n_minus: int
    eta: int

    @property
    def n(self) -> int:
        return self.p_plus + self.n_minus + self.eta

    def plus(self, other: "InertiaTriple") -> "InertiaTriple":
        return InertiaTriple(*(a + b for a, b in zip(self, other)))


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    zero_tolerance: float = ZERO_TOLERANCE

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError("spectrum values must be non-increasing")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def inertia(self, zero_tolerance: float | None = None) -> InertiaTriple:
        tol = self.zero_tolerance if zero_tolerance is None else zero_tolerance
        p = sum(v > tol for v in self.values)
        q = sum(v < -tol for v in self.values)
        return InertiaTriple(p, q, len(self.values) - p - q)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


# --- exact engine -------------------------------------------------------------


def exact_inertia_matrix(rows: Sequence[Sequence[int]]) -> InertiaTriple:
    """Inertia of a symmetric integer matrix by congruence elimination.

    Pivot order is deterministic: the first nonzero diagonal entry is used
    as a 1x1 pivot; when the diagonal is all zero the first nonzero
    off-diagonal ``a[i][j]`` (row-major, ``i < j``) gives a 2x2 pivot of
    negative determinant, which contributes one positive and one negative
    eigenvalue.
    """
    a = [list(map(int, r)) for r in rows]
    p = q = z = 0
    while a:
        k = len(a)
        piv = next((i for i in range(k) if a[i][i]), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                p += 1
            else:
                q += 1
            b = a[piv]
            ad, sd = abs(d), (1 if d > 0 else -1)
            keep = [i for i in range(k) if i != piv]
            a = [[ad * a[i][j] - sd * b[i] * b[j] for j in keep] for i in keep]
        else:
            pair = next(((i, j) for i in range(k) for j in range(i + 1, k) if a[i][j]), None)
            if pair is None:
                z += k
                break
            i0, j0 = pair
            c = a[i0][j0]
            bi, bj = a[i0], a[j0]
            ac, sc = abs(c), (1 if c > 0 else -1)
            keep = [i for i in range(k) if i != i0 and i != j0]
            a = [[ac * a[r][s] - sc * (bi[r] * bj[s] + bj[r] * bi[s]) for s in keep] for r in keep]
            p += 1
            q += 1
        if a:
            g = math.gcd(*(x for row in a for x in row))
            if g > 1:
                a = [[x // g for x in row] for row in a]
    return InertiaTriple(p, q, z)


def exact_inertia(g: SignedGraph) -> InertiaTriple:
    """Exact ``(p+, n-, eta)`` of the signed adjacency matrix."""
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v, s in g.edges:
        rows[u][v] = rows[v][u] = s
    return exact_inertia_matrix(rows)


# --- floating engine ----------------------------------------------------------


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair exactly once."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        pairs = [(min(x, y), max(x, y)) for x, y in pairs if x < n and y < n]
        if pairs:
            ps, qs = zip(*pairs)
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(a, rtol: float = JACOBI_RTOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of symmetric matrices, non-increasing along the last axis.

    ``a`` has shape ``(..., n, n)``.  Each sweep applies every plane rotation
    once, grouped into rounds of disjoint index pairs that are applied
    simultaneously.  Iteration stops once the off-diagonal Frobenius norm of
    every matrix is at most ``rtol`` times its Frobenius norm.
    """
    a = np.array(a, dtype=float)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    if not np.allclose(a, np.swapaxes(a, -1, -2)):
        raise ValueError("matrix is not symmetric")
    lead, n = a.shape[:-2], a.shape[-1]
    a = a.reshape((-1, n, n)).copy()
    if n == 0:
        return np.zeros(lead + (0,))
    offmask = ~np.eye(n, dtype=bool)
    fro = np.sqrt((a * a).sum(axis=(1, 2)))
    rounds = _round_robin(n)

    def off_norm(x):
        return np.sqrt(((x * x) * offmask).sum(axis=(1, 2)))

    for sweep in range(max_sweeps + 1):
        if np.all(off_norm(a) <= rtol * fro):
            break
        if sweep == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for ps, qs in rounds:
            app = a[:, ps, ps]
            aqq = a[:, qs, qs]
            apq = a[:, ps, qs]
            nz = apq != 0
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = np.where(nz, (aqq - app) / (2 * np.where(nz, apq, 1.0)), 0.0)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(nz, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[:, ps, :], a[:, qs, :]
            a[:, ps, :] = c[..., None] * rp - s[..., None] * rq
            a[:, qs, :] = s[..., None] * rp + c[..., None] * rq
            cp, cq = a[:, :, ps], a[:, :, qs]
            a[:, :, ps] = cp * c[:, None, :] - cq * s[:, None, :]
            a[:, :, qs] = cp * s[:, None, :] + cq * c[:, None, :]
    eig = np.diagonal(a, axis1=1, axis2=2)
    eig = -np.sort(-eig, axis=1)
    return eig.reshape(lead + (n,))


def float_spectrum(g: SignedGraph, zero_tolerance: float = ZERO_TOLERANCE) -> Spectrum:
    return Spectrum(tuple(jacobi_eigenvalues(g.adjacency())), zero_tolerance)


# --- cycles -------------------------------------------------------------------


def _check_cycle_order(n: int) -> None:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")


def cycle_spectrum_closed_form(n: int, balanced: bool) -> Spectrum:
    """``2cos(2 pi j/n)``, j=0..n-1 (balanced) or ``2cos((2j-1) pi/n)``, j=1..n."""
    _check_cycle_order(n)
    if balanced:
        num = [2 * j for j in range(n)]  # angle = num * pi / n
    else:
        num = [2 * j - 1 for j in range(1, n + 1)]
    vals = []
    for k in num:
        # cos vanishes exactly at pi/2 and 3pi/2
        vals.append(0.0 if 2 * k in (n, 3 * n) else 2 * math.cos(k * math.pi / n))
    return Spectrum(tuple(sorted(vals, reverse=True)))


def cycle_inertia(n: int, balanced: bool) -> InertiaTriple:
    """Sign counts of the closed-form cycle spectrum, in integer arithmetic.

    ``2cos(k pi/n)`` with ``0 <= k < 2n`` is positive iff ``2k < n`` or
    ``2k > 3n`` and zero iff ``2k`` equals ``n`` or ``3n``.
    """
    _check_cycle_order(n)
    num = range(0, 2 * n, 2) if balanced else range(1, 2 * n, 2)
    p = sum(1 for k in num if 2 * k < n or 2 * k > 3 * n)
    z = sum(1 for k in num if 2 * k in (n, 3 * n))
    return InertiaTriple(p, n - p - z, z)


# --- pendant reduction --------------------------------------------------------


def pendant_reduce(g: SignedGraph) -> tuple[SignedGraph, int]:
    """Strip pendant vertices with their neighbours until none remain.

    Each removal of a leaf ``x`` and its neighbour ``y`` lowers ``p+`` by
    exactly one, so ``p+(g) == p+(residual) + k``.
    """
    k = 0
    while True:
        leaves = pendant_vertices(g)
        if not leaves:
            return g, k
        x = min(leaves)
        y = next(v if u == x else u for u, v, _ in g.edges if x in (u, v))
        g = induced_subgraph(g, [i for i in range(g.n) if i not in (x, y)])
        k += 1


def positive_inertia(g: SignedGraph) -> int:
    residual, k = pendant_reduce(g)
    return exact_inertia(residual).p_plus + k
