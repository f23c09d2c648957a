"""Exhaustive checking of the girth lower bound on the positive inertia index.

For a connected signed graph with girth ``g`` the bound reads
``p+ >= ceil(g/2) - 1``.  Each checked graph becomes a
:class:`VerificationRecord` with a status bucket:

=========  =====================================
status     ``p+ - (ceil(g/2) - 1)``
=========  =====================================
strict     negative (bound violated, a counterexample)
equality   0
plus-one   1
higher     2 or more
=========  =====================================

Statements about which families sit at ``equality`` and ``plus-one`` are
evaluated under two readings.  ``literal`` uses the congruence classes and
parity pairings as originally stated; ``corrected`` uses the
classes that the closed-form cycle spectra force and the parity cases as
derived in the unicyclic argument.  Mismatches are report entries; only
bound violations and engine disagreements are failures.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, NamedTuple, Optional

import numpy as np

from .core import SignedGraph, induced_subgraph, write_sgf
from .enumeration import MAX_N, CanonicalCode, connected_graphs_with_codes, spanning_tree
from .families import (
    BalancedCompleteMultipartite,
    CanonicalUnicyclic,
    Cycle,
    CycleWithPendantStar,
    FamilyLabel,
    Other,
    Shape,
    StarDecomposition,
    Theta,
    graph_shape,
    labels_from_shape,
    make_canonical_unicyclic,
    make_cycle,
    make_cycle_with_pendant_star,
    parity_condition,
    star_decomposition,
)
from .inertia import (
    EngineMismatch,
    InertiaTriple,
    ZERO_TOLERANCE,
    cycle_inertia,
    exact_inertia,
    exact_inertia_matrix,
    float_spectrum,
    jacobi_eigenvalues,
)
from .structure import (
    girth as girth_of,
    internally_disjoint_path_check,
    is_balanced,
    is_connected,
    neighborhood_layers,
    pendant_vertices,
    shortest_cycle,
)

__all__ = [
    "DEFAULT_SEED",
    "STATUSES",
    "BoundViolation",
    "Claim",
    "VerificationRecord",
    "VerificationReport",
    "bound_floor",
    "check_bound",
    "check_equality_families",
    "cycle_class_audit",
    "iter_records",
    "lemma_checks",
    "pendant_star_audit",
    "statement_checks",
    "sweep",
    "unicyclic_parity_audit",
]

DEFAULT_SEED = 20240917
STATUSES = ("strict", "equality", "plus-one", "higher")
WITNESS_LIMIT = 3
REPORT_FORMAT = "signed-inertia-verify/1"

# congruence classes of g mod 4 as originally stated, keyed by cycle balance
LITERAL_CYCLE_EQUALITY = {True: (0, 1), False: (2, 3)}
LITERAL_CYCLE_PLUS_ONE = {True: (2, 3), False: (0, 1)}
LITERAL_THETA_PLUS_ONE = {(5, 4, 5, (1, 1)), (5, 5, 5, (1, 1)), (5, 3, 5, (-1, -1))}


class BoundViolation(AssertionError):
    pass


def ceil_half(g: int) -> int:
    return (g + 1) // 2


def bound_floor(girth: int) -> int:
    """``ceil(girth/2) - 1``."""
    return ceil_half(girth) - 1


def status_of(p_plus: int, girth: int) -> str:
    d = p_plus - bound_floor(girth)
    if d < 0:
        return "strict"
    return STATUSES[min(d, 2) + 1]


def _bal(b: bool) -> str:
    return "balanced" if b else "unbalanced"


@dataclass
class VerificationRecord:
    graph: SignedGraph
    girth: int
    balanced: bool
    inertia: InertiaTriple
    families: list = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)
    lemmas: dict[str, bool] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def p_plus(self) -> int:
        return self.inertia.p_plus

    @property
    def bound_floor(self) -> int:
        return bound_floor(self.girth)

    @property
    def status(self) -> str:
        return status_of(self.inertia.p_plus, self.girth)

    @property
    def family(self) -> FamilyLabel:
        return self.families[0] if self.families else Other()

    def to_json(self) -> dict:
        return {
            "graph": write_sgf(self.graph),
            "n": self.n,
            "m": self.m,
            "girth": self.girth,
            "balanced": self.balanced,
            "p_plus": self.inertia.p_plus,
            "n_minus": self.inertia.n_minus,
            "eta": self.inertia.eta,
            "bound_floor": self.bound_floor,
            "status": self.status,
            "family": str(self.family),
            "family_matches": [str(f) for f in self.families],
            "discrepancies": list(self.discrepancies),
            "lemmas": dict(sorted(self.lemmas.items())),
        }


def _make_record(g: SignedGraph, gr: int, inertia: InertiaTriple, families, balanced: bool) -> VerificationRecord:
    return VerificationRecord(graph=g, girth=gr, balanced=balanced, inertia=inertia, families=list(families))


def check_bound(g: SignedGraph, cross_check: bool = True, raise_on_violation: bool = True) -> VerificationRecord:
    """Girth, exact inertia and status of a connected graph containing a cycle.

    Raises :class:`BoundViolation` if ``p+ < ceil(g/2) - 1`` (unless
    ``raise_on_violation`` is false) and :class:`EngineMismatch` if the
    floating engine disagrees with the exact one.
    """
    if g.n == 0 or not is_connected(g):
        raise ValueError("bound check requires a connected graph")
    gr = girth_of(g)
    if gr is None:
        raise ValueError("girth undefined: graph is acyclic")
    inertia = exact_inertia(g)
    if cross_check:
        approx = float_spectrum(g).inertia()
        if approx != inertia:
            raise EngineMismatch(f"exact {tuple(inertia)} vs floating {tuple(approx)} on\n{write_sgf(g)}")
    balanced = is_balanced(g)
    rec = _make_record(g, gr, inertia, labels_from_shape(graph_shape(g), g, balanced), balanced)
    if raise_on_violation and rec.status == "strict":
        raise BoundViolation(f"p+ = {inertia.p_plus} < {rec.bound_floor} on\n{write_sgf(g)}")
    return rec


# --- statement checks -------------------------------------------------------------


class Claim(NamedTuple):
    statement: str
    reading: str  # "literal" or "corrected"
    holds: bool
    detail: str


def _cycle_at_equality(g: int, balanced: bool) -> bool:
    return cycle_inertia(g, balanced).p_plus == bound_floor(g)


def _parity_predicts_plus_one(label: CanonicalUnicyclic, reading: str) -> tuple[bool, str]:
    sd = StarDecomposition(label.t, label.gaps, label.leaves)
    cond = parity_condition(sd, label.girth).condition
    return _predict_parity(cond, "odd" if label.girth % 2 else "even", reading), cond


def statement_checks(rec: VerificationRecord) -> list[Claim]:
    """Evaluate every family statement that applies to ``rec`` under both readings."""
    g, st = rec.girth, rec.status
    eq, p1 = st == "equality", st == "plus-one"
    kinds = {type(f) for f in rec.families}
    claims: list[Claim] = []
    cycle = next((f for f in rec.families if isinstance(f, Cycle)), None)
    bcm = next((f for f in rec.families if isinstance(f, BalancedCompleteMultipartite)), None)

    if cycle is not None:
        detail = f"{_bal(cycle.balanced)} cycle, g mod 4 = {g % 4}, observed {st}"
        literal_eq = g % 4 in LITERAL_CYCLE_EQUALITY[cycle.balanced]
        true_eq = _cycle_at_equality(g, cycle.balanced)
        claims.append(Claim("theorem1(i)", "literal", literal_eq == eq, detail))
        claims.append(Claim("theorem1(i)", "corrected", true_eq == eq, detail))
        claims.append(Claim("theorem3(i)", "literal", (g % 4 in LITERAL_CYCLE_PLUS_ONE[cycle.balanced]) == p1, detail))
        claims.append(Claim("theorem3(i)", "corrected", (not true_eq) == p1, detail))
    if bcm is not None:
        detail = f"parts {list(bcm.parts)}, observed {st}"
        claims.append(Claim("theorem1(ii)", "literal", (min(bcm.parts) >= 2) == eq, detail))
        claims.append(Claim("theorem1(ii)", "corrected", eq, detail))

    # theorem 2: outside the equality families, p+ >= ceil(g/2)
    in_literal_family = bcm is not None or (cycle is not None and g % 4 in LITERAL_CYCLE_EQUALITY[cycle.balanced])
    in_true_family = bcm is not None or (cycle is not None and _cycle_at_equality(g, cycle.balanced))
    detail = f"{rec.family}, observed {st}"
    if not in_literal_family:
        claims.append(Claim("theorem2", "literal", st in ("plus-one", "higher"), detail))
    if not in_true_family:
        claims.append(Claim("theorem2", "corrected", st in ("plus-one", "higher"), detail))

    for f in rec.families:
        if isinstance(f, CanonicalUnicyclic):
            for reading in ("literal", "corrected"):
                predicted, cond = _parity_predicts_plus_one(f, reading)
                detail = f"{cond}, g mod 4 = {g % 4}, observed {st}"
                claims.append(Claim("theorem3(ii)/(iii)", reading, predicted == p1, detail))
        elif isinstance(f, CycleWithPendantStar):
            detail = f"{_bal(f.balanced)} cycle + star, g mod 4 = {g % 4}, observed {st}"
            literal = g % 4 in LITERAL_CYCLE_EQUALITY[f.balanced]
            claims.append(Claim("theorem3(iv)/(v)", "literal", literal == p1, detail))
            claims.append(Claim("theorem3(iv)/(v)", "corrected", _cycle_at_equality(g, f.balanced) == p1, detail))
        elif isinstance(f, Theta):
            listed = (f.k, f.l, f.m, f.signs) in LITERAL_THETA_PLUS_ONE
            detail = f"{f}, observed {st}"
            claims.append(Claim("theorem3(vi)", "literal", listed == p1, detail))

    if p1:
        covered = bool(kinds & {Cycle, CanonicalUnicyclic, CycleWithPendantStar, Theta})
        detail = f"{rec.family}, girth {g}"
        # no derived replacement exists for these two, so only the literal reading is scored
        claims.append(Claim("theorem3(completeness)", "literal", covered, detail))
    return claims


def check_equality_families(rec: VerificationRecord) -> VerificationRecord:
    """Attach the statements that ``rec`` contradicts under the literal reading.

    Records of every status are examined, since the family statements also
    predict which graphs are *not* at equality or plus-one.
    """
    rec.discrepancies = sorted({c.statement for c in statement_checks(rec) if c.reading == "literal" and not c.holds})
    return rec


# --- lemma checks -------------------------------------------------------------------


def lemma_checks(g: SignedGraph, rec: VerificationRecord, rng: Optional[random.Random] = None) -> list[tuple[str, bool]]:
    """Named outcomes of every applicable supporting lemma on ``g``."""
    rng = rng or random.Random(DEFAULT_SEED)
    out = []
    p = rec.inertia.p_plus

    leaves = pendant_vertices(g)
    if leaves:
        x = min(leaves)
        y = next(v if u == x else u for u, v, _ in g.edges if x in (u, v))
        rest = exact_inertia(g.remove_vertices([x, y])).p_plus
        out.append(("pendant_reduction", p == rest + 1))

    if g.n >= 2:
        size = rng.randint(1, g.n - 1)
        sub = rng.sample(range(g.n), size)
        h = exact_inertia(induced_subgraph(g, sub))
        out.append(("interlacing", h.p_plus <= p and h.n_minus <= rec.inertia.n_minus))

    is_bcm = any(isinstance(f, BalancedCompleteMultipartite) for f in rec.families)
    out.append(("p_plus_one_iff_bcm", (p == 1) == is_bcm))

    if any(isinstance(f, Cycle) and not f.balanced for f in rec.families):
        out.append(("unbalanced_cycle_floor", p >= 2))

    cyc = shortest_cycle(g)
    if cyc is not None:
        paths = internally_disjoint_path_check(g, cyc)
        out.append(("path_length", all(k >= ceil_half(rec.girth) for k, _ in paths)))
        if exact_inertia(induced_subgraph(g, cyc.vertices)).p_plus == p:
            out.append(("neighborhood", not neighborhood_layers(g, cyc.vertices).layer(2)))
    return out


# --- sweep ------------------------------------------------------------------------


class _Tally:
    """Associative accumulator for sweep results; merge order fixes witness order."""

    def __init__(self):
        self.totals: Counter = Counter()
        self.underlying: Counter = Counter()
        self.acyclic: Counter = Counter()
        self.signed: Counter = Counter()
        self.counterexamples: list[str] = []
        self.discrepancies: dict = {}
        self.statements: dict = {}
        self.structure: dict = {}
        self.lemmas: dict = {}

    @staticmethod
    def _bump(table: dict, key, ok: bool, witness: str) -> None:
        entry = table.setdefault(key, [0, 0, []])
        entry[0] += 1
        if not ok:
            entry[1] += 1
            if len(entry[2]) < WITNESS_LIMIT:
                entry[2].append(witness)

    def add(self, rec: VerificationRecord, claims: list[Claim], lemmas: list[tuple[str, bool]]) -> None:
        sgf = write_sgf(rec.graph)
        st = rec.status
        self.totals[rec.n, rec.girth, st] += 1
        self.signed[rec.n] += 1
        if st == "strict":
            self.counterexamples.append(sgf)
        for c in claims:
            self._bump(self.statements, (c.statement, c.reading), c.holds, sgf)
            if c.reading == "literal" and not c.holds:
                self._bump(self.discrepancies, (c.statement, c.detail), False, sgf)
        kinds = {type(f) for f in rec.families}
        if st == "equality":
            self._bump(self.structure, "equality_structure", bool(kinds & {Cycle, BalancedCompleteMultipartite}), sgf)
        self._bump(self.structure, "p_plus_one_iff_bcm", (rec.p_plus == 1) == (BalancedCompleteMultipartite in kinds), sgf)
        for name, ok in lemmas:
            self._bump(self.lemmas, name, ok, sgf)

    def merge(self, other: "_Tally") -> None:
        self.totals.update(other.totals)
        self.underlying.update(other.underlying)
        self.acyclic.update(other.acyclic)
        self.signed.update(other.signed)
        self.counterexamples += other.counterexamples
        for name in ("discrepancies", "statements", "structure", "lemmas"):
            mine, theirs = getattr(self, name), getattr(other, name)
            for key, (checked, failed, wit) in theirs.items():
                entry = mine.setdefault(key, [0, 0, []])
                entry[0] += checked
                entry[1] += failed
                entry[2] += wit[: WITNESS_LIMIT - len(entry[2])]


def _record_seed(seed: int, code: CanonicalCode, vec: tuple[int, ...]) -> random.Random:
    return random.Random(f"{seed}/{code.n}/{code.bits}/{''.join(map(str, vec))}")


def _graph_records(
    code: CanonicalCode, g: SignedGraph, seed: int, with_lemmas: bool
) -> Iterator[tuple[VerificationRecord, list[Claim], list[tuple[str, bool]]]]:
    """Records for every switching class of the underlying graph ``g``, in free-edge-vector order."""
    gr = girth_of(g)
    if gr is None:
        return
    shape: Shape = graph_shape(g)
    _, free = spanning_tree(g)
    base = sorted((u, v) for u, v, _ in g.edges)
    index = {e: i for i, e in enumerate(base)}
    vectors = list(product((0, 1), repeat=len(free)))
    signings = []
    mats = np.zeros((len(vectors), g.n, g.n))
    for b, vec in enumerate(vectors):
        signs = [1] * len(base)
        for e, bit in zip(free, vec):
            if bit:
                signs[index[e]] = -1
        rows = [[0] * g.n for _ in range(g.n)]
        for (u, v), s in zip(base, signs):
            rows[u][v] = rows[v][u] = s
        mats[b] = rows
        signings.append((vec, signs, rows))
    approx = jacobi_eigenvalues(mats)
    for (vec, signs, rows), eig in zip(signings, approx):
        inertia = exact_inertia_matrix(rows)
        fp = int((eig > ZERO_TOLERANCE).sum())
        fn = int((eig < -ZERO_TOLERANCE).sum())
        sg = SignedGraph(g.n, frozenset((u, v, s) for (u, v), s in zip(base, signs)))
        if (fp, fn, g.n - fp - fn) != tuple(inertia):
            raise EngineMismatch(f"exact {tuple(inertia)} vs floating {(fp, fn)} on\n{write_sgf(sg)}")
        # tree edges are positive, so the signing is balanced iff no free edge is negative
        balanced = not any(vec)
        rec = _make_record(sg, gr, inertia, labels_from_shape(shape, sg, balanced), balanced)
        claims = statement_checks(rec)
        rec.discrepancies = sorted({c.statement for c in claims if c.reading == "literal" and not c.holds})
        lemmas = []
        if with_lemmas:
            lemmas = lemma_checks(sg, rec, _record_seed(seed, code, vec))
            rec.lemmas = dict(lemmas)
        yield rec, claims, lemmas


def iter_records(max_n: int, seed: int = DEFAULT_SEED, lemmas: bool = False) -> Iterator[VerificationRecord]:
    """Every checked record up to ``max_n`` in canonical order (single process)."""
    _check_max_n(max_n)
    for n in range(1, max_n + 1):
        for code, g in connected_graphs_with_codes(n):
            for rec, _, _ in _graph_records(code, g, seed, lemmas):
                yield rec


def _work(task) -> tuple[_Tally, list[str]]:
    code, g, seed, with_lemmas, want_lines = task
    tally = _Tally()
    tally.underlying[g.n] += 1
    lines = []
    produced = False
    for rec, claims, lemmas in _graph_records(code, g, seed, with_lemmas):
        produced = True
        tally.add(rec, claims, lemmas)
        if want_lines:
            lines.append(json.dumps(rec.to_json(), sort_keys=True, separators=(",", ":")))
    if not produced:
        tally.acyclic[g.n] += 1
    return tally, lines


def _check_max_n(max_n: int) -> None:
    if not 3 <= max_n <= MAX_N:
        raise ValueError(f"max_n must lie in 3..{MAX_N}, got {max_n}")


# --- audits -----------------------------------------------------------------------


def cycle_class_audit(max_n: int = 32) -> dict:
    """Which ``(balance, n mod 4)`` classes put cycles at equality, against the stated classes."""
    rows = []
    observed: dict[tuple[bool, int], set] = {}
    for n in range(3, max_n + 1):
        for balanced in (True, False):
            closed = cycle_inertia(n, balanced)
            exact = exact_inertia(make_cycle(n, balanced))
            st = status_of(exact.p_plus, n)
            observed.setdefault((balanced, n % 4), set()).add(st)
            rows.append({
                "n": n,
                "balanced": balanced,
                "p_plus": exact.p_plus,
                "closed_form_agrees": closed == exact,
                "status": st,
                "literal_status": "equality" if n % 4 in LITERAL_CYCLE_EQUALITY[balanced] else "plus-one",
            })
    table, mismatches = {}, []
    for balanced in (True, False):
        side = table.setdefault(_bal(balanced), {})
        for r in range(4):
            sts = sorted(observed.get((balanced, r), ()))
            literal = "equality" if r in LITERAL_CYCLE_EQUALITY[balanced] else "plus-one"
            side[str(r)] = {"observed": sts, "literal": literal}
            if sts != [literal]:
                witness = next(row["n"] for row in rows if row["balanced"] == balanced and row["n"] % 4 == r)
                mismatches.append({
                    "statement": "theorem1(i)/theorem3(i)",
                    "balanced": balanced,
                    "class_mod4": r,
                    "literal": literal,
                    "observed": sts,
                    "witness_n": witness,
                    "witness": write_sgf(make_cycle(witness, balanced)),
                })
    return {
        "max_n": max_n,
        "all_agree": all(r["closed_form_agrees"] for r in rows),
        "table": table,
        "mismatches": mismatches,
        "rows": rows,
    }


def pendant_star_audit(girths: Iterable[int] = range(3, 13), star_sizes: Iterable[int] = (1, 2, 3)) -> dict:
    """Status of a cycle joined to a star centre, per ``(balance, g mod 4)``, against the stated classes."""
    observed: dict[tuple[bool, int], set] = {}
    rows = []
    for g, balanced, t in product(girths, (True, False), star_sizes):
        p = exact_inertia(make_cycle_with_pendant_star(g, balanced, t)).p_plus
        st = status_of(p, g)
        rows.append({"girth": g, "balanced": balanced, "t": t, "p_plus": p, "status": st})
        observed.setdefault((balanced, g % 4), set()).add(st)
    table, mismatches = {}, []
    for (balanced, r), sts in sorted(observed.items()):
        literal = "plus-one" if r in LITERAL_CYCLE_EQUALITY[balanced] else "not plus-one"
        got = sorted(sts)
        table.setdefault(_bal(balanced), {})[str(r)] = {"observed": got, "literal": literal}
        if (got == ["plus-one"]) != (literal == "plus-one"):
            witness = next(x for x in rows if x["balanced"] == balanced and x["girth"] % 4 == r)
            mismatches.append({
                "statement": "theorem3(iv)/(v)",
                "balanced": balanced,
                "class_mod4": r,
                "literal": literal,
                "observed": got,
                "witness": write_sgf(make_cycle_with_pendant_star(witness["girth"], balanced, witness["t"])),
            })
    return {"table": table, "mismatches": mismatches, "rows": rows}


def unicyclic_grid(max_girth: int = 10, max_stars: int = 3, max_leaves: int = 3):
    """``(girth, stars, balanced)`` for every constructor-grid canonical unicyclic graph."""
    for g in range(3, max_girth + 1):
        for t in range(1, max_stars + 1):
            for positions in combinations(range(g), t):
                for counts in product(range(1, max_leaves + 1), repeat=t):
                    for balanced in (True, False):
                        yield g, list(zip(positions, counts)), balanced


def unicyclic_parity_audit(max_girth: int = 10, max_stars: int = 3, max_leaves: int = 3) -> dict:
    """Check ``p+ = t + sum floor(n_i/2)`` on the grid and tabulate parity condition against status.

    The table is keyed by condition and girth parity; for each cell it lists
    observed statuses next to the literal prediction and the one from
    the leaf-peeling case analysis.
    """
    law_failures = []
    checked = 0
    cells: dict[tuple[str, str], set] = {}
    for g, stars, balanced in unicyclic_grid(max_girth, max_stars, max_leaves):
        graph = make_canonical_unicyclic(g, stars, balanced)
        sd = star_decomposition(graph)
        predicted = sd.t + sum(x // 2 for x in sd.gaps)
        actual = exact_inertia(graph).p_plus
        checked += 1
        if predicted != actual and len(law_failures) < WITNESS_LIMIT:
            law_failures.append(write_sgf(graph))
        cond = parity_condition(sd, g).condition
        parity = "odd" if g % 2 else "even"
        cells.setdefault((cond, parity), set()).add(status_of(actual, g))
    table = []
    for (cond, parity), sts in sorted(cells.items()):
        literal = _predict_parity(cond, parity, "literal")
        corrected = _predict_parity(cond, parity, "corrected")
        table.append({
            "condition": cond,
            "girth_parity": parity,
            "girth_classes_mod4": [1, 3] if parity == "odd" else [0, 2],
            "observed": sorted(sts),
            "literal_predicts_plus_one": literal,
            "corrected_predicts_plus_one": corrected,
            "literal_agrees": (sorted(sts) == ["plus-one"]) == literal,
            "corrected_agrees": (sorted(sts) == ["plus-one"]) == corrected,
        })
    return {
        "grid": {"max_girth": max_girth, "max_stars": max_stars, "max_leaves": max_leaves},
        "checked": checked,
        "law_failures": law_failures,
        "table": table,
        "interchange": [
            {"condition": r["condition"], "girth_parity": r["girth_parity"]}
            for r in table
            if not r["literal_agrees"] and r["corrected_agrees"]
        ],
    }


def _predict_parity(cond: str, parity: str, reading: str) -> bool:
    if cond == "t=1":
        return True
    odd = parity == "odd"
    if reading == "literal":
        return cond == ("all-gaps-odd" if odd else "exactly-one-even-gap")
    return cond == ("exactly-one-even-gap" if odd else "all-gaps-odd")


# --- report -----------------------------------------------------------------------


@dataclass
class VerificationReport:
    max_n: int
    seed: int
    lemma_checks: bool
    tally: _Tally
    audits: dict
    record_lines: Optional[list[str]] = None
    runtime: dict = field(default_factory=dict)

    @property
    def counterexamples(self) -> list[str]:
        return self.tally.counterexamples

    @property
    def bound_holds(self) -> bool:
        return not self.tally.counterexamples

    def totals(self) -> dict:
        out: dict = {}
        for (n, g, st), c in sorted(self.tally.totals.items()):
            out.setdefault(str(n), {}).setdefault(str(g), {})[st] = c
        return out

    @staticmethod
    def _table(entries: dict) -> dict:
        return {
            key: {"checked": c, "failed": f, "witnesses": w} for key, (c, f, w) in sorted(entries.items())
        }

    def statements(self) -> dict:
        out: dict = {}
        for (stmt, reading), (c, f, w) in sorted(self.tally.statements.items()):
            out.setdefault(stmt, {})[reading] = {"checked": c, "mismatches": f, "witnesses": w}
        return out

    def discrepancies(self) -> list[dict]:
        return [
            {"statement": s, "detail": d, "count": f, "witnesses": w}
            for (s, d), (_, f, w) in sorted(self.tally.discrepancies.items())
        ]

    def summary(self) -> dict:
        t = self.tally
        ns = sorted(set(t.underlying) | set(t.signed))
        out = {
            "format": REPORT_FORMAT,
            "options": {"max_n": self.max_n, "seed": self.seed, "lemma_checks": self.lemma_checks},
            "graphs": {
                str(n): {
                    "underlying": t.underlying[n],
                    "acyclic_skipped": t.acyclic[n],
                    "signed_checked": t.signed[n],
                }
                for n in ns
            },
            "records": sum(t.signed.values()),
            "totals": self.totals(),
            "bound_holds": self.bound_holds,
            "counterexamples": list(t.counterexamples),
            "structure_checks": self._table(t.structure),
            "statements": self.statements(),
            "discrepancies": self.discrepancies(),
            "audits": self.audits,
        }
        if self.lemma_checks:
            out["lemma_checks"] = self._table(t.lemmas)
        return out

    def write(self, fh, footer: bool = True, records_path=None) -> None:
        """Summary line, one line per record, then an optional runtime footer line."""
        fh.write(json.dumps(self.summary(), sort_keys=True, separators=(",", ":")) + "\n")
        if records_path is not None:
            with open(records_path, encoding="ascii") as src:
                for line in src:
                    fh.write(line)
        elif self.record_lines is not None:
            for line in self.record_lines:
                fh.write(line + "\n")
        if footer:
            fh.write(json.dumps({"runtime": self.runtime}, sort_keys=True) + "\n")


def sweep(
    max_n: int,
    *,
    jobs: int = 1,
    seed: int = DEFAULT_SEED,
    lemmas: bool = False,
    keep_records: bool = False,
    record_sink: Optional[Callable[[str], None]] = None,
    audits: bool = True,
    progress: Optional[Callable[[int, int], None]] = None,
) -> VerificationReport:
    """Check every switching class of every connected graph on up to ``max_n`` vertices.

    Work is split by underlying graph; results come back in canonical order
    (vertex count, canonical code, free-edge vector) whatever ``jobs`` is,
    so the report is deterministic.  Raises :class:`EngineMismatch` when the
    two inertia engines disagree.
    """
    _check_max_n(max_n)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    t0 = time.perf_counter()
    want_lines = keep_records or record_sink is not None
    tasks = [
        (code, g, seed, lemmas, want_lines)
        for n in range(1, max_n + 1)
        for code, g in connected_graphs_with_codes(n)
    ]
    t_enum = time.perf_counter() - t0
    tally = _Tally()
    kept: Optional[list[str]] = [] if keep_records else None

    def consume(results):
        for i, (part, lines) in enumerate(results, start=1):
            tally.merge(part)
            for line in lines:
                if kept is not None:
                    kept.append(line)
                if record_sink is not None:
                    record_sink(line)
            if progress is not None:
                progress(i, len(tasks))

    if jobs == 1:
        consume(map(_work, tasks))
    else:
        from multiprocessing import get_context

        with get_context("spawn" if _no_fork() else "fork").Pool(jobs) as pool:
            consume(pool.imap(_work, tasks, chunksize=max(1, len(tasks) // (jobs * 16))))
    t_sweep = time.perf_counter() - t0 - t_enum
    audit = {}
    if audits:
        audit = {
            "cycle_classes": cycle_class_audit(32),
            "pendant_star": pendant_star_audit(),
            "unicyclic_parity": unicyclic_parity_audit(),
        }
    runtime = {
        "enumeration_seconds": round(t_enum, 3),
        "sweep_seconds": round(t_sweep, 3),
        "audit_seconds": round(time.perf_counter() - t0 - t_enum - t_sweep, 3),
        "jobs": jobs,
    }
    return VerificationReport(max_n, seed, lemmas, tally, audit, kept, runtime)


def _no_fork() -> bool:
    import multiprocessing

    return "fork" not in multiprocessing.get_all_start_methods()
