"""Command-line front end.

Exit codes: 0 success, 1 bound violation or engine mismatch, 2 usage, parse
or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .core import SGFError, SignedGraph, read_sgf, write_sgf
from .enumeration import MAX_N, enumerate_connected_graphs, enumerate_switching_classes
from .families import (
    make_canonical_unicyclic,
    make_complete_multipartite,
    make_cycle,
    make_cycle_with_pendant_star,
    make_path,
    make_star,
    make_theta,
)
from .inertia import ZERO_TOLERANCE, ConvergenceError, EngineMismatch, exact_inertia, float_spectrum
from .structure import girth, is_balanced, is_connected
from .verify import DEFAULT_SEED, BoundViolation, check_bound, check_equality_families, statement_checks, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 7


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    input: str = "-"
    out: Optional[str] = None
    max_n: int = DEFAULT_MAX_N
    jobs: int = 1
    seed: int = DEFAULT_SEED
    exact_only: bool = False
    float_only: bool = False
    lemma_checks: bool = False
    dump_dir: Optional[str] = None
    footer: bool = True
    family: Optional[str] = None
    params: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not 3 <= self.max_n <= MAX_N:
            raise UsageError(f"--max-n must lie in 3..{MAX_N}, got {self.max_n}")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be at least 1, got {self.jobs}")
        if self.exact_only and self.float_only:
            raise UsageError("--exact-only and --float-only are mutually exclusive")


def fmt_eig(x: float) -> str:
    """Six significant digits; values inside the zero tolerance print as 0."""
    if abs(x) <= ZERO_TOLERANCE:
        return "0"
    return f"{x:.6g}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _triple(t) -> str:
    return f"({t[0]},{t[1]},{t[2]})"


class _Output:
    """Standard output or a file named by ``--out``."""

    def __init__(self, path: Optional[str]):
        self.path = path
        self.fh = None

    def __enter__(self):
        if self.path is None:
            self.fh = sys.stdout
        else:
            try:
                self.fh = open(self.path, "w", encoding="ascii", newline="\n")
            except OSError as exc:
                raise UsageError(f"cannot write {self.path}: {exc.strerror}") from exc
        return self.fh

    def __exit__(self, *exc):
        if self.path is not None and self.fh is not None:
            self.fh.close()


# --- commands ---------------------------------------------------------------------


def cmd_info(cfg: CliConfig) -> int:
    g = read_sgf(cfg.input)
    connected = g.n > 0 and is_connected(g)
    gr = girth(g)
    with _Output(cfg.out) as out:
        out.write(f"n={g.n} m={g.m} connected={_flag(connected)}\n")
        spec = None if cfg.exact_only else float_spectrum(g)
        inertia = spec.inertia() if cfg.float_only else exact_inertia(g)
        engine = "float" if cfg.float_only else "exact"
        out.write(
            f"girth={gr if gr is not None else 'none'} balanced={_flag(is_balanced(g))} "
            f"inertia={_triple(inertia)}\n"
        )
        out.write(f"engine={engine}\n")
        if spec is not None:
            out.write("spectrum=" + " ".join(fmt_eig(x) for x in spec.values) + "\n")
    return EXIT_OK


def cmd_spectrum(cfg: CliConfig) -> int:
    g = read_sgf(cfg.input)
    spec = float_spectrum(g)
    with _Output(cfg.out) as out:
        for x in spec.values:
            out.write(fmt_eig(x) + "\n")
        out.write(f"# inertia={_triple(spec.inertia())}\n")
    return EXIT_OK


def cmd_classify(cfg: CliConfig) -> int:
    g = read_sgf(cfg.input)
    if g.n == 0 or not is_connected(g):
        raise UsageError("classification needs a connected graph")
    if girth(g) is None:
        raise UsageError("girth undefined: the graph is acyclic")
    rec = check_equality_families(check_bound(g, raise_on_violation=False))
    with _Output(cfg.out) as out:
        out.write(f"{rec.family} status={rec.status}\n")
        out.write(f"girth={rec.girth} bound_floor={rec.bound_floor} p_plus={rec.p_plus} inertia={_triple(rec.inertia)}\n")
        others = [str(f) for f in rec.families[1:]]
        if others:
            out.write("also=" + " ".join(others) + "\n")
        for c in statement_checks(rec):
            if not c.holds:
                out.write(f"discrepancy {c.statement} [{c.reading}]: {c.detail}\n")
    return EXIT_FAIL if rec.status == "strict" else EXIT_OK


def _ints(params: Sequence[str], count: Optional[int] = None, what: str = "parameters") -> list[int]:
    if count is not None and len(params) != count:
        raise UsageError(f"expected {count} {what}, got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"{what} must be integers: {' '.join(params)}") from None


def _balance_word(word: str) -> bool:
    if word not in ("balanced", "unbalanced"):
        raise UsageError(f"expected 'balanced' or 'unbalanced', got {word!r}")
    return word == "balanced"


def _gen_cycle(p):
    if len(p) not in (1, 2):
        raise UsageError("cycle takes N [balanced|unbalanced]")
    return make_cycle(_ints(p[:1])[0], _balance_word(p[1]) if len(p) == 2 else True)


def _gen_unicyclic(p):
    if not p:
        raise UsageError("unicyclic takes G POS:LEAVES ... [balanced|unbalanced]")
    balanced = True
    if p[-1] in ("balanced", "unbalanced"):
        balanced = _balance_word(p[-1])
        p = p[:-1]
    girth_ = _ints(p[:1])[0]
    stars = []
    for tok in p[1:]:
        pos, sep, cnt = tok.partition(":")
        if not sep:
            raise UsageError(f"star spec must look like POS:LEAVES, got {tok!r}")
        stars.append(tuple(_ints([pos, cnt], what="star spec values")))
    return make_canonical_unicyclic(girth_, stars, balanced)


def _gen_theta(p):
    if len(p) not in (3, 4):
        raise UsageError("theta takes K L M [SIGNS], SIGNS like +- ")
    k, l, m = _ints(p[:3])  # noqa: E741
    signs = (1, 1)
    if len(p) == 4:
        if len(p[3]) != 2 or set(p[3]) - {"+", "-"}:
            raise UsageError(f"theta signs must be two of + or -, got {p[3]!r}")
        signs = tuple(1 if ch == "+" else -1 for ch in p[3])
    return make_theta(k, l, m, signs)


def _gen_pendant_star(p):
    if len(p) != 3:
        raise UsageError("pendant-star takes G balanced|unbalanced T")
    return make_cycle_with_pendant_star(_ints(p[:1])[0], _balance_word(p[1]), _ints(p[2:])[0])


SINGLE_FAMILIES: dict[str, Callable[[list[str]], SignedGraph]] = {
    "cycle": _gen_cycle,
    "path": lambda p: make_path(_ints(p, 1)[0]),
    "star": lambda p: make_star(_ints(p, 1)[0]),
    "multipartite": lambda p: make_complete_multipartite(_ints(p)),
    "unicyclic": _gen_unicyclic,
    "pendant-star": _gen_pendant_star,
    "theta": _gen_theta,
}


def _stream(family: str, p: list[str]):
    n = _ints(p, 1)[0]
    if not 1 <= n <= MAX_N:
        raise UsageError(f"n must lie in 1..{MAX_N}, got {n}")
    for g in enumerate_connected_graphs(n):
        if family == "connected":
            yield g
        else:
            yield from enumerate_switching_classes(g)


STREAM_FAMILIES = ("connected", "signed")


def cmd_gen(cfg: CliConfig) -> int:
    fam, params = cfg.family, cfg.params
    if fam in SINGLE_FAMILIES:
        try:
            graphs = [SINGLE_FAMILIES[fam](params)]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        stem = "_".join([fam] + [p.replace("+", "p").replace("-", "m").replace(":", "x") for p in params])
    elif fam in STREAM_FAMILIES:
        graphs = list(_stream(fam, params))
        stem = f"{fam}_n{params[0]}"
    else:
        names = ", ".join(sorted(SINGLE_FAMILIES) + list(STREAM_FAMILIES))
        raise UsageError(f"unknown family {fam!r}; choose from {names}")

    if cfg.dump_dir is not None:
        try:
            os.makedirs(cfg.dump_dir, exist_ok=True)
            width = len(str(len(graphs)))
            for i, g in enumerate(graphs):
                name = f"{stem}.sgf" if len(graphs) == 1 else f"{stem}_{i:0{width}d}.sgf"
                with open(os.path.join(cfg.dump_dir, name), "w", encoding="ascii", newline="\n") as fh:
                    fh.write(write_sgf(g))
        except OSError as exc:
            raise UsageError(f"cannot write to {cfg.dump_dir}: {exc.strerror}") from exc
        print(f"wrote {len(graphs)} file(s) to {cfg.dump_dir}", file=sys.stderr)
        return EXIT_OK
    with _Output(cfg.out) as out:
        for i, g in enumerate(graphs):
            if len(graphs) > 1:
                out.write(("\n" if i else "") + f"# {stem} {i}\n")
            out.write(write_sgf(g))
    return EXIT_OK


def _summary_table(rep) -> str:
    s = rep.summary()
    lines = [f"{'n':>2} {'underlying':>10} {'acyclic':>8} {'signed':>8} {'strict':>7} {'equality':>9} {'plus-one':>9} {'higher':>8}"]
    for n, counts in s["graphs"].items():
        by = {st: 0 for st in ("strict", "equality", "plus-one", "higher")}
        for per in s["totals"].get(n, {}).values():
            for st, c in per.items():
                by[st] += c
        lines.append(
            f"{n:>2} {counts['underlying']:>10} {counts['acyclic_skipped']:>8} {counts['signed_checked']:>8} "
            f"{by['strict']:>7} {by['equality']:>9} {by['plus-one']:>9} {by['higher']:>8}"
        )
    lines.append(f"bound holds: {_flag(rep.bound_holds)} ({len(rep.counterexamples)} counterexamples)")
    for stmt, readings in s["statements"].items():
        parts = [f"{r} {v['mismatches']}/{v['checked']}" for r, v in readings.items()]
        lines.append(f"{stmt}: mismatches " + ", ".join(parts))
    for name, v in s.get("lemma_checks", {}).items():
        lines.append(f"lemma {name}: {v['failed']} failed of {v['checked']}")
    return "\n".join(lines) + "\n"


def _dump_witnesses(rep, directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    for i, sgf in enumerate(rep.counterexamples):
        with open(os.path.join(directory, f"counterexample_{i}.sgf"), "w", encoding="ascii", newline="\n") as fh:
            fh.write(sgf)
    for i, d in enumerate(rep.discrepancies()):
        tag = d["statement"].replace("(", "_").replace(")", "").replace("/", "")
        for j, sgf in enumerate(d["witnesses"]):
            name = f"discrepancy_{i:03d}_{tag}_{j}.sgf"
            with open(os.path.join(directory, name), "w", encoding="ascii", newline="\n") as fh:
                fh.write(f"# {d['statement']}: {d['detail']}\n" + sgf)


def cmd_verify(cfg: CliConfig) -> int:
    if cfg.max_n == MAX_N:
        print(f"warning: --max-n {MAX_N} checks millions of signings and can take hours", file=sys.stderr)
    with tempfile.TemporaryDirectory() as tmp:
        records_path = os.path.join(tmp, "records.jsonl")
        with open(records_path, "w", encoding="ascii", newline="\n") as sink:
            try:
                rep = sweep(
                    cfg.max_n,
                    jobs=cfg.jobs,
                    seed=cfg.seed,
                    lemmas=cfg.lemma_checks,
                    record_sink=lambda line: sink.write(line + "\n"),
                )
            except (EngineMismatch, ConvergenceError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_FAIL
        with _Output(cfg.out) as out:
            rep.write(out, footer=cfg.footer, records_path=records_path)
    table = _summary_table(rep)
    (sys.stderr if cfg.out is None else sys.stdout).write(table)
    if cfg.dump_dir is not None:
        try:
            _dump_witnesses(rep, cfg.dump_dir)
        except OSError as exc:
            raise UsageError(f"cannot write to {cfg.dump_dir}: {exc.strerror}") from exc
    return EXIT_OK if rep.bound_holds else EXIT_FAIL


COMMANDS = {"info": cmd_info, "spectrum": cmd_spectrum, "classify": cmd_classify, "gen": cmd_gen, "verify": cmd_verify}


# --- argument parsing -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="signed-inertia", description="Inertia, girth and family tools for signed graphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def graph_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", nargs="?", default="-", help="SGF file, or - for standard input")
        p.add_argument("--out", help="write output here instead of standard output")
        return p

    p = graph_cmd("info", "summary invariants of one graph")
    engines = p.add_mutually_exclusive_group()
    engines.add_argument("--exact-only", action="store_true", help="skip the floating spectrum")
    engines.add_argument("--float-only", action="store_true", help="take inertia from the floating spectrum")
    graph_cmd("spectrum", "floating eigenvalues, largest first")
    graph_cmd("classify", "family label and bound status")

    p = sub.add_parser("gen", help="write family members or enumeration streams as SGF")
    p.add_argument("family", help="cycle, path, star, multipartite, unicyclic, pendant-star, theta, connected or signed")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.add_argument("--dump-dir", help="write one .sgf file per graph into this directory")

    p = sub.add_parser("verify", help="exhaustive sweep of all small connected signed graphs")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help=f"largest vertex count, 3..{MAX_N}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--lemma-checks", action="store_true")
    p.add_argument("--dump-dir", help="write witness graphs for counterexamples and discrepancies here")
    p.add_argument("--out")
    p.add_argument("--no-footer", dest="footer", action="store_false", help="omit the runtime footer line")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> CliConfig:
    ns = vars(build_parser().parse_args(argv))
    known = set(CliConfig.__dataclass_fields__)
    return CliConfig(**{k: v for k, v in ns.items() if k in known})


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SGFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: no such file", file=sys.stderr)
        return EXIT_USAGE
    except BoundViolation as exc:
        print(f"error: bound violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
