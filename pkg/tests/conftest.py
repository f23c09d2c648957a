from __future__ import annotations

import random
from contextlib import contextmanager

import pytest

from signed_inertia.core import SignedGraph

ACCEPTANCE = pytest.StashKey[dict]()


def random_signing(rng: random.Random, n: int, pairs) -> SignedGraph:
    return SignedGraph.from_edges(n, [(u, v, rng.choice((1, -1))) for u, v in pairs])


def random_tree_pairs(rng: random.Random, n: int) -> list[tuple[int, int]]:
    return [(rng.randrange(v), v) for v in range(1, n)]


def random_tree(rng: random.Random, n: int) -> SignedGraph:
    return random_signing(rng, n, random_tree_pairs(rng, n))


def random_unicyclic(rng: random.Random, n: int) -> SignedGraph:
    """Random tree plus one extra edge (so exactly one cycle); needs ``n >= 3``."""
    pairs = random_tree_pairs(rng, n)
    present = set(pairs)
    missing = [(u, v) for v in range(n) for u in range(v) if (u, v) not in present]
    return random_signing(rng, n, pairs + [rng.choice(missing)])


def random_connected(rng: random.Random, n: int, density: float) -> SignedGraph:
    pairs = set(random_tree_pairs(rng, n))
    for v in range(n):
        for u in range(v):
            if rng.random() < density:
                pairs.add((u, v))
    return random_signing(rng, n, sorted(pairs))


def random_graph(rng: random.Random, n: int, density: float) -> SignedGraph:
    pairs = [(u, v) for v in range(n) for u in range(v) if rng.random() < density]
    return random_signing(rng, n, pairs)


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance criterion as PASS or FAIL."""
    results = request.config.stash[ACCEPTANCE]

    @contextmanager
    def run(number: int, title: str):
        try:
            yield
        except BaseException:
            results[number] = ("FAIL", title)
            print(f"criterion {number}: FAIL  {title}")
            raise
        results[number] = ("PASS", title)
        print(f"criterion {number}: PASS  {title}")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash[ACCEPTANCE]
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(results):
        verdict, title = results[number]
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")
