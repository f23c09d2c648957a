"""Spectral invariants of signed graphs and an exhaustive checker for the girth bound on ``p+``."""

from .core import SGFError, SignedGraph, induced_subgraph, parse_sgf, read_sgf, switch, write_sgf
from .enumeration import (
    canonical_code,
    enumerate_connected_graphs,
    enumerate_switching_classes,
    gauge_fix,
)
from .families import (
    BalancedCompleteMultipartite,
    CanonicalUnicyclic,
    Cycle,
    CycleWithPendantStar,
    Other,
    Path,
    Star,
    Theta,
    make_canonical_unicyclic,
    make_complete_multipartite,
    make_cycle,
    make_cycle_with_pendant_star,
    make_path,
    make_star,
    make_theta,
    parity_condition,
    recognize,
    recognize_all,
    star_decomposition,
)
from .inertia import (
    InertiaTriple,
    Spectrum,
    cycle_inertia,
    cycle_spectrum_closed_form,
    exact_inertia,
    float_spectrum,
    pendant_reduce,
    positive_inertia,
)
from .structure import girth, is_balanced, is_connected, shortest_cycle
from .verify import check_bound, check_equality_families, sweep

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
