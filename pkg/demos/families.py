"""Tour of the extremal families: build each one, then classify it.

Each constructor output is fed back through the recognizer and the bound
checker, so the printed label, p+ and status come from the graph itself.
"""

from signed_inertia import (
    check_bound,
    check_equality_families,
    make_canonical_unicyclic,
    make_complete_multipartite,
    make_cycle,
    make_cycle_with_pendant_star,
    make_theta,
    recognize_all,
)

examples = {
    "balanced C_8": make_cycle(8),
    "unbalanced C_4": make_cycle(4, balanced=False),
    "K_{2,3}": make_complete_multipartite([2, 3]),
    "K_{1,1,2}": make_complete_multipartite([1, 1, 2]),
    "C_6 with three single leaves": make_canonical_unicyclic(6, [(0, 1), (2, 1), (4, 1)]),
    "C_8 joined to a 1-leaf star": make_cycle_with_pendant_star(8, True, 1),
    "B(5,5,5)": make_theta(5, 5, 5),
    "B(5,4,5)": make_theta(5, 4, 5),
    "B(5,3,5), both 6-cycles negative": make_theta(5, 3, 5, (-1, -1)),
}

for name, g in examples.items():
    rec = check_equality_families(check_bound(g))
    labels = ", ".join(str(x) for x in recognize_all(g))
    print(f"{name:34} g={rec.girth} p+={rec.p_plus} floor={rec.bound_floor} {rec.status:9} [{labels}]")
    if rec.discrepancies:
        print(f"{'':34} fails under the literal reading: {', '.join(rec.discrepancies)}")
