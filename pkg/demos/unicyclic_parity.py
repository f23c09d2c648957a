"""Where canonical unicyclic graphs land relative to the girth bound.

Peeling a leaf together with its star centre lowers p+ by one, and what
remains is a union of paths, so p+ = t + sum(floor(n_i / 2)) over the gap
orders n_i.  Since g = t + sum(n_i), that lands on ceil(g/2) exactly when
t = 1 or the gap parities line up with g in one particular way.  The script
also shows that the two conditions are each tied to a single parity of g.
"""

import numpy as np

from signed_inertia import make_canonical_unicyclic, float_spectrum
from signed_inertia.verify import unicyclic_parity_audit

audit = unicyclic_parity_audit()
print(f"checked {audit['checked']} graphs, law failures: {len(audit['law_failures'])}")
print()
print(f"{'condition':22} {'g parity':8} {'observed':12} {'literal pairing':16} corrected pairing")
for row in audit["table"]:
    print(
        f"{row['condition']:22} {row['girth_parity']:8} {','.join(row['observed']):12} "
        f"{'agrees' if row['literal_agrees'] else 'disagrees':16} {'agrees' if row['corrected_agrees'] else 'disagrees'}"
    )

# a girth-6 member with positive eigenvalues sqrt(2), sqrt(3), sqrt(6)
g = make_canonical_unicyclic(6, [(0, 1), (2, 1), (4, 3)])
positive = [x for x in float_spectrum(g).values if x > 1e-8]
print()
print("C_6 with stars of 1, 1 and 3 leaves on alternate vertices:")
print("positive eigenvalues", " ".join(f"{x:.6g}" for x in positive))
assert np.allclose(positive, [6**0.5, 3**0.5, 2**0.5])
