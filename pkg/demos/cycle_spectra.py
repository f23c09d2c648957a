"""Cycle spectra and the congruence classes they force.

A balanced n-cycle has eigenvalues 2cos(2*pi*j/n); switching one edge
negative shifts every angle by pi/n.  Counting positive eigenvalues against
ceil(n/2) - 1 shows which residues of n mod 4 sit on the girth bound.
"""

from signed_inertia import cycle_inertia, cycle_spectrum_closed_form, exact_inertia, float_spectrum, make_cycle

print("n  signing     closed form                         Jacobi max error")
for n in (4, 5, 6, 7):
    for balanced in (True, False):
        closed = cycle_spectrum_closed_form(n, balanced).values
        numeric = float_spectrum(make_cycle(n, balanced)).values
        err = max(abs(a - b) for a, b in zip(closed, numeric))
        shown = " ".join(f"{x:+.3f}" for x in closed)
        print(f"{n}  {'balanced' if balanced else 'unbalanced':10}  {shown:34}  {err:.1e}")

print()
print("residue  balanced        unbalanced")
for r in range(4):
    cells = []
    for balanced in (True, False):
        statuses = set()
        for n in range(3, 33):
            if n % 4 != r:
                continue
            p = cycle_inertia(n, balanced).p_plus
            assert p == exact_inertia(make_cycle(n, balanced)).p_plus
            statuses.add("on the bound" if p == (n + 1) // 2 - 1 else "one above")
        cells.append(", ".join(sorted(statuses)))
    print(f"n = {r} mod 4  {cells[0]:15} {cells[1]}")
