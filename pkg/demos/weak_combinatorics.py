"""
Which singularity counts can a maximizing septic have?
======================================================

For k conics and d = 7 - 2k lines with only A1, D4, A3, A5, A7, D6, D8
points, the counts (n2, n3, t3, t5, t7, d6, d8) must make tau = 28 and use
up every pairwise intersection.  That is a small Diophantine system.
"""

from freecurves import (
    arnold_exponent,
    enumerate_weak_combinatorics,
    hirzebruch_filter,
    maximizing_feasibility,
    mdr_lower_bound,
    parse_types,
)
from freecurves.combinatorics import bmy_derivation_mismatches, derive_hirzebruch

for k in (1, 2, 3):
    print(f"k = {k}: {len(enumerate_weak_combinatorics(k))} solutions")

# the orbifold BMY inequality, aggregated over the types, cuts the k = 1 list
# down; the coefficients can be re-derived exactly
print("derived inequality:", {name: str(c) for name, c in derive_hirzebruch().items()})
print("mismatches:", bmy_derivation_mismatches() or "none")

k1 = enumerate_weak_combinatorics(1)
survivors = hirzebruch_filter(k1)
print(f"\n{len(survivors)} of {len(k1)} survive:")
for w in survivors:
    print(" ", w, maximizing_feasibility(w))

# a maximizing septic needs mdr = 2, but the log canonical threshold of its
# worst point bounds mdr from below; without a D8 point the bound is 3
types = parse_types("A1,A3,A5,A7,D4,D6")
print("\nalpha =", arnold_exponent(types), " mdr >=", mdr_lower_bound(7, types))
print("with D8: alpha =", arnold_exponent(parse_types("D8")), " mdr >=", mdr_lower_bound(7, parse_types("D8")))
