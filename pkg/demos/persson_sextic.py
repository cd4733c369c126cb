"""
Free and maximizing: the Persson sextic
=======================================

Three conics meeting pairwise in an A7 point and an A1 point give a sextic
whose total Tjurina number is 19, the largest value a simply singular sextic
can reach.  Adding a line through the two tacnodes gives a septic that is
again maximizing.
"""

from freecurves import analyze, analyze_singularities, jacobian_hf
from freecurves.fixtures import PERSSON, SEPTIC_G

F = PERSSON.arrangement()
for q in F.components:
    print("  conic:", q)

# tau is read off where the Hilbert function of the Jacobian algebra stops
# moving; the window of stable values is kept on the report
rep = analyze(F.product)
print("HF in degrees 0..15:", [jacobian_hf(F.product, k) for k in range(16)])
print("stable window:", rep.hf_window)
print("tau =", rep.tau, " mdr =", rep.mdr, " exponents =", rep.exponents)
print("free:", rep.free, " maximizing:", rep.maximizing)

# the same number from the other side: add up the local Tjurina numbers
loc = analyze_singularities(F)
for r in loc.points:
    print(f"  {str(r.point):<28} {r.type_name:<4} tau={r.tau_local}")
print("local sum =", sum(r.tau_local for r in loc.points))

# G = y * F.  The line meets two of the conic tangencies and turns them into
# D10 points, which is outside the catalog used for the septic enumeration
G = SEPTIC_G.arrangement()
rep_g = analyze(G.product)
print("\nG: tau =", rep_g.tau, " exponents =", rep_g.exponents, " maximizing:", rep_g.maximizing)
print("inventory:", dict(sorted(analyze_singularities(G).inventory().items())))
