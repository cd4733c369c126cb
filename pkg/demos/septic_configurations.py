"""
Seven free septics that miss maximality by one
==============================================

Configurations 5, 8 and 12 are two conics with three lines, the rest one
conic with five lines.  They all have tau = 27 and mdr = 3, which makes them
free with exponents (3, 3), one short of the maximizing value 28.  Two of
them only exist over a quadratic field.
"""

import time

from freecurves import analyze, analyze_singularities
from freecurves.fixtures import SEPTIC_CONFIGURATIONS

print(f"{'configuration':<18}{'k,d':<6}{'field':<12}{'tau':>4}{'mdr':>5}  free  inventory")
for fx in SEPTIC_CONFIGURATIONS:
    t0 = time.perf_counter()
    arr = fx.arrangement()
    rep = analyze(arr.product)
    inv = analyze_singularities(arr).inventory()
    field = "Q" if fx.field_square is None else f"Q(sqrt {fx.field_square})"
    inv_text = " ".join(f"{n}x{t}" for t, n in sorted(inv.items()))
    print(f"{fx.name:<18}{f'{arr.k},{arr.d}':<6}{field:<12}{rep.tau:>4}{rep.mdr:>5}  {str(rep.free):<5} {inv_text}"
          f"   ({time.perf_counter() - t0:.1f}s)")

# Singular points of Configuration 8 live in Q(i), and two of its nodes need
# a second square root on top of that
from freecurves.fixtures import CONFIG_8

for r in analyze_singularities(CONFIG_8.arrangement()).points:
    print(f"  {r.type_name:<4} {r.point}   over {', '.join(r.point.tower.render()) or 'Q'}")
