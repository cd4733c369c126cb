"""
Classifying a germ from its jets
================================

Milnor and Tjurina numbers are dimensions of truncated local algebras.  The
truncation order is raised until the answer stops changing, and the
multiplicity plus the tangent cone then picks out the ADE type.
"""

from freecurves import AdeType, Arrangement, QQ, analyze_singularities, classify, parse_poly

for t in (AdeType("A", 5), AdeType("D", 7), AdeType("E", 8)):
    germ = parse_poly(t.normal_form(), QQ, ("x", "y"))
    c = classify(germ)
    print(f"{t.normal_form():<14} mult={c.multiplicity} mu={c.mu} tau={c.tau_local} -> {c.type_name}")

# not every germ is quasi-homogeneous; here tau drops below mu
germ = parse_poly("x^4 + y^5 + x^2*y^3", QQ, ("x", "y"))
c = classify(germ)
print(f"x^4 + y^5 + x^2*y^3: mu={c.mu} tau={c.tau_local} -> {c.type_name}")

# four concurrent lines: an ordinary quadruple point, not simple
arr = Arrangement([parse_poly(s) for s in ("x", "y", "x + y", "x - y")])
rep = analyze_singularities(arr)
(p,) = rep.points
print(f"\nfour lines through {p.point}: mult={p.multiplicity} mu={p.mu} type={p.type_name}")
print("complete:", rep.complete)
