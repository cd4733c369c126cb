"""Singular points of conic-line arrangements and their local invariants.

For a union of smooth components the singular locus is the set of pairwise
intersection points.  Local Milnor and Tjurina numbers are dimensions of
truncated jet algebras, computed by exact rank.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .ade import CATALOG, AdeType
from .arrangement import Arrangement, line_coefficients
from .combinatorics import FIELDS, WeakCombinatorics
from .field import ExtensionRegistry, FieldElement, FieldTower, TowerTooDeep
from .invariants import InvariantReport
from .linalg import ExactMatrix, rank
from .poly import MultiPoly, gradient, localize, monomials_below, product
from .univariate import (
    binary_form_roots,
    binary_profile,
    resultant,
    from_upoly,
    to_upoly,
    ugcd,
    univariate_roots,
)

JET_ORDERS = (8, 16, 24)
NON_ADE = "non-ADE"
UNRESOLVED = "unresolved"


class ClassificationFailure(ArithmeticError):
    pass


class NotIsolated(ArithmeticError):
    pass


class OutOfCatalog(ValueError):
    def __init__(self, offenders):
        self.offenders = offenders
        listing = ", ".join(f"{r.point} ({r.type_name})" for r in offenders)
        super().__init__(f"singularities outside the weak-combinatorics catalog: {listing}")


# -- points -------------------------------------------------------------------


class ProjectivePoint:
    """A point of P^2 normalised so that its last nonzero coordinate is 1.

    Coordinates are expressed over the smallest sub-tower containing them,
    so equality is plain coordinate comparison.
    """

    __slots__ = ("coords", "tower")

    def __init__(self, coords: Sequence[FieldElement]):
        tower = None
        for c in coords:
            if tower is None or c.tower.height > tower.height:
                tower = c.tower
        coords = [c.lift(tower) for c in coords]
        nz = [i for i, c in enumerate(coords) if not c.is_zero()]
        if not nz:
            raise ValueError("the zero vector is not a projective point")
        scale = coords[nz[-1]].inverse()
        coords = [c * scale for c in coords]
        while tower.height > 0:
            h = tower.dimension // 2
            if any(any(c.coords[h:]) for c in coords):
                break
            tower = tower.base(tower.height - 1)
            coords = [FieldElement(tower, c.coords[:h]) for c in coords]
        self.coords = tuple(coords)
        self.tower: FieldTower = tower

    def key(self):
        return (self.tower, tuple(c.coords for c in self.coords))

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def rendered(self) -> tuple[str, str, str]:
        return tuple(c.render() for c in self.coords)

    def __str__(self):
        return "(" + " : ".join(self.rendered()) + ")"

    def __repr__(self):
        return f"ProjectivePoint{self}"


@dataclass
class UnresolvedCluster:
    """Intersection points of two components that need a deeper tower."""

    components: tuple[int, int]
    residual: MultiPoly

    def __str__(self):
        return f"components {self.components}: residual {self.residual}"


@dataclass
class SingularLocus:
    points: list[ProjectivePoint]
    clusters: list[UnresolvedCluster] = field(default_factory=list)


def _point_on_line_basis(coeffs: list[FieldElement]) -> tuple[list, list]:
    """Two independent points spanning the line a*x + b*y + c*z = 0."""
    a, b, c = coeffs
    zero, one = a.tower.zero(), a.tower.one()
    if not c.is_zero():
        return [c, zero, -a], [zero, c, -b]
    if not b.is_zero():
        return [b, -a, zero], [zero, zero, one]
    return [zero, one, zero], [zero, zero, one]


def _cross(u, v):
    return [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]


def _line_line(l1: MultiPoly, l2: MultiPoly) -> list[ProjectivePoint]:
    return [ProjectivePoint(_cross(line_coefficients(l1), line_coefficients(l2)))]


def _line_curve(line: MultiPoly, curve: MultiPoly, registry: ExtensionRegistry):
    p1, p2 = _point_on_line_basis(line_coefficients(line))
    tower = registry.base
    st = ("s", "t")
    s = MultiPoly.var("s", st, tower)
    t = MultiPoly.var("t", st, tower)
    form = curve.compose([s * a + t * b for a, b in zip(p1, p2)])
    if form.is_zero():
        raise ValueError("line is contained in the other component")
    roots, residual = binary_form_roots(form, registry)
    points = []
    for (a, b), _ in roots:
        points.append(ProjectivePoint([a * u + b * v for u, v in zip(p1, p2)]))
    return points, residual


# coordinate changes (x, y, z) -> (x + c*y, y + a*x + b*z, z), all invertible
_SHEARS = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (0, 1, 1), (2, 1, 1), (1, 2, 3)]


def _conic_conic(q1: MultiPoly, q2: MultiPoly, registry: ExtensionRegistry):
    """Intersect two conics by eliminating y.

    A linear change of coordinates makes both conics monic in y, so the
    resultant vanishes exactly at the projections of the common points.
    Over each root (x0 : z0) the common points are the roots of the gcd of
    the two restricted quadratics.
    """
    tower = registry.base
    x = MultiPoly.var("x", tower=tower)
    y = MultiPoly.var("y", tower=tower)
    z = MultiPoly.var("z", tower=tower)
    for a, b, c in _SHEARS:
        images = [x + y * c, y + x * a + z * b, z]
        s1, s2 = q1.compose(images), q2.compose(images)
        if s1.degree_in("y") == 2 and s2.degree_in("y") == 2:
            break
    else:
        raise ArithmeticError("no shear makes both conics monic in y")
    res = resultant(s1, s2, "y")
    if res.is_zero():
        raise ValueError("conics share a component")
    form = MultiPoly(("x", "z"), {(e[0], e[2]): c for e, c in res.terms.items()}, tower)
    roots, residual = binary_form_roots(form, registry)
    points = []
    for (x0, z0), _ in roots:
        rt = x0.tower
        images = [MultiPoly.constant(x0, ("y",), rt), MultiPoly.var("y", ("y",), rt),
                  MultiPoly.constant(z0, ("y",), rt)]
        g = ugcd(to_upoly(s1.lift(rt).compose(images)), to_upoly(s2.lift(rt).compose(images)))
        fibre = univariate_roots(from_upoly(g, "y", rt), rt, registry)
        if fibre.residual.degree() > 0:
            raise TowerTooDeep("tower too deep")
        for y0, _ in fibre.roots:
            points.append(ProjectivePoint([x0 + y0 * c, y0 + x0 * a + z0 * b, z0]))
    return points, residual


def singular_locus(arr: Arrangement) -> SingularLocus:
    """Pairwise intersection points of the components, deduplicated."""
    registry = ExtensionRegistry(arr.tower)
    found: dict[ProjectivePoint, None] = {}
    clusters = []
    comps = arr.components
    for i, j in combinations(range(len(comps)), 2):
        f, g = comps[i], comps[j]
        try:
            if f.degree() == 1 and g.degree() == 1:
                pts, residual = _line_line(f, g), None
            elif f.degree() == 1:
                pts, residual = _line_curve(f, g, registry)
            elif g.degree() == 1:
                pts, residual = _line_curve(g, f, registry)
            else:
                pts, residual = _conic_conic(f, g, registry)
        except TowerTooDeep:
            clusters.append(UnresolvedCluster((i, j), f * g))
            continue
        for p in pts:
            found.setdefault(p, None)
        if residual is not None and residual.degree() >= 1:
            clusters.append(UnresolvedCluster((i, j), residual))
    points = sorted(found, key=lambda p: p.rendered())
    return SingularLocus(points, clusters)


def find_singular_points(arr: Arrangement) -> list[ProjectivePoint]:
    return singular_locus(arr).points


def incident_components(arr: Arrangement, p: ProjectivePoint) -> list[int]:
    return [i for i, c in enumerate(arr.components) if c.evaluate(p.coords).is_zero()]


# -- local algebra ------------------------------------------------------------


def _jet_dimension(generators: list[MultiPoly], order: int) -> int:
    """dim of K[u, v] / (ideal + m^order), the ideal given by generators."""
    nvars = generators[0].nvars
    rows = monomials_below(nvars, order)
    index = {e: i for i, e in enumerate(rows)}
    tower = generators[0].tower
    cols = []
    for g in generators:
        g = g.truncate(order)
        low = g.low_degree()
        if low < 0:
            continue
        for mono in monomials_below(nvars, order - low):
            col = {}
            for e, c in g.terms.items():
                key = tuple(a + b for a, b in zip(e, mono))
                if sum(key) < order:
                    col[index[key]] = c
            if col:
                cols.append(col)
    if not cols:
        return len(rows)
    m = ExactMatrix.zeros(len(cols), len(rows), tower)
    for i, col in enumerate(cols):
        for j, c in col.items():
            m.entries[i][j] = c
    return len(rows) - rank(m)


def _stable_jet_dimension(generators: list[MultiPoly]) -> int:
    previous = None
    for order in JET_ORDERS:
        value = _jet_dimension(generators, order)
        if previous is not None and value == previous and order > value + 1:
            return value
        previous = value
    raise NotIsolated("non-isolated or too degenerate")


def _check_germ(g: MultiPoly):
    if g.nvars != 2:
        raise ValueError("local invariants need a germ in two variables")
    if not g.constant_term().is_zero():
        raise ValueError("germ does not vanish at the origin")


def local_milnor(g: MultiPoly) -> int:
    """dim K[[u, v]] / (g_u, g_v)."""
    _check_germ(g)
    return _stable_jet_dimension(gradient(g))


def local_tjurina(g: MultiPoly) -> int:
    """dim K[[u, v]] / (g, g_u, g_v)."""
    _check_germ(g)
    return _stable_jet_dimension([g] + gradient(g))


@dataclass
class Classification:
    multiplicity: int
    mu: int
    tau_local: int
    type: AdeType | str

    @property
    def type_name(self) -> str:
        return self.type.name if isinstance(self.type, AdeType) else self.type


def classify(g: MultiPoly) -> Classification:
    """Multiplicity, Milnor and Tjurina numbers and ADE type of a singular germ."""
    _check_germ(g)
    mult = g.low_degree()
    if mult < 2:
        raise ValueError("origin is not a singular point of the germ")
    mu = local_milnor(g)
    tau = local_tjurina(g)
    kind: AdeType | str = NON_ADE
    if mult == 2:
        kind = AdeType("A", mu)
    elif mult == 3:
        profile = binary_profile(g.homogeneous_part(3))
        if profile.squarefree_degree == 3:
            if mu != 4:
                raise ClassificationFailure(
                    f"ordinary triple point with Milnor number {mu} (expected 4)"
                )
            kind = AdeType("D", 4)
        elif profile.squarefree_degree == 2:
            if mu < 5:
                raise ClassificationFailure(f"D-type tangent cone with Milnor number {mu}")
            kind = AdeType("D", mu)
        elif mu in (6, 7, 8):
            kind = AdeType("E", mu)
    if isinstance(kind, AdeType) and mu != tau:
        raise ClassificationFailure(
            f"{kind} claimed but mu = {mu} differs from tau = {tau}"
        )
    return Classification(mult, mu, tau, kind)


@dataclass
class SingularPointReport:
    point: ProjectivePoint
    multiplicity: int
    mu: int | None
    tau_local: int | None
    type: AdeType | str
    incident_components: list[int]
    diagnostic: str = ""

    @property
    def type_name(self) -> str:
        return self.type.name if isinstance(self.type, AdeType) else self.type


def analyze_point(arr: Arrangement, p: ProjectivePoint) -> SingularPointReport:
    """Classify the arrangement at ``p``.

    Only the components through ``p`` enter the germ: the others are units
    in the local ring and change neither mu, tau nor the tangent cone.
    """
    incident = incident_components(arr, p)
    germ = localize(product(arr.components[i] for i in incident), p)
    try:
        c = classify(germ)
    except (ClassificationFailure, NotIsolated) as exc:
        return SingularPointReport(p, germ.low_degree(), None, None, UNRESOLVED, incident, str(exc))
    return SingularPointReport(p, c.multiplicity, c.mu, c.tau_local, c.type, incident)


@dataclass
class LocalReport:
    points: list[SingularPointReport]
    clusters: list[UnresolvedCluster]

    @property
    def complete(self) -> bool:
        return not self.clusters and all(
            isinstance(r.type, AdeType) for r in self.points
        )

    def inventory(self) -> Counter:
        return Counter(r.type_name for r in self.points)


def analyze_singularities(arr: Arrangement) -> LocalReport:
    locus = singular_locus(arr)
    reports = [analyze_point(arr, p) for p in locus.points]
    return LocalReport(reports, locus.clusters)


def weak_combinatorics_of(
    reports: Sequence[SingularPointReport], k: int = 1, d: int = 5
) -> WeakCombinatorics:
    by_type = {t: name for name, t in CATALOG.items()}
    counts = dict.fromkeys(FIELDS, 0)
    offenders = []
    for r in reports:
        name = by_type.get(r.type) if isinstance(r.type, AdeType) else None
        if name is None:
            offenders.append(r)
        else:
            counts[name] += 1
    if offenders:
        raise OutOfCatalog(offenders)
    return WeakCombinatorics(**counts, k=k, d=d)


def cross_check_total(
    arr: Arrangement,
    reports: Sequence[SingularPointReport],
    invariants: InvariantReport,
    clusters: Sequence[UnresolvedCluster] = (),
) -> bool:
    """Sum of local Tjurina numbers equals the global one, and mu = tau pointwise."""
    if clusters:
        raise ValueError("cannot cross-check with unresolved intersection clusters")
    if any(r.tau_local is None for r in reports):
        return False
    total_tau = sum(r.tau_local for r in reports)
    total_mu = sum(r.mu for r in reports)
    return total_tau == invariants.tau and total_mu == total_tau
