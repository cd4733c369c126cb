"""Univariate tools: gcds, root extraction in towers, resultants, binary forms.

Dense univariate polynomials are plain lists of :class:`FieldElement`
coefficients, lowest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import sympy

from .field import ExtensionRegistry, FieldElement, FieldTower, TowerTooDeep
from .poly import MultiPoly

UPoly = list  # list[FieldElement], lowest degree first


def _trim(p: UPoly) -> UPoly:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def _deg(p: UPoly) -> int:
    return len(p) - 1


def _lift_all(p: UPoly, tower: FieldTower) -> UPoly:
    return [c.lift(tower) for c in p]


def _common_tower(*polys: UPoly) -> FieldTower:
    tower = None
    for p in polys:
        for c in p:
            if tower is None or c.tower.height > tower.height:
                tower = c.tower
    return tower


def udivmod(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = _trim(a)
    tower = _common_tower(a, b)
    a, b = _lift_all(a, tower), _lift_all(b, tower)
    if len(a) < len(b):
        return [], a
    inv = b[-1].inverse()
    rem = list(a)
    quot = [tower.zero()] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        q = rem[i + len(b) - 1] * inv
        quot[i] = q
        if q.is_zero():
            continue
        for j, c in enumerate(b):
            rem[i + j] = rem[i + j] - q * c
    return _trim(quot), _trim(rem[: len(b) - 1])


def umul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return []
    tower = _common_tower(a, b)
    out = [tower.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def uderiv(a: UPoly) -> UPoly:
    return _trim([c * i for i, c in enumerate(a)][1:])


def umonic(a: UPoly) -> UPoly:
    a = _trim(a)
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def ugcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd over the field of the coefficients."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, udivmod(a, b)[1]
    return umonic(a)


def uexact_div(a: UPoly, b: UPoly) -> UPoly:
    q, r = udivmod(a, b)
    if r:
        raise ValueError("univariate division is not exact")
    return q


def ueval(a: UPoly, x: FieldElement) -> FieldElement:
    acc = None
    for c in reversed(a):
        acc = c if acc is None else acc * x + c
    return acc


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm (characteristic zero): [(w_i, i)] with p ~ prod w_i^i."""
    p = umonic(p)
    if _deg(p) < 1:
        return []
    out = []
    dp = uderiv(p)
    a = ugcd(p, dp)
    b = uexact_div(p, a)
    c = uexact_div(dp, a)
    d = _sub(c, uderiv(b))
    i = 1
    while _deg(b) >= 1:
        a = ugcd(b, d)
        b = uexact_div(b, a)
        c = uexact_div(d, a)
        if _deg(a) >= 1:
            out.append((a, i))
        d = _sub(c, uderiv(b))
        i += 1
    return out


def _sub(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    tower = _common_tower(a, b)
    if tower is None:
        return []
    z = tower.zero()
    a = _lift_all(a, tower) + [z] * (n - len(a))
    b = _lift_all(b, tower) + [z] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


# -- conversion -------------------------------------------------------------


def to_upoly(u: MultiPoly, v: str | None = None) -> UPoly:
    """Dense coefficients of ``u`` in the variable ``v`` (constant coefficients only)."""
    if v is None:
        if u.nvars != 1:
            raise ValueError("need a univariate polynomial")
        v = u.variables[0]
    i = u.variables.index(v)
    out = [u.tower.zero()] * (u.degree_in(v) + 1)
    for e, c in u.terms.items():
        if any(k for j, k in enumerate(e) if j != i):
            raise ValueError(f"polynomial is not univariate in {v}")
        out[e[i]] = c
    return _trim(out)


def from_upoly(p: UPoly, var: str = "x", tower: FieldTower | None = None) -> MultiPoly:
    tower = tower or _common_tower(p)
    return MultiPoly((var,), {(i,): c.lift(tower) for i, c in enumerate(p)}, tower)


def _sympy_generators(tower: FieldTower):
    gens = []
    for i, c in enumerate(tower.constants):
        value = sum(
            (sympy.Rational(coord.numerator, coord.denominator) * _basis_expr(gens, j))
            for j, coord in enumerate(c)
        )
        gens.append(sympy.sqrt(value))
    return gens


def _basis_expr(gens, j):
    expr = sympy.Integer(1)
    for level, g in enumerate(gens):
        if j >> level & 1:
            expr = expr * g
    return expr


def _to_sympy(c: FieldElement, gens):
    return sum(
        sympy.Rational(q.numerator, q.denominator) * _basis_expr(gens, j)
        for j, q in enumerate(c.coords)
    )


def _from_sympy(expr, tower: FieldTower, gens) -> FieldElement:
    expr = sympy.expand(expr)
    if tower.height == 0:
        q = sympy.Rational(expr)
        return tower.coerce(Fraction(int(q.p), int(q.q)))
    poly = sympy.Poly(expr, *gens)
    coords = [Fraction(0)] * tower.dimension
    for monom, coeff in poly.terms():
        if any(k > 1 for k in monom):
            raise ValueError("unreduced algebraic expression")
        j = sum(1 << level for level, k in enumerate(monom) if k)
        coeff = sympy.Rational(coeff)
        coords[j] += Fraction(int(coeff.p), int(coeff.q))
    return FieldElement(tower, coords)


def factor_over_tower(p: UPoly) -> list[tuple[UPoly, int]]:
    """Irreducible factorisation over the tower of the coefficients.

    Backed by sympy's factoring over Q and over algebraic extensions; only
    towers of height <= 1 are supported.  Factors are monic.
    """
    p = umonic(p)
    tower = _common_tower(p)
    if tower.height > 1:
        raise TowerTooDeep("factoring is limited to towers of height <= 1")
    gens = _sympy_generators(tower)
    X = sympy.Symbol("X")
    expr = sum(_to_sympy(c, gens) * X**i for i, c in enumerate(p))
    if gens:
        _, factors = sympy.factor_list(expr, X, extension=gens)
    else:
        _, factors = sympy.factor_list(expr, X)
    out = []
    for fac, mult in factors:
        coeffs = sympy.Poly(fac, X).all_coeffs()[::-1]
        out.append((umonic([_from_sympy(c, tower, gens) for c in coeffs]), int(mult)))
    return out


class RootSplit(NamedTuple):
    roots: list  # [(FieldElement, multiplicity)]
    residual: MultiPoly


def _quadratic_roots(w: UPoly, registry: ExtensionRegistry) -> list[FieldElement]:
    c, b, a = w
    disc = b * b - 4 * a * c
    r = registry.sqrt(disc)
    return [(-b + r) / (2 * a), (-b - r) / (2 * a)]


def univariate_roots(
    u: MultiPoly, tower: FieldTower | None = None, registry: ExtensionRegistry | None = None
) -> RootSplit:
    """Roots of ``u`` reachable by linear and quadratic splitting.

    Roots may live in a quadratic extension of ``tower`` (adjoined through
    ``registry``).  Whatever cannot be split within the height cap is
    returned as the residual, with multiplicities.
    """
    tower = tower or u.tower
    registry = registry or ExtensionRegistry(tower)
    var = u.variables[0]
    p = _lift_all(to_upoly(u), tower)
    if _deg(p) < 1:
        raise ValueError("univariate_roots needs a polynomial of degree >= 1")
    roots: list[tuple[FieldElement, int]] = []
    residual: UPoly = [tower.one()]
    for w, mult in squarefree_decomposition(p):
        if _deg(w) <= 2:
            pieces = [(w, 1)]
        else:
            try:
                pieces = factor_over_tower(w)
            except TowerTooDeep:
                pieces = [(w, 1)]
        for fac, _ in pieces:
            if _deg(fac) == 1:
                roots.append((-fac[0] / fac[1], mult))
                continue
            if _deg(fac) == 2:
                try:
                    for r in _quadratic_roots(fac, registry):
                        roots.append((r, mult))
                    continue
                except TowerTooDeep:
                    pass
            for _ in range(mult):
                residual = umul(residual, fac)
    return RootSplit(roots, from_upoly(residual, var, tower))


# -- resultants ---------------------------------------------------------------


def _coeffs_in(f: MultiPoly, v: str) -> list[MultiPoly]:
    """Coefficients of ``f`` as a polynomial in ``v`` (highest first)."""
    i = f.variables.index(v)
    n = f.degree_in(v)
    buckets: list[dict] = [{} for _ in range(n + 1)]
    for e, c in f.terms.items():
        buckets[n - e[i]][e[:i] + (0,) + e[i + 1 :]] = c
    return [MultiPoly(f.variables, b, f.tower) for b in buckets]


def sylvester_matrix(f: MultiPoly, g: MultiPoly, v: str) -> list[list[MultiPoly]]:
    a, b = _coeffs_in(f, v), _coeffs_in(g, v)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = f.zero() if f.tower.height >= g.tower.height else g.zero()
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant of a square matrix of polynomials."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix has no polynomial context")
    one = MultiPoly.constant(1, m[0][0].variables, m[0][0].tower)
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return m[0][0].zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: MultiPoly, g: MultiPoly, v: str) -> MultiPoly:
    """Resultant of ``f`` and ``g`` with respect to ``v`` (Sylvester determinant)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    f, g = f._common(g)
    if f.degree_in(v) == 0 and g.degree_in(v) == 0:
        return MultiPoly.constant(1, f.variables, f.tower)
    return bareiss_determinant(sylvester_matrix(f, g, v))


# -- binary forms -------------------------------------------------------------


@dataclass(frozen=True)
class BinaryFormProfile:
    degree: int
    squarefree_degree: int
    distinct_root_count: int


def binary_profile(form: MultiPoly) -> BinaryFormProfile:
    """Count the distinct linear factors of a binary form without factoring."""
    if form.nvars != 2 or form.is_zero() or not form.is_homogeneous():
        raise ValueError("binary_profile needs a nonzero binary form")
    n = form.degree()
    coeffs = [form.tower.zero()] * (n + 1)
    for (i, _), c in form.terms.items():
        coeffs[i] = c
    u = _trim(coeffs)
    at_infinity = n - _deg(u)
    sqfree = 0
    if _deg(u) >= 1:
        sqfree = _deg(u) - _deg(ugcd(u, uderiv(u)))
    if at_infinity:
        sqfree += 1
    return BinaryFormProfile(n, sqfree, sqfree)


def binary_form_roots(
    form: MultiPoly, registry: ExtensionRegistry
) -> tuple[list[tuple[tuple[FieldElement, FieldElement], int]], MultiPoly]:
    """Roots ``(a:b)`` of a binary form F(a, b) with multiplicities, plus residual."""
    n = form.degree()
    tower = registry.base
    coeffs = [tower.zero()] * (n + 1)
    for (i, _), c in form.terms.items():
        coeffs[i] = c.lift(tower)
    u = _trim(coeffs)
    roots = []
    if n - _deg(u):
        roots.append(((tower.one(), tower.zero()), n - _deg(u)))
    if _deg(u) >= 1:
        split = univariate_roots(from_upoly(u, "s", tower), tower, registry)
        for r, mult in split.roots:
            roots.append(((r, r.tower.one()), mult))
        residual = split.residual
    else:
        residual = from_upoly([tower.one()], "s", tower)
    return roots, residual
