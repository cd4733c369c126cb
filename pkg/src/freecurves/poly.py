"""Sparse multivariate polynomials over a :class:`FieldTower`."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .field import QQ, FieldElement, FieldTower

XYZ = ("x", "y", "z")


class MultiPoly:
    """Immutable polynomial stored as ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored, so the zero polynomial has an empty
    term map.
    """

    __slots__ = ("variables", "terms", "tower")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], object] | None = None,
        tower: FieldTower = QQ,
    ):
        variables = tuple(variables)
        clean: dict[tuple[int, ...], FieldElement] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(variables):
                raise ValueError("exponent length does not match variables")
            c = tower.coerce(c)
            if not c.is_zero():
                clean[tuple(exp)] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "tower", tower)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _raw(cls, variables, terms, tower):
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "tower", tower)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c, variables=XYZ, tower: FieldTower = QQ) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c}, tower)

    @classmethod
    def var(cls, name: str, variables=XYZ, tower: FieldTower = QQ) -> MultiPoly:
        i = list(variables).index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: 1}, tower)

    @classmethod
    def linear(cls, coeffs: Sequence, variables=XYZ, tower: FieldTower = QQ) -> MultiPoly:
        n = len(variables)
        return cls(
            variables,
            {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)},
            tower,
        )

    def zero(self) -> MultiPoly:
        return MultiPoly._raw(self.variables, {}, self.tower)

    # -- basic queries ----------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def low_degree(self) -> int:
        """Lowest total degree of a stored term; -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def degree_in(self, v: str) -> int:
        i = self.variables.index(v)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k: int) -> MultiPoly:
        return MultiPoly._raw(
            self.variables, {e: c for e, c in self.terms.items() if sum(e) == k}, self.tower
        )

    def truncate(self, n: int) -> MultiPoly:
        """Drop every term of total degree >= n."""
        return MultiPoly._raw(
            self.variables, {e: c for e, c in self.terms.items() if sum(e) < n}, self.tower
        )

    def coefficient(self, exp: tuple[int, ...]) -> FieldElement:
        return self.terms.get(tuple(exp), self.tower.zero())

    def constant_term(self) -> FieldElement:
        return self.coefficient((0,) * self.nvars)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    # -- tower handling ---------------------------------------------------

    def lift(self, tower: FieldTower) -> MultiPoly:
        if tower == self.tower:
            return self
        return MultiPoly._raw(
            self.variables, {e: c.lift(tower) for e, c in self.terms.items()}, tower
        )

    def _common(self, other: MultiPoly):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
        if self.tower == other.tower:
            return self, other
        if self.tower.extends(other.tower):
            return self, other.lift(self.tower)
        if other.tower.extends(self.tower):
            return self.lift(other.tower), other
        raise ValueError("incompatible field towers")

    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            if isinstance(other, FieldElement) and not (
                self.tower.extends(other.tower) or other.tower.extends(self.tower)
            ):
                raise ValueError("incompatible field towers")
            tower = self.tower
            if isinstance(other, FieldElement) and other.tower.height > tower.height:
                tower = other.tower
            return MultiPoly.constant(other, self.variables, tower)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms[e] + c if e in terms else c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly._raw(a.variables, terms, a.tower)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(
            self.variables, {e: -c for e, c in self.terms.items()}, self.tower
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            if isinstance(other, FieldElement) and other.tower != self.tower:
                return self * self._coerce(other)
            if other == 0:
                return self.zero()
            return MultiPoly._raw(
                self.variables, {e: c * other for e, c in self.terms.items()}, self.tower
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._common(other)
        terms: dict[tuple[int, ...], FieldElement] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                p = c1 * c2
                if e in terms:
                    terms[e] = terms[e] + p
                else:
                    terms[e] = p
        return MultiPoly._raw(
            a.variables, {e: c for e, c in terms.items() if not c.is_zero()}, a.tower
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1, self.variables, self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self._coerce(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.variables != other.variables:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def leading(self) -> tuple[tuple[int, ...], FieldElement]:
        """Leading term in lexicographic order."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        """Quotient ``self / other``; raises ValueError if not divisible."""
        a, b = self._common(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        be, bc = b.leading()
        binv = bc.inverse()
        rem = dict(a.terms)
        quot: dict[tuple[int, ...], FieldElement] = {}
        while rem:
            e = max(rem)
            qe = tuple(i - j for i, j in zip(e, be))
            if min(qe) < 0:
                raise ValueError("polynomial division is not exact")
            qc = rem[e] * binv
            quot[qe] = qc
            for e2, c2 in b.terms.items():
                t = tuple(i + j for i, j in zip(qe, e2))
                s = rem.get(t)
                v = -(qc * c2) if s is None else s - qc * c2
                if v.is_zero():
                    rem.pop(t, None)
                else:
                    rem[t] = v
        return MultiPoly._raw(a.variables, quot, a.tower)

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point: Sequence) -> FieldElement:
        tower = self.tower
        vals = [tower.coerce(v) if not isinstance(v, FieldElement) else v for v in point]
        for v in vals:
            if v.tower.height > tower.height:
                tower = v.tower
        vals = [v.lift(tower) for v in vals]
        total = tower.zero()
        powers: list[dict[int, FieldElement]] = [{0: tower.one()} for _ in vals]
        for e, c in self.terms.items():
            term = c.lift(tower)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = vals[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def compose(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target_vars = images[0].variables
        tower = self.tower
        for g in images:
            if g.tower.height > tower.height:
                tower = g.tower
        images = [g.lift(tower) for g in images]
        powers: list[dict[int, MultiPoly]] = [
            {0: MultiPoly.constant(1, target_vars, tower)} for _ in images
        ]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        result = MultiPoly._raw(target_vars, {}, tower)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c.lift(tower), target_vars, tower)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def linear_substitution(self, matrix: Sequence[Sequence]) -> MultiPoly:
        """Return f(M v): variable i is replaced by sum_j M[i][j] * v_j."""
        images = [MultiPoly.linear(row, self.variables, self.tower) for row in matrix]
        return self.compose(images)

    def rename(self, variables: Sequence[str]) -> MultiPoly:
        return MultiPoly._raw(tuple(variables), dict(self.terms), self.tower)

    # -- rendering --------------------------------------------------------

    def __str__(self):
        from .expr import render_poly

        try:
            return render_poly(self)
        except ValueError:
            return repr(self)

    def __repr__(self):
        return f"MultiPoly({self.variables}, {len(self.terms)} terms, {self.tower!r})"


def partial(f: MultiPoly, v: str) -> MultiPoly:
    """Formal partial derivative with respect to variable ``v``."""
    i = f.variables.index(v)
    terms = {}
    for e, c in f.terms.items():
        if e[i]:
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            terms[ne] = c * e[i]
    return MultiPoly._raw(f.variables, terms, f.tower)


def gradient(f: MultiPoly) -> list[MultiPoly]:
    return [partial(f, v) for v in f.variables]


def euler_check(f: MultiPoly) -> bool:
    """Check sum_i x_i * df/dx_i == deg(f) * f for a homogeneous ``f``."""
    if not f.is_homogeneous():
        raise ValueError("euler_check needs a homogeneous polynomial")
    d = f.degree()
    lhs = f.zero()
    for v in f.variables:
        lhs = lhs + MultiPoly.var(v, f.variables, f.tower) * partial(f, v)
    return lhs == f * max(d, 0)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of all monomials of the given total degree."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def monomials_below(nvars: int, bound: int) -> list[tuple[int, ...]]:
    """Exponent vectors of all monomials of total degree < bound."""
    out = []
    for k in range(bound):
        out.extend(monomials(nvars, k))
    return out


def product(polys: Iterable[MultiPoly]) -> MultiPoly:
    polys = list(polys)
    result = MultiPoly.constant(1, polys[0].variables, polys[0].tower)
    for p in polys:
        result = result * p
    return result


def localize(f: MultiPoly, p) -> MultiPoly:
    """Affine germ of the homogeneous ``f`` at the projective point ``p``.

    The chart is chosen by the last nonzero coordinate of ``p``; the result
    is translated so that ``p`` sits at the origin.  Its two variables are
    the remaining coordinate names, in order.
    """
    coords = list(getattr(p, "coords", p))
    if len(coords) != f.nvars:
        raise ValueError("point dimension does not match the polynomial ring")
    tower = f.tower
    coords = [tower.coerce(c) if not isinstance(c, FieldElement) else c for c in coords]
    for c in coords:
        if c.tower.height > tower.height:
            tower = c.tower
    coords = [c.lift(tower) for c in coords]
    nz = [i for i, c in enumerate(coords) if not c.is_zero()]
    if not nz:
        raise ValueError("the zero vector is not a projective point")
    j = nz[-1]
    coords = [c / coords[j] for c in coords]
    rest = [v for i, v in enumerate(f.variables) if i != j]
    images = []
    for i, v in enumerate(f.variables):
        if i == j:
            images.append(MultiPoly.constant(1, rest, tower))
        else:
            images.append(MultiPoly.var(v, rest, tower) + coords[i])
    return f.lift(tower).compose(images)
