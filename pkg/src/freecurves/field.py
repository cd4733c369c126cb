"""Exact arithmetic in Q and in towers of at most two quadratic extensions.

A tower of height h is Q(t0, ..., t_{h-1}) with t_i^2 = c_i, where c_i lives
in the level below.  Elements are stored as dense coordinate tuples in the
basis {1, t0, t1, t0*t1}; the first half of the coordinates is the part in
the level below and the second half is the coefficient of the top generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

MAX_HEIGHT = 2

Rational = Fraction
Scalar = Union[int, Fraction, "FieldElement"]


class UnsupportedFieldExtension(ValueError):
    """A computation needs a field that the tower machinery cannot represent."""


class TowerTooDeep(UnsupportedFieldExtension):
    pass


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _scale(x, s):
    return tuple(a * s for a in x)


def _mul(x, y, consts):
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    sub = consts[: len(consts) - 1]
    t = consts[-1]
    ac = _mul(a, c, sub)
    bd = _mul(b, d, sub)
    lo = _add(ac, _mul(bd, t, sub))
    hi = _add(_mul(a, d, sub), _mul(b, c, sub))
    return lo + hi


def _inv(x, consts):
    n = len(x)
    if n == 1:
        if x[0] == 0:
            raise ZeroDivisionError("zero divisor")
        return (1 / x[0],)
    h = n // 2
    a, b = x[:h], x[h:]
    sub = consts[: len(consts) - 1]
    t = consts[-1]
    # (a + b*s)^-1 = (a - b*s) / (a^2 - t*b^2)
    norm = _sub(_mul(a, a, sub), _mul(_mul(b, b, sub), t, sub))
    ninv = _inv(norm, sub)
    return _mul(a, ninv, sub) + tuple(-v for v in _mul(b, ninv, sub))


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class FieldTower:
    """Q with up to two adjoined square roots.

    ``constants[i]`` holds the coordinates of c_i = t_i^2 over the tower
    formed by the first i levels.
    """

    constants: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        if len(self.constants) > MAX_HEIGHT:
            raise TowerTooDeep("tower too deep")
        for i, c in enumerate(self.constants):
            if len(c) != 2**i:
                raise ValueError(f"constant of level {i} must have {2**i} coordinates")

    @property
    def height(self) -> int:
        return len(self.constants)

    @property
    def dimension(self) -> int:
        return 2**self.height

    def base(self, height: int) -> FieldTower:
        return FieldTower(self.constants[:height])

    def extends(self, other: FieldTower) -> bool:
        """True when ``other`` is a sub-tower (prefix) of this tower."""
        return self.constants[: other.height] == other.constants

    def __call__(self, value) -> FieldElement:
        return self.coerce(value)

    def coerce(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.tower == self:
                return value
            if self.extends(value.tower):
                return value.lift(self)
            raise ValueError("incompatible field towers")
        return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.dimension - 1))

    def zero(self) -> FieldElement:
        return self.coerce(0)

    def one(self) -> FieldElement:
        return self.coerce(1)

    def gen(self, level: int = -1) -> FieldElement:
        level = range(self.height)[level]
        coords = [Fraction(0)] * self.dimension
        coords[2**level] = Fraction(1)
        return FieldElement(self, tuple(coords))

    def constant(self, level: int) -> FieldElement:
        return FieldElement(self.base(level), self.constants[level]).lift(self)

    def render(self) -> list[str]:
        return [
            f"t{i}^2 = {FieldElement(self.base(i), c).render()}"
            for i, c in enumerate(self.constants)
        ]

    def __repr__(self):
        if not self.constants:
            return "FieldTower(Q)"
        return "FieldTower(" + ", ".join(self.render()) + ")"


QQ = FieldTower()


class FieldElement:
    """Immutable element of a :class:`FieldTower`."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: FieldTower, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != tower.dimension:
            raise ValueError("coordinate vector does not match tower height")
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @classmethod
    def _raw(cls, tower, coords):
        obj = object.__new__(cls)
        object.__setattr__(obj, "tower", tower)
        object.__setattr__(obj, "coords", coords)
        return obj

    # -- coercion ---------------------------------------------------------

    def lift(self, tower: FieldTower) -> FieldElement:
        if tower == self.tower:
            return self
        if not tower.extends(self.tower):
            raise ValueError("target tower does not extend the element's tower")
        pad = (Fraction(0),) * (tower.dimension - self.tower.dimension)
        return FieldElement._raw(tower, self.coords + pad)

    def lower(self) -> FieldElement:
        """Express the element in the smallest sub-tower that contains it."""
        x = self
        while x.tower.height > 0:
            h = len(x.coords) // 2
            if any(x.coords[h:]):
                break
            x = FieldElement._raw(x.tower.base(x.tower.height - 1), x.coords[:h])
        return x

    def _pair(self, other):
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self, other
            if self.tower.extends(other.tower):
                return self, other.lift(self.tower)
            if other.tower.extends(self.tower):
                return self.lift(other.tower), other
            raise ValueError("incompatible field towers")
        if isinstance(other, (int, Fraction)):
            return self, self.tower.coerce(other)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return FieldElement._raw(a.tower, _add(a.coords, b.coords))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return FieldElement._raw(a.tower, _sub(a.coords, b.coords))

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return FieldElement._raw(a.tower, _sub(b.coords, a.coords))

    def __neg__(self):
        return FieldElement._raw(self.tower, tuple(-c for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement._raw(self.tower, _scale(self.coords, other))
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return FieldElement._raw(a.tower, _mul(a.coords, b.coords, a.tower.constants))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement._raw(self.tower, _inv(self.coords, self.tower.constants))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("zero divisor")
            return FieldElement._raw(self.tower, _scale(self.coords, 1 / Fraction(other)))
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return a * b.inverse()

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return b * a.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> FieldElement:
        """Negate the coefficient of the top generator."""
        if self.tower.height == 0:
            return self
        h = len(self.coords) // 2
        return FieldElement._raw(
            self.tower, self.coords[:h] + tuple(-c for c in self.coords[h:])
        )

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.render()} is not rational")
        return self.coords[0]

    def __eq__(self, other):
        p = self._pair(other) if isinstance(other, (FieldElement, int, Fraction)) else None
        if p is None:
            return NotImplemented
        return p[0].coords == p[1].coords

    def __hash__(self):
        x = self.lower()
        if x.tower.height == 0:
            return hash(x.coords[0])
        return hash((x.tower, x.coords))

    # -- rendering --------------------------------------------------------

    def render(self) -> str:
        names = ["", "*t0", "*t1", "*t0*t1"]
        parts = []
        for c, name in zip(self.coords, names):
            if c == 0:
                continue
            if name and abs(c) == 1:
                body = name[1:]
            else:
                body = f"{abs(c)}{name}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) or "0"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FieldElement({self.render()!r})"


def sqrt_in_field(c: FieldElement) -> FieldElement | None:
    """Exact square root of ``c`` inside its own tower, or None."""
    tower = c.tower
    if tower.height == 0:
        r = _rational_sqrt(c.coords[0])
        return None if r is None else FieldElement._raw(tower, (r,))
    if c.is_zero():
        return c
    below = tower.base(tower.height - 1)
    h = len(c.coords) // 2
    lo = FieldElement._raw(below, c.coords[:h])
    hi = FieldElement._raw(below, c.coords[h:])
    t = FieldElement._raw(below, tower.constants[-1])
    s = tower.gen()
    # (a + b*s)^2 = (a^2 + t*b^2) + 2ab*s
    if hi.is_zero():
        a = sqrt_in_field(lo)
        if a is not None:
            return a.lift(tower)
        b = sqrt_in_field(lo / t)
        if b is not None:
            return b.lift(tower) * s
        return None
    disc = sqrt_in_field(lo * lo - t * hi * hi)
    if disc is None:
        return None
    for sign in (1, -1):
        b2 = (lo + sign * disc) / (2 * t)
        b = sqrt_in_field(b2)
        if b is None or b.is_zero():
            continue
        a = hi / (2 * b)
        return a.lift(tower) + b.lift(tower) * s
    return None


def is_square(c: FieldElement) -> bool:
    return sqrt_in_field(c) is not None


def adjoin_sqrt(tower: FieldTower, c) -> tuple[FieldTower, FieldElement]:
    """Return ``(tower', r)`` with r^2 == c.

    When ``c`` already has a square root in ``tower`` the tower is returned
    unchanged; otherwise a new level t_h with t_h^2 = c is added.
    """
    c = tower.coerce(c)
    root = sqrt_in_field(c)
    if root is not None:
        return tower, root
    if tower.height >= MAX_HEIGHT:
        raise TowerTooDeep("tower too deep")
    new = FieldTower(tower.constants + (c.coords,))
    return new, new.gen()


class ExtensionRegistry:
    """Canonical quadratic extensions of one base tower.

    Two square roots generating the same extension K(sqrt a) = K(sqrt b) are
    always expressed over the same tower, so that points computed from
    different equations can be compared coordinate-wise.
    """

    def __init__(self, base: FieldTower):
        self.base = base
        self.extensions: list[FieldTower] = []

    def sqrt(self, c) -> FieldElement:
        """Square root of ``c``, adjoining a new level if needed.

        Raises :class:`TowerTooDeep` when the cap would be exceeded.
        """
        if not isinstance(c, FieldElement):
            c = self.base.coerce(c)
        c = c.lower()
        if not self.base.extends(c.tower):
            # already above the base: no canonicalisation possible
            return adjoin_sqrt(c.tower, c)[1]
        c = c.lift(self.base)
        root = sqrt_in_field(c)
        if root is not None:
            return root
        for ext in self.extensions:
            a = ext.constant(ext.height - 1).lower().lift(self.base)
            s = sqrt_in_field(c / a)
            if s is not None:
                return s.lift(ext) * ext.gen()
        new, root = adjoin_sqrt(self.base, c)
        self.extensions.append(new)
        return root
