"""Arrangements of lines and smooth conics."""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .field import FieldElement, FieldTower
from .poly import XYZ, MultiPoly, product


def conic_matrix(q: MultiPoly) -> list[list[FieldElement]]:
    """Symmetric 3x3 matrix M with q = v^T M v."""
    n = q.nvars
    half = Fraction(1, 2)
    m = [[q.tower.zero()] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            m[i][i] = c
        else:
            m[i][j] = c * half
            m[j][i] = c * half
    return m


def det3(m) -> FieldElement:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def line_coefficients(line: MultiPoly) -> list[FieldElement]:
    return [line.coefficient(tuple(int(i == j) for j in range(3))) for i in range(3)]


def _proportional(f: MultiPoly, g: MultiPoly) -> bool:
    if set(f.terms) != set(g.terms):
        return False
    e = next(iter(f.terms))
    ratio = f.terms[e] / g.terms[e]
    return f == g * ratio


class Arrangement:
    """A reduced union of lines and smooth conics."""

    def __init__(self, components: Sequence[MultiPoly]):
        components = list(components)
        if not components:
            raise ValueError("an arrangement needs at least one component")
        tower = components[0].tower
        for c in components:
            if c.variables != XYZ:
                raise ValueError("components must be polynomials in x, y, z")
            if c.tower.height > tower.height:
                tower = c.tower
        components = [c.lift(tower) for c in components]
        for i, c in enumerate(components):
            if not c.is_homogeneous() or c.degree() not in (1, 2):
                raise ValueError(f"component {i} is not a homogeneous line or conic")
            if c.degree() == 2 and det3(conic_matrix(c)).is_zero():
                raise ValueError(f"component {i} is a singular conic")
        for i in range(len(components)):
            for j in range(i):
                if _proportional(components[i], components[j]):
                    raise ValueError(f"components {j} and {i} coincide")
        self.components = components
        self.tower: FieldTower = tower

    @property
    def lines(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if c.degree() == 1]

    @property
    def conics(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if c.degree() == 2]

    @property
    def k(self) -> int:
        return len(self.conics)

    @property
    def d(self) -> int:
        return len(self.lines)

    @property
    def degree(self) -> int:
        return 2 * self.k + self.d

    @cached_property
    def product(self) -> MultiPoly:
        return product(self.components)

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return f"Arrangement({self.k} conics, {self.d} lines over {self.tower!r})"
