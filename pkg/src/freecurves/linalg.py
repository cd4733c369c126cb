"""Exact rank and kernel computations over a field tower.

Ranks over a tower K of degree n over Q are computed on the rational block
matrix obtained by replacing every entry with its n x n multiplication
matrix; the Q-rank of that matrix is exactly n times the K-rank.  The block
matrix is handed to FLINT's exact integer rank when available, with a pure
Python fraction-free elimination as the fallback and cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .field import QQ, FieldElement, FieldTower, _mul

try:  # pragma: no cover - exercised implicitly
    import flint
except ImportError:  # pragma: no cover
    flint = None


@dataclass
class ExactMatrix:
    rows: int
    cols: int
    entries: list = field(repr=False)
    tower: FieldTower = QQ

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], tower: FieldTower | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if tower is None:
            tower = QQ
            for r in rows:
                for v in r:
                    if isinstance(v, FieldElement) and v.tower.height > tower.height:
                        tower = v.tower
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        entries = [[tower.coerce(v) for v in r] for r in rows]
        return cls(len(rows), ncols, entries, tower)

    @classmethod
    def zeros(cls, rows: int, cols: int, tower: FieldTower = QQ) -> ExactMatrix:
        z = tower.zero()
        return cls(rows, cols, [[z] * cols for _ in range(rows)], tower)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def apply(self, v: Sequence) -> list[FieldElement]:
        return [sum((a * b for a, b in zip(row, v)), self.tower.zero()) for row in self.entries]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            self.cols, self.rows, [list(c) for c in zip(*self.entries)] if self.rows else
            [[] for _ in range(self.cols)], self.tower
        )


def _basis_blocks(tower: FieldTower) -> list[list[list[Fraction]]]:
    """Multiplication matrices of the basis vectors e_k of the tower."""
    n = tower.dimension
    basis = [tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n)]
    blocks = []
    for k in range(n):
        cols = [_mul(basis[k], basis[j], tower.constants) for j in range(n)]
        blocks.append([[cols[c][r] for c in range(n)] for r in range(n)])
    return blocks


def rational_block_rows(m: ExactMatrix) -> list[list[Fraction]]:
    """The Q-matrix of ``m`` viewed as a Q-linear map."""
    n = m.tower.dimension
    if n == 1:
        return [[e.coords[0] for e in row] for row in m.entries]
    blocks = _basis_blocks(m.tower)
    zero = Fraction(0)
    out = [[zero] * (m.cols * n) for _ in range(m.rows * n)]
    for i, row in enumerate(m.entries):
        for j, e in enumerate(row):
            if e.is_zero():
                continue
            for k, a in enumerate(e.coords):
                if a == 0:
                    continue
                blk = blocks[k]
                for r in range(n):
                    target = out[i * n + r]
                    brow = blk[r]
                    for c in range(n):
                        if brow[c]:
                            target[j * n + c] += a * brow[c]
    return out


def _integer_columns(rows: list[list[Fraction]]) -> list[list[int]]:
    """Scale every column to integers (column scaling preserves rank)."""
    if not rows:
        return []
    ncols = len(rows[0])
    scale = [1] * ncols
    for row in rows:
        for j, v in enumerate(row):
            if v.denominator != 1:
                scale[j] = lcm(scale[j], v.denominator)
    return [
        [v.numerator * (s // v.denominator) if v else 0 for v, s in zip(row, scale)]
        for row in rows
    ]


def _rank_flint(rows: list[list[int]]) -> int:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if nrows == 0 or ncols == 0:
        return 0
    # FLINT's elimination is much faster on tall matrices
    if ncols > nrows:
        rows = [list(c) for c in zip(*rows)]
        nrows, ncols = ncols, nrows
    flat = [v for row in rows for v in row]
    return flint.fmpz_mat(nrows, ncols, flat).rank()


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination over Z; returns the rank."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        best = None
        for i in range(rank, len(m)):
            v = m[i][c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        pc = p[c]
        for i in range(rank + 1, len(m)):
            row = m[i]
            f = row[c]
            if f:
                m[i] = [(pc * a - f * b) // prev for a, b in zip(row, p)]
            else:
                m[i] = [(pc * a) // prev for a in row]
        prev = pc
        rank += 1
        if rank == len(m):
            break
    return rank


def _rank_gauss(m: ExactMatrix) -> int:
    """Division-based elimination directly over the tower."""
    rows = [list(r) for r in m.entries]
    return len(_rref(rows, m.cols)[1])


def _rref(rows: list[list[FieldElement]], ncols: int):
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: ExactMatrix, method: str = "auto") -> int:
    """Exact rank of ``m``.

    ``method`` is one of ``"auto"``, ``"flint"``, ``"bareiss"`` (fraction
    free over Q on the block matrix) or ``"gauss"`` (division based over the
    tower itself).
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    if method == "auto":
        method = "flint" if flint is not None else "bareiss"
    if method == "gauss":
        return _rank_gauss(m)
    n = m.tower.dimension
    ints = _integer_columns(rational_block_rows(m))
    if method == "flint":
        if flint is None:
            raise RuntimeError("python-flint is not installed")
        q_rank = _rank_flint(ints)
    elif method == "bareiss":
        q_rank = _rank_bareiss(ints)
    else:
        raise ValueError(f"unknown rank method {method!r}")
    if q_rank % n:
        raise ArithmeticError("block rank is not a multiple of the field degree")
    return q_rank // n


def kernel_basis(m: ExactMatrix) -> list[list[FieldElement]]:
    """Basis of the right null space of ``m``."""
    tower = m.tower
    rows, pivots = _rref([list(r) for r in m.entries], m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [tower.zero()] * m.cols
        v[f] = tower.one()
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def modular_rank_probe(m: ExactMatrix, prime: int) -> int:
    """Rank of ``m`` reduced modulo ``prime``: a lower bound for the exact rank."""
    if m.tower.height != 0:
        raise ValueError("modular probe is defined for rational matrices only")
    rows = []
    for row in m.entries:
        out = []
        for e in row:
            q = e.coords[0]
            if q.denominator % prime == 0:
                raise ValueError("prime divides denominator")
            out.append(q.numerator * pow(q.denominator, -1, prime) % prime)
        rows.append(out)
    rank = 0
    ncols = m.cols
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, prime)
        prow = [v * inv % prime for v in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(a - f * b) % prime for a, b in zip(rows[i], prow)]
        rank += 1
    return rank
