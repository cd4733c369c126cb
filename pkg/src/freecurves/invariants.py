"""Global invariants of a reduced plane curve f = 0.

Everything here is linear algebra on graded pieces of S = K[x, y, z]: the
Hilbert function of the Jacobian ring S/J_f, the total Tjurina number as its
stable value, and the syzygy spaces AR(f)_r.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .linalg import ExactMatrix, kernel_basis, rank
from .poly import MultiPoly, gradient, monomials


class HilbertNotStabilized(RuntimeError):
    pass


@dataclass
class InvariantReport:
    degree: int
    tau: int
    mdr: int
    exponents: tuple[int, int]
    free: bool
    maximizing: bool
    hf_window: list[tuple[int, int]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def macaulay_matrix(polys: list[MultiPoly], shift: int, target: int) -> ExactMatrix:
    """Matrix of (a_1, ..., a_s) -> sum a_i * polys[i] restricted to degree ``shift``.

    Rows are indexed by monomials of degree ``target``; one column per
    (polynomial, multiplier monomial of degree ``shift``).
    """
    nvars = polys[0].nvars
    tower = polys[0].tower
    row_index = {e: i for i, e in enumerate(monomials(nvars, target))}
    mults = monomials(nvars, shift)
    m = ExactMatrix.zeros(len(row_index), len(mults) * len(polys), tower)
    col = 0
    for p in polys:
        for mono in mults:
            for e, c in p.terms.items():
                key = tuple(a + b for a, b in zip(e, mono))
                m.entries[row_index[key]][col] = c
            col += 1
    return m


def _check_homogeneous(f: MultiPoly):
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous polynomial")


def jacobian_hf(f: MultiPoly, k: int) -> int:
    """dim (S/J_f)_k."""
    _check_homogeneous(f)
    d = f.degree()
    total = comb(k + 2, 2) if k >= 0 else 0
    if k < d - 1:
        return total
    m = macaulay_matrix(gradient(f), k - d + 1, k)
    return total - rank(m)


def tjurina_total(f: MultiPoly, window: int = 4) -> int:
    """Total Tjurina number as the stable value of the Jacobian Hilbert function.

    Probes ``window`` consecutive degrees starting at 3d - 6 and slides the
    window up to 5d before giving up.
    """
    return _tjurina_with_window(f, window)[0]


def _tjurina_with_window(f: MultiPoly, window: int = 4):
    _check_homogeneous(f)
    d = f.degree()
    start = max(3 * d - 6, 0)
    cap = max(5 * d, start + window - 1)
    values: dict[int, int] = {}
    k = start
    while k + window - 1 <= cap:
        for j in range(k, k + window):
            if j not in values:
                values[j] = jacobian_hf(f, j)
        probe = [(j, values[j]) for j in range(k, k + window)]
        if len({v for _, v in probe}) == 1:
            return probe[0][1], probe
        k += 1
    raise HilbertNotStabilized("HF not stabilized; raise probe cap")


def ar_dimension(f: MultiPoly, r: int) -> int:
    """dim AR(f)_r: Jacobian syzygies (a, b, c) of degree r."""
    _check_homogeneous(f)
    if r < 0:
        return 0
    d = f.degree()
    m = macaulay_matrix(gradient(f), r, r + d - 1)
    return m.cols - rank(m)


def syzygy_witness(f: MultiPoly, r: int) -> list[MultiPoly] | None:
    """One nonzero syzygy (a, b, c) of degree r, or None."""
    d = f.degree()
    m = macaulay_matrix(gradient(f), r, r + d - 1)
    basis = kernel_basis(m)
    if not basis:
        return None
    v = basis[0]
    mults = monomials(f.nvars, r)
    out = []
    for i in range(f.nvars):
        chunk = v[i * len(mults) : (i + 1) * len(mults)]
        out.append(MultiPoly(f.variables, dict(zip(mults, chunk)), f.tower))
    return out


def mdr(f: MultiPoly) -> int:
    """Minimal degree of a nonzero Jacobian relation."""
    _check_homogeneous(f)
    d = f.degree()
    for r in range(max(d, 1)):
        if ar_dimension(f, r) > 0:
            return r
    raise ArithmeticError("no syzygy up to degree d - 1; Koszul relation missing")


def freeness_check(d: int, tau: int, mdr_value: int) -> tuple[bool, tuple[int, int]]:
    exponents = (mdr_value, d - 1 - mdr_value)
    free = 2 * mdr_value <= d - 1 and (d - 1) ** 2 - mdr_value * (d - mdr_value - 1) == tau
    return free, exponents


def maximizing_tau(d: int) -> int:
    if d <= 3:
        raise ValueError("degree out of range")
    m = d // 2
    return 3 * m * (m - 1) + 1 if d % 2 == 0 else 3 * m * m + 1


def maximizing_check(d: int, tau: int) -> bool:
    """Compare tau with 3m(m-1)+1 (d = 2m) or 3m^2+1 (d = 2m+1)."""
    return tau == maximizing_tau(d)


def required_mdr_for_maximizing(d: int) -> int:
    """mdr forced by freeness at the maximizing Tjurina number: m - 1."""
    maximizing_tau(d)
    return d // 2 - 1


def analyze(f: MultiPoly) -> InvariantReport:
    _check_homogeneous(f)
    d = f.degree()
    tau, window = _tjurina_with_window(f)
    r = mdr(f)
    free, exponents = freeness_check(d, tau, r)
    maximizing = d >= 4 and maximizing_check(d, tau)
    report = InvariantReport(d, tau, r, exponents, free, maximizing, window)
    if d >= 4:
        m = d // 2
        if d % 2 == 0 and maximizing != (free and exponents == (m - 1, m)):
            report.warnings.append(
                "maximizing Tjurina number without freeness: curve is not simply singular"
            )
        if d % 2 == 1 and maximizing and not free:
            report.warnings.append(
                "maximizing Tjurina number without freeness: curve is not simply singular"
            )
    return report
