"""Weak combinatorics of conic-line arrangements and the filters applied to them.

A weak combinatorics is the vector (n2, n3, t3, t5, t7, d6, d8) counting
nodes, ordinary triple points, tacnodes, A5, A7, D6 and D8 points of an
arrangement of k smooth conics and d lines.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .ade import CATALOG, AdeType
from .invariants import maximizing_tau, required_mdr_for_maximizing

FIELDS = ("n2", "n3", "t3", "t5", "t7", "d6", "d8")
TAU_WEIGHTS = {name: t.tau for name, t in CATALOG.items()}
PAIR_WEIGHTS = {name: t.pair_weight for name, t in CATALOG.items()}

# aggregated left-hand side of the orbifold BMY inequality for the pair
# (P^2, C/2): sum over points of 3(mu_p/2 - 1/2 + 1 - e_orb(p))
BMY_COEFFICIENTS = {
    "n2": Fraction(9, 4),
    "n3": Fraction(117, 16),
    "t3": Fraction(45, 8),
    "t5": Fraction(35, 4),
    "t7": Fraction(189, 16),
    "d6": Fraction(333, 32),
    "d8": Fraction(215, 16),
}
# right-hand side a*deg^2 + b*deg
BMY_RHS = (Fraction(5, 4), Fraction(-3, 2))

# 8k + n2 + 3/4 n3 >= d + 5/2 t3 + 5 t5 + 29/4 t7 + 13/8 d6 + 15/4 d8,
# stored as the coefficients of (left - right) >= 0
HIRZEBRUCH_FORM = {
    "k": Fraction(8),
    "d": Fraction(-1),
    "n2": Fraction(1),
    "n3": Fraction(3, 4),
    "t3": Fraction(-5, 2),
    "t5": Fraction(-5),
    "t7": Fraction(-29, 4),
    "d6": Fraction(-13, 8),
    "d8": Fraction(-15, 4),
}


class OutOfScope(ValueError):
    pass


@dataclass(frozen=True, order=True)
class WeakCombinatorics:
    n2: int = 0
    n3: int = 0
    t3: int = 0
    t5: int = 0
    t7: int = 0
    d6: int = 0
    d8: int = 0
    k: int = 1
    d: int = 5

    def __post_init__(self):
        if min(astuple(self)) < 0:
            raise ValueError("counts must be non-negative")

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(getattr(self, f) for f in FIELDS)

    @property
    def degree(self) -> int:
        return 2 * self.k + self.d

    def types_present(self) -> set[AdeType]:
        return {CATALOG[f] for f in FIELDS if getattr(self, f)}

    def tau(self) -> int:
        return sum(TAU_WEIGHTS[f] * getattr(self, f) for f in FIELDS)

    def pair_sum(self) -> int:
        return sum(PAIR_WEIGHTS[f] * getattr(self, f) for f in FIELDS)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.counts) + ")"


def pairwise_budget(k: int, d: int) -> int:
    """Total pairwise intersection number of k conics and d lines."""
    if k < 0 or d < 0:
        raise ValueError("k and d must be non-negative")
    return math.comb(d, 2) + 2 * d * k + 4 * math.comb(k, 2)


def enumerate_weak_combinatorics(k: int, degree: int = 7) -> list[WeakCombinatorics]:
    """All non-negative solutions of the two counting equations, in lex order.

    The equations are sum(mu_t * x_t) = maximizing tau and
    sum(pair_weight_t * x_t) = pairwise budget of (k, degree - 2k).
    """
    d = degree - 2 * k
    if k < 1 or d < 0:
        raise ValueError(f"no arrangement of {k} conics in degree {degree}")
    tau_target = maximizing_tau(degree)
    budget = pairwise_budget(k, d)
    tw = [TAU_WEIGHTS[f] for f in FIELDS]
    pw = [PAIR_WEIGHTS[f] for f in FIELDS]
    out: list[WeakCombinatorics] = []

    def rec(i: int, rem_tau: int, rem_pairs: int, prefix: list[int]):
        if i == len(FIELDS):
            if rem_tau == 0 and rem_pairs == 0:
                out.append(WeakCombinatorics(*prefix, k=k, d=d))
            return
        for x in range(min(rem_tau // tw[i], rem_pairs // pw[i]) + 1):
            rec(i + 1, rem_tau - x * tw[i], rem_pairs - x * pw[i], prefix + [x])

    rec(0, tau_target, budget, [])
    return out


def hirzebruch_slack(wc: WeakCombinatorics) -> Fraction:
    """Left minus right side of the Hirzebruch-type inequality."""
    if wc.k < 1 or wc.d < 1 or wc.degree < 6:
        raise OutOfScope("inequality out of scope")
    values = {"k": wc.k, "d": wc.d, **{f: getattr(wc, f) for f in FIELDS}}
    return sum(c * values[v] for v, c in HIRZEBRUCH_FORM.items())


def hirzebruch_holds(wc: WeakCombinatorics) -> bool:
    return hirzebruch_slack(wc) >= 0


def hirzebruch_filter(wcs: Sequence[WeakCombinatorics]) -> list[WeakCombinatorics]:
    if len({(w.k, w.d) for w in wcs}) > 1:
        raise ValueError("all entries must share (k, d)")
    return [w for w in wcs if hirzebruch_holds(w)]


def arnold_exponent(types: Iterable[AdeType]) -> Fraction:
    types = list(types)
    if not types:
        raise ValueError("arnold_exponent needs at least one singularity type")
    return min(t.lct for t in types)


def mdr_lower_bound(d: int, types: Iterable[AdeType]) -> int:
    """ceil(alpha * d - 2) for curves with only quasi-homogeneous points."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    return math.ceil(arnold_exponent(types) * d - 2)


EXCLUDED = "excluded-by-lct"
OPEN = "open"


def maximizing_feasibility(wc: WeakCombinatorics, degree: int = 7) -> str:
    """Whether the lct bound on mdr already rules out a maximizing curve."""
    bound = mdr_lower_bound(degree, wc.types_present())
    return EXCLUDED if bound > required_mdr_for_maximizing(degree) else OPEN


# -- re-deriving the inequality ------------------------------------------------


def _linear_form(**coeffs) -> dict[str, Fraction]:
    return {v: Fraction(c) for v, c in coeffs.items() if c}


def _add_forms(*forms: tuple[Fraction, dict]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for scale, form in forms:
        for v, c in form.items():
            out[v] = out.get(v, Fraction(0)) + scale * c
    return {v: c for v, c in out.items() if c}


def naive_count_form(pair_weights=PAIR_WEIGHTS) -> dict[str, Fraction]:
    """Linear form equal to (2k + d)^2: d + 4k + 2 * sum(pair_weight * x)."""
    return _linear_form(d=1, k=4, **{f: 2 * pair_weights[f] for f in FIELDS})


def naive_count_identity_holds() -> bool:
    """(2k+d)^2 == d + 4k + 2 * pairwise_budget(k, d) as polynomials in k, d.

    Both sides are quadratic in (k, d), so agreement on a 3 x 3 grid is an
    identity.
    """
    return all(
        (2 * k + d) ** 2 == d + 4 * k + 2 * pairwise_budget(k, d)
        for k in range(3)
        for d in range(3)
    )


def bmy_residuals(coefficients=BMY_COEFFICIENTS, rhs=BMY_RHS, pair_weights=PAIR_WEIGHTS):
    """Per-type coefficient of LHS - RHS after substituting the naive count."""
    a, _ = rhs
    return {f: coefficients[f] - 2 * a * pair_weights[f] for f in FIELDS}


def derive_hirzebruch(
    coefficients=BMY_COEFFICIENTS, rhs=BMY_RHS, pair_weights=PAIR_WEIGHTS
) -> dict[str, Fraction]:
    """Rearrange BMY into ``form >= 0`` normalised to a k-coefficient of 8."""
    a, b = rhs
    lhs = _linear_form(**coefficients)
    right = _add_forms((a, naive_count_form(pair_weights)), (b, _linear_form(k=2, d=1)))
    slack = _add_forms((1, right), (-1, lhs))
    kc = slack.get("k", Fraction(0))
    if kc <= 0:
        raise ArithmeticError("derived inequality has no positive k-coefficient")
    scale = HIRZEBRUCH_FORM["k"] / kc
    return {v: c * scale for v, c in slack.items()}


def bmy_derivation_mismatches(
    coefficients=BMY_COEFFICIENTS, rhs=BMY_RHS, pair_weights=PAIR_WEIGHTS
) -> list[str]:
    """Names of the coefficients where the derivation disagrees with the inequality."""
    if not naive_count_identity_holds():
        return ["naive count"]
    try:
        derived = derive_hirzebruch(coefficients, rhs, pair_weights)
    except ArithmeticError:
        return ["k"]
    names = sorted(set(derived) | set(HIRZEBRUCH_FORM), key=lambda v: (v not in "kd", v))
    return [
        v for v in names if derived.get(v, Fraction(0)) != HIRZEBRUCH_FORM.get(v, Fraction(0))
    ]


def bmy_derivation_check(coefficients=BMY_COEFFICIENTS, rhs=BMY_RHS, pair_weights=PAIR_WEIGHTS) -> bool:
    return not bmy_derivation_mismatches(coefficients, rhs, pair_weights)
