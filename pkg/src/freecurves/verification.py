"""Recompute every reference value and compare with the stored expectation."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ade import parse_types
from .combinatorics import (
    arnold_exponent,
    bmy_derivation_check,
    enumerate_weak_combinatorics,
    hirzebruch_filter,
    mdr_lower_bound,
)
from .fixtures import (
    ALL_FIXTURES,
    HIRZEBRUCH_SURVIVORS,
    SEPTIC_K1_TUPLES,
    SEPTIC_SOLUTION_TOTAL,
    Fixture,
)
from .invariants import analyze, required_mdr_for_maximizing
from .poly import MultiPoly
from .singularities import analyze_singularities


@dataclass
class Check:
    subject: str
    quantity: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def check_fixture(fx: Fixture, curve: MultiPoly | None = None, local: bool = True) -> list[Check]:
    """Global (and, from the components, local) checks for one fixture.

    Passing ``curve`` replaces the product of the components; only the
    global quantities are then compared.
    """
    f = curve if curve is not None else fx.arrangement().product
    inv = analyze(f)
    checks = [
        Check(fx.name, "tau", fx.tau, inv.tau),
        Check(fx.name, "mdr", fx.mdr, inv.mdr),
        Check(fx.name, "exponents", fx.exponents, inv.exponents),
        Check(fx.name, "free", fx.free, inv.free),
        Check(fx.name, "maximizing", fx.maximizing, inv.maximizing),
    ]
    if local and curve is None:
        loc = analyze_singularities(fx.arrangement())
        checks.append(Check(fx.name, "inventory", dict(fx.inventory), dict(loc.inventory())))
        total = sum(r.tau_local or 0 for r in loc.points)
        checks.append(Check(fx.name, "sum of local tau", fx.tau, total))
    return checks


def combinatorial_checks() -> list[Check]:
    k1 = enumerate_weak_combinatorics(1)
    total = sum(len(enumerate_weak_combinatorics(k)) for k in (1, 2, 3))
    survivors = hirzebruch_filter(k1)
    types = parse_types("A1,A3,A5,A7,D4,D6")
    return [
        Check("enumeration", "k=1 tuples", set(SEPTIC_K1_TUPLES), {w.counts for w in k1}),
        Check("enumeration", "k=1 count", len(SEPTIC_K1_TUPLES), len(k1)),
        Check("enumeration", "k=1..3 count", SEPTIC_SOLUTION_TOTAL, total),
        Check("Hirzebruch filter", "survivors", set(HIRZEBRUCH_SURVIVORS),
              {w.counts for w in survivors}),
        Check("BMY derivation", "recovers the inequality", True, bmy_derivation_check()),
        Check("septic lct bound", "alpha", "3/5", str(arnold_exponent(types))),
        Check("septic lct bound", "mdr lower bound", 3, mdr_lower_bound(7, types)),
        Check("septic lct bound", "required mdr", 2, required_mdr_for_maximizing(7)),
    ]


def run_verification(
    fixtures: Sequence[Fixture] = ALL_FIXTURES, combinatorics: bool = True
) -> list[Check]:
    checks = []
    for fx in fixtures:
        checks += check_fixture(fx)
    if combinatorics:
        checks += combinatorial_checks()
    return checks


def _short(value) -> str:
    if isinstance(value, set):
        return f"{{{len(value)} tuples}}"
    if isinstance(value, dict):
        return " ".join(f"{k}x{v}" for k, v in sorted(value.items()))
    return str(value)


def summarize(checks: Iterable[Check]) -> str:
    checks = list(checks)
    rows = [("subject", "quantity", "expected", "computed", "")]
    rows += [(c.subject, c.quantity, _short(c.expected), _short(c.computed),
              "ok" if c.ok else "FAIL") for c in checks]
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(r[i].ljust(widths[i]) for i in range(4)) + "  " + r[4] for r in rows]
    failed = Counter(c.subject for c in checks if not c.ok)
    lines.append("")
    if failed:
        lines.append("FAILED: " + ", ".join(failed))
    else:
        lines.append(f"all {len(checks)} checks passed")
    return "\n".join(lines) + "\n"
