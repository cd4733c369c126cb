"""Curve files and deterministic analysis reports."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .arrangement import Arrangement
from .expr import ParseError, parse_poly
from .field import QQ, FieldTower, UnsupportedFieldExtension, adjoin_sqrt
from .invariants import analyze
from .poly import MultiPoly
from .singularities import (
    LocalReport,
    OutOfCatalog,
    analyze_singularities,
    cross_check_total,
    weak_combinatorics_of,
)

_FIELD = re.compile(r"t\s*\^\s*2\s*=(.*)")


class CurveFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass
class CurveFile:
    tower: FieldTower
    curve: MultiPoly | None = None
    components: list[MultiPoly] | None = None

    @property
    def polynomial(self) -> MultiPoly:
        if self.curve is not None:
            return self.curve
        return self.arrangement().product

    def arrangement(self) -> Arrangement:
        if self.components is None:
            raise ValueError("curve mode has no component list")
        return Arrangement(self.components)


def _field_from(text: str, lineno: int) -> FieldTower:
    m = _FIELD.fullmatch(text.strip())
    if not m:
        raise CurveFileError("field declaration must read 't^2 = <rational>'", lineno)
    try:
        c = parse_poly(m.group(1), QQ, (), lineno - 1)
    except ParseError as exc:
        raise CurveFileError(str(exc), lineno) from exc
    tower, _ = adjoin_sqrt(QQ, c.constant_term())
    if tower.height == 0:
        raise CurveFileError("field constant is a rational square; drop the field line", lineno)
    return tower


def parse_curve_file(text: str) -> CurveFile:
    """Parse the ``field:`` / ``curve:`` / ``component:`` line format.

    Raises :class:`CurveFileError` (or :class:`ParseError`) for malformed
    input and :class:`UnsupportedFieldExtension` for a second field line.
    """
    tower = QQ
    seen_field = False
    entries: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("field", "curve", "component"):
            raise CurveFileError(f"unrecognised line {line!r}", lineno)
        if key == "field":
            if seen_field:
                raise UnsupportedFieldExtension(
                    f"line {lineno}: only one field generator per file is supported"
                )
            if entries:
                raise CurveFileError("field declaration must precede polynomials", lineno)
            tower = _field_from(rest, lineno)
            seen_field = True
        else:
            entries.append((key, rest, lineno))
    kinds = {k for k, _, _ in entries}
    if not kinds:
        raise CurveFileError("no curve or component lines")
    if len(kinds) > 1 or (kinds == {"curve"} and len(entries) > 1):
        raise CurveFileError("use either one 'curve:' line or several 'component:' lines")
    polys = [parse_poly(body, tower, line_offset=lineno - 1) for _, body, lineno in entries]
    if kinds == {"curve"}:
        return CurveFile(tower, curve=polys[0])
    return CurveFile(tower, components=polys)


def load_curve_file(path: str | Path) -> CurveFile:
    return parse_curve_file(Path(path).read_text(encoding="utf-8"))


def _point_entry(r) -> dict:
    return {
        "coordinates": list(r.point.rendered()),
        "field": r.point.tower.render(),
        "multiplicity": r.multiplicity,
        "mu": r.mu,
        "tau": r.tau_local,
        "type": r.type_name,
        "components": list(r.incident_components),
    }


def build_report(cf: CurveFile, local: bool = True) -> dict:
    """Analysis report as a plain dict with a fixed key order."""
    f = cf.polynomial
    inv = analyze(f)
    report = {
        "field": cf.tower.render(),
        "degree": inv.degree,
        "tau": inv.tau,
        "mdr": inv.mdr,
        "exponents": list(inv.exponents),
        "free": inv.free,
        "maximizing": inv.maximizing,
        "singular_points": None,
        "unresolved_clusters": [],
        "weak_combinatorics": None,
        "complete": None,
        "warnings": list(inv.warnings),
    }
    if cf.components is None or not local:
        return report
    arr = cf.arrangement()
    loc: LocalReport = analyze_singularities(arr)
    points = sorted(loc.points, key=lambda r: r.point.rendered())
    report["singular_points"] = [_point_entry(r) for r in points]
    report["unresolved_clusters"] = [
        {"components": list(c.components), "residual": str(c.residual)} for c in loc.clusters
    ]
    report["complete"] = loc.complete
    for r in points:
        if r.diagnostic:
            report["warnings"].append(f"point {r.point}: {r.diagnostic}")
    if loc.clusters:
        report["warnings"].append("some intersection points need a deeper field tower")
    else:
        if not cross_check_total(arr, points, inv):
            report["warnings"].append("local Tjurina numbers do not add up to the global one")
    try:
        wc = weak_combinatorics_of(points, arr.k, arr.d)
        report["weak_combinatorics"] = {
            **{name: getattr(wc, name) for name in ("n2", "n3", "t3", "t5", "t7", "d6", "d8")},
            "k": wc.k,
            "d": wc.d,
        }
    except OutOfCatalog as exc:
        report["warnings"].append(str(exc))
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_table(report: dict) -> str:
    yes = {True: "yes", False: "no"}
    lines = []
    if report["field"]:
        lines.append("field       " + ", ".join(report["field"]))
    lines += [
        f"degree      {report['degree']}",
        f"tau         {report['tau']}",
        f"mdr         {report['mdr']}",
        f"exponents   ({report['exponents'][0]}, {report['exponents'][1]})",
        f"free        {yes[report['free']]}",
        f"maximizing  {yes[report['maximizing']]}",
    ]
    points = report["singular_points"]
    if points is not None:
        lines.append("")
        lines.append(f"{'point':<44} {'mult':>4} {'mu':>4} {'tau':>4}  type")
        for p in points:
            coords = "(" + " : ".join(p["coordinates"]) + ")"
            mu = "-" if p["mu"] is None else p["mu"]
            tau = "-" if p["tau"] is None else p["tau"]
            lines.append(f"{coords:<44} {p['multiplicity']:>4} {mu:>4} {tau:>4}  {p['type']}")
        for c in report["unresolved_clusters"]:
            lines.append(f"unresolved: components {c['components']} residual {c['residual']}")
        wc = report["weak_combinatorics"]
        if wc is not None:
            counts = ",".join(str(wc[k]) for k in ("n2", "n3", "t3", "t5", "t7", "d6", "d8"))
            lines.append("")
            lines.append(f"weak combinatorics (n2,n3,t3,t5,t7,d6,d8) = ({counts})")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"
