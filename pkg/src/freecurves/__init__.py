"""Exact invariants of plane line/conic arrangements.

Global Tjurina numbers, minimal degrees of Jacobian relations, freeness and
the maximizing property; local ADE classification at every singular point;
and the weak-combinatorics enumeration for septic conic-line arrangements.
"""

from freecurves.ade import AdeType, parse_types
from freecurves.arrangement import Arrangement
from freecurves.combinatorics import (
    WeakCombinatorics,
    arnold_exponent,
    bmy_derivation_check,
    enumerate_weak_combinatorics,
    hirzebruch_filter,
    maximizing_feasibility,
    mdr_lower_bound,
)
from freecurves.expr import parse_poly
from freecurves.field import QQ, adjoin_sqrt
from freecurves.invariants import analyze, ar_dimension, jacobian_hf, mdr, tjurina_total
from freecurves.poly import MultiPoly
from freecurves.report import build_report, load_curve_file, parse_curve_file
from freecurves.singularities import analyze_singularities, classify, singular_locus

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "AdeType",
    "Arrangement",
    "MultiPoly",
    "WeakCombinatorics",
    "adjoin_sqrt",
    "analyze",
    "analyze_singularities",
    "ar_dimension",
    "arnold_exponent",
    "bmy_derivation_check",
    "build_report",
    "classify",
    "enumerate_weak_combinatorics",
    "hirzebruch_filter",
    "jacobian_hf",
    "load_curve_file",
    "maximizing_feasibility",
    "mdr",
    "mdr_lower_bound",
    "parse_curve_file",
    "parse_poly",
    "parse_types",
    "singular_locus",
    "tjurina_total",
]
