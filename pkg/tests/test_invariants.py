import itertools
from math import comb

import pytest

from conftest import global_report, local_report
from freecurves.arrangement import Arrangement
from freecurves.expr import parse_poly
from freecurves.fixtures import ALL_FIXTURES, CONFIG_5, CONFIG_8, REFERENCE_FIXTURES
from freecurves.invariants import (
    HilbertNotStabilized,
    analyze,
    ar_dimension,
    freeness_check,
    jacobian_hf,
    maximizing_check,
    maximizing_tau,
    mdr,
    required_mdr_for_maximizing,
    syzygy_witness,
    tjurina_total,
)
from freecurves.poly import gradient
from freecurves.singularities import analyze_singularities

FERMAT = parse_poly("x^3 + y^3 + z^3")


def _boolean_monomials(k):
    # oracle for HF of C[x,y,z]/(x^2, y^2, z^2): squarefree monomials of degree k
    return sum(1 for e in itertools.product((0, 1), repeat=3) if sum(e) == k)


def test_fermat_hilbert_function():
    values = [jacobian_hf(FERMAT, k) for k in range(5)]
    assert values == [_boolean_monomials(k) for k in range(5)] == [1, 3, 3, 1, 0]


def test_hf_low_degrees_are_full():
    for fx in (CONFIG_5, CONFIG_8):
        f = fx.arrangement().product
        for k in range(f.degree() - 1):
            assert jacobian_hf(f, k) == comb(k + 2, 2)


def test_tjurina_of_smooth_curves():
    assert tjurina_total(parse_poly("x^2 + y^2 - z^2")) == 0
    assert tjurina_total(parse_poly("x + 2*y")) == 0
    assert tjurina_total(FERMAT) == 0


def test_hf_not_stabilized_error():
    # a non-reduced curve has a non-isolated singular locus: HF grows linearly
    with pytest.raises(HilbertNotStabilized, match="HF not stabilized"):
        tjurina_total(parse_poly("x^2*y^2*z"))


def _syzygy_nullity_oracle(f, r):
    """dim AR(f)_r by solving for undetermined coefficients with sympy."""
    sy = pytest.importorskip("sympy")
    X, Y, Z = sy.symbols("x y z")
    fs = sy.sympify(str(f).replace("^", "**"), locals={"x": X, "y": Y, "z": Z})
    monos = [X**a * Y**b * Z**(r - a - b) for a in range(r + 1) for b in range(r + 1 - a)]
    unknowns = sy.symbols(f"c0:{3 * len(monos)}")
    parts = [sum(u * m for u, m in zip(unknowns[i::3], monos)) for i in range(3)]
    expr = sy.expand(sum(p * sy.diff(fs, v) for p, v in zip(parts, (X, Y, Z))))
    eqs = sy.Poly(expr, X, Y, Z).coeffs() if expr != 0 else []
    if not eqs:
        return len(unknowns)
    matrix, _ = sy.linear_eq_to_matrix(eqs, unknowns)
    return len(unknowns) - matrix.rank()


def test_ar_dimension_examples():
    xy = parse_poly("x*y")
    assert ar_dimension(xy, 0) == 1 == _syzygy_nullity_oracle(xy, 0)
    for r in (0, 1):
        assert ar_dimension(FERMAT, r) == 0 == _syzygy_nullity_oracle(FERMAT, r)
    q1 = CONFIG_5.arrangement().product
    assert ar_dimension(q1, 2) == 0
    assert ar_dimension(q1, 3) >= 1


def test_ar_dimension_matches_oracle_on_a_nodal_quartic():
    f = parse_poly("x*y*(x - z)*(y + 2*z)")
    for r in range(4):
        assert ar_dimension(f, r) == _syzygy_nullity_oracle(f, r)


def test_koszul_relations_in_degree_d_minus_1():
    for fx in (CONFIG_5, CONFIG_8):
        f = fx.arrangement().product
        assert ar_dimension(f, f.degree() - 1) >= 3


def test_mdr_examples():
    assert mdr(parse_poly("x*y")) == 0
    assert global_report("Configuration 8").mdr == 3
    assert global_report("Maximizing septic G").mdr == 2


def test_syzygy_witness_is_a_relation():
    f = CONFIG_5.arrangement().product
    a, b, c = syzygy_witness(f, 3)
    fx, fy, fz = gradient(f)
    assert (a * fx + b * fy + c * fz).is_zero()
    assert not (a.is_zero() and b.is_zero() and c.is_zero())
    assert syzygy_witness(f, 2) is None


def test_freeness_check_examples():
    assert freeness_check(7, 27, 3) == (True, (3, 3))
    assert freeness_check(7, 28, 2) == (True, (2, 4))
    assert freeness_check(7, 26, 3)[0] is False
    # mdr above (d-1)/2 is never free
    assert freeness_check(7, 27, 4)[0] is False


def test_maximizing_examples():
    assert maximizing_check(6, 19)
    assert maximizing_check(7, 28)
    assert not maximizing_check(7, 27)
    assert [maximizing_tau(d) for d in (4, 5, 6, 7, 8)] == [7, 13, 19, 28, 37]
    assert required_mdr_for_maximizing(7) == 2
    with pytest.raises(ValueError, match="degree out of range"):
        maximizing_check(3, 1)


def test_analyze_examples():
    f = global_report("Persson sextic F")
    assert (f.tau, f.mdr, f.exponents, f.free, f.maximizing) == (19, 2, (2, 3), True, True)
    b = global_report("Configuration B")
    assert (b.tau, b.mdr, b.free, b.maximizing) == (27, 3, True, False)
    fermat = analyze(FERMAT)
    assert (fermat.tau, fermat.mdr, fermat.free, fermat.maximizing) == (0, 2, False, False)
    assert f.hf_window == [(12, 19), (13, 19), (14, 19), (15, 19)]


@pytest.mark.parametrize("fx", ALL_FIXTURES, ids=lambda f: f.name)
def test_mdr_range_and_maxi_consistency(fx):
    rep = global_report(fx.name)
    d = rep.degree
    assert 0 <= rep.mdr <= d - 1
    m = d // 2
    if d % 2 == 0:
        assert rep.maximizing == (rep.free and rep.exponents == (m - 1, m))
    elif rep.maximizing:
        assert rep.free
    assert rep.warnings == []


def test_nodal_quartics_match_local_sums():
    # oracle: tau of a nodal curve is its number of nodes
    four_lines = Arrangement([parse_poly(t) for t in ("x", "y", "z", "x + y + z")])
    conic_two_lines = Arrangement([parse_poly(t) for t in ("x^2 + y^2 - z^2", "x", "y")])
    for arr, nodes in ((four_lines, 6), (conic_two_lines, 5)):
        loc = analyze_singularities(arr)
        assert [r.type_name for r in loc.points] == ["A1"] * nodes
        assert tjurina_total(arr.product) == nodes == sum(r.tau_local for r in loc.points)


@pytest.mark.parametrize("fx", REFERENCE_FIXTURES, ids=lambda f: f.name)
def test_global_tau_equals_local_sum(fx):
    assert global_report(fx.name).tau == sum(r.tau_local for r in local_report(fx.name).points)
