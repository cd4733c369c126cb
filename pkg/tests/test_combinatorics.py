import itertools
from fractions import Fraction

import pytest

from freecurves.ade import A1, A3, A5, A7, CATALOG, D4, D6, D8, AdeType, parse_types
from freecurves.combinatorics import (
    BMY_COEFFICIENTS,
    BMY_RHS,
    EXCLUDED,
    OPEN,
    OutOfScope,
    WeakCombinatorics,
    arnold_exponent,
    bmy_derivation_check,
    bmy_derivation_mismatches,
    bmy_residuals,
    derive_hirzebruch,
    enumerate_weak_combinatorics,
    hirzebruch_filter,
    hirzebruch_holds,
    maximizing_feasibility,
    mdr_lower_bound,
    naive_count_identity_holds,
    pairwise_budget,
)
from freecurves.fixtures import HIRZEBRUCH_SURVIVORS, SEPTIC_K1_TUPLES


def W(*counts, k=1, d=5):
    return WeakCombinatorics(*counts, k=k, d=d)


# -- catalog ------------------------------------------------------------------


def test_lct_values():
    assert A1.lct == 1
    assert A3.lct == Fraction(3, 4)
    assert A7.lct == Fraction(5, 8)
    assert D4.lct == Fraction(2, 3)
    assert D8.lct == Fraction(4, 7)
    assert [AdeType("E", k).lct for k in (6, 7, 8)] == [Fraction(7, 12), Fraction(5, 9), Fraction(8, 15)]


def test_lct_matches_the_closed_forms_for_even_types():
    # A_{2k-1}: (k+1)/(2k); D_{2k}: k/(2k-1)
    for k in range(1, 8):
        assert AdeType("A", 2 * k - 1).lct == Fraction(k + 1, 2 * k)
    for k in range(2, 8):
        assert AdeType("D", 2 * k).lct == Fraction(k, 2 * k - 1)


def test_pair_weights_of_the_catalog():
    assert [t.pair_weight for t in (A1, A3, A5, A7, D4, D6, D8)] == [1, 2, 3, 4, 3, 4, 5]
    assert AdeType("A", 2).pair_weight is None


def test_type_parsing():
    assert parse_types("A1, D8,E6") == [A1, D8, AdeType("E", 6)]
    for bad in ("B3", "D3", "E9", "A0"):
        with pytest.raises(ValueError):
            AdeType.parse(bad)


# -- enumeration --------------------------------------------------------------


def test_pairwise_budget_examples():
    assert pairwise_budget(1, 5) == 20
    assert pairwise_budget(3, 1) == 18
    assert pairwise_budget(0, 2) == 1
    assert [pairwise_budget(k, 7 - 2 * k) for k in (1, 2, 3)] == [20, 19, 18]


def test_enumeration_counts_and_order():
    k1 = enumerate_weak_combinatorics(1)
    assert len(k1) == 103
    assert [w.counts for w in k1] == sorted(w.counts for w in k1)
    assert {w.counts for w in k1} == set(SEPTIC_K1_TUPLES)
    total = sum(len(enumerate_weak_combinatorics(k)) for k in (1, 2, 3))
    assert total == 296


def test_last_tuple_satisfies_both_equations():
    last = W(9, 0, 0, 1, 2, 0, 0)
    assert last in enumerate_weak_combinatorics(1)
    assert 9 + 5 + 14 == last.tau() == 28
    assert 9 + 3 + 8 == last.pair_sum() == 20


def _brute_force(k):
    """Reversed loop nesting with crude bounds; independent of the library."""
    mus = (1, 4, 3, 5, 7, 6, 8)
    pairs = (1, 3, 2, 3, 4, 4, 5)
    d = 7 - 2 * k
    budget = d * (d - 1) // 2 + 2 * d * k + 2 * k * (k - 1)
    found = set()
    for d8, d6, t7, t5, t3, n3 in itertools.product(
        range(4), range(5), range(5), range(6), range(10), range(8)
    ):
        partial_mu = 8 * d8 + 6 * d6 + 7 * t7 + 5 * t5 + 3 * t3 + 4 * n3
        n2 = 28 - partial_mu
        if n2 < 0:
            continue
        counts = (n2, n3, t3, t5, t7, d6, d8)
        if sum(p * c for p, c in zip(pairs, counts)) == budget:
            assert sum(m * c for m, c in zip(mus, counts)) == 28
            found.add(counts)
    return found


@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumeration_matches_brute_force(k):
    assert {w.counts for w in enumerate_weak_combinatorics(k)} == _brute_force(k)


def test_enumeration_rejects_bad_k():
    with pytest.raises(ValueError):
        enumerate_weak_combinatorics(4)


# -- Hirzebruch filter ----------------------------------------------------------


def test_hirzebruch_examples():
    assert hirzebruch_holds(W(0, 4, 0, 0, 0, 2, 0))  # 11 >= 5 + 13/4
    assert not hirzebruch_holds(W(0, 4, 4, 0, 0, 0, 0))  # 11 >= 15 fails
    assert hirzebruch_holds(W(4, 2, 0, 0, 0, 0, 2))  # 12 >= 5 + 15/2
    # the same three by direct substitution
    assert 8 + 3 >= 5 + Fraction(13, 4)
    assert not 8 + 3 >= 5 + 10
    assert 8 + 4 + Fraction(3, 2) >= 5 + Fraction(15, 2)


def test_hirzebruch_scope():
    with pytest.raises(OutOfScope, match="inequality out of scope"):
        hirzebruch_holds(W(0, 0, 0, 0, 0, 0, 0, k=0, d=7))
    with pytest.raises(OutOfScope):
        hirzebruch_holds(W(k=2, d=0))


def test_hirzebruch_filter():
    k1 = enumerate_weak_combinatorics(1)
    survivors = hirzebruch_filter(k1)
    assert [w.counts for w in survivors] == list(HIRZEBRUCH_SURVIVORS)
    assert hirzebruch_filter([]) == []
    single = [W(0, 5, 0, 0, 0, 0, 1)]
    assert hirzebruch_filter(single) == single
    assert set(survivors) <= set(k1)
    assert hirzebruch_filter(survivors) == survivors
    with pytest.raises(ValueError):
        hirzebruch_filter([W(k=1, d=5), W(k=2, d=3)])


# -- lct bound ------------------------------------------------------------------


def test_arnold_exponent_examples():
    assert arnold_exponent([A1, A3, A5, A7, D4, D6]) == Fraction(3, 5)
    assert arnold_exponent([A1]) == 1
    assert arnold_exponent([D8]) == Fraction(4, 7)
    with pytest.raises(ValueError):
        arnold_exponent([])


def test_mdr_lower_bound_examples():
    assert Fraction(3, 5) * 7 - 2 == Fraction(11, 5)
    assert mdr_lower_bound(7, [A1, A3, A5, A7, D4, D6]) == 3
    assert Fraction(4, 7) * 7 - 2 == 2
    assert mdr_lower_bound(7, [D8]) == 2
    assert mdr_lower_bound(5, [A1]) == 3


def test_feasibility_verdicts():
    for w in enumerate_weak_combinatorics(1):
        types = w.types_present()
        if D8 not in types:
            assert maximizing_feasibility(w) == EXCLUDED
        else:
            assert maximizing_feasibility(w) == OPEN
    assert maximizing_feasibility(W(0, 5, 0, 0, 0, 0, 1)) == OPEN
    assert maximizing_feasibility(W(4, 2, 0, 0, 0, 0, 2)) == OPEN


def test_feasibility_among_hirzebruch_survivors():
    verdicts = {s: maximizing_feasibility(W(*s)) for s in HIRZEBRUCH_SURVIVORS}
    assert sorted(s for s, v in verdicts.items() if v == OPEN) == [
        (0, 5, 0, 0, 0, 0, 1),
        (1, 4, 1, 0, 0, 0, 1),
        (2, 3, 0, 0, 0, 1, 1),
        (4, 1, 0, 0, 0, 2, 1),
        (4, 2, 0, 0, 0, 0, 2),
    ]


# -- derivation of the inequality ------------------------------------------------


def test_naive_count_identity():
    assert naive_count_identity_holds()
    for k in range(4):
        for d in range(8):
            assert (2 * k + d) ** 2 == d + 4 * k + 2 * pairwise_budget(k, d)


def test_bmy_residuals():
    # coefficient minus 2 * (5/4) * pair weight, computed by hand
    expected = {
        "n2": Fraction(9, 4) - Fraction(5, 2),
        "n3": Fraction(117, 16) - Fraction(15, 2),
        "t3": Fraction(45, 8) - 5,
        "t5": Fraction(35, 4) - Fraction(15, 2),
        "t7": Fraction(189, 16) - 10,
        "d6": Fraction(333, 32) - 10,
        "d8": Fraction(215, 16) - Fraction(25, 2),
    }
    assert bmy_residuals() == expected
    assert list(expected.values()) == [
        Fraction(-1, 4), Fraction(-3, 16), Fraction(5, 8), Fraction(5, 4),
        Fraction(29, 16), Fraction(13, 32), Fraction(15, 16),
    ]


def test_bmy_derivation_recovers_the_inequality():
    assert bmy_derivation_check()
    derived = derive_hirzebruch()
    assert derived["k"] == 8 and derived["d"] == -1
    assert derived["t7"] == Fraction(-29, 4)


@pytest.mark.parametrize("name", sorted(BMY_COEFFICIENTS))
def test_bmy_single_coefficient_perturbation_fails(name):
    coeffs = dict(BMY_COEFFICIENTS)
    coeffs[name] += 1
    assert not bmy_derivation_check(coeffs)
    assert name in bmy_derivation_mismatches(coeffs)


@pytest.mark.parametrize("index", [0, 1])
def test_bmy_rhs_perturbation_fails(index):
    rhs = list(BMY_RHS)
    rhs[index] += Fraction(1, 8)
    assert not bmy_derivation_check(rhs=tuple(rhs))


def test_weak_combinatorics_type():
    w = W(5, 1, 2, 0, 0, 2, 0)
    assert str(w) == "(5,1,2,0,0,2,0)"
    assert w.degree == 7 and w.tau() == 27
    assert w.types_present() == {A1, D4, A3, D6}
    assert set(CATALOG) == {"n2", "n3", "t3", "t5", "t7", "d6", "d8"}
    with pytest.raises(ValueError):
        W(-1)
