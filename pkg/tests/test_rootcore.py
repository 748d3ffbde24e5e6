from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from flagvgit.rootcore import (CapExceeded, bruhat_below, build_root_datum, coset_reps, levi_roots_of_coweight,
                               min_coset_reps, order_inverted_set, parse_type, reflection)

# classical orders, independent of the enumeration
ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("B", 3): 48, ("C", 3): 48,
          ("D", 4): 192, ("G", 2): 12, ("F", 4): 1152}
NPOS = {("A", 3): 6, ("B", 3): 9, ("C", 3): 9, ("D", 4): 12, ("G", 2): 6, ("F", 4): 24, ("E", 6): 36}


@pytest.mark.parametrize("t", sorted(ORDERS))
def test_weyl_orders(t):
    R = build_root_datum([t])
    assert R.weyl.order == ORDERS[t] == len(list(R.weyl))
    assert R.weyl.w0().length == R.npos


@pytest.mark.parametrize("t", sorted(NPOS))
def test_positive_root_counts(t):
    assert build_root_datum([t]).npos == NPOS[t]


def test_a_series_order_formula():
    for n in range(1, 5):
        assert build_root_datum([("A", n)]).weyl.order == factorial(n + 1)


def test_parse_type():
    assert parse_type("A2^3") == [("A", 2)] * 3
    assert parse_type("A1xB2") == [("A", 1), ("B", 2)]
    with pytest.raises(ValueError):
        build_root_datum(parse_type("Q7"))


def test_weyl_cap():
    with pytest.raises(CapExceeded):
        build_root_datum([("A", 4)], weyl_cap=50).weyl


def test_words_are_reduced_and_round_trip():
    R = build_root_datum([("B", 3)])
    W = R.weyl
    for w in W:
        assert len(w.word) == w.length
        assert W.from_word(w.word) == w
        assert w * w.inverse() == W.identity()


def test_simple_reflection_on_weights():
    R = build_root_datum([("G", 2)])
    W = R.weyl
    lam = np.array([3, 5])
    for i in range(2):
        s = W.from_word((i,))
        assert list(s.act_weight(lam)) == list(lam - lam[i] * R.cartan[i])


def test_inverted_set_size_and_order():
    R = build_root_datum([("A", 3)])
    for w in R.weyl:
        betas = order_inverted_set(w)
        assert sorted(betas) == sorted(w.inverted_set())
        cur = w
        for b in betas:
            cur = reflection(R, b) * cur
        assert cur.length == 0


def test_bruhat_below_against_subwords():
    # independent check: u <= w iff u is a product of a subword of a reduced word of w
    import itertools
    R = build_root_datum([("A", 2)])
    W = R.weyl
    for w in W:
        sub = set()
        for mask in itertools.product((0, 1), repeat=len(w.word)):
            sub.add(W.from_word(tuple(i for i, m in zip(w.word, mask) if m)).index)
        assert bruhat_below(w) == sub


def test_coset_reps_minimal_and_maximal():
    R = build_root_datum([("A", 3)])
    J = [0, 2]
    mins = min_coset_reps(R, J)
    assert len(mins) == R.weyl.order // 4
    levi = levi_roots_of_coweight(R, [1, 2, 1])  # fundamental coweight 2
    for w in R.weyl:
        umin, umax = coset_reps(R, levi, w)
        assert umin in mins
        assert umax.length == umin.length + 2


def test_rho_vee_halves_sum_of_coroots():
    R = build_root_datum([("B", 2)])
    assert R.rho_vee == [Fraction(x, 2) for x in R.two_rho_vee]
    assert any(x.denominator == 2 for x in R.rho_vee)
