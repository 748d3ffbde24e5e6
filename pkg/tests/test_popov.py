import itertools
from fractions import Fraction

import pytest

from flagvgit import build_root_datum, diagonal_embedding, is_ample, min_norm_point
from flagvgit.popov import build_tree, candidates, dual_form, m_set

# [DERIVED] oracle.membership (j_max 4) on the box {1,2,3}^4, frozen
A2SQ_AMPLE = {(1, 1, 1, 1), (1, 2, 2, 1), (1, 3, 3, 1), (2, 1, 1, 2), (2, 2, 2, 2), (2, 3, 3, 2),
              (3, 1, 1, 3), (3, 2, 2, 3), (3, 3, 3, 3)}


def test_min_norm_segment():
    res = min_norm_point([(1, 0), (0, 1)])
    assert res.nu == (Fraction(1, 2), Fraction(1, 2))
    assert res.certificate([[1, 0], [0, 1]])


def test_min_norm_contains_origin():
    res = min_norm_point([(1, 1), (-1, 0), (0, -1)])
    assert res.nu == (0, 0)


def test_min_norm_single_and_empty():
    assert min_norm_point([(3, 4)]).nu == (3, 4)
    with pytest.raises(ValueError):
        min_norm_point([])


def test_min_norm_respects_form():
    Q = dual_form(build_root_datum([("A", 2)]))
    res = min_norm_point([(2, -1), (-1, 2)], Q)
    assert res.nu == (Fraction(1, 2), Fraction(1, 2))
    assert res.certificate(Q)


def test_a2_squared_ample_box(diag):
    E = diagonal_embedding(build_root_datum([("A", 2)]), 2)
    got = {l for l in itertools.product(range(1, 4), repeat=4) if is_ample(E, l)}
    assert got == A2SQ_AMPLE


def test_a1_triangle_inequalities(diag):
    # SL2 in SL2^3: invariants in V_a x V_b x V_c up to multiples iff triangle inequalities
    E = diag(3)
    for lam in itertools.product(range(1, 6), repeat=3):
        a, b, c = lam
        assert is_ample(E, lam) == (a <= b + c and b <= a + c and c <= a + b)


def test_tree_height_and_sign(diag):
    E = diag(3)
    t = build_tree(E, (5, 1, 1))
    assert t.sign == "-" and t.height <= E.ghat.rank
    assert build_tree(E, (1, 1, 1)).sign == "+"


def test_m_set_members_have_codim_zero(diag):
    E = diag(4)
    for c in m_set(E, (7, 1, 1, 1)):
        assert c.codim == 0 and c.dim == E.g.npos


def test_weight_validation(diag):
    with pytest.raises(ValueError):
        is_ample(diag(2), (0, 1))
    with pytest.raises(ValueError):
        is_ample(diag(2), (1, 1, 1))


def test_candidates_memoised(diag):
    E = diag(3)
    assert candidates(E, (1, 2, 3)) is candidates(E, (1, 2, 3))
