import pytest

from flagvgit import build_root_datum, codim_unstable, diagonal_embedding, stratifying_pairs
from flagvgit.strat import components, fit_chain, sweep_codim, t_codim_bruteforce, t_codim_unstable

# [DERIVED] (k, lam) -> (torus codim, hat G codim): brute-force blades / tangent-rank sweep, frozen
A1K = {
    (3, (1, 1, 1)): (2, 1), (3, (1, 2, 1)): (2, 1), (3, (3, 1, 1)): (1, 0),
    (4, (1, 1, 1, 1)): (3, 2), (4, (1, 2, 1, 1)): (2, 1), (4, (3, 1, 1, 1)): (2, 1),
}
A2SQ = {(1, 1, 1, 1): (3, 1), (1, 2, 2, 1): (3, 1), (2, 1, 1, 2): (3, 1), (1, 1, 2, 2): (2, 0)}


@pytest.mark.parametrize("case", sorted(A1K))
def test_a1k_codims(diag, case):
    k, lam = case
    E = diag(k)
    assert (t_codim_unstable(E, lam), codim_unstable(E, lam)) == A1K[case]
    assert t_codim_bruteforce(E, lam) == A1K[case][0]


@pytest.mark.parametrize("lam", sorted(A2SQ))
def test_a2_squared_codims(lam):
    E = diagonal_embedding(build_root_datum([("A", 2)]), 2)
    assert (t_codim_unstable(E, lam), codim_unstable(E, lam)) == A2SQ[lam]


def test_formula_matches_sweep(diag):
    for k in (2, 3, 4):
        E = diag(k)
        for lam in [(1,) * k, (2,) + (1,) * (k - 1), (1, 3) + (1,) * (k - 2)]:
            assert codim_unstable(E, lam) == sweep_codim(E, lam)


def test_hat_g_codim_at_most_torus_codim(diag):
    E = diag(4)
    for lam in [(1, 1, 1, 1), (2, 1, 3, 1), (5, 1, 1, 2)]:
        assert codim_unstable(E, lam) <= t_codim_unstable(E, lam)


def test_principal_strata(principal_a2):
    recs = stratifying_pairs(principal_a2, (1, 1))
    assert sorted(r.w.word for r in components(recs)) == [(0,), (1,)]
    assert all(r.fit and r.stabilized for r in recs)
    assert min(r.codim for r in recs) == 1


def test_fit_chain_steps(diag):
    E = diag(4)
    for r in stratifying_pairs(E, (1, 2, 1, 1)):
        chain = fit_chain(E, r.xi, r.w)
        assert chain[0].length == r.length and chain[-1].length == 0
        assert [b.codim - a.codim for a, b in zip(chain, chain[1:])] == [1] * (len(chain) - 1)


def test_strata_dims_add_up(diag):
    E = diag(3)
    for r in stratifying_pairs(E, (4, 1, 1)):
        assert r.dim + r.codim == E.g.npos
        assert r.m > 0
