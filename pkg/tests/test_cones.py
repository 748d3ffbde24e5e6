from fractions import Fraction

import pytest

from flagvgit import build_root_datum, diagonal_embedding, principal_embedding
from flagvgit.cones import (CapError, ConeH, ck_cone, g_wall_test, hat_g_classes, no_jump_audit,
                            rho_criterion, t_chambers, t_hyperplanes)
from flagvgit.embed import EmbeddingError


def test_cone_basics():
    C = ConeH(2, [(1, -1)])
    assert C.contains((1, 2)) and not C.contains((2, 1)) and not C.contains((-1, 0))
    assert C.dim == 2
    D = ConeH(2, [(1, -1), (-1, 1)])
    assert D.dim == 1 and D.interior_point == (1, 1)
    Z = ConeH(2, [(1, 0), (0, 1)])
    assert Z.dim == 0 and Z.interior_point == (0, 0)


def test_ck_nested(diag):
    E = diag(4)
    C1, C2, C3 = (ck_cone(E, k) for k in (1, 2, 3))
    assert C1.dim == 4 and C2.dim == 1
    assert C1.contains(C2.interior_point)
    # C3 lies inside C2
    assert all(C2.contains(p) for p in [C3.interior_point])


def test_a1_squared_ray(diag):
    C1 = ck_cone(diag(2), 1)
    assert C1.dim == 1 and C1.contains((3, 3)) and not C1.contains((3, 2))


def test_principal_c1_is_chamber(principal_a2):
    C1 = ck_cone(principal_a2, 1)
    assert C1.dim == 2 and C1.contains((1, 5)) and C1.contains((5, 1))
    assert ck_cone(principal_a2, 2).dim == 0


def test_t_hyperplanes_a1_cubed(diag):
    assert t_hyperplanes(diag(3)) == [(1, -1, -1), (1, -1, 1), (1, 1, -1)]


def test_chamber_graph_a1_cubed(diag):
    G = t_chambers(diag(3))
    assert len(G.chambers) == 4 and len(G.facets) == 3
    assert sorted(c.codim for c in G.chambers) == [0, 0, 0, 1]
    assert all(f.wall for f in G.facets)
    assert no_jump_audit(G).ok
    kinds = sorted(c["kind"] for c in hat_g_classes(G))
    assert "unstable" in kinds


def test_hyperplane_cap(diag):
    with pytest.raises(CapError):
        t_chambers(diag(4), cap=2)


def test_wall_test_rejects_non_regular(diag):
    from flagvgit.cones import Facet
    with pytest.raises(ValueError):
        g_wall_test(diag(3), Facet(0, 1, 0, (0, 1, 1), (1, -1, -1)))


def test_rho_criterion_a1k(diag):
    for k in range(2, 7):
        assert rho_criterion(diag(k)) == Fraction(k, 2) - 1
