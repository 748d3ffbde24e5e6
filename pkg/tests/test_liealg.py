import numpy as np
import pytest

from flagvgit import build_root_datum, diagonal_embedding, principal_embedding
from flagvgit import liealg
from flagvgit.embed import xi_max
from flagvgit.liealg import AlgebraError, build_algebra, embedding_images, generic_orbit_dim


@pytest.mark.parametrize("t", [("A", 2), ("B", 2), ("C", 3), ("G", 2), ("D", 4)])
def test_jacobi_and_dimension(t):
    R = build_root_datum([t])
    g = build_algebra(R)
    assert g.dim == R.rank + R.nroots
    assert g.check_jacobi()


def test_dim_cap(monkeypatch):
    R = build_root_datum([("B", 3)])
    with pytest.raises(Exception) as exc:
        build_algebra(R, dim_cap=5)
    assert "cap" in str(exc.value).lower() or isinstance(exc.value, (AlgebraError,))


def test_images_bracket_closed_for_principal():
    # the image of sl2 is a subalgebra: [e, f] lies in the span of the three images
    E = principal_embedding(build_root_datum([("A", 2)]))
    img = np.array(embedding_images(E), dtype=object)
    assert np.linalg.matrix_rank(img.astype(float)) == 3


def test_trials_validation():
    E = diagonal_embedding(build_root_datum([("A", 1)]), 2)
    xi, sigma, ld = xi_max(E)[0]
    with pytest.raises(ValueError):
        generic_orbit_dim(E, ld.xi, ld.twist(ld.min_reps[0]), trials=2)


def test_orbit_dims_are_bounded_and_seed_stable():
    E = diagonal_embedding(build_root_datum([("A", 2)]), 2)
    for xi, sigma, ld in xi_max(E):
        for u in ld.min_reps:
            w = ld.twist(u)
            a = generic_orbit_dim(E, ld.xi, w, 4, 0)
            b = generic_orbit_dim(E, ld.xi, w, 4, 7)
            assert a.dim == b.dim <= a.upper
            assert a.dim <= E.g.npos
            assert a.stabilized
