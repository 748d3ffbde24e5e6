from fractions import Fraction

import pytest

from flagvgit import (EmbeddingError, build_root_datum, custom_embedding, diagonal_embedding,
                      embedding_from_spec, principal_embedding)
from flagvgit.embed import cubicles, faces, levi_datum, xi_max


def test_principal_iota_is_twice_rho_vee():
    for t in [("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
        R = build_root_datum([t])
        E = principal_embedding(R)
        assert [row[0] for row in E.iota] == [Fraction(int(x)) for x in R.two_rho_vee]


def test_diagonal_iota():
    E = diagonal_embedding(build_root_datum([("A", 2)]), 3)
    assert E.g.rank == 6 and E.ghat.rank == 2
    assert [list(map(int, r)) for r in E.iota] == [[1, 0], [0, 1]] * 3


def test_bad_shape_rejected():
    A1 = build_root_datum([("A", 1)])
    with pytest.raises(EmbeddingError):
        custom_embedding(A1, build_root_datum([("A", 2)]), [[1]])


def test_spec_round_trip():
    E = embedding_from_spec({"kind": "diagonal", "factor": {"series": "A", "rank": 1}, "copies": 3})
    assert E.g.rank == 3 and E.kind == "diagonal"
    with pytest.raises(EmbeddingError):
        embedding_from_spec({"nokind": 1})


def test_xi_max_diagonal_a1():
    E = diagonal_embedding(build_root_datum([("A", 1)]), 4)
    assert [tuple(x) for x, _, _ in xi_max(E)] == [(1,)]


def test_levi_datum_counts_principal():
    E = principal_embedding(build_root_datum([("A", 2)]))
    ld = levi_datum(E, (1,))
    # iota(xi) regular: no Levi roots, all 3 positive roots positive on it
    assert ld.n == 0 and ld.r == 3 and ld.rhat == 1
    assert ld.J == []


def test_faces_cover_dominant_chamber():
    E = diagonal_embedding(build_root_datum([("A", 2)]), 2)
    assert len(cubicles(E)) >= 1
    fs = faces(E)
    assert fs and all(len(f.signs) == len(fs[0].signs) for f in fs)


def test_levi_zero_rejected():
    E = diagonal_embedding(build_root_datum([("A", 1)]), 2)
    with pytest.raises(EmbeddingError):
        levi_datum(E, (0,))
