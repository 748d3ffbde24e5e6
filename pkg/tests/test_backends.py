"""The numba and numpy kernels agree, in-process and end to end."""
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from flagvgit import _kernels as K

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba backend disabled")


@needs_numba
def test_kernels_agree():
    rng = np.random.default_rng(1)
    p = K.PRIME
    for n in (1, 5, 33):
        A = rng.integers(0, p, size=(n, n), dtype=np.int64)
        B = rng.integers(0, p, size=(n, 3), dtype=np.int64)
        N = np.triu(A, 1)
        assert np.array_equal(K.matmul_mod_np(A, B), K.matmul_mod_nb(A, B))
        assert K.rank_mod_np(A) == K.rank_mod_nb(A)
        assert np.array_equal(K.exp_apply_np(N, B), K.exp_apply_nb(N, B))


def test_rank_of_singular_matrix():
    M = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
    assert K.rank_mod(M) == 2
    assert K.rank_mod_np(M) == 2


def test_exp_rejects_non_nilpotent():
    N = np.eye(3, dtype=np.int64)
    with pytest.raises(ArithmeticError):
        K.exp_apply_np(N, np.eye(3, dtype=np.int64))


_SCRIPT = r"""
import json
from flagvgit import _kernels, build_root_datum, diagonal_embedding, principal_embedding, codim_unstable
from flagvgit.embed import xi_max
from flagvgit.liealg import generic_orbit_dim
E = diagonal_embedding(build_root_datum([("A", 2)]), 2)
P = principal_embedding(build_root_datum([("B", 2)]))
dims = [generic_orbit_dim(X, ld.xi, ld.twist(u), 4, 0).ranks
        for X in (E, P) for _, _, ld in xi_max(X) for u in ld.min_reps]
print(json.dumps({"backend": _kernels.backend(), "dims": dims, "codim": codim_unstable(E, (1, 2, 2, 1))}))
"""


def test_env_flag_switches_backend_and_results_agree():
    out = {}
    for flag in ("0", "1"):
        env = dict(os.environ, FLAGVGIT_DISABLE_NUMBA=flag)
        proc = subprocess.run([sys.executable, "-c", _SCRIPT], env=env, capture_output=True, text=True, check=True)
        out[flag] = json.loads(proc.stdout.strip().splitlines()[-1])
    assert out["1"]["backend"] == "numpy"
    assert out["0"]["dims"] == out["1"]["dims"]
    assert out["0"]["codim"] == out["1"]["codim"]
