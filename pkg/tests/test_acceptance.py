"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line
(visible with ``pytest -s`` or in the captured-output section on failure).

4a is expected to fail: the computed restricted weight is (a1, 2a1 + 2a2, a1),
which is an honest disagreement with the quoted (1/3)(a1-a2, 3a1+3a2, 2a1+a2);
the verdict it feeds (not a wall) agrees.
"""
from flagvgit import acceptance as A


def _report(res):
    print("\n" + res.line())
    print("    " + str(res.detail))
    assert res.status != "skipped", res.detail
    assert res.ok, res.detail

def test_1_principal_a1_in_a2():
    _report(A.check_principal())

def test_2_diagonal_a1_squared():
    _report(A.check_a1_squared())

def test_3_codim_rho_table():
    _report(A.check_rho_table(include_a3=True))

def test_4a_a2_cubed_restricted_weight():
    _report(A.check_a2_restricted_weight())

def test_4b_a2_cubed_not_a_wall():
    _report(A.check_a2_wall())

def test_5_a1_fourth_c2_is_diagonal_ray():
    _report(A.check_a1_fourth_c2())

def test_6_oracle_agreement():
    _report(A.check_oracle_agreement())

def test_7a_inverted_sets():
    _report(A.check_inverted_sets())

def test_7b_bruhat_monotonicity():
    _report(A.check_bruhat())

def test_7c_no_jump():
    _report(A.check_no_jump())

def test_7d_cone_nesting():
    _report(A.check_nesting())

def test_7e_fit_strata_and_chains():
    _report(A.check_fit())

def test_7f_min_norm_certificates():
    _report(A.check_min_norm())

def test_7g_seed_determinism():
    _report(A.check_determinism())

def test_8_large_k_substitute():
    _report(A.check_large_k())
