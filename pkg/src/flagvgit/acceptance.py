"""Acceptance checks shared by the test-suite and the ``reproduce`` command.

Every check returns a CheckResult; cap violations turn into "skipped"
entries rather than silent omissions.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .cones import (CapError, Facet, ck_cone, facet_sample_on, g_wall_test, no_jump_audit,
                    rho_criterion, t_chambers)
from .embed import diagonal_embedding, levi_datum, principal_embedding, xi_max
from .liealg import generic_orbit_dim
from .oracle import membership
from .popov import is_ample, min_norm_point, dual_form
from .rational import inverse, primitive, qmat
from .rootcore import CapExceeded, bruhat_below, build_root_datum, order_inverted_set, reflection
from .strat import codim_unstable, components, fit_chain, stratifying_pairs


@dataclass
class CheckResult:
    key: str
    title: str
    status: str  # pass / fail / skipped
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        return f"[{self.status.upper():7}] {self.key:4} {self.title} ({self.seconds:.2f}s)"

    def as_dict(self) -> dict:
        return {"key": self.key, "title": self.title, "status": self.status, "detail": self.detail}


def _rd(s, n, cap=None):
    return build_root_datum([(s, n)], weyl_cap=cap) if cap else build_root_datum([(s, n)])


def _run(key, title, fn: Callable[[], tuple[bool, dict]]) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, detail = fn()
        status = "pass" if ok else "fail"
    except (CapExceeded, CapError) as exc:
        status, detail = "skipped", {"reason": str(exc)}
    return CheckResult(key, title, status, detail, time.perf_counter() - t)


# ------------------------------------------------------------ 1 - 6, 8

def check_principal(trials=4, seed=0, cap=None):
    def fn():
        t = time.perf_counter()
        E = principal_embedding(_rd("A", 2, cap))
        C1, C2 = ck_cone(E, 1, trials, seed), ck_cone(E, 2, trials, seed)
        full = C1.dim == 2 and all(x <= 0 for v in C1.functionals for x in v)
        recs = stratifying_pairs(E, (1, 1), trials, seed)
        comps = sorted(r.w.word for r in components(recs))
        rho_xi = all(tuple(levi_datum(E, r.xi).iota_xi) == (1, 1) for r in recs)
        codim = min(r.codim for r in recs)
        secs = time.perf_counter() - t
        ok = full and C2.dim == 0 and comps == [(0,), (1,)] and rho_xi and codim == 1 \
            and all(r.fit for r in recs) and secs < 1.0
        return ok, {"C1_dim": C1.dim, "C2_dim": C2.dim, "components": [list(w) for w in comps],
                    "all_strata": [list(r.w.word) for r in recs], "codim": codim,
                    "seconds": round(secs, 3)}
    return _run("1", "principal A1 in A2: C1 = chamber, C2 = 0, strata s1, s2, codim 1", fn)


def check_a1_squared(trials=4, seed=0, cap=None):
    def fn():
        E = diagonal_embedding(_rd("A", 1, cap), 2)
        C1 = ck_cone(E, 1, trials, seed)
        grid = all(is_ample(E, (a, b)) == (a == b) for a in range(1, 7) for b in range(1, 7))
        ray = C1.dim == 1 and C1.interior_point == (1, 1)
        c = codim_unstable(E, (1, 1), trials, seed)
        return grid and ray and c == 1, {"C1": C1.as_dict()["functionals"], "dim": C1.dim, "codim_rho": c}
    return _run("2", "diagonal A1^2: ample cone = {(a, a)}, codim(rho) = 1", fn)


def check_rho_table(trials=4, seed=0, cap=None, include_a3=True):
    def fn():
        rows = [(("A", 1), 3, 1), (("A", 1), 4, 2), (("A", 2), 3, 2)]
        if include_a3:
            rows.append((("A", 3), 3, 2))
        got = {}
        for (s, n), k, want in rows:
            E = diagonal_embedding(_rd(s, n, cap), k)
            got[f"{s}{n}^{k}"] = (codim_unstable(E, (1,) * (n * k), trials, seed), want)
        return all(a == b for a, b in got.values()), {k: {"got": a, "want": b} for k, (a, b) in got.items()}
    return _run("3", "codim(rho) table for diagonal A1^3, A1^4, A2^3, A3^3", fn)


def a2_cubed_example(a1=2, a2=1, trials=4, seed=0, cap=None):
    """Data of the SL3 in SL3^3 facet example: (restricted weight, expected weight, wall flag)."""
    E = diagonal_embedding(_rd("A", 2, cap), 3)
    lam = (a1, a2, a1 + a2, a1 + a2, a2, a1)
    ld = levi_datum(E, (2, 1))  # the ray of the first fundamental coweight
    u = E.g.weyl.from_word((0, 1, 2))  # (s1 s2, s1, 1)
    mu = ld.restricted_weight(lam, u)
    expected = tuple(Fraction(x, 3) for x in (a1 - a2, 3 * a1 + 3 * a2, 2 * a1 + a2))
    normal = primitive(u.inverse().act_coweight(ld.xi_std))
    sample = facet_sample_on(E, lam, normal)
    wall = g_wall_test(E, Facet(0, 0, 0, sample, normal), trials, seed)
    return {"lam": lam, "J": ld.J, "mumford": ld.mumford(lam, u), "restricted": mu, "expected": expected,
            "levi_ample": is_ample(ld.sub_embedding, mu), "facet_sample": sample, "wall": wall}


def check_a2_restricted_weight(cap=None):
    def fn():
        d = a2_cubed_example(cap=cap)
        ok = tuple(Fraction(x) for x in d["restricted"]) == d["expected"]
        return ok, {"restricted": list(d["restricted"]), "expected": [str(x) for x in d["expected"]]}
    return _run("4a", "diagonal A2^3 facet example: restricted weight = (1/3)(a1-a2, 3a1+3a2, 2a1+a2)", fn)


def check_a2_wall(trials=4, seed=0, cap=None):
    def fn():
        res = [a2_cubed_example(a1, a2, trials, seed, cap) for a1, a2 in ((2, 1), (3, 1), (5, 2))]
        ok = all(d["mumford"] == 0 and not d["levi_ample"] and d["wall"] is False for d in res)
        return ok, {"restricted": [list(d["restricted"]) for d in res], "wall": [d["wall"] for d in res]}
    return _run("4b", "diagonal A2^3 facet example: g_wall_test is false", fn)


def check_a1_fourth_c2(trials=4, seed=0, cap=None):
    def fn():
        E = diagonal_embedding(_rd("A", 1, cap), 4)
        C2 = ck_cone(E, 2, trials, seed)
        ok = C2.dim == 1 and C2.interior_point == (1, 1, 1, 1) and C2.contains((1, 1, 1, 1))
        return ok, {"dim": C2.dim, "interior_point": list(C2.interior_point)}
    return _run("5", "diagonal A1^4: C2 = R+ (1,1,1,1)", fn)


def check_oracle_agreement(j_max=6, box=4, kmax=4, cap=None):
    def fn():
        bad, n = [], 0
        t = time.perf_counter()
        for k in range(1, kmax + 1):
            E = diagonal_embedding(_rd("A", 1, cap), k)
            for lam in itertools.product(range(1, box + 1), repeat=k):
                n += 1
                if is_ample(E, lam) != membership(E, lam, j_max).member:
                    bad.append([k, list(lam)])
        secs = time.perf_counter() - t
        return not bad and secs < 300, {"checked": n, "disagreements": bad, "seconds": round(secs, 2)}
    return _run("6", "oracle agreement on diagonal A1^k, k <= 4, coords <= 4, j_max 6", fn)


def check_large_k(trials=4, seed=0, cap=None):
    def fn():
        out = {}
        ok = True
        for k in (5, 6):
            E = diagonal_embedding(_rd("A", 1, cap), k)
            c = codim_unstable(E, (1,) * k, trials, seed)
            crit = rho_criterion(E)
            C2 = ck_cone(E, 2, trials, seed)
            bound = -(-(k - 1) // 2)
            ok &= c >= bound and c >= 2 and C2.dim == k
            if crit >= 2:
                ok &= C2.dim == k
            out[k] = {"codim_rho": c, "lower_bound": bound, "criterion": str(crit), "C2_dim": C2.dim}
        return ok, out
    return _run("8", "diagonal A1^5, A1^6: movable chambers, a/(a+b) r - rhat criterion", fn)


# ------------------------------------------------------------ 7: properties

def check_inverted_sets(cap=None):
    def fn():
        n = 0
        for s, r in (("A", 2), ("B", 2), ("A", 3)):
            R = _rd(s, r, cap)
            for w in R.weyl:
                betas = order_inverted_set(w)
                psi = set(w.inverted_set())
                if set(betas) != psi or len(betas) != w.length:
                    return False, {"w": list(w.word)}
                cur = w
                for j, b in enumerate(betas):
                    # beta is simple for cur(Delta^+) and peeling drops exactly it
                    if b not in set(int(cur.perm[i]) for i in range(R.rank)):
                        return False, {"w": list(w.word), "step": j}
                    nxt = reflection(R, b) * cur
                    if set(nxt.inverted_set()) != psi - set(betas[:j + 1]) or nxt.length != w.length - j - 1:
                        return False, {"w": list(w.word), "step": j}
                    cur = nxt
                n += 1
        return True, {"elements": n}
    return _run("7a", "inverted-set ordering on A2, B2, A3", fn)


def check_bruhat(cap=None, seed=0):
    def fn():
        rng = np.random.default_rng(seed)
        n = 0
        for s, r in (("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)):
            R = _rd(s, r, cap)
            W = R.weyl
            lam = [int(x) for x in rng.integers(1, 5, R.rank)]
            xi = [int(x) for x in rng.integers(1, 5, R.rank)]
            orb = W.orbit_weights(lam)
            # dominant coweight with fundamental-coweight coordinates xi, in coroot coordinates
            Ainv = inverse(qmat(R.cartan.tolist()))
            xc = [sum((Ainv[a][b] * xi[b] for b in range(R.rank)), Fraction(0)) for a in range(R.rank)]
            vals = [sum((int(m) * x for m, x in zip(row, xc)), Fraction(0)) for row in orb]
            rho = [1] * R.rank
            w0 = W.w0()
            for w in W:
                if any(vals[u] < vals[w.index] for u in bruhat_below(w)):
                    return False, {"group": f"{s}{r}", "w": list(w.word)}
                a = w.act_weight(rho)
                b = (w * w0).act_weight(rho)
                if any(int(x) + int(y) for x, y in zip(a, b)):
                    return False, {"group": f"{s}{r}", "w": list(w.word), "pairing": True}
                n += 1
        return True, {"elements": n}
    return _run("7b", "Bruhat monotonicity of w lam(xi) and w rho + w w0 rho = 0", fn)


def check_no_jump(trials=4, seed=0, cap=None):
    def fn():
        out = {}
        ok = True
        for k in (3, 4):
            G = t_chambers(diagonal_embedding(_rd("A", 1, cap), k), trials=trials, seed=seed)
            rep = no_jump_audit(G)
            ok &= rep.ok
            out[k] = {"chambers": len(G.chambers), "facets": rep.adjacent, "violations": rep.violations,
                      "codims": sorted({c.codim for c in G.chambers})}
        return ok, out
    return _run("7c", "no-jump audit on diagonal A1^3 and A1^4 chamber graphs", fn)


def sample_embeddings(cap=None):
    A1, A2 = _rd("A", 1, cap), _rd("A", 2, cap)
    return {
        "principal A2": principal_embedding(A2),
        "principal B2": principal_embedding(_rd("B", 2, cap)),
        "diag A1^2": diagonal_embedding(A1, 2),
        "diag A1^3": diagonal_embedding(A1, 3),
        "diag A1^4": diagonal_embedding(A1, 4),
        "diag A1^5": diagonal_embedding(A1, 5),
        "diag A2^2": diagonal_embedding(A2, 2),
    }


def check_nesting(trials=4, seed=0, cap=None):
    def fn():
        out = {}
        ok = True
        for name, E in sample_embeddings(cap).items():
            C1, C2 = ck_cone(E, 1, trials, seed), ck_cone(E, 2, trials, seed)
            pts = C1.regular_boundary_points()
            bad = [list(p) for p in pts if C2.contains(p)]
            inner = C2.interior_point
            ok &= not bad and C1.contains(inner)
            out[name] = {"boundary_samples": len(pts), "in_C2": bad, "C1_dim": C1.dim, "C2_dim": C2.dim}
        return ok, out
    return _run("7d", "C2 inside the interior of C1 on regular boundary samples", fn)


def check_fit(trials=4, seed=0, cap=None):
    def fn():
        cases = [(principal_embedding(_rd("A", 2, cap)), (1, 1)),
                 (diagonal_embedding(_rd("A", 1, cap), 3), (1, 1, 1)),
                 (diagonal_embedding(_rd("A", 1, cap), 4), (1, 2, 1, 1)),
                 (diagonal_embedding(_rd("A", 2, cap), 2), (1, 2, 2, 1))]
        n_strata = n_chain = 0
        for E, lam in cases:
            for r in stratifying_pairs(E, lam, trials, seed):
                n_strata += 1
                if not r.fit:
                    return False, {"unfit": [str(x) for x in r.xi] + list(r.w.word)}
                chain = fit_chain(E, r.xi, r.w, trials, seed)
                n_chain += 1
                if not all(s.fit and s.minimal for s in chain):
                    return False, {"chain": [list(r.w.word)]}
                if any(b.codim - a.codim != 1 for a, b in zip(chain, chain[1:])):
                    return False, {"chain_codims": [s.codim for s in chain]}
        return True, {"strata": n_strata, "chains": n_chain}
    return _run("7e", "every stratum is fit; fit chains step codim by 1", fn)


def check_min_norm(count=200, seed=0):
    def fn():
        rng = np.random.default_rng(seed)
        n = 0
        for s, r in (("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)):
            Q = dual_form(_rd(s, r))
            for _ in range(count):
                m = int(rng.integers(1, 7))
                pts = [[Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 4))) for _ in range(r)]
                       for _ in range(m)]
                if not min_norm_point(pts, Q).certificate(Q):
                    return False, {"group": f"{s}{r}", "points": [[str(x) for x in p] for p in pts]}
                n += 1
        return True, {"sets": n}
    return _run("7f", "min-norm optimality certificates on random rational point sets", fn)


def check_determinism(trials=4, cap=None):
    def fn():
        n = 0
        for name, E in sample_embeddings(cap).items():
            for xi, sigma, ld in xi_max(E):
                for u in ld.min_reps:
                    w = ld.twist(u)
                    a = generic_orbit_dim(E, ld.xi, w, trials, 0)
                    b = generic_orbit_dim(E, ld.xi, w, trials, 1)
                    if a.dim != b.dim:
                        return False, {"embedding": name, "w": list(w.word), "dims": [a.dim, b.dim]}
                    n += 1
        return True, {"pairs": n}
    return _run("7g", "randomized rank: seeds 0 and 1 agree on every dimension", fn)


def run_all(trials=4, seed=0, cap=None, include_a3=True) -> list[CheckResult]:
    return [
        check_principal(trials, seed, cap),
        check_a1_squared(trials, seed, cap),
        check_rho_table(trials, seed, cap, include_a3),
        check_a2_restricted_weight(cap),
        check_a2_wall(trials, seed, cap),
        check_a1_fourth_c2(trials, seed, cap),
        check_oracle_agreement(cap=cap),
        check_inverted_sets(cap),
        check_bruhat(cap, seed),
        check_no_jump(trials, seed, cap),
        check_nesting(trials, seed, cap),
        check_fit(trials, seed, cap),
        check_min_norm(seed=seed),
        check_determinism(trials, cap),
        check_large_k(trials, seed, cap),
    ]
