"""Mumford values, the W+/W0/W- partition, stratifying pairs and the
codimension of the unstable locus (for hat G and for its maximal torus).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .embed import EmbeddingDatum, levi_datum, xi_max
from .liealg import generic_orbit_dim
from .popov import _check_weight, candidates, is_ample
from .rootcore import WeylElement, bruhat_below, order_inverted_set, reflection


def mumford_value(E: EmbeddingDatum, lam, xi, w: WeylElement) -> Fraction:
    """(w sigma_xi lam)(iota xi)."""
    ld = levi_datum(E, xi)
    v = w * ld.sigma
    mu = v.act_weight(lam)
    return sum((Fraction(int(m)) * x for m, x in zip(mu, ld.iota_xi)), Fraction(0))


@dataclass
class WPartition:
    plus: list
    zero: list
    minus: list

    def sizes(self):
        return len(self.plus), len(self.zero), len(self.minus)


def w_partition(E: EmbeddingDatum, lam, xi) -> WPartition:
    ld = levi_datum(E, xi)
    W = E.g.weyl
    # (w sigma lam)(iota xi) = lam((w sigma)^-1 iota xi)
    orb = W.orbit_coweights(ld.iota_xi)
    lam = [int(x) for x in lam]
    plus, zero, minus = [], [], []
    sig = ld.sigma
    for w in W:
        v = (w * sig).inverse()
        val = sum((Fraction(a) * x for a, x in zip(lam, orb[v.index])), Fraction(0))
        (plus if val > 0 else zero if val == 0 else minus).append(w)
    return WPartition(plus, zero, minus)


@dataclass
class StratumRecord:
    xi: tuple
    w: WeylElement
    u: WeylElement
    m: Fraction
    r: int
    rhat: int
    n: int
    length: int
    fit: bool | None = None
    measured_dim: int | None = None
    stabilized: bool | None = None

    @property
    def dim(self) -> int:
        return self.rhat + self.n + self.length

    @property
    def codim(self) -> int:
        return self.r - self.rhat - self.length

    def label(self):
        return (tuple(str(x) for x in self.xi), self.w.word)


def stratifying_pairs(E: EmbeddingDatum, lam, trials: int = 4, seed: int = 0,
                      check_fit: bool = True) -> list[StratumRecord]:
    """Pairs (xi, w) indexing the Kirwan-Ness strata of the unstable locus."""
    lam = _check_weight(E, lam)
    out = []
    for c in candidates(E, lam):
        if c.m <= 0:
            continue
        ld = c.ld
        if ld.sub_embedding.ghat.rank and not is_ample(ld.sub_embedding, ld.restricted_weight(lam, c.u)):
            continue
        rec = StratumRecord(ld.xi, c.w, c.u, c.m, ld.r, ld.rhat, ld.n, c.u.length)
        if check_fit:
            rep = generic_orbit_dim(E, ld.xi, c.w, trials, seed)
            rec.fit, rec.measured_dim, rec.stabilized = rep.fit, rep.dim, rep.stabilized
        out.append(rec)
    out.sort(key=lambda r: (r.codim, r.xi, r.w.word))
    return out


def codim_unstable(E: EmbeddingDatum, lam, trials: int = 4, seed: int = 0,
                   check_fit: bool = False):
    """codim of the unstable locus for a strictly dominant weight (None if empty)."""
    recs = stratifying_pairs(E, lam, trials, seed, check_fit=check_fit)
    if not recs:
        return None
    return min(r.codim for r in recs)


def sweep_codim(E: EmbeddingDatum, lam, trials: int = 4, seed: int = 0):
    """Independent path: min over Xi_max and unstable minimal w of the
    measured codimension of hat G P_xi x_{w sigma}."""
    lam = [int(x) for x in lam]
    best = None
    dimX = E.g.npos
    orbit = E.g.weyl.orbit_weights(lam)
    for xi, sigma, ld in xi_max(E):
        reps = [u for u in ld.min_reps
                if sum((Fraction(int(a)) * x for a, x in zip(orbit[u.index], ld.xi_std)), Fraction(0)) > 0]
        reps.sort(key=lambda u: -u.length)
        for u in reps:
            lower = ld.r - ld.rhat - u.length
            if best is not None and lower >= best:
                continue
            rep = generic_orbit_dim(E, ld.xi, ld.twist(u), trials, seed)
            c = dimX - rep.dim
            if best is None or c < best:
                best = c
    return best


def l_plus(E: EmbeddingDatum, lam, ld) -> int | None:
    orbit = E.g.weyl.orbit_weights([int(x) for x in lam])
    ls = [u.length for u in ld.min_reps
          if sum((Fraction(int(a)) * x for a, x in zip(orbit[u.index], ld.xi_std)), Fraction(0)) > 0]
    return max(ls) if ls else None


def t_codim_unstable(E: EmbeddingDatum, lam):
    """codim of the unstable locus for the maximal torus of hat G.

    Returns None when nothing is unstable (e.g. lam = 0)."""
    vals = []
    for xi, sigma, ld in xi_max(E):
        lp = l_plus(E, lam, ld)
        if lp is not None:
            vals.append(ld.r - lp)
    return min(vals) if vals else None


def t_codim_bruteforce(E: EmbeddingDatum, lam):
    """Blade enumeration over hat W-translates of Xi_max and all of W."""
    R, Rh = E.g, E.ghat
    lam = [int(x) for x in lam]
    best = None
    Wh = Rh.weyl
    W = R.weyl
    for xi, sigma, ld in xi_max(E):
        etas = {tuple(x) for x in Wh.orbit_coweights(list(xi))}
        for eta in sorted(etas):
            ie = E.iota_coweight(eta)
            vals = [sum((Fraction(int(a)) * x for a, x in zip(R.root_weights[k], ie)), Fraction(0))
                    for k in range(R.nroots)]
            for v in W:
                m = sum((Fraction(int(a)) * x for a, x in zip(v.act_weight(lam), ie)), Fraction(0))
                if m <= 0:
                    continue
                d = sum(1 for k in range(R.npos, R.nroots) if vals[int(v.perm[k])] >= 0)
                c = R.npos - d
                if best is None or c < best:
                    best = c
    return best


def components(records: list[StratumRecord]) -> list[StratumRecord]:
    """Strata not contained in the closure of another stratum with the same xi.

    Closure of P_xi x_u within a fixed blade follows the Bruhat order on the
    minimal representatives u."""
    out = []
    for r in records:
        below_other = False
        for s in records:
            if s is r or s.xi != r.xi:
                continue
            if r.u.index in bruhat_below(s.u) and r.u.index != s.u.index:
                below_other = True
                break
        if not below_other:
            out.append(r)
    return out


@dataclass
class ChainStep:
    u: WeylElement
    length: int
    fit: bool
    codim: int  # measured codimension of hat G P_xi x_{w sigma}
    minimal: bool


def fit_chain(E: EmbeddingDatum, xi, w: WeylElement, trials: int = 4, seed: int = 0) -> list[ChainStep]:
    """Peel the inverted set of u = sigma^-1 w sigma one root at a time and
    measure every intermediate parabolic orbit."""
    ld = levi_datum(E, xi)
    u = ld.untwist(w)
    reps = {v.index for v in ld.min_reps}
    steps = []
    cur = u
    for _ in range(u.length + 1):
        rep = generic_orbit_dim(E, ld.xi, ld.twist(cur), trials, seed)
        steps.append(ChainStep(cur, cur.length, rep.fit, E.dim_X - rep.dim, cur.index in reps))
        if cur.length == 0:
            break
        beta = order_inverted_set(cur)[0]
        cur = reflection(E.g, beta) * cur
    return steps
