"""Brute-force dimensions of hat G-invariants in irreducible G-modules.

Weight multiplicities come from Freudenthal's recursion on each simple factor
of G; the character is pushed to hat G through iota^*, and the trivial
multiplicity is read off by the alternating sum over the Weyl group of hat G.
A Kostant partition-function counter and the SL_2 Clebsch-Gordan rule are
kept as independent cross-checks.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .embed import EmbeddingDatum, _sub_root_datum
from .rational import inverse, qmat
from .rootcore import CapExceeded, RootDatum

DEFAULT_WEIGHT_CAP = 2_000_000


def _dominant(R: RootDatum, mu):
    """Dominant representative of the W-orbit of mu."""
    mu = np.array(mu, dtype=np.int64)
    while True:
        neg = np.nonzero(mu < 0)[0]
        if neg.size == 0:
            return tuple(int(x) for x in mu)
        i = neg[0]
        mu = mu - mu[i] * R.cartan[i]


def dominant_multiplicities(R: RootDatum, lam, cap: int = DEFAULT_WEIGHT_CAP) -> dict:
    """{dominant mu: mult of mu in V_lam} by Freudenthal's formula."""
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError("highest weight must be dominant")
    if R.rank == 0:
        return {(): 1}
    pos = [tuple(int(x) for x in R.root_weights[k]) for k in range(R.npos)]
    Ainv = inverse(qmat(R.cartan.tolist()))
    # dominant weights below lam, by subtracting positive roots
    seen = {lam}
    order = [lam]
    k = 0
    while k < len(order):
        mu = order[k]
        for a in pos:
            nu = tuple(m - x for m, x in zip(mu, a))
            if min(nu) >= 0 and nu not in seen:
                seen.add(nu)
                order.append(nu)
                if len(order) > cap:
                    raise CapExceeded(f"more than {cap} dominant weights")
        k += 1

    def height(mu):
        d = [l - m for l, m in zip(lam, mu)]
        return sum(d[i] * Ainv[i][j] for i in range(R.rank) for j in range(R.rank))

    order.sort(key=height)
    F = R.weight_form
    D = 1
    for row in F:
        for x in row:
            D = D * x.denominator // gcd(D, x.denominator)
    Fi = np.array([[int(x * D) for x in row] for row in F], dtype=object)
    Fa = [Fi.dot(np.array(a, dtype=object)) for a in pos]  # D (., alpha)

    def norm(v):
        v = np.array(v, dtype=object)
        return int(v.dot(Fi).dot(v))

    rho = tuple(1 for _ in range(R.rank))
    top = norm([l + r for l, r in zip(lam, rho)])
    mult = {lam: 1}
    for mu in order[1:]:
        acc = 0
        for a, fa in zip(pos, Fa):
            j = 1
            while True:
                nu = tuple(m + j * x for m, x in zip(mu, a))
                d = _dominant(R, nu)
                if d not in seen:
                    break
                m = mult.get(d, 0)
                if m:
                    acc += m * int(np.dot(np.array(nu, dtype=object), fa))
                j += 1
        den = top - norm([m + r for m, r in zip(mu, rho)])
        if (2 * acc) % den:
            raise ArithmeticError("non-integral multiplicity")
        mult[mu] = 2 * acc // den
    return {mu: m for mu, m in mult.items() if m}


_CHAR_CACHE: dict = {}


def character(R: RootDatum, lam, cap: int = DEFAULT_WEIGHT_CAP) -> dict:
    """{weight: multiplicity} for all weights of V_lam (cached, do not mutate)."""
    key = (R.key(), tuple(int(x) for x in lam))
    if key in _CHAR_CACHE:
        return _CHAR_CACHE[key]
    out = {}
    for mu, m in dominant_multiplicities(R, lam, cap).items():
        for nu in {tuple(int(x) for x in row) for row in R.weyl.orbit_weights(list(mu))}:
            out[nu] = m
    _CHAR_CACHE[key] = out
    return out


# ------------------------------------------------------------ Kostant

def kostant_multiplicity(R: RootDatum, lam, mu) -> int:
    """Weight multiplicity by Kostant's formula (slow, independent check)."""
    Ainv = inverse(qmat(R.cartan.tolist()))
    pos = [tuple(int(x) for x in R.pos_roots[k]) for k in range(R.npos)]  # simple-root coords

    def to_roots(v):
        return tuple(sum(Fraction(int(v[j])) * Ainv[j][i] for j in range(R.rank)) for i in range(R.rank))

    @lru_cache(maxsize=None)
    def P(v, start):
        if all(x == 0 for x in v):
            return 1
        if start == len(pos) or any(x < 0 for x in v):
            return 0
        total = 0
        a = pos[start]
        cur = v
        while all(x >= 0 for x in cur):
            total += P(cur, start + 1)
            cur = tuple(x - y for x, y in zip(cur, a))
        return total

    lr = [int(x) + 1 for x in lam]
    mr = [int(x) + 1 for x in mu]
    total = 0
    for w in R.weyl:
        d = [a - b for a, b in zip(w.act_weight(lr), mr)]
        c = to_roots(d)
        if any(x.denominator != 1 or x < 0 for x in c):
            continue
        total += (-1) ** w.length * P(tuple(int(x) for x in c), 0)
    return total


# ------------------------------------------------------------ restriction

def _pushed_characters(E: EmbeddingDatum, lam, cap: int):
    R = E.g
    Mi = E.iota_star_int
    M = E.iota_star_matrix  # rank(hat G) x rank(G)
    rh = E.ghat.rank
    out = []
    for nodes in R.factor_nodes:
        sub = _sub_root_datum(R, nodes)
        ch = character(sub, [lam[i] for i in nodes], cap)
        pushed = defaultdict(int)
        if Mi is not None:
            wts = np.array(list(ch.keys()), dtype=np.int64).reshape(len(ch), len(nodes))
            keys = wts @ Mi[:, nodes].T
            for key, m in zip(map(tuple, keys.tolist()), ch.values()):
                pushed[key] += m
        else:
            for mu, m in ch.items():
                key = tuple(sum((M[a][nodes[t]] * mu[t] for t in range(len(nodes))), Fraction(0))
                            for a in range(rh))
                pushed[key] += m
        out.append(pushed)
    return out


def _convolve(chars, rh: int, cap: int):
    acc = {tuple(0 for _ in range(rh)): 1}
    for pushed in chars:
        if len(acc) * len(pushed) > cap:
            raise CapExceeded("restricted character exceeds the weight cap")
        nxt = defaultdict(int)
        for k1, m1 in acc.items():
            for k2, m2 in pushed.items():
                nxt[tuple(x + y for x, y in zip(k1, k2))] += m1 * m2
        acc = {k: v for k, v in nxt.items() if v}
    return acc


def restricted_character(E: EmbeddingDatum, lam, cap: int = DEFAULT_WEIGHT_CAP) -> dict:
    """Character of V_lam restricted to the torus of hat G (hat omega coords)."""
    if E.g.rank == 0:
        return {tuple(0 for _ in range(E.ghat.rank)): 1}
    return _convolve(_pushed_characters(E, lam, cap), E.ghat.rank, cap)


def invariant_dim(E: EmbeddingDatum, lam, cap: int = DEFAULT_WEIGHT_CAP) -> int:
    """dim V_lam^{hat G} = sum over hat W of eps(w) m(rho - w rho).

    Only the coefficients at rho - w rho are needed, so the last factor is
    not convolved in full."""
    Rh = E.ghat
    if E.g.rank == 0:
        return 1
    chars = _pushed_characters(E, lam, cap)
    head = _convolve(chars[:-1], Rh.rank, cap)
    last = chars[-1]

    def coeff(key):
        if len(head) <= len(last):
            return sum(m * last.get(tuple(k - h for k, h in zip(key, hk)), 0) for hk, m in head.items())
        return sum(m * head.get(tuple(k - l for k, l in zip(key, lk)), 0) for lk, m in last.items())

    if Rh.rank == 0:
        return coeff(())
    rho = [1] * Rh.rank
    orb = Rh.weyl.orbit_weights(rho)
    total = 0
    for w in Rh.weyl:
        key = tuple(1 - int(x) for x in orb[w.index])
        total += (-1) ** w.length * coeff(key)
    if total < 0:
        raise ArithmeticError("negative invariant dimension")
    return total


def sl2_invariant_dim(weights) -> int:
    """Trivial multiplicity in V_{a_1} x ... x V_{a_k} for SL_2 (Clebsch-Gordan)."""
    dec = {0: 1}
    for a in weights:
        nxt = defaultdict(int)
        for b, m in dec.items():
            for c in range(abs(a - b), a + b + 1, 2):
                nxt[c] += m
        dec = nxt
    return dec.get(0, 0)


@dataclass
class Membership:
    member: bool
    label: str  # "certified-positive" or "negative-up-to-j_max"
    j: int | None  # first multiple with invariants
    j_max: int

    def as_dict(self):
        return {"member": self.member, "label": self.label, "j": self.j, "j_max": self.j_max}


def membership(E: EmbeddingDatum, lam, j_max: int = 6, cap: int = DEFAULT_WEIGHT_CAP) -> Membership:
    """Is some multiple j lam (1 <= j <= j_max) carrying hat G-invariants?"""
    if j_max < 1:
        raise ValueError("j_max must be >= 1")
    lam = [int(x) for x in lam]
    if any(x < 0 for x in lam):
        raise ValueError("weight must be dominant")
    for j in range(1, j_max + 1):
        if invariant_dim(E, [j * x for x in lam], cap) > 0:
            return Membership(True, "certified-positive", j, j_max)
    return Membership(False, f"negative-up-to-{j_max}", None, j_max)
