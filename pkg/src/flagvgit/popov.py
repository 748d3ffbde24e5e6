"""Closest point to the origin, the one-parameter subgroups attached to Levi
orbits, and the signed rooted tree deciding ample-cone membership.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .embed import EmbeddingDatum, faces, levi_datum
from .rational import inverse, primitive, solve
from .rootcore import RootDatum, WeylElement


# ------------------------------------------------------------ min norm point

@dataclass
class MinNormResult:
    points: list  # deduplicated input, tuples of Fractions
    nu: tuple
    support: list  # indices into points
    weights: list  # barycentric coordinates on the support

    def certificate(self, Q) -> bool:
        """nu in Conv(S) and <nu, s - nu> >= 0 for all s (exact)."""
        d = len(self.nu)
        if any(w < 0 for w in self.weights) or sum(self.weights) != 1:
            return False
        comb = [sum((w * self.points[i][a] for w, i in zip(self.weights, self.support)), Fraction(0))
                for a in range(d)]
        if tuple(comb) != tuple(self.nu):
            return False
        nn = _ip(Q, self.nu, self.nu)
        return all(_ip(Q, self.nu, s) >= nn for s in self.points)


def _ip(Q, a, b):
    d = len(a)
    return sum((a[i] * Q[i][j] * b[j] for i in range(d) for j in range(d) if Q[i][j] and a[i] and b[j]),
               Fraction(0))


def _lcm_den(vals) -> int:
    den = 1
    for x in vals:
        den = den * x.denominator // gcd(den, x.denominator)
    return den


def min_norm_point(S: Sequence[Sequence], Q=None) -> MinNormResult:
    """Wolfe's active-set method in exact arithmetic.

    ``Q`` is the Gram matrix of the inner product (identity if omitted).
    Points and form are scaled to integers so that all inner products are
    integer; only the small affine solves use Fractions.  Ties are broken by
    the smallest point index, which prevents cycling.
    """
    pts = []
    seen = set()
    for s in S:
        t = tuple(Fraction(x) for x in s)
        if t not in seen:
            seen.add(t)
            pts.append(t)
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if Q is None:
        Q = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    if len(pts) == 1:
        return MinNormResult(pts, pts[0], [0], [Fraction(1)])
    D = _lcm_den(x for p in pts for x in p)
    q = _lcm_den(x for row in Q for x in row)
    P = np.array([[int(x * D) for x in p] for p in pts], dtype=object)
    Qi = np.array([[int(x * q) for x in row] for row in Q], dtype=object).reshape(d, d)
    G = P.dot(Qi).dot(P.T)  # scaled Gram matrix, exact Python ints
    npts = len(pts)
    diag = [G[i, i] for i in range(npts)]
    j0 = min(range(npts), key=lambda i: (diag[i], i))
    corral = [j0]
    wts = [Fraction(1)]
    for _ in range(100000):
        den = _lcm_den(wts)
        num = [int(w * den) for w in wts]
        vx = sum((n * G[c] for n, c in zip(num, corral)), np.zeros(npts, dtype=object))
        xx = sum(n * vx[c] for n, c in zip(num, corral))  # = den^2 <x,x>
        # <x, p_j> >= <x, x>  <=>  den * vx_j >= xx
        j = min(range(npts), key=lambda i: (vx[i], i))
        if den * vx[j] >= xx:
            break
        corral.append(j)
        wts.append(Fraction(0))
        while True:
            m = len(corral)
            A = [[Fraction(G[corral[a], corral[b]]) for b in range(m)] + [Fraction(1)] for a in range(m)]
            A.append([Fraction(1)] * m + [Fraction(0)])
            sol = solve(A, [Fraction(0)] * m + [Fraction(1)])
            if sol is None:
                raise ArithmeticError("affinely dependent corral")
            alpha = sol[:m]
            if all(a > 0 for a in alpha):
                wts = alpha
                break
            theta = min(wts[i] / (wts[i] - alpha[i]) for i in range(m) if alpha[i] <= 0)
            wts = [theta * a + (1 - theta) * w for a, w in zip(alpha, wts)]
            keep = [i for i in range(m) if wts[i] > 0]
            corral = [corral[i] for i in keep]
            wts = [wts[i] for i in keep]
    else:  # pragma: no cover
        raise ArithmeticError("min norm point did not converge")
    nu = tuple(sum((w * pts[i][a] for w, i in zip(wts, corral)), Fraction(0)) for a in range(d))
    return MinNormResult(pts, nu, corral, wts)


# ------------------------------------------------------------ xi from nu

def dual_form(R: RootDatum) -> list[list[Fraction]]:
    """Gram matrix on weights (fundamental-weight coords) dual to the coroot form."""
    if R.rank == 0:
        return []
    return inverse(R.coroot_gram)


def xi_from_nu(E: EmbeddingDatum, nu, form=None):
    """Indivisible coweight of hat G on the ray dual to nu; None for nu = 0.

    ``form`` (coroot Gram matrix) defaults to the normalised invariant form.
    """
    if not any(Fraction(x) for x in nu):
        return None
    K = form if form is not None else E.ghat.coroot_gram
    Kinv = inverse(K)
    xi = [sum((Kinv[i][j] * Fraction(nu[j]) for j in range(len(nu))), Fraction(0))
          for i in range(len(nu))]
    return E.indivisible(xi)


# ------------------------------------------------------------ candidates

@dataclass
class Candidate:
    face: object
    ld: object  # LeviDatum
    u: WeylElement  # untwisted minimal coset representative
    nu: tuple
    m: Fraction  # Mumford value (w sigma lam)(iota xi)

    @property
    def xi(self):
        return self.ld.xi

    @property
    def w(self) -> WeylElement:
        return self.ld.twist(self.u)

    @property
    def length(self) -> int:
        return self.u.length

    @property
    def codim(self) -> int:
        return self.ld.r - self.ld.rhat - self.u.length

    @property
    def dim(self) -> int:
        return self.ld.rhat + self.ld.n + self.u.length


def _wj_orbit(R: RootDatum, J, mu) -> list[tuple]:
    mu = tuple(int(x) for x in mu)
    seen = {mu}
    out = [mu]
    k = 0
    while k < len(out):
        v = np.array(out[k], dtype=np.int64)
        for j in J:
            s = tuple(int(x) for x in v - v[j] * R.cartan[j])
            if s not in seen:
                seen.add(s)
                out.append(s)
        k += 1
    return out


def _int_scaled(M) -> tuple[np.ndarray, int]:
    den = _lcm_den(x for row in M for x in row)
    return np.array([[int(x * den) for x in row] for row in M], dtype=np.int64).reshape(
        len(M), len(M[0]) if M else 0), den


def candidates(E: EmbeddingDatum, lam) -> list[Candidate]:
    """Self-consistent pairs (xi, w): xi = xi_{L_xi, w sigma lam} lies in the
    face whose centraliser produced it, w minimal in its coset."""
    key = ("cand", tuple(int(x) for x in lam))
    memo = E._memo.get(key)
    if memo is not None:
        return memo
    E.require_regular()
    R = E.g
    rh = E.ghat.rank
    Q = dual_form(E.ghat)
    Kinv = inverse(E.ghat.coroot_gram)
    Kint, _ = _int_scaled(Kinv)  # positive multiple of K^-1
    from .embed import hyperplanes
    H = np.array(hyperplanes(E), dtype=np.int64)
    orbit = R.weyl.orbit_weights(lam)
    out = []
    for F in faces(E):
        ld = levi_datum(E, F.sample)
        Mt = [[ld.iota_std[a][i] for a in range(R.rank)] for i in range(rh)]
        Mint, mden = _int_scaled(Mt)
        target = np.array(F.signs, dtype=np.int64)
        reps = ld.min_reps
        if not ld.J:
            nus = orbit[[u.index for u in reps]] @ Mint.T  # scaled by mden
            signs = np.sign(nus @ Kint.T @ H.T)
            ok = np.nonzero((signs == target).all(axis=1))[0]
            for t in ok:
                u = reps[t]
                nu = tuple(Fraction(int(x), mden) for x in nus[t])
                lx = levi_datum(E, [int(x) for x in Kint @ nus[t]])
                out.append(Candidate(F, lx, u, nu, lx.mumford(lam, u)))
            continue
        for u in reps:
            pts = np.array(_wj_orbit(R, ld.J, orbit[u.index]), dtype=np.int64) @ Mint.T
            res = min_norm_point([tuple(int(x) for x in p) for p in pts], Q)
            nu = res.nu
            if not any(nu):
                continue
            xi_dir = [sum((int(Kint[i, j]) * nu[j] for j in range(rh)), Fraction(0)) for i in range(rh)]
            sv = tuple(int(np.sign(sum((int(h[a]) * xi_dir[a] for a in range(rh)), Fraction(0))))
                       for h in H)
            if sv != F.signs:
                continue
            lx = levi_datum(E, xi_dir)
            out.append(Candidate(F, lx, u, tuple(x / mden for x in nu), lx.mumford(lam, u)))
    E._memo[key] = out
    return out


# ------------------------------------------------------------ tree

_AMPLE_MEMO: dict = {}


def _check_weight(E: EmbeddingDatum, lam):
    lam = tuple(int(x) for x in lam)
    if len(lam) != E.g.rank:
        raise ValueError(f"weight must have {E.g.rank} coordinates")
    if any(x <= 0 for x in lam):
        raise ValueError("weight must be strictly dominant")
    return lam


def m_set(E: EmbeddingDatum, lam) -> list[Candidate]:
    """Levi orbits of expected codimension 0 (branches of the tree root)."""
    if E.ghat.rank == 0:
        return []
    lam = _check_weight(E, lam)
    return [c for c in candidates(E, lam) if c.codim == 0]


@dataclass
class PopovNode:
    labels: tuple  # chain of (xi, reduced word of w)
    embedding: EmbeddingDatum = field(repr=False)
    weight: tuple
    children: list
    sign: str

    @property
    def height(self) -> int:
        return 0 if not self.children else 1 + max(c.height for c in self.children)

    def count(self) -> int:
        return 1 + sum(c.count() for c in self.children)

    def as_dict(self) -> dict:
        return {
            "label": [[[str(x) for x in xi], list(w)] for xi, w in self.labels[-1:]],
            "weight": list(self.weight),
            "sign": self.sign,
            "children": [c.as_dict() for c in self.children],
        }


def build_tree(E: EmbeddingDatum, lam, _labels=()) -> PopovNode:
    if E.ghat.rank == 0:
        return PopovNode(_labels, E, tuple(lam), [], "+")
    lam = _check_weight(E, lam)
    kids = []
    for c in m_set(E, lam):
        sub = c.ld.sub_embedding
        mu = c.ld.restricted_weight(lam, c.u)
        kids.append(build_tree(sub, mu, _labels + ((c.xi, c.w.word),)))
    sign = "-" if any(k.sign == "+" for k in kids) else "+"
    node = PopovNode(_labels, E, lam, kids, sign)
    if node.height > E.ghat.rank:
        raise AssertionError("tree height exceeds rank of hat G")
    return node


def is_ample(E: EmbeddingDatum, lam) -> bool:
    """Membership of a strictly dominant weight in the hat G-ample cone."""
    if E.ghat.rank == 0:
        return True
    lam = _check_weight(E, lam)
    key = (E.key(), lam)
    if key in _AMPLE_MEMO:
        return _AMPLE_MEMO[key]
    verdict = True
    for c in m_set(E, lam):
        sub = c.ld.sub_embedding
        if is_ample(sub, c.ld.restricted_weight(lam, c.u)):
            verdict = False
            break
    _AMPLE_MEMO[key] = verdict
    return verdict
