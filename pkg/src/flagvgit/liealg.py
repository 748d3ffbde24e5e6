"""Chevalley bases with integer structure constants and the randomized
generic-orbit-dimension test for parabolic sweeps.

Basis order for an algebra with root datum R of rank r:
``h_1..h_r`` then one vector per root, in root-index order (positive roots
``e_alpha`` then ``f_alpha = e_{-alpha}``).  So the basis index of root k is
``r + k``.

Simply-laced factors use the Frenkel-Kac sign cocycle directly; the other
types are obtained by folding a simply-laced algebra along a diagram
automorphism and re-deriving root vectors by the usual recursion
``e_gamma = [e_i, e_beta] / (p + 1)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels as K
from .rational import qvec, solve
from .rootcore import RootDatum, build_root_datum, cartan_matrix

DEFAULT_DIM_CAP = 400


class AlgebraError(RuntimeError):
    pass


# ------------------------------------------------------------ simply laced

def _fk_table(R: RootDatum) -> dict:
    """Brackets [x_a, x_b] -> {c: coeff} on the basis h, e_alpha, f_alpha
    for a simply-laced root datum (any number of factors)."""
    r = R.rank
    C = R.cartan
    eps_s = np.ones((r, r), dtype=np.int64)
    for i in range(r):
        eps_s[i, i] = -1
        for j in range(i + 1, r):
            if C[i, j] == -1:
                eps_s[i, j] = -1

    def eps(a, b):
        s = 0
        for i in range(r):
            if a[i] == 0:
                continue
            for j in range(r):
                if b[j] and eps_s[i, j] == -1:
                    s += a[i] * b[j]
        return -1 if s % 2 else 1

    npos = R.npos
    roots = R.roots
    # E-basis signs: e_alpha = E_alpha, f_alpha = -E_{-alpha}
    sgn = [1] * npos + [-1] * npos
    table = {}
    for a in range(2 * npos):
        for b in range(2 * npos):
            s = roots[a] + roots[b]
            key = tuple(int(x) for x in s)
            if not any(key):
                if a < npos:
                    # [E_a, E_-a] = -alpha^vee  ->  [e, f] = h_alpha
                    # [E_-a, E_a] = +alpha^vee  ... in e/f basis: [f, e] = -h_alpha
                    cor = R.coroots[a]
                    table[(r + a, r + b)] = {i: int(cor[i]) for i in range(r) if cor[i]}
                else:
                    cor = R.coroots[b]
                    table[(r + a, r + b)] = {i: -int(cor[i]) for i in range(r) if cor[i]}
                continue
            c = R.root_index.get(key)
            if c is None:
                continue
            val = eps(roots[a], roots[b]) * sgn[a] * sgn[b] * sgn[c]
            table[(r + a, r + b)] = {r + c: val}
    return table


# ------------------------------------------------------------ folding

def _fold_source(series: str, n: int):
    """(simply-laced source type, orbits of source nodes) for a folded type."""
    if series == "C":
        m = 2 * n - 1
        orbits = [[i, m - 1 - i] for i in range(n - 1)] + [[n - 1]]
        return ("A", m), orbits
    if series == "B":
        orbits = [[i] for i in range(n - 1)] + [[n - 1, n]]
        return ("D", n + 1), orbits
    if series == "F":
        # E6 Bourbaki: 1-3-4-5-6 with 2 attached to 4; fold 1<->6, 3<->5
        return ("E", 6), [[1], [3], [2, 4], [0, 5]]
    if series == "G":
        return ("D", 4), [[1], [0, 2, 3]]
    raise ValueError(series)


def _model_matrices(R: RootDatum) -> np.ndarray:
    """Adjoint matrices ad(x_a) for all basis vectors of a simply-laced algebra."""
    tab = _fk_table(R)
    N = R.rank + R.nroots
    M = np.zeros((N, N, N))
    r = R.rank
    for (a, b), res in tab.items():
        for c, v in res.items():
            M[a, c, b] = v
    # [h_i, x_b] and [x_b, h_i]
    for k in range(R.nroots):
        for i in range(r):
            v = R.root_weights[k][i]
            M[i, r + k, r + k] = v
            M[r + k, r + k, i] = -v
    return M


def _folded_table(series: str, n: int, R: RootDatum) -> dict:
    src, orbits = _fold_source(series, n)
    S = build_root_datum([src])
    ad = _model_matrices(S)
    rs = S.rank
    E = [sum(ad[rs + j] for j in orb) for orb in orbits]
    F = [sum(ad[rs + S.npos + j] for j in orb) for orb in orbits]
    H = [E[i] @ F[i] - F[i] @ E[i] for i in range(n)]
    br = lambda X, Y: X @ Y - Y @ X
    # folded Cartan matrix: [H_i, E_j] = c E_j with c = <alpha_j, alpha_i^vee>
    Cf = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            Z = br(H[i], E[j])
            c = np.vdot(Z, E[j]) / np.vdot(E[j], E[j])
            Cf[j, i] = int(round(c))
    target = R.cartan
    perm = None
    for p in itertools.permutations(range(n)):
        if (Cf[np.ix_(p, p)] == target).all():
            perm = p
            break
    if perm is None:
        raise AlgebraError(f"folding did not produce {series}{n}")
    E = [E[p] for p in perm]
    F = [F[p] for p in perm]
    H = [H[p] for p in perm]
    npos = R.npos
    e = [None] * npos
    f = [None] * npos
    for i in range(n):
        e[i], f[i] = E[i], F[i]
    for k in range(n, npos):
        g = R.pos_roots[k]
        for i in range(n):
            b = g.copy()
            b[i] -= 1
            bk = R.root_index.get(tuple(int(x) for x in b))
            if bk is not None and bk < npos:
                break
        p = 0
        while True:
            t = b.copy()
            t[i] -= p + 1
            if tuple(int(x) for x in t) in R.root_index:
                p += 1
            else:
                break
        e[k] = br(E[i], e[bk]) / (p + 1)
        f[k] = -br(F[i], f[bk]) / (p + 1)
    basis = list(H) + e + f
    N = n + 2 * npos
    table = {}
    for a in range(n, N):
        ka = a - n
        for b in range(n, N):
            kb = b - n
            s = R.roots[ka] + R.roots[kb]
            key = tuple(int(x) for x in s)
            Z = br(basis[a], basis[b])
            if not any(key):
                # solve Z = sum c_i H_i
                A = np.array([h.ravel() for h in H]).T
                c, *_ = np.linalg.lstsq(A, Z.ravel(), rcond=None)
                ci = np.rint(c).astype(np.int64)
                if np.abs(A @ ci - Z.ravel()).max() > 1e-8:
                    raise AlgebraError("folded bracket not in Cartan")
                table[(a, b)] = {i: int(ci[i]) for i in range(n) if ci[i]}
                continue
            c = R.root_index.get(key)
            if c is None:
                if np.abs(Z).max() > 1e-8:
                    raise AlgebraError("folded bracket should vanish")
                continue
            T = basis[n + c]
            v = np.vdot(Z, T) / np.vdot(T, T)
            vi = int(round(v))
            if np.abs(Z - vi * T).max() > 1e-8:
                raise AlgebraError("folded bracket not proportional to root vector")
            table[(a, b)] = {n + c: vi}
    return table


# ------------------------------------------------------------ algebra

@dataclass(eq=False)
class ChevalleyAlgebra:
    R: RootDatum
    struct: np.ndarray = field(repr=False)  # struct[a, b, c] = coeff of x_c in [x_a, x_b]

    @property
    def dim(self) -> int:
        return self.struct.shape[0]

    def root_basis_index(self, k: int) -> int:
        return self.R.rank + k

    def ad(self, a: int) -> np.ndarray:
        """Matrix of ad(x_a): column b holds [x_a, x_b]."""
        return self.struct[a].T.astype(np.int64)

    def bracket(self, x, y):
        """Bracket of coordinate vectors (ints or Fractions)."""
        N = self.dim
        x = np.asarray(x, dtype=object)
        y = np.asarray(y, dtype=object)
        out = np.zeros(N, dtype=object)
        xs = [a for a in range(N) if x[a] != 0]
        ys = [b for b in range(N) if y[b] != 0]
        S = self.struct
        for a in xs:
            row = S[a]
            for b in ys:
                cs = np.nonzero(row[b])[0]
                if cs.size:
                    f = x[a] * y[b]
                    for c in cs:
                        out[c] += f * int(row[b, c])
        return out

    def check_jacobi(self, triples=None) -> bool:
        N = self.dim
        S = self.struct.astype(np.int64)
        # [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 as tensors
        # [b,c] = S[b,c,:] ; [a, v] = sum_d v_d S[a,d,:]
        t1 = np.einsum("bcd,ade->abce", S, S)
        t2 = np.einsum("cad,bde->abce", S, S)
        t3 = np.einsum("abd,cde->abce", S, S)
        return not (t1 + t2 + t3).any()


_ALG_CACHE: dict = {}


def build_algebra(R: RootDatum, dim_cap: int | None = None) -> ChevalleyAlgebra:
    """``dim_cap`` defaults to the module-level DEFAULT_DIM_CAP at call time."""
    from .rootcore import CapExceeded
    dim_cap = DEFAULT_DIM_CAP if dim_cap is None else dim_cap
    r = R.rank
    N = r + R.nroots
    if N > dim_cap:
        raise CapExceeded(f"dim g = {N} exceeds cap {dim_cap}")
    key = R.key()
    if key in _ALG_CACHE:
        return _ALG_CACHE[key]
    S = np.zeros((N, N, N), dtype=np.int16)
    # assemble factor by factor
    for (series, n), nodes in zip(R.factors, R.factor_nodes):
        sub = build_root_datum([(series, n)])
        if series in "ADE":
            tab = _fk_table(sub)
        else:
            tab = _folded_table(series, n, sub)
        # map sub basis -> R basis
        if not (R.cartan[np.ix_(nodes, nodes)] == sub.cartan).all():
            raise AlgebraError("factor Cartan mismatch")
        m = {i: nodes[i] for i in range(n)}
        for k in range(sub.nroots):
            full = np.zeros(r, dtype=np.int64)
            full[nodes] = sub.roots[k]
            m[n + k] = r + R.root_index[tuple(int(x) for x in full)]
        for (a, b), res in tab.items():
            for c, v in res.items():
                S[m[a], m[b], m[c]] = v
    for k in range(R.nroots):
        for i in range(r):
            v = R.root_weights[k][i]
            S[i, r + k, r + k] = v
            S[r + k, i, r + k] = -v
    alg = ChevalleyAlgebra(R, S)
    _ALG_CACHE[key] = alg
    return alg


# ------------------------------------------------------------ embedding of ghat

def _vec(N, entries):
    v = np.zeros(N, dtype=object)
    v[:] = Fraction(0)
    for c, x in entries.items():
        v[c] += Fraction(x)
    return v


def embedding_images(E, dim_cap: int | None = None) -> np.ndarray:
    """Images in g of the Chevalley basis of ghat (rows), as Fractions.

    Generators e_i go to the sum of root vectors over the fibre
    {alpha : iota^*(alpha) = hat alpha_i} unless explicit generators are
    given; f_i is solved from [e_i, f_i] = iota(hat alpha_i^vee).  The full
    homomorphism property is then verified on all basis pairs.
    """
    g = build_algebra(E.g, dim_cap)
    gh = build_algebra(E.ghat, dim_cap)
    cached = getattr(E, "_images", None)
    if cached is not None:
        return cached
    R, Rh = E.g, E.ghat
    r, rh = R.rank, Rh.rank
    N, Nh = g.dim, gh.dim
    iota = E.iota  # r x rh, Fractions
    istar_roots = [tuple(sum(Fraction(int(R.root_weights[k][a])) * iota[a][j] for a in range(r))
                         for j in range(rh)) for k in range(R.nroots)]
    imgs = [None] * Nh
    for i in range(rh):
        imgs[i] = _vec(N, {a: iota[a][i] for a in range(r) if iota[a][i] != 0})
    gens = getattr(E, "generators", None)
    for i in range(rh):
        target = tuple(Fraction(int(x)) for x in Rh.root_weights[i])
        if gens is not None:
            ev = _vec(N, {r + R.root_index[tuple(rt)]: c for rt, c in gens["e"][i]})
            fv = _vec(N, {r + R.root_index[tuple(rt)]: c for rt, c in gens["f"][i]})
        else:
            fib = [k for k in range(R.npos) if istar_roots[k] == target]
            if not fib:
                raise AlgebraError("empty root fibre; supply explicit generators")
            ev = _vec(N, {r + k: 1 for k in fib})
            cols = [g.bracket(ev, _vec(N, {r + R.neg(k): 1})) for k in fib]
            A = [[cols[j][c] for j in range(len(fib))] for c in range(N)]
            b = list(imgs[i])
            d = solve(A, b)
            if d is None:
                raise AlgebraError("cannot solve for f_i; supply explicit generators")
            fv = _vec(N, {r + R.neg(k): d[j] for j, k in enumerate(fib)})
        imgs[rh + i] = ev
        imgs[rh + Rh.npos + i] = fv
    # recursion through ghat structure constants
    Sh = gh.struct
    for k in range(rh, Rh.npos):
        gam = Rh.pos_roots[k]
        for i in range(rh):
            b = gam.copy()
            b[i] -= 1
            bk = Rh.root_index.get(tuple(int(x) for x in b))
            if bk is not None and bk < Rh.npos:
                break
        for sgn_off in (0, Rh.npos):
            ia, ib, ic = rh + sgn_off + i, rh + sgn_off + bk, rh + sgn_off + k
            coef = int(Sh[ia, ib, ic])
            if coef == 0:
                raise AlgebraError("unexpected zero structure constant")
            imgs[ic] = g.bracket(imgs[ia], imgs[ib]) / coef
    images = np.array([list(v) for v in imgs], dtype=object)
    # homomorphism check
    for a in range(Nh):
        for b in range(Nh):
            lhs = g.bracket(images[a], images[b])
            rhs = np.zeros(N, dtype=object)
            for c in np.nonzero(Sh[a, b])[0]:
                rhs = rhs + int(Sh[a, b, c]) * images[c]
            if any(x != y for x, y in zip(lhs, rhs)):
                raise AlgebraError("generators do not define a Lie algebra embedding")
    E._images = images
    return images


# ------------------------------------------------------------ orbit dimension

@dataclass
class OrbitDimReport:
    xi: tuple
    w: tuple  # reduced word of w
    dim: int
    expected: int
    trials: int
    ranks: list
    stabilized: bool
    seed: int
    upper: int

    @property
    def fit(self) -> bool:
        return self.dim == self.expected

    def codim(self, dimX: int) -> int:
        return dimX - self.dim


def _to_mod(M, p):
    out = np.zeros(M.shape, dtype=np.int64)
    for idx, x in np.ndenumerate(M):
        x = Fraction(x)
        out[idx] = (x.numerator % p) * pow(x.denominator % p, p - 2, p) % p
    return out


def generic_orbit_dim(E, xi, w, trials: int = 4, seed: int = 0,
                      bound: int = 101, dim_cap: int | None = None) -> OrbitDimReport:
    """dim of the sweep ghat-P_xi x_{w sigma_xi} by randomized tangent rank.

    ``w`` is a WeylElement of G; it is replaced by its minimal coset
    representative.  The sample point lies in the open B^sigma-orbit of the
    parabolic orbit, and ranks are computed mod a 26-bit prime.
    """
    from .embed import levi_datum
    if trials < 3:
        raise ValueError("trials must be >= 3")
    R = E.g
    ld = levi_datum(E, xi)
    g = build_algebra(R, dim_cap)
    images = embedding_images(E, dim_cap)
    p = K.PRIME
    u = ld.untwist(w)  # sigma^-1 w sigma, minimal in W_J u
    W = R.weyl
    sig = ld.sigma
    u1 = ld.w0J * u
    v = sig * u1
    # complement coordinates: alpha(iota xi) < 0 and alpha in v(Delta^-)
    vals = ld.root_values
    vneg = set(int(v.perm[k]) for k in range(R.npos, R.nroots))
    comp = [k for k in range(R.nroots) if vals[k] < 0 and k in vneg]
    lw = u.length
    expected = ld.rhat + ld.n + lw
    upper = min(ld.rhat, len(comp))
    base = ld.n + lw
    X = _to_mod(images.T, p)  # N x dim ghat
    rows = [R.rank + k for k in comp]
    nil = [R.rank + int(sig.perm[k]) for k in range(R.npos)]  # root vectors of Lie(U^sigma)
    ss = np.random.SeedSequence(seed)
    ranks = []
    S = g.struct.astype(np.int64)
    for child in ss.spawn(trials):
        rng = np.random.default_rng(child)
        c = rng.integers(-bound, bound + 1, size=len(nil))
        # ad(-n): column b = [-n, x_b]
        adn = -np.tensordot(c, S[nil], axes=(0, 0)).T
        Y = K.exp_apply(adn % p, X, p)
        ranks.append(int(K.rank_mod(np.ascontiguousarray(Y[rows]), p)) if rows else 0)
    best = max(ranks)
    stabilized = best == upper or ranks.count(best) >= 2
    return OrbitDimReport(tuple(str(x) for x in ld.xi), tuple(w.word), base + best, expected,
                          trials, ranks, stabilized, seed, base + upper)


def is_fit(E, xi, w, trials: int = 4, seed: int = 0) -> bool:
    return generic_orbit_dim(E, xi, w, trials, seed).fit
