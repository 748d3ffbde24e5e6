"""Embeddings hat G -> G: cubicles, relative Weyl group, Xi_max, Levi data,
and the faces of the root-value arrangement on the dominant chamber of hat G.

``iota`` is stored as a rational matrix of shape (rank G, rank hat G) whose
column i is iota(hat alpha_i^vee) in simple-coroot coordinates of G.  The
pull-back of weights is the transpose, so ``iota_star(lam) . xi ==
lam . iota(xi)`` holds by construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .rational import (inverse, nullspace, primitive, qmat, qvec, sign_normalized,
                       strict_interior_point)
from .rootcore import (RootDatum, WeylElement, build_root_datum, longest_of_parabolic,
                       min_coset_reps)


class EmbeddingError(ValueError):
    pass


@dataclass(eq=False)
class EmbeddingDatum:
    ghat: RootDatum
    g: RootDatum
    iota: list  # rank(G) x rank(Ghat) Fractions
    kind: str = "custom"
    copies: int = 1
    generators: dict | None = None

    def __post_init__(self):
        self.iota = qmat(self.iota) if len(self.iota) else []
        r, rh = self.g.rank, self.ghat.rank
        if r and (len(self.iota) != r or any(len(row) != rh for row in self.iota)):
            raise EmbeddingError(f"iota must be a {r}x{rh} matrix")
        self._memo = {}

    # -- maps
    @cached_property
    def iota_star_matrix(self) -> list[list[Fraction]]:
        return [list(col) for col in zip(*self.iota)] if self.iota else [[] for _ in range(self.ghat.rank)]

    def iota_coweight(self, xi) -> list[Fraction]:
        return [sum((row[j] * Fraction(xi[j]) for j in range(self.ghat.rank)), Fraction(0))
                for row in self.iota]

    def iota_star(self, lam) -> list[Fraction]:
        return [sum((self.iota[a][j] * int(lam[a]) if not isinstance(lam[a], Fraction)
                     else self.iota[a][j] * lam[a] for a in range(self.g.rank)), Fraction(0))
                for j in range(self.ghat.rank)]

    @cached_property
    def iota_star_int(self) -> np.ndarray | None:
        """iota^* as an integer matrix (rank Ghat x rank G) when integral."""
        M = self.iota_star_matrix
        if all(x.denominator == 1 for row in M for x in row):
            return np.array([[int(x) for x in row] for row in M], dtype=np.int64).reshape(
                self.ghat.rank, self.g.rank)
        return None

    @cached_property
    def restricted_roots(self) -> list[tuple]:
        """iota^*(alpha) for every root of G (hat G fundamental-weight coords)."""
        return [tuple(self.iota_star(self.g.root_weights[k])) for k in range(self.g.nroots)]

    # -- structural flags
    @cached_property
    def regular(self) -> bool:
        return all(any(x != 0 for x in self.restricted_roots[k]) for k in range(self.g.npos))

    @property
    def diagonal(self) -> bool:
        return self.kind in ("diagonal", "identity")

    def require_regular(self):
        if not self.regular:
            raise EmbeddingError("the torus of hat G contains no G-regular element")

    def key(self) -> tuple:
        return (self.ghat.key(), self.g.key(),
                tuple(tuple(row) for row in self.iota))

    @cached_property
    def dim_X(self) -> int:
        return self.g.npos

    def __repr__(self):
        return f"EmbeddingDatum({self.ghat!r} -> {self.g!r}, kind={self.kind})"

    # -- cubicles
    @cached_property
    def w_rel(self) -> list[WeylElement]:
        """sigma in W with full-dimensional cubicle, sorted by reduced word."""
        W = self.g.weyl
        if self.diagonal:
            return [W.identity()]
        self.require_regular()
        rows_hat = [qvec(self.ghat.cartan[i]) for i in range(self.ghat.rank)]
        out = []
        for s in W:
            rows = rows_hat + [list(self.restricted_roots[int(s.perm[j])]) for j in range(self.g.rank)]
            if strict_interior_point(rows, self.ghat.rank) is not None:
                out.append(s)
        out.sort(key=lambda s: s.word)
        if not out:
            raise EmbeddingError("no cubicle found")
        return out

    def cubicle_rows(self, sigma: WeylElement) -> list[list[Fraction]]:
        rows = [qvec(self.ghat.cartan[i]) for i in range(self.ghat.rank)]
        rows += [list(self.restricted_roots[int(sigma.perm[j])]) for j in range(self.g.rank)]
        return rows

    def in_cubicle(self, sigma: WeylElement, xi) -> bool:
        return all(sum((a * Fraction(x) for a, x in zip(row, xi)), Fraction(0)) >= 0
                   for row in self.cubicle_rows(sigma))

    def sigma_of(self, xi) -> WeylElement:
        for s in self.w_rel:
            if self.in_cubicle(s, xi):
                return s
        raise EmbeddingError(f"{xi} is not in the dominant chamber of hat G")

    def indivisible(self, xi) -> tuple[Fraction, ...]:
        """Indivisible generator of the ray R_+ xi in the cocharacter lattice of hat G."""
        if self.ghat.isogeny == "adjoint":
            A = self.ghat.cartan
            c = [sum(Fraction(int(A[i, j])) * Fraction(xi[j]) for j in range(len(xi)))
                 for i in range(len(xi))]
            p = primitive(c)
            Ainv = inverse(qmat(A.tolist()))
            return tuple(sum((Ainv[i][j] * p[j] for j in range(len(p))), Fraction(0))
                         for i in range(len(p)))
        return tuple(Fraction(x) for x in primitive(xi))


# ------------------------------------------------------------ constructors

def diagonal_embedding(ghat: RootDatum, k: int) -> EmbeddingDatum:
    if k < 1:
        raise EmbeddingError("need at least one copy")
    g = build_root_datum(list(ghat.factors) * k, isogeny=ghat.isogeny, weyl_cap=ghat.weyl_cap)
    rh = ghat.rank
    iota = [[int(a % rh == j) for j in range(rh)] for a in range(rh * k)]
    return EmbeddingDatum(ghat, g, iota, kind="identity" if k == 1 else "diagonal", copies=k)


def identity_embedding(R: RootDatum) -> EmbeddingDatum:
    return diagonal_embedding(R, 1)


def principal_embedding(g: RootDatum) -> EmbeddingDatum:
    """Principal SL2 (as SO3/PGL2, adjoint lattice): hat alpha^vee -> 2 rho^vee."""
    ghat = build_root_datum([("A", 1)], isogeny="adjoint")
    iota = [[int(x)] for x in g.two_rho_vee]
    return EmbeddingDatum(ghat, g, iota, kind="principal")


def custom_embedding(ghat: RootDatum, g: RootDatum, iota, generators=None) -> EmbeddingDatum:
    """``iota`` rows are indexed by G simple coroots, columns by hat G ones."""
    E = EmbeddingDatum(ghat, g, iota, kind="custom", generators=generators)
    # iota must send hat G roots' restrictions consistently: every hat simple
    # root is the restriction of some positive root of G when generators are
    # derived automatically; checked lazily by liealg.
    return E


def embedding_from_spec(spec: dict, weyl_cap: int | None = None) -> EmbeddingDatum:
    """Build from the JSON schema consumed by the command line."""
    from .rootcore import DEFAULT_WEYL_CAP
    cap = weyl_cap or DEFAULT_WEYL_CAP
    if not isinstance(spec, dict) or "kind" not in spec:
        raise EmbeddingError("embedding spec must be an object with a 'kind'")
    kind = spec["kind"]

    def rd(obj, iso="simply-connected"):
        if isinstance(obj, dict):
            obj = [obj]
        facs = [(f["series"], int(f["rank"])) for f in obj]
        return build_root_datum(facs, isogeny=iso, weyl_cap=cap)

    try:
        if kind == "diagonal":
            return diagonal_embedding(rd(spec["factor"]), int(spec["copies"]))
        if kind == "principal":
            return principal_embedding(rd(spec["g"]))
        if kind == "custom":
            ghat = rd(spec["ghat"], spec.get("ghat_isogeny", "simply-connected"))
            g = rd(spec["g"])
            gens = spec.get("generators")
            if gens is not None:
                gens = {key: [[(tuple(t["root"]), Fraction(str(t["coeff"]))) for t in gen]
                              for gen in gens[key]] for key in ("e", "f")}
                gens = {key: [list(x) for x in v] for key, v in gens.items()}
            return custom_embedding(ghat, g, spec["iota"], gens)
    except (KeyError, TypeError) as exc:
        raise EmbeddingError(f"malformed embedding spec: {exc}") from exc
    raise EmbeddingError(f"unknown embedding kind {kind!r}")


# ------------------------------------------------------------ cubicle rays

@dataclass
class Cubicle:
    sigma: WeylElement
    rows: list  # functionals a with a . xi >= 0 (hat G simple-coroot coords)
    rays: list  # indivisible generators


def _extreme_rays(rows: list, dim: int) -> list[tuple]:
    rays = set()
    if dim == 0:
        return []
    for sub in itertools.combinations(range(len(rows)), dim - 1):
        ns = nullspace([rows[i] for i in sub], ncols=dim) if sub else nullspace([], ncols=dim)
        if len(ns) != 1:
            continue
        v = ns[0]
        for s in (1, -1):
            cand = [s * x for x in v]
            if all(sum((a * x for a, x in zip(r, cand)), Fraction(0)) >= 0 for r in rows):
                rays.add(primitive(cand))
    return sorted(rays)


def cubicles(E: EmbeddingDatum) -> list[Cubicle]:
    out = []
    for s in E.w_rel:
        rows = E.cubicle_rows(s)
        rays = [E.indivisible(r) for r in _extreme_rays(rows, E.ghat.rank)]
        out.append(Cubicle(s, rows, rays))
    return out


def xi_max(E: EmbeddingDatum) -> list[tuple]:
    """Indivisible generators of cubicle rays, with sigma and Levi data."""
    memo = E._memo.get("xi_max")
    if memo is not None:
        return memo
    seen = []
    for c in cubicles(E):
        for r in c.rays:
            if r not in seen:
                seen.append(r)
    seen.sort()
    out = []
    for xi in seen:
        ld = levi_datum(E, xi)
        out.append((ld.xi, ld.sigma, ld))
    E._memo["xi_max"] = out
    return out


# ------------------------------------------------------------ Levi data

class LeviDatum:
    """Everything attached to a dominant coweight xi of hat G."""

    def __init__(self, E: EmbeddingDatum, xi):
        R, Rh = E.g, E.ghat
        xi = tuple(Fraction(x) for x in xi)
        if not any(xi):
            raise EmbeddingError("xi must be nonzero")
        self.E = E
        self.xi = E.indivisible(xi)
        self.iota_xi = E.iota_coweight(self.xi)
        vals = [sum((Fraction(int(a)) * x for a, x in zip(R.root_weights[k], self.iota_xi)), Fraction(0))
                for k in range(R.nroots)]
        self.root_values = vals
        self.levi = frozenset(k for k in range(R.nroots) if vals[k] == 0)
        self.r_plus = [k for k in range(R.nroots) if vals[k] > 0]
        self.r = len(self.r_plus)
        self.n = len(self.levi) // 2
        hv = [sum((Fraction(int(a)) * x for a, x in zip(Rh.root_weights[k], self.xi)), Fraction(0))
              for k in range(Rh.nroots)]
        if any(hv[i] < 0 for i in range(Rh.rank)):
            raise EmbeddingError("xi must be dominant for hat G")
        self.hat_values = hv
        self.rhat = sum(1 for x in hv if x > 0)
        self.nhat = sum(1 for k in range(Rh.npos) if hv[k] == 0)
        pos = [vals[k] for k in self.r_plus]
        self.a = min(pos) if pos else None
        self.b = max(pos) if pos else None
        self.sigma = E.sigma_of(self.xi)
        sinv = self.sigma.inverse()
        self.xi_std = [Fraction(x) for x in sinv.act_coweight(self.iota_xi)]
        std_vals = [sum((Fraction(int(a)) * x for a, x in zip(R.cartan[j], self.xi_std)), Fraction(0))
                    for j in range(R.rank)]
        if any(v < 0 for v in std_vals):
            raise EmbeddingError("internal: sigma^-1 iota(xi) is not dominant")
        self.J = [j for j in range(R.rank) if std_vals[j] == 0]
        self.Jhat = [i for i in range(Rh.rank) if hv[i] == 0]
        self.w0J = longest_of_parabolic(R.weyl, self.J)
        # iota followed by sigma^-1, as a coweight matrix (rank G x rank hat G)
        cols = []
        for i in range(Rh.rank):
            col = E.iota_coweight([int(i == j) for j in range(Rh.rank)])
            cols.append([Fraction(x) for x in sinv.act_coweight(col)])
        self.iota_std = [[cols[i][a] for i in range(Rh.rank)] for a in range(R.rank)]

    def __repr__(self):
        return f"LeviDatum(xi={tuple(str(x) for x in self.xi)}, r={self.r}, rhat={self.rhat}, n={self.n})"

    @cached_property
    def min_reps(self) -> list[WeylElement]:
        """Minimal representatives u of W_J \\ W (untwisted coordinates)."""
        return min_coset_reps(self.E.g, self.J)

    def twist(self, u: WeylElement) -> WeylElement:
        return self.sigma * u * self.sigma.inverse()

    def untwist(self, w: WeylElement) -> WeylElement:
        """Minimal u in W_J (sigma^-1 w sigma)."""
        from .rootcore import coset_reps
        u = self.sigma.inverse() * w * self.sigma
        levi = frozenset(k for k in range(self.E.g.nroots)
                         if all(self.E.g.roots[k][i] == 0 for i in range(self.E.g.rank) if i not in self.J))
        return coset_reps(self.E.g, levi, u)[0]

    def twisted_length(self, w: WeylElement) -> int:
        return self.untwist(w).length

    def mumford(self, lam, u: WeylElement):
        """(w sigma lam)(iota xi) for w = sigma u sigma^-1."""
        mu = u.act_weight(lam)
        return sum((Fraction(int(m)) * x for m, x in zip(mu, self.xi_std)), Fraction(0))

    @cached_property
    def sub_embedding(self) -> EmbeddingDatum:
        """hat L'_xi inside L'_xi (semisimple parts of the centralisers)."""
        R, Rh = self.E.g, self.E.ghat
        J, Jh = self.J, self.Jhat
        gsub = _sub_root_datum(R, J)
        hsub = _sub_root_datum(Rh, Jh)
        iota = []
        for a in range(R.rank):
            if a in J:
                iota.append([self.iota_std[a][i] for i in Jh])
            else:
                if any(self.iota_std[a][i] != 0 for i in Jh):
                    raise EmbeddingError("internal: Levi coroots not supported on J")
        return EmbeddingDatum(hsub, gsub, iota, kind="levi")

    def restricted_weight(self, lam, u: WeylElement) -> tuple[int, ...]:
        mu = u.act_weight(lam)
        return tuple(int(mu[j]) for j in self.J)


def _sub_root_datum(R: RootDatum, nodes: Sequence[int]) -> RootDatum:
    C = R.cartan[np.ix_(list(nodes), list(nodes))] if nodes else np.zeros((0, 0), dtype=np.int64)
    return RootDatum(C, weyl_cap=R.weyl_cap)


def levi_datum(E: EmbeddingDatum, xi) -> LeviDatum:
    key = ("levi", tuple(Fraction(x) for x in xi))
    memo = E._memo.get(key)
    if memo is None:
        memo = LeviDatum(E, xi)
        E._memo[key] = memo
        E._memo[("levi", memo.xi)] = memo
    return memo


# ------------------------------------------------------------ faces

@dataclass
class Face:
    zero: frozenset  # hyperplane indices vanishing on the face
    signs: tuple  # sign of every hyperplane on the face
    sample: tuple  # indivisible coweight in the relative interior
    dim: int


def hyperplanes(E: EmbeddingDatum) -> list[tuple]:
    """Distinct lines among hat G simple-root walls and restricted G roots.

    The first rank(hat G) entries are the walls, oriented positively on the
    dominant chamber."""
    hs = [primitive(E.ghat.cartan[i]) for i in range(E.ghat.rank)]
    lines = {sign_normalized(h) for h in hs}
    for k in range(E.g.npos):
        v = E.restricted_roots[k]
        if any(v):
            h = sign_normalized(v)
            if h not in lines:
                lines.add(h)
                hs.append(h)
    return hs


def sign_vector(hs: list, xi) -> tuple:
    out = []
    for h in hs:
        v = sum((Fraction(a) * Fraction(x) for a, x in zip(h, xi)), Fraction(0))
        out.append((v > 0) - (v < 0))
    return tuple(out)


def enumerate_regions(rows_fixed: list, hs: list, dim: int):
    """Open regions of the arrangement ``hs`` inside {rows_fixed > 0}.

    Returns list of (sign tuple over hs, interior point).  Regions are split
    incrementally with an exact strict-feasibility LP per candidate.
    """
    base = [list(r) for r in rows_fixed]
    pt = strict_interior_point(base, dim) if base else [Fraction(0)] * dim
    if pt is None:
        return []
    regions = [((), base)]
    for h in hs:
        new = []
        for signs, rows in regions:
            for s in (1, -1):
                cand = rows + [[s * Fraction(x) for x in h]]
                if strict_interior_point(cand, dim) is not None:
                    new.append((signs + (s,), cand))
        regions = new
    out = []
    for signs, rows in regions:
        p = strict_interior_point(rows, dim)
        out.append((signs, p))
    return out


def faces(E: EmbeddingDatum) -> list[Face]:
    """Relatively open nonzero faces of the root-value arrangement on the
    dominant chamber of hat G, deterministic order (by dimension, then signs)."""
    memo = E._memo.get("faces")
    if memo is not None:
        return memo
    rh = E.ghat.rank
    hs = hyperplanes(E)
    nwalls = sum(1 for i in range(rh))  # first rh hyperplanes are the hat walls (distinct)
    wall_idx = list(range(min(nwalls, len(hs))))
    out = []
    seen_flats = set()
    stack = [frozenset()]
    while stack:
        Z = stack.pop()
        if Z in seen_flats:
            continue
        seen_flats.add(Z)
        basis = nullspace([list(map(Fraction, hs[i])) for i in sorted(Z)], ncols=rh) if Z else \
            nullspace([], ncols=rh)
        d = len(basis)
        if d == 0:
            continue
        # restrict hyperplanes to the flat: h(B c)
        restr = []
        for i, h in enumerate(hs):
            restr.append([sum((Fraction(h[a]) * b[a] for a in range(rh)), Fraction(0)) for b in basis])
        live = [i for i in range(len(hs)) if i not in Z]
        fixed = [restr[i] for i in wall_idx if i not in Z]
        others = [i for i in live if i not in wall_idx]
        for signs, pt in enumerate_regions(fixed, [restr[i] for i in others], d):
            x = [sum((pt[c] * basis[c][a] for c in range(d)), Fraction(0)) for a in range(rh)]
            xi = primitive(x)
            sv = sign_vector(hs, xi)
            out.append(Face(Z, sv, xi, d))
        for i in live:
            Z2 = Z | {i}
            ns = nullspace([list(map(Fraction, hs[j])) for j in sorted(Z2)], ncols=rh)
            if not ns:
                continue
            closure = frozenset(j for j in range(len(hs))
                                if all(sum((Fraction(hs[j][a]) * v[a] for a in range(rh)), Fraction(0)) == 0
                                       for v in ns))
            if closure not in seen_flats:
                stack.append(closure)
    uniq = {}
    for f in out:
        uniq.setdefault(f.signs, f)
    res = sorted(uniq.values(), key=lambda f: (-f.dim, f.signs))
    E._memo["faces"] = res
    return res
