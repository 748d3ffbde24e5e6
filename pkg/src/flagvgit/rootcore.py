"""Root systems, Weyl groups, inversion sets and parabolic coset representatives.

Conventions
-----------
* weights live in fundamental-weight coordinates, coweights in simple-coroot
  coordinates, so the pairing lambda(xi) is a plain dot product;
* ``cartan[i, j] = <alpha_i, alpha_j^vee>``; row i is alpha_i written in
  fundamental weights, hence ``s_i(lam) = lam - lam[i] * cartan[i]``;
* roots are stored in simple-root coordinates.  Positive roots come first
  (simple roots at indices 0..rank-1), the negative of positive root k sits
  at index ``npos + k``.
* Weyl group words multiply left to right as maps: (s1 s2)(x) = s1(s2(x)).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .rational import inverse, qmat

DEFAULT_WEYL_CAP = 10 ** 7


class CapExceeded(RuntimeError):
    """A configured size cap would be exceeded."""


# ------------------------------------------------------------ Cartan data

def _euclid_simple_roots(series: str, n: int) -> list[list[Fraction]]:
    h = Fraction(1, 2)

    def e(i, dim):
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        return v

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    if series == "A":
        d = n + 1
        return [sub(e(i, d), e(i + 1, d)) for i in range(n)]
    if series in "BCD":
        d = n
        rts = [sub(e(i, d), e(i + 1, d)) for i in range(n - 1)]
        if series == "B":
            rts.append(e(n - 1, d))
        elif series == "C":
            rts.append([2 * x for x in e(n - 1, d)])
        else:
            rts.append(add(e(n - 2, d), e(n - 1, d)))
        return rts
    if series == "E":
        d = 8
        full = [
            [h, -h, -h, -h, -h, -h, -h, h],
            add(e(0, d), e(1, d)),
            sub(e(1, d), e(0, d)),
            sub(e(2, d), e(1, d)),
            sub(e(3, d), e(2, d)),
            sub(e(4, d), e(3, d)),
            sub(e(5, d), e(4, d)),
            sub(e(6, d), e(5, d)),
        ]
        return full[:n]
    if series == "F":
        d = 4
        return [sub(e(1, d), e(2, d)), sub(e(2, d), e(3, d)), e(3, d), [h, -h, -h, -h]]
    if series == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    raise ValueError(f"unknown series {series!r}")


_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def cartan_matrix(series: str, n: int) -> np.ndarray:
    series = series.upper()
    if series not in _VALID or not _VALID[series](n):
        raise ValueError(f"invalid root system {series}{n}")
    rts = _euclid_simple_roots(series, n)
    ip = lambda a, b: sum((x * y for x, y in zip(a, b)), Fraction(0))
    C = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            v = 2 * ip(rts[i], rts[j]) / ip(rts[j], rts[j])
            assert v.denominator == 1
            C[i, j] = int(v)
    return C


def weyl_order(series: str, n: int) -> int:
    s = series.upper()
    if s == "A":
        return factorial(n + 1)
    if s in "BC":
        return 2 ** n * factorial(n)
    if s == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(s, n)]


def npos_roots(series: str, n: int) -> int:
    s = series.upper()
    if s == "A":
        return n * (n + 1) // 2
    if s in "BC":
        return n * n
    if s == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(s, n)]


def _components(C: np.ndarray) -> list[list[int]]:
    n = C.shape[0]
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (C[i, j] != 0 or C[j, i] != 0):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _symmetrizer(C: np.ndarray) -> list[Fraction]:
    """Squared root lengths d_i with long roots of each component at 2."""
    n = C.shape[0]
    d = [None] * n
    for comp in _components(C):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if d[j] is None and C[i, j] != 0:
                    # A_ij d_j = A_ji d_i
                    d[j] = d[i] * int(C[j, i]) / int(C[i, j])
                    stack.append(j)
        mx = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] * 2 / mx
    return d


def _identify(C: np.ndarray, comp: list[int], npos: int) -> tuple[str, int]:
    n = len(comp)
    sub = C[np.ix_(comp, comp)]
    d = _symmetrizer(sub)
    nshort = sum(1 for x in d if x < 2)
    cands = []
    for s in "ABCDEFG":
        if _VALID[s](n) and npos_roots(s, n) == npos:
            cands.append(s)
    if len(cands) == 1:
        return cands[0], n
    # B_n vs C_n (n >= 3): B has one short simple root, C has one long one
    if set(cands) >= {"B", "C"}:
        if n == 2:
            return "B", 2
        return ("B", n) if nshort == 1 else ("C", n)
    if cands:
        return cands[0], n
    raise ValueError("unrecognised Cartan matrix component")


# ------------------------------------------------------------ RootDatum

@dataclass(eq=False)
class RootDatum:
    cartan: np.ndarray
    isogeny: str = "simply-connected"
    factors: tuple = ()
    weyl_cap: int = DEFAULT_WEYL_CAP

    def __post_init__(self):
        self.cartan = np.asarray(self.cartan, dtype=np.int64).reshape(len(self.cartan), -1) \
            if len(self.cartan) else np.zeros((0, 0), dtype=np.int64)
        C = self.cartan
        r = C.shape[0]
        if C.shape != (r, r):
            raise ValueError("Cartan matrix must be square")
        for i in range(r):
            if C[i, i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(r):
                if i != j and (C[i, j] > 0 or (C[i, j] == 0) != (C[j, i] == 0)):
                    raise ValueError("malformed Cartan matrix")
        if self.isogeny not in ("simply-connected", "adjoint"):
            raise ValueError("isogeny must be 'simply-connected' or 'adjoint'")
        self._build_roots()
        if not self.factors:
            comps = _components(C)
            facs = []
            for comp in comps:
                cnt = sum(1 for k in range(self.npos) if all(
                    self.pos_roots[k, i] == 0 for i in range(r) if i not in comp))
                facs.append(_identify(C, comp, cnt))
            self.factors = tuple(facs)
        self.factor_nodes = _components(C) if r else []

    # -- construction
    def _build_roots(self):
        C = self.cartan
        r = C.shape[0]
        roots = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        index = {rt: k for k, rt in enumerate(roots)}
        k = 0
        while k < len(roots):
            beta = np.array(roots[k])
            pair = beta @ C  # <beta, alpha_i^vee>
            for i in range(r):
                if roots[k] == roots[i]:
                    continue
                g = beta.copy()
                g[i] -= pair[i]
                if (g >= 0).all():
                    t = tuple(int(x) for x in g)
                    if t not in index:
                        index[t] = len(roots)
                        roots.append(t)
            k += 1
        # order: simple roots first, then by height, then lexicographic
        simple = roots[:r]
        rest = sorted(roots[r:], key=lambda t: (sum(t), tuple(-x for x in t)))
        pos = simple + rest
        self.npos = len(pos)
        self.pos_roots = np.array(pos, dtype=np.int64).reshape(self.npos, r)
        self.roots = np.vstack([self.pos_roots, -self.pos_roots]) if r else np.zeros((0, 0), np.int64)
        self.root_index = {tuple(int(x) for x in rt): k for k, rt in enumerate(self.roots)}
        # roots as weights (fundamental-weight coords)
        self.root_weights = self.roots @ C if r else self.roots
        d = _symmetrizer(C) if r else []
        self.sq_len_simple = d
        # coroots in simple-coroot coords: alpha^vee = sum c_i d_i / |alpha|^2 alpha_i^vee
        B = [[C[i, j] * d[j] / 2 for j in range(r)] for i in range(r)]
        self.root_gram = B
        corts = []
        sq = []
        for rt in self.roots:
            c = [int(x) for x in rt]
            L = sum((c[i] * B[i][j] * c[j] for i in range(r) for j in range(r)), Fraction(0))
            sq.append(L)
            v = [c[i] * d[i] / L for i in range(r)]
            assert all(x.denominator == 1 for x in v)
            corts.append([int(x) for x in v])
        self.root_sq_len = sq
        self.coroots = np.array(corts, dtype=np.int64).reshape(len(self.roots), r)

    # -- basic data
    @property
    def rank(self) -> int:
        return self.cartan.shape[0]

    @property
    def nroots(self) -> int:
        return 2 * self.npos

    def neg(self, k: int) -> int:
        return k + self.npos if k < self.npos else k - self.npos

    def is_positive(self, k: int) -> bool:
        return k < self.npos

    @cached_property
    def rho(self) -> np.ndarray:
        return np.ones(self.rank, dtype=np.int64)

    @cached_property
    def rho_vee(self) -> list[Fraction]:
        """rho^vee in simple-coroot coordinates (half sum of positive coroots)."""
        return [Fraction(int(x), 2) for x in self.two_rho_vee]

    @cached_property
    def two_rho_vee(self) -> np.ndarray:
        return self.coroots[: self.npos].sum(axis=0)

    @cached_property
    def weight_form(self) -> list[list[Fraction]]:
        """(omega_i, omega_j) for the invariant form with long roots of length^2 2."""
        if self.rank == 0:
            return []
        Ainv = inverse(qmat(self.cartan.tolist()))
        B = self.root_gram
        # alpha = A omega  =>  B = A F A^T  =>  F = A^-1 B A^-T
        n = self.rank
        AinvB = [[sum(Ainv[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return [[sum(AinvB[i][k] * Ainv[j][k] for k in range(n)) for j in range(n)] for i in range(n)]

    @cached_property
    def coroot_gram(self) -> list[list[Fraction]]:
        """(alpha_i^vee, alpha_j^vee) for the dual form, short coroots of length^2 2.

        With long roots at 2, coroots have length^2 4/|alpha|^2; rescale each
        component so that short coroots (= long roots' coroots) sit at 2.
        """
        n = self.rank
        d = self.sq_len_simple
        K = [[4 * self.root_gram[i][j] / (d[i] * d[j]) for j in range(n)] for i in range(n)]
        return K

    def weyl_order(self) -> int:
        out = 1
        for s, n in self.factors:
            out *= weyl_order(s, n)
        return out

    def key(self) -> tuple:
        return (self.cartan.tobytes(), self.cartan.shape, self.isogeny)

    def __repr__(self):
        name = "x".join(f"{s}{n}" for s, n in self.factors) or "trivial"
        return f"RootDatum({name})"

    # -- actions
    def reflect_weight(self, i: int, lam):
        lam = np.array(lam, dtype=object if _is_obj(lam) else np.int64)
        return lam - lam[i] * self.cartan[i]

    def reflect_coweight(self, i: int, xi):
        xi = np.array(xi, dtype=object if _is_obj(xi) else np.int64)
        out = xi.copy()
        out[i] = out[i] - (self.cartan[i] * xi).sum()
        return out

    def pair_root(self, k: int, xi) -> object:
        """alpha_k(xi) for a coweight xi in simple-coroot coordinates."""
        return sum(int(a) * x for a, x in zip(self.root_weights[k], xi))

    @cached_property
    def weyl(self) -> "WeylGroup":
        return WeylGroup(self, self.weyl_cap)


def _is_obj(v) -> bool:
    return any(isinstance(x, Fraction) for x in np.asarray(v, dtype=object).ravel())


def build_root_datum(spec: Iterable, isogeny: str = "simply-connected",
                     weyl_cap: int = DEFAULT_WEYL_CAP) -> RootDatum:
    """Root datum of a product of simple groups, e.g. ``[("A", 2), ("A", 2)]``."""
    spec = [(str(s).upper(), int(n)) for s, n in spec]
    blocks = [cartan_matrix(s, n) for s, n in spec]
    r = sum(b.shape[0] for b in blocks)
    C = np.zeros((r, r), dtype=np.int64)
    o = 0
    for b in blocks:
        k = b.shape[0]
        C[o:o + k, o:o + k] = b
        o += k
    return RootDatum(C, isogeny=isogeny, factors=tuple(spec), weyl_cap=weyl_cap)


def parse_type(text: str) -> list[tuple[str, int]]:
    """'A1xA1', 'A2^3', 'B2' -> list of (series, rank)."""
    out = []
    for part in text.replace("*", "x").split("x"):
        part = part.strip()
        if not part:
            continue
        mult = 1
        if "^" in part:
            part, m = part.split("^")
            mult = int(m)
        out.extend([(part[0].upper(), int(part[1:]))] * mult)
    return out


# ------------------------------------------------------------ Weyl group

class WeylGroup:
    """All elements of W, enumerated breadth-first by length.

    Elements are stored as permutations of root indices.  Appending simple
    reflections on the right in increasing order yields, for every element,
    its lexicographically smallest reduced word.
    """

    def __init__(self, R: RootDatum, cap: int = DEFAULT_WEYL_CAP):
        self.R = R
        order = R.weyl_order() if R.factors else None
        if order is not None and order > cap:
            raise CapExceeded(f"|W| = {order} exceeds cap {cap}")
        r, N, npos = R.rank, R.nroots, R.npos
        # permutation induced by each simple reflection
        sperm = np.zeros((r, N), dtype=np.int32)
        for i in range(r):
            for k in range(N):
                rt = R.roots[k].copy()
                rt[i] -= int(R.root_weights[k][i])
                sperm[i, k] = R.root_index[tuple(int(x) for x in rt)]
        self.simple_perms = sperm
        ident = np.arange(N, dtype=np.int32)
        perms = [ident]
        words = [()]
        lengths = [0]
        index = {ident[:r].tobytes(): 0}
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                pu = perms[u]
                for i in range(r):
                    # u s_i longer than u  iff  u(alpha_i) > 0
                    if pu[i] >= npos:
                        continue
                    p = pu[sperm[i]]
                    key = p[:r].tobytes()
                    if key in index:
                        continue
                    index[key] = len(perms)
                    perms.append(p)
                    words.append(words[u] + (i,))
                    lengths.append(lengths[u] + 1)
                    nxt.append(index[key])
                    if len(perms) > cap:
                        raise CapExceeded(f"|W| exceeds cap {cap}")
            frontier = nxt
        self.perms = np.array(perms, dtype=np.int32).reshape(len(perms), N)
        self.words = words
        self.lengths = np.array(lengths, dtype=np.int64)
        self._index = index
        self.order = len(perms)
        # left parents: w = s_j * parent with l(parent) = l(w) - 1
        self.left_parent = np.full(self.order, -1, dtype=np.int64)
        self.left_gen = np.full(self.order, -1, dtype=np.int64)
        inv = np.argsort(self.perms, axis=1)
        self._inv_perms = inv.astype(np.int32)
        for w in range(1, self.order):
            # j is a left descent iff w^{-1}(alpha_j) < 0
            j = next(j for j in range(r) if inv[w, j] >= npos)
            p = sperm[j][self.perms[w]]
            self.left_parent[w] = index[p[:r].tobytes()]
            self.left_gen[w] = j
        self.longest = int(np.argmax(self.lengths))

    def __len__(self):
        return self.order

    def __iter__(self):
        return (WeylElement(self, k) for k in range(self.order))

    def element(self, k: int) -> "WeylElement":
        return WeylElement(self, k)

    def identity(self) -> "WeylElement":
        return WeylElement(self, 0)

    def w0(self) -> "WeylElement":
        return WeylElement(self, self.longest)

    def index_of_perm(self, p: np.ndarray) -> int:
        return self._index[np.asarray(p, dtype=np.int32)[: self.R.rank].tobytes()]

    def from_word(self, word: Sequence[int]) -> "WeylElement":
        p = np.arange(self.R.nroots, dtype=np.int32)
        for i in word:
            p = p[self.simple_perms[i]]
        return WeylElement(self, self.index_of_perm(p))

    def orbit_weights(self, lam) -> np.ndarray:
        """Array whose row k is w_k(lam) (fundamental-weight coordinates)."""
        lam = np.asarray(lam, dtype=np.int64)
        out = np.empty((self.order, self.R.rank), dtype=np.int64)
        out[0] = lam
        C = self.R.cartan
        for w in range(1, self.order):  # BFS order: parents come first
            v = out[self.left_parent[w]]
            j = self.left_gen[w]
            out[w] = v - v[j] * C[j]
        return out

    def orbit_coweights(self, xi) -> np.ndarray:
        """Row k is w_k(xi) (simple-coroot coordinates; object dtype if rational)."""
        obj = _is_obj(xi)
        xi = np.array(xi, dtype=object if obj else np.int64)
        out = np.empty((self.order, self.R.rank), dtype=xi.dtype)
        out[0] = xi
        C = self.R.cartan
        for w in range(1, self.order):
            v = out[self.left_parent[w]].copy()
            j = self.left_gen[w]
            v[j] = v[j] - (C[j] * out[self.left_parent[w]]).sum()
            out[w] = v
        return out


@dataclass(frozen=True)
class WeylElement:
    group: WeylGroup = field(repr=False, compare=False, hash=False)
    index: int

    def __eq__(self, other):
        return isinstance(other, WeylElement) and other.group is self.group and other.index == self.index

    def __hash__(self):
        return hash(self.index)

    def __repr__(self):
        return "W[" + ("".join(f"s{i + 1}" for i in self.word) or "1") + "]"

    @property
    def R(self) -> RootDatum:
        return self.group.R

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.words[self.index]

    @property
    def length(self) -> int:
        return int(self.group.lengths[self.index])

    @property
    def perm(self) -> np.ndarray:
        return self.group.perms[self.index]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm[other.perm]
        return WeylElement(self.group, self.group.index_of_perm(p))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.group, self.group.index_of_perm(self.group._inv_perms[self.index]))

    def act_root(self, k: int) -> int:
        return int(self.perm[k])

    def act_weight(self, lam) -> np.ndarray:
        R = self.R
        v = np.array(lam, dtype=object if _is_obj(lam) else np.int64)
        for i in reversed(self.word):
            v = v - v[i] * R.cartan[i]
        return v

    def act_coweight(self, xi) -> np.ndarray:
        R = self.R
        v = np.array(xi, dtype=object if _is_obj(xi) else np.int64)
        for i in reversed(self.word):
            v = v.copy()
            v[i] = v[i] - (R.cartan[i] * v).sum()
        return v

    def inversion_set(self) -> list[int]:
        """Phi_w = positive roots sent to negative roots (root indices)."""
        npos = self.R.npos
        return [k for k in range(npos) if self.perm[k] >= npos]

    def inverted_set(self) -> list[int]:
        """Psi_w = negative roots that are images of positive roots."""
        npos = self.R.npos
        return sorted(int(self.perm[k]) for k in range(npos) if self.perm[k] >= npos)


def enumerate_weyl(R: RootDatum, cap: int | None = None) -> list[WeylElement]:
    W = R.weyl if cap is None else WeylGroup(R, cap)
    return list(W)


def inverted_set(w: WeylElement) -> list[int]:
    return w.inverted_set()


def reflection(R: RootDatum, k: int) -> WeylElement:
    """s_beta for the root with index k."""
    W = R.weyl
    cor = R.coroots[k]
    rw = R.root_weights
    # s_beta(gamma) = gamma - <gamma, beta^vee> beta
    p = np.empty(R.nroots, dtype=np.int32)
    for g in range(R.nroots):
        c = int((rw[g] * cor).sum())
        p[g] = R.root_index[tuple(int(x) for x in R.roots[g] - c * R.roots[k])]
    return WeylElement(W, W.index_of_perm(p))


def order_inverted_set(w: WeylElement) -> list[int]:
    """Order Psi_w as (beta_1, ..., beta_l) with w_j = s_{beta_j} ... s_{beta_l}
    satisfying w_1 = w and beta_j in Psi_{w_j} \\ Psi_{w_{j+1}}.

    Each step peels a right descent: beta = w(alpha_i) < 0 and
    s_beta w = w s_i.
    """
    R = w.R
    W = w.group
    out = []
    cur = w
    while cur.length > 0:
        i = next(i for i in range(R.rank) if cur.perm[i] >= R.npos)
        out.append(int(cur.perm[i]))
        cur = cur * W.from_word((i,))
    return out


def bruhat_below(w: WeylElement) -> set[int]:
    """Indices of all u <= w in Bruhat order (subword property)."""
    W = w.group
    below = {0}
    acc = W.identity()
    for i in w.word:
        s = W.from_word((i,))
        acc = acc * s
        below = below | {(W.element(u) * s).index for u in below}
    return below


# ------------------------------------------------------------ parabolics

def levi_roots_of_coweight(R: RootDatum, xi) -> frozenset[int]:
    """Delta(l_xi): roots vanishing on xi."""
    vals = R.root_weights @ np.array(xi, dtype=object)
    return frozenset(k for k in range(R.nroots) if vals[k] == 0)


def _standard_levi_nodes(R: RootDatum, levi: frozenset[int], sigma: WeylElement | None):
    """Simple-root indices J with sigma^{-1} levi = Phi_J, or raise."""
    for k in levi:
        if R.neg(k) not in levi:
            raise ValueError("levi_roots must be symmetric")
    if sigma is not None:
        sinv = sigma.inverse()
        levi = frozenset(sinv.act_root(k) for k in levi)
    J = sorted(k for k in levi if k < R.rank)
    # closure of J must be exactly levi
    Jset = set(J)
    gen = frozenset(k for k in range(R.nroots)
                    if all(R.roots[k][i] == 0 for i in range(R.rank) if i not in Jset))
    if gen != levi:
        raise ValueError("levi_roots is not a standard Levi subsystem for this positive system")
    return J


def longest_of_parabolic(W: WeylGroup, J: Sequence[int]) -> WeylElement:
    cur = W.identity()
    npos = W.R.npos
    while True:
        j = next((j for j in J if cur.perm[j] < npos), None)
        if j is None:
            return cur
        cur = cur * W.from_word((j,))


def coset_reps(R: RootDatum, levi_roots: Iterable[int], w: WeylElement,
               sigma: WeylElement | None = None) -> tuple[WeylElement, WeylElement]:
    """Minimal and maximal representatives of the coset W_L w.

    ``levi_roots`` is a closed symmetric set of root indices; with ``sigma``
    it must be standard for the positive system sigma(Delta^+), and lengths
    are measured in that system (l_sigma(w) = l(sigma^-1 w sigma)).
    """
    W = R.weyl
    J = _standard_levi_nodes(R, frozenset(levi_roots), sigma)
    u = w if sigma is None else sigma.inverse() * w * sigma
    npos = R.npos
    inv = W._inv_perms
    while True:
        # left descent s_j of u inside W_J: u^{-1}(alpha_j) < 0
        j = next((j for j in J if inv[u.index, j] >= npos), None)
        if j is None:
            break
        u = W.from_word((j,)) * u
    umax = longest_of_parabolic(W, J) * u
    if sigma is not None:
        si = sigma.inverse()
        return sigma * u * si, sigma * umax * si
    return u, umax


def min_coset_reps(R: RootDatum, J: Sequence[int]) -> list[WeylElement]:
    """All u with u^{-1}(alpha_j) > 0 for j in J (minimal reps of W_J \\ W)."""
    W = R.weyl
    inv = W._inv_perms
    npos = R.npos
    return [W.element(k) for k in range(W.order) if all(inv[k, j] < npos for j in J)]
