"""Cones in weight space given by "<= 0" functionals, the nested cones C_k,
the hat T-chamber arrangement and its coarsening into hat G-classes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .embed import EmbeddingDatum, enumerate_regions, sign_vector, xi_max
from .liealg import generic_orbit_dim
from .popov import is_ample
from .rational import primitive, rank, sign_normalized, simplex_max
from .strat import codim_unstable


class CapError(RuntimeError):
    pass


DEFAULT_HYPERPLANE_CAP = 64


def _dot(a, b):
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


# ------------------------------------------------------------ H-cones

@dataclass
class ConeH:
    """{lam dominant : lam . v <= 0 for every functional v}."""
    n: int
    functionals: list = field(default_factory=list)
    provenance: list = field(default_factory=list)  # (xi, word of w) per functional
    _info: tuple | None = field(default=None, repr=False)

    def contains(self, lam) -> bool:
        if any(Fraction(x) < 0 for x in lam):
            return False
        return all(_dot(v, lam) <= 0 for v in self.functionals)

    def _constraints(self):
        rows = [list(v) for v in self.functionals]
        rows += [[-int(i == j) for j in range(self.n)] for i in range(self.n)]
        return rows

    def analyse(self):
        """(dim, relative-interior point, indices of implicit equalities).

        A constraint a.x <= 0 is an implicit equality iff max(-a.x) over the
        cone truncated by sum(x) <= 1 is zero; the witnesses of the others
        sum to a relative-interior point."""
        if self._info is not None:
            return self._info
        n = self.n
        rows = self._constraints()
        A = [list(v) for v in self.functionals] + [[1] * n]
        b = [0] * len(self.functionals) + [1]
        point = [Fraction(0)] * n
        tight = []
        for idx, a in enumerate(rows):
            res = simplex_max([-Fraction(x) for x in a], A, b)
            if res.status == "optimal" and res.value > 0:
                point = [p + x for p, x in zip(point, res.x)]
            else:
                tight.append(idx)
        d = n - rank([rows[i] for i in tight]) if tight else n
        self._info = (d, tuple(point), tuple(tight))
        return self._info

    @property
    def dim(self) -> int:
        return self.analyse()[0]

    @property
    def interior_point(self) -> tuple:
        pt = self.analyse()[1]
        return primitive(pt) if any(pt) else tuple(0 for _ in pt)

    def regular_boundary_points(self) -> list[tuple]:
        """One strictly dominant point on each proper face cut out by a single
        non-tight functional, when such a point exists."""
        n = self.n
        tight = set(self.analyse()[2])
        out = []
        for idx, v in enumerate(self.functionals):
            if idx in tight:
                continue
            # variables (x, t): max t, t <= x_i, lam.v = 0, other constraints, sum x <= 1
            A = [list(w) + [0] for w in self.functionals]
            A.append([-x for x in v] + [0])
            A += [[-int(i == j) for j in range(n)] + [1] for i in range(n)]
            A.append([1] * n + [0])
            b = [0] * (len(A) - 1) + [1]
            res = simplex_max([0] * n + [1], A, b)
            if res.status == "optimal" and res.value > 0:
                out.append(primitive(res.x[:n]))
        return out

    def as_dict(self) -> dict:
        d, pt, _ = self.analyse()
        return {
            "functionals": [list(v) for v in self.functionals],
            "dim": d,
            "interior_point": list(self.interior_point),
            "provenance": [{"xi": [str(x) for x in xi], "w": list(word)} for xi, word in self.provenance],
        }


def cone_dim(C: ConeH) -> int:
    return C.dim


def ck_cone(E: EmbeddingDatum, k: int, trials: int = 4, seed: int = 0) -> ConeH:
    """Inequalities lam(u^-1 sigma^-1 iota xi_j) <= 0 over fit pairs of length
    r_j - rhat_j - k + 1 (redundant functionals kept)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    C = ConeH(E.g.rank)
    seen = set()
    for xi, sigma, ld in xi_max(E):
        L = ld.r - ld.rhat - k + 1
        if L < 0:
            continue
        for u in ld.min_reps:
            if u.length != L:
                continue
            w = ld.twist(u)
            if not generic_orbit_dim(E, ld.xi, w, trials, seed).fit:
                continue
            v = primitive(u.inverse().act_coweight(ld.xi_std))
            if v in seen:
                continue
            seen.add(v)
            C.functionals.append(v)
            C.provenance.append((ld.xi, w.word))
    return C


# ------------------------------------------------------------ chambers

def t_hyperplanes(E: EmbeddingDatum) -> list[tuple]:
    """Distinct hyperplanes u^-1 sigma^-1 iota xi meeting the open dominant chamber."""
    out = []
    seen = set()
    for xi, sigma, ld in xi_max(E):
        for u in ld.min_reps:
            h = sign_normalized(u.inverse().act_coweight(ld.xi_std))
            if h in seen:
                continue
            seen.add(h)
            if all(x >= 0 for x in h) or all(x <= 0 for x in h):
                continue
            out.append(h)
    out.sort()
    return out


@dataclass
class Chamber:
    signs: tuple
    sample: tuple
    codim: int  # 0 when not ample


@dataclass
class Facet:
    a: int  # chamber indices
    b: int
    hyperplane: int
    sample: tuple
    normal: tuple
    codim: int | None = None
    wall: bool | None = None


@dataclass
class ChamberGraph:
    hyperplanes: list
    chambers: list
    facets: list
    classes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "hyperplanes": [list(h) for h in self.hyperplanes],
            "chambers": [{"sample": list(c.sample), "codim": c.codim, "signs": list(c.signs)}
                         for c in self.chambers],
            "facets": [{"chambers": [f.a, f.b], "normal": list(f.normal), "sample": list(f.sample),
                        "codim": f.codim, "hat_g_wall": f.wall} for f in self.facets],
            "classes": self.classes,
        }


def _codim0(E, lam, trials, seed):
    c = codim_unstable(E, lam, trials, seed)
    return 0 if c is None else c  # None: nothing unstable, impossible for semisimple hat G


def t_chambers(E: EmbeddingDatum, cap: int = DEFAULT_HYPERPLANE_CAP, trials: int = 4,
               seed: int = 0, walls: bool = True) -> ChamberGraph:
    E.require_regular()
    n = E.g.rank
    hs = t_hyperplanes(E)
    if len(hs) > cap:
        raise CapError(f"{len(hs)} hyperplanes exceed the cap {cap}")
    fixed = [[int(i == j) for j in range(n)] for i in range(n)]
    regions = enumerate_regions(fixed, hs, n)
    chambers = []
    for signs, pt in regions:
        s = primitive(pt)
        chambers.append(Chamber(tuple(signs), s, _codim0(E, s, trials, seed)))
    facets = []
    for i in range(len(chambers)):
        for j in range(i + 1, len(chambers)):
            diff = [t for t in range(len(hs)) if chambers[i].signs[t] != chambers[j].signs[t]]
            if len(diff) != 1:
                continue
            h = hs[diff[0]]
            p, q = chambers[i].sample, chambers[j].sample
            hp, hq = _dot(h, p), _dot(h, q)
            t = hp / (hp - hq)
            x = primitive([Fraction(a) + t * (Fraction(b) - Fraction(a)) for a, b in zip(p, q)])
            f = Facet(i, j, diff[0], x, h)
            f.codim = _codim0(E, x, trials, seed)
            if walls:
                f.wall = g_wall_test(E, f, trials, seed)
            facets.append(f)
    G = ChamberGraph(hs, chambers, facets)
    G.classes = hat_g_classes(G) if walls else []
    return G


def g_wall_test(E: EmbeddingDatum, facet, trials: int = 4, seed: int = 0) -> bool:
    """Does the facet separate hat G-classes?  True iff for some xi in Xi_max and
    minimal w with lam(u^-1 xi') = 0 along the facet normal, the restricted
    weight is ample for the Levi sub-embedding."""
    sample = tuple(int(x) for x in facet.sample)
    if any(x <= 0 for x in sample):
        raise ValueError("facet sample must be strictly dominant")
    normal = sign_normalized(facet.normal)
    for pair in wall_pairs(E, sample, normal):
        ld, u = pair
        sub = ld.sub_embedding
        if is_ample(sub, ld.restricted_weight(sample, u)):
            return True
    return False


def wall_pairs(E: EmbeddingDatum, lam, normal) -> list:
    """(LeviDatum, u) with u^-1 xi' parallel to ``normal`` and vanishing on lam."""
    out = []
    for xi, sigma, ld in xi_max(E):
        for u in ld.min_reps:
            v = u.inverse().act_coweight(ld.xi_std)
            if sign_normalized(v) != tuple(normal):
                continue
            if _dot(v, lam) != 0:
                continue
            out.append((ld, u))
    return out


def hat_g_classes(G: ChamberGraph) -> list[dict]:
    """Merge ample chambers across facets that are not walls.  All chambers
    with empty semistable locus form one class; ample facets on walls are
    listed as lower-dimensional classes of their own."""
    n = len(G.chambers)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in G.facets:
        ca, cb = G.chambers[f.a], G.chambers[f.b]
        if ca.codim > 0 and cb.codim > 0 and not f.wall:
            parent[find(f.a)] = find(f.b)
    groups: dict = {}
    unstable = []
    for i in range(n):
        if G.chambers[i].codim == 0:
            unstable.append(i)
        else:
            groups.setdefault(find(i), []).append(i)
    out = []
    if unstable:
        out.append({"kind": "unstable", "members": unstable, "ample": False, "convex": None})
    for members in sorted(groups.values()):
        out.append({"kind": "chambers", "members": members, "ample": True,
                    "convex": _convex(G, members)})
    for k, f in enumerate(G.facets):
        if f.codim > 0 and f.wall:
            out.append({"kind": "facet", "members": [k], "ample": True, "convex": True})
    return out


def _convex(G: ChamberGraph, members: list) -> bool | None:
    """Midpoints of sample pairs stay inside the union (None if undecided)."""
    sigs = {G.chambers[i].signs for i in members}
    undecided = False
    for a in members:
        for b in members:
            if a >= b:
                continue
            mid = [Fraction(x + y, 2) for x, y in zip(G.chambers[a].sample, G.chambers[b].sample)]
            s = sign_vector(G.hyperplanes, mid)
            if 0 in s:
                undecided = True
                continue
            if s not in sigs:
                return False
    return None if undecided else True


@dataclass
class JumpReport:
    adjacent: int
    closures: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def no_jump_audit(G: ChamberGraph) -> JumpReport:
    """|codim C1 - codim C2| <= 1 across facets and 0 <= codim F - codim C <= 1
    for a facet F in the closure of C."""
    bad = []
    clos = 0
    for f in G.facets:
        ca, cb = G.chambers[f.a].codim, G.chambers[f.b].codim
        if abs(ca - cb) > 1:
            bad.append(("adjacent", f.a, f.b, ca, cb))
        for c, cc in ((f.a, ca), (f.b, cb)):
            clos += 1
            if not 0 <= f.codim - cc <= 1:
                bad.append(("closure", c, list(f.sample), cc, f.codim))
    return JumpReport(len(G.facets), clos, bad)


def rho_criterion(E: EmbeddingDatum) -> Fraction | None:
    """min over Xi_max of a/(a+b) r - rhat; movable chambers exist when >= 2."""
    vals = []
    for xi, sigma, ld in xi_max(E):
        if ld.a is None:
            continue
        vals.append(ld.a / (ld.a + ld.b) * ld.r - ld.rhat)
    return min(vals) if vals else None


def facet_sample_on(E: EmbeddingDatum, lam, normal, tries: int = 200) -> tuple | None:
    """A strictly dominant integer point near the ray of ``lam`` lying on the
    hyperplane ``normal`` and on no other hat T-hyperplane (so it is interior
    to a facet).  ``lam`` itself must lie on the hyperplane."""
    h = [int(x) for x in normal]
    if _dot(h, lam) != 0:
        raise ValueError("lam is not on the hyperplane")
    hs = t_hyperplanes(E)
    hn = sign_normalized(h)
    others = [g for g in hs if g != hn]
    hh = sum(x * x for x in h)
    n = len(h)
    scale = 8
    for t in range(tries):
        delta = [((t + 1) * (i + 1) ** 2 + 3 * i * t) % (2 * n + 3) - n for i in range(n)]
        hd = sum(x * y for x, y in zip(h, delta))
        proj = [hh * d - hd * x for d, x in zip(delta, h)]  # integer point of h-perp
        if not any(proj):
            continue
        pt = [scale * hh * (2 * n + 3) * int(l) + p for l, p in zip(lam, proj)]
        if min(pt) <= 0:
            scale *= 2
            continue
        if all(_dot(g, pt) != 0 for g in others):
            return primitive(pt)
    return None
