"""Exact rational linear algebra and a small dense simplex solver.

Everything here works on lists of ``fractions.Fraction`` (ints are accepted
and promoted).  Sizes in this package are tiny (tens of rows), so clarity
beats speed.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Q = Fraction


def qvec(v: Iterable) -> list[Fraction]:
    return [Fraction(x) for x in v]


def qmat(rows: Iterable[Iterable]) -> list[list[Fraction]]:
    return [qvec(r) for r in rows]


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(M: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [dot(row, v) for row in M]


def transpose(M: Sequence[Sequence]) -> list[list]:
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    Bt = transpose(B)
    return [[dot(r, c) for c in Bt] for r in A]


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    A = qmat(M)
    if not A:
        return A, []
    nr, nc = len(A), len(A[0])
    piv = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nr):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
    return A, piv


def rank(M: Sequence[Sequence]) -> int:
    return len(rref(M)[1]) if M else 0


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : Mx = 0}."""
    if not M:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    R, piv = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, pc in enumerate(piv):
            x[pc] = -R[i][f]
        basis.append(x)
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of Ax = b, or None if inconsistent."""
    if not A:
        return None
    n = len(A[0])
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(piv):
        x[pc] = R[i][n]
    return x


def inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def primitive(v: Sequence) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    v = qvec(v)
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def sign_normalized(v: Sequence) -> tuple[int, ...]:
    """Primitive vector whose first nonzero entry is positive (a line, not a ray)."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


# ---------------------------------------------------------------- simplex

class LPResult:
    __slots__ = ("status", "value", "x")

    def __init__(self, status, value=None, x=None):
        self.status = status
        self.value = value
        self.x = x

    def __repr__(self):
        return f"LPResult({self.status}, {self.value})"


def simplex_max(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """max c.x  s.t.  A x <= b, x >= 0, with b >= 0 (slack basis is feasible).

    Dense tableau, Bland's rule, exact arithmetic.  status is 'optimal' or
    'unbounded'.
    """
    m = len(A)
    n = len(c)
    if any(Fraction(bi) < 0 for bi in b):
        raise ValueError("simplex_max needs b >= 0")
    # tableau rows: [A | I | b]
    T = [qvec(list(A[i]) + [int(i == j) for j in range(m)] + [b[i]]) for i in range(m)]
    z = qvec([-x for x in c] + [0] * m + [0])
    basis = [n + i for i in range(m)]
    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return LPResult("unbounded")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        f = z[enter]
        z = [x - f * y for x, y in zip(z, T[leave])]
        basis[leave] = enter
    x = [Fraction(0)] * (n + m)
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return LPResult("optimal", z[-1], x[:n])


def strict_interior_point(rows: Sequence[Sequence], dim: int):
    """Find y with r.y > 0 for all rows, or None.

    Solved as max t s.t. t - r.y <= 0, with y = y+ - y- and a normalisation
    sum(y+) + sum(y-) <= 1.  Returns a scaled rational point.
    """
    if not rows:
        return [Fraction(0)] * dim if dim == 0 else [Fraction(0)] * dim
    nvar = 2 * dim + 1  # y+, y-, t
    A = []
    b = []
    for r in rows:
        r = qvec(r)
        A.append([-x for x in r] + list(r) + [Fraction(1)])
        b.append(0)
    A.append([1] * (2 * dim) + [0])
    b.append(1)
    c = [0] * (2 * dim) + [1]
    res = simplex_max(c, A, b)
    if res.status != "optimal" or res.value <= 0:
        return None
    y = [res.x[i] - res.x[dim + i] for i in range(dim)]
    return y
