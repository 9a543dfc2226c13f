"""Integer lattice helpers built on the Smith normal form.

Matrices are lists of rows of ints.  Vectors are tuples of ints or Fractions.
"""
from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

IntMatrix = list  # list[list[int]]


def _to_dm(A: Sequence[Sequence[int]]) -> DomainMatrix:
    rows = [[ZZ(int(x)) for x in r] for r in A]
    return DomainMatrix(rows, (len(rows), len(rows[0]) if rows else 0), ZZ)


def _to_list(M: DomainMatrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in M.to_list()]


def snf(A: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Return (d, U, V) with U A V diagonal with entries d (length min(m, n))."""
    S, U, V = smith_normal_decomp(_to_dm(A))
    Sl = _to_list(S)
    d = [Sl[i][i] for i in range(min(len(Sl), len(Sl[0]) if Sl else 0))]
    return d, _to_list(U), _to_list(V)


def matvec(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def inverse(A: Sequence[Sequence]) -> list[list[Q]]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Q(x) for x in row] + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def integer_kernel(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """A lattice basis of {x in Z^n : A x = 0}."""
    n = len(A[0])
    d, _, V = snf(A)
    r = sum(1 for x in d if x != 0)
    return [tuple(V[i][j] for i in range(n)) for j in range(r, n)]


def solve_mod2(A: Sequence[Sequence[int]], b: Sequence) -> tuple | None:
    """A rational x with A x = b modulo 2Z^m, or None if there is none."""
    m, n = len(A), len(A[0])
    d, U, V = snf(A)
    Ub = matvec(U, [Q(x) for x in b])
    y = [Q(0)] * n
    for i in range(m):
        s = d[i] if i < len(d) else 0
        if s != 0:
            y[i] = Ub[i] / s
        elif (Ub[i] / 2).denominator != 1:
            return None
    return matvec(V, y)


class SubLattice:
    """Membership and canonical reduction for Z^k modulo a full-rank sublattice."""

    def __init__(self, gens: Sequence[Sequence[int]], k: int):
        G = transpose(gens) if gens else [[0] for _ in range(k)]
        d, U, _ = snf(G)
        if len(d) < k or any(x == 0 for x in d):
            raise ValueError("sublattice is not of full rank")
        self.d = [abs(x) for x in d]
        self.U = U

    def key(self, c: Sequence[int]) -> tuple[int, ...]:
        Uc = matvec(self.U, c)
        return tuple(int(x) % s for x, s in zip(Uc, self.d))

    @property
    def index(self) -> int:
        out = 1
        for s in self.d:
            out *= s
        return out


class LatticeBasis:
    """Coordinates with respect to a lattice basis B (columns) of a saturated sublattice."""

    def __init__(self, basis: Sequence[Sequence[int]], n: int):
        self.basis = [tuple(b) for b in basis]
        self.n = n
        if self.basis:
            d, U, V = snf(transpose(self.basis))
            self._d, self._U, self._V = d, U, V

    def coords(self, x: Sequence) -> tuple[int, ...]:
        if not self.basis:
            if any(x):
                raise ValueError("vector not in lattice")
            return ()
        Ux = matvec(self._U, x)
        k = len(self.basis)
        y = []
        for i, v in enumerate(Ux):
            if i < k:
                q = Q(v) / self._d[i]
                if q.denominator != 1:
                    raise ValueError("vector not in lattice")
                y.append(int(q))
            elif v != 0:
                raise ValueError("vector not in lattice")
        return tuple(int(c) for c in matvec(self._V, y))

    def vector(self, c: Sequence[int]) -> tuple:
        return tuple(sum(ci * b[i] for ci, b in zip(c, self.basis)) for i in range(self.n))
