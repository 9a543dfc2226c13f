"""Independent reference computations for the test suite.

Nothing here imports foursym: Cartan matrices are written out by hand and
roots are generated by closing the simple roots under simple reflections,
which is a different algorithm from the package's string-based enumeration.
"""
from __future__ import annotations


def _chain(n: int) -> list[list[int]]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    return A


def cartan(t: str) -> list[list[int]]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering."""
    fam, n = t[0], int(t[1:])
    if fam == "A":
        return _chain(n)
    if fam == "D":
        A = _chain(n)
        A[n - 2][n - 1] = A[n - 1][n - 2] = 0
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1
        return A
    if fam == "E":
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            A[i][j] = A[j][i] = -1
        return A
    if t == "F4":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    if t == "G2":
        # alpha_1 short, alpha_2 long
        return [[2, -1], [-3, 2]]
    raise ValueError(t)


def roots(t: str) -> set[tuple[int, ...]]:
    """All roots, by closure of the simple roots under simple reflections."""
    A = cartan(t)
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                # s_i(b) = b - <b, alpha_i^vee> alpha_i
                c = sum(b[j] * A[j][i] for j in range(n))
                r = tuple(b[k] - (c if k == i else 0) for k in range(n))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def positive_roots(t: str) -> set[tuple[int, ...]]:
    return {r for r in roots(t) if sum(r) > 0}


def highest_root(t: str) -> tuple[int, ...]:
    return max(positive_roots(t), key=sum)


def count_fixed(t: str, h: tuple, modulus: int) -> int:
    """|{alpha > 0 : alpha(h) = 0 mod modulus}| for an integral coweight h."""
    return sum(1 for r in positive_roots(t) if sum(a * b for a, b in zip(r, h)) % modulus == 0)


def weyl_group_matrices(t: str) -> list[tuple[tuple[int, ...], ...]]:
    """All elements of W as integer matrices acting on coweights in alpha-value coordinates.

    alpha_j(s_i x) = (s_i alpha_j)(x) = x_j - A[j][i] x_i.
    """
    A = cartan(t)
    n = len(A)
    gens = []
    for i in range(n):
        M = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            M[j][i] -= A[j][i]
        gens.append(tuple(tuple(r) for r in M))
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))

    def mul(X, Y):
        return tuple(tuple(sum(X[r][k] * Y[k][c] for k in range(n)) for c in range(n)) for r in range(n))

    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for X in frontier:
            for g in gens:
                Y = mul(g, X)
                if Y not in seen:
                    seen.add(Y)
                    nxt.append(Y)
        frontier = nxt
    return list(seen)


def orbit_meets_mod2(t: str, x: tuple, y: tuple) -> bool:
    """Some w in W has w(x) = y modulo the even coweight lattice (x, y in alpha-value coordinates)."""
    n = len(x)
    for M in weyl_group_matrices(t):
        wx = tuple(sum(M[r][c] * x[c] for c in range(n)) for r in range(n))
        if all((a - b) % 2 == 0 for a, b in zip(wx, y)):
            return True
    return False


def lie_algebra_dim(t: str) -> int:
    return len(roots(t)) + int(t[1:])

