"""Fixed algebras of involutions of compact simple Lie algebras.

This is Cartan's list of symmetric pairs, written out per simple type and
split by the class of the involution modulo inner automorphisms.  Within
every class occurring here the dimension of the fixed algebra singles out
one isomorphism type; ``fixed_type_by_dim`` asserts this rather than
assuming it.
"""
from __future__ import annotations

from .rootsys import LieType, RootSystemError, SimpleType


def so(m: int) -> LieType:
    if m <= 1:
        return LieType.make([], 0)
    if m == 2:
        return LieType.make([], 1)
    if m % 2:
        return LieType.make([SimpleType("B", (m - 1) // 2)])
    return LieType.make([SimpleType("D", m // 2)])


def su(m: int) -> LieType:
    return LieType.make([SimpleType("A", m - 1)]) if m >= 2 else LieType.make([], 0)


def sp(m: int) -> LieType:
    return LieType.make([SimpleType("C", m)]) if m >= 1 else LieType.make([], 0)


def u(m: int) -> LieType:
    return plus(su(m), LieType.make([], 1))


def plus(*parts: LieType) -> LieType:
    simple = [t for p in parts for t in p.simple]
    return LieType.make(simple, sum(p.abelian for p in parts))


def _E(*labels: str) -> list[LieType]:
    return [LieType.parse(s) for s in labels]


def symmetric_subalgebras(t: SimpleType, outer: bool) -> list[LieType]:
    """Fixed algebras of the involutions of t in the inner or outer class.

    The inner list includes t itself (the identity).
    """
    f, n = t.family, t.rank
    if f == "A":
        N = n + 1
        if outer:
            if n < 2:
                return []
            out = [so(N)]
            if N % 2 == 0:
                out.append(sp(N // 2))
            return out
        return [su(N)] + [plus(su(p), su(N - p), LieType.make([], 1)) for p in range(1, N // 2 + 1)]
    if f == "B":
        if outer:
            return []
        N = 2 * n + 1
        return [so(N)] + [plus(so(p), so(N - p)) for p in range(1, n + 1)]
    if f == "C":
        if outer:
            return []
        return [sp(n)] + [plus(sp(p), sp(n - p)) for p in range(1, n // 2 + 1)] + [u(n)]
    if f == "D":
        N = 2 * n
        if outer:
            return [plus(so(p), so(N - p)) for p in range(1, n + 1, 2)]
        return [so(N)] + [plus(so(p), so(N - p)) for p in range(2, n + 1, 2)] + [u(n)]
    if f == "E" and n == 6:
        return _E("F4", "C4") if outer else _E("E6", "A5+A1", "D5+R")
    if outer:
        return []
    if f == "E" and n == 7:
        return _E("E7", "A7", "D6+A1", "E6+R")
    if f == "E" and n == 8:
        return _E("E8", "D8", "E7+A1")
    if f == "F":
        return _E("F4", "B4", "C3+A1")
    if f == "G":
        return _E("G2", "A1+A1")
    raise RootSystemError(f"no involution data for {t}")


def fixed_type_by_dim(t: SimpleType, outer: bool, dim: int) -> LieType:
    hits = {str(x): x for x in symmetric_subalgebras(t, outer) if x.dim == dim}
    if len(hits) != 1:
        raise RootSystemError(f"{t} {'outer' if outer else 'inner'} fixed dim {dim}: candidates {sorted(hits)}")
    return next(iter(hits.values()))


def split_compact(t: SimpleType) -> LieType:
    """Fixed algebra of an involution acting by -1 on a Cartan subalgebra."""
    f, n = t.family, t.rank
    if f == "A":
        return so(n + 1)
    if f == "B":
        return plus(so(n + 1), so(n))
    if f == "C":
        return u(n)
    if f == "D":
        return plus(so(n), so(n))
    return {
        "E6": LieType.parse("C4"),
        "E7": LieType.parse("A7"),
        "E8": LieType.parse("D8"),
        "F4": LieType.parse("C3+A1"),
        "G2": LieType.parse("A1+A1"),
    }[str(t)]
