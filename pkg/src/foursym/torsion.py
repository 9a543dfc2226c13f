"""Inner automorphisms tau_H = Ad(exp(pi i H)) of finite order.

tau_H acts on E_alpha by exp(pi i alpha(H)); its phase on alpha is alpha(H)
reduced mod 2.  Two coweights give the same automorphism iff they differ by
an element of the even coweight lattice.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from math import lcm

from .rootsys import (
    CoweightVector,
    LieType,
    Root,
    RootSystem,
    eval,
    identify_type,
    subsystem_base,
)
from .weyl import find_weyl_element


@dataclass(frozen=True)
class TorsionAut:
    H: CoweightVector
    rs: RootSystem

    @classmethod
    def of(cls, rs: RootSystem, H: CoweightVector | str) -> "TorsionAut":
        if isinstance(H, str):
            H = CoweightVector.parse(H, rs.rank)
        return cls(H, rs)


@dataclass(frozen=True)
class FixedSubalgebra:
    base: tuple[Root, ...]
    type: LieType
    center_dim: int
    dim: int

    @property
    def types(self):
        return self.type.simple


def phase(tau: TorsionAut, alpha) -> Q:
    return eval(alpha, tau.H) % 2


def order(tau: TorsionAut) -> int:
    k = 1
    for c in tau.H.coeffs:
        # least k with k*c in 2Z
        d = (c / 2).denominator
        k = lcm(k, d)
    return k


def congruent_mod_2Pi(h: CoweightVector, h2: CoweightVector) -> bool:
    return all(((a - b) / 2).denominator == 1 for a, b in zip(h.coeffs, h2.coeffs))


def fixed_subalgebra(tau: TorsionAut) -> FixedSubalgebra:
    rs = tau.rs
    base = subsystem_base(rs, lambda a: phase(tau, a) == 0)
    nfix = sum(1 for a in rs.roots if phase(tau, a) == 0)
    center = rs.rank - len(base)
    lt = LieType.make(identify_type(base, rs.ip), center)
    return FixedSubalgebra(tuple(base), lt, center, rs.rank + nfix)


def order2_normal_forms(rs: RootSystem) -> list[CoweightVector]:
    n = rs.rank
    return [CoweightVector.basis(n, i) for i in range(n) if rs.marks[i] in (1, 2)]


def _shapes(rs: RootSystem) -> list[tuple[str, CoweightVector]]:
    n = rs.rank
    m = rs.marks
    K = lambda *js: CoweightVector(tuple(Q(sum(c for j, c in js if j == k)) for k in range(n)))  # noqa: E731
    by = {v: [i for i in range(n) if m[i] == v] for v in (1, 2, 3, 4)}
    out = []
    out += [("h0", K((i, 1))) for i in by[4]]
    out += [("h1", K((i, 1))) for i in by[3]]
    out += [("h1", K((j, 1), (k, 1))) for j, k in itertools.combinations(by[2], 2)]
    out += [("h2", K((i, 1), (j, 1))) for i in by[1] for j in by[2]]
    out += [("h3", K((i, 1), (j, 1), (k, 1))) for i, j, k in itertools.combinations(by[1], 3)]
    out += [("h4", K((i, 1))) for i in by[1]]
    out += [("h5", K((i, 1))) for i in by[2]]
    out += [("h5", K((j, 1), (k, 1))) for j, k in itertools.combinations(by[1], 2)]
    out += [("h5", K((p, 2), (q, 1))) for p in by[1] for q in by[1] if p != q]
    return out


def order4_normal_forms(rs: RootSystem, depth: int = 200, with_shape: bool = False):
    """Representatives of the shapes h_0..h_5 up to congruence and Weyl conjugacy.

    The Weyl orbit of h/2 modulo the even lattice is finite, so with a large
    depth cap the search is exhaustive and a failed search is a proof.
    """
    kept: list[tuple[str, CoweightVector, tuple]] = []
    for shape, h in _shapes(rs):
        half = h.scale(Q(1, 2))
        if order(TorsionAut(half, rs)) != 4:
            continue
        fs = fixed_subalgebra(TorsionAut(half, rs))
        inv = (str(fs.type), fs.center_dim)
        dup = False
        for _, h2, inv2 in kept:
            if inv2 != inv:
                continue
            if congruent_mod_2Pi(half, h2.scale(Q(1, 2))):
                dup = True
                break
            w = find_weyl_element(rs, [(half, h2.scale(Q(1, 2)))], depth_cap=depth, modulo_2pi=True)
            if w is not None:
                dup = True
                break
        if not dup:
            kept.append((shape, h, inv))
    if with_shape:
        return [(s, h) for s, h, _ in kept]
    return [h for _, h, _ in kept]


def _root_set(rs: RootSystem, pred) -> frozenset:
    return frozenset(a for a in rs.positive_roots if pred(a))


def is_symmetric_or_3symmetric(rs: RootSystem, h: CoweightVector) -> str:
    """'symmetric', '3symmetric' or 'genuinely4' for sigma = tau_{h/2}.

    The fixed algebra of an inner automorphism containing t is determined by
    its fixed roots, and any automorphism fixing t pointwise is some tau_x;
    so it suffices to compare fixed root sets against all tau_x of order 2
    (x in the coweight lattice mod 2) and order 3 (x = 2y/3, y mod 3).
    """
    S = _root_set(rs, lambda a: eval(a, h) % 4 == 0)
    n = rs.rank
    pos = rs.positive_roots
    for y in itertools.product(range(2), repeat=n):
        if any(y) and all((sum(a[i] * y[i] for i in range(n)) % 2 == 0) == (a in S) for a in pos):
            return "symmetric"
    for y in itertools.product(range(3), repeat=n):
        if any(y) and all((sum(a[i] * y[i] for i in range(n)) % 3 == 0) == (a in S) for a in pos):
            return "3symmetric"
    return "genuinely4"
