"""Graded Lie algebras from partitions of a fundamental system.

A partition Pi = Pi_0 u Pi_1 u ... u Pi_n gives the height function
h(lambda) = sum_p p * (sum of coefficients of lambda on Pi_p), the
characteristic element Z with lambda(Z) = h(lambda) and the grading
g = sum_p g_p by eigenvalues of ad Z.  The kind nu is h of the highest root.

Restricted-root data of real forms is tabulated in data/satake.txt; the
lift of a restricted coweight sums the fundamental coweights of the simple
roots restricting to it.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from importlib import resources
from typing import Sequence

from sympy import Matrix

from .chevalley import StructureTable
from .rootsys import CoweightVector, RootSystem, RootSystemError, SimpleType, build_root_system, eval
from .torsion import fixed_subalgebra, is_symmetric_or_3symmetric, TorsionAut


class GradingError(RootSystemError):
    pass


@dataclass(frozen=True)
class Partition:
    """Blocks of 0-based simple-root indices; blocks[p] is Pi_p."""

    rank: int
    blocks: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        seen: set = set()
        for b in self.blocks:
            if seen & b:
                raise GradingError("partition blocks overlap")
            seen |= b
        if seen != set(range(self.rank)):
            raise GradingError("partition does not cover the fundamental system")
        if len(self.blocks) < 2 or not self.blocks[1] or not self.blocks[-1]:
            raise GradingError("Pi_1 and the last block must be nonempty")

    @classmethod
    def of(cls, rank: int, *blocks: Sequence[int]) -> "Partition":
        """Partition with Pi_1, Pi_2, ... given (0-based); Pi_0 is the rest."""
        bs = [frozenset(b) for b in blocks]
        rest = frozenset(range(rank)) - frozenset().union(*bs)
        return cls(rank, (rest, *bs))

    @property
    def weights(self) -> tuple[int, ...]:
        w = [0] * self.rank
        for p, b in enumerate(self.blocks):
            for i in b:
                w[i] = p
        return tuple(w)


@dataclass(frozen=True)
class Gradation:
    Z: CoweightVector
    kind: int
    grade_dims: dict = field(hash=False)

    @property
    def spectrum(self) -> tuple[int, ...]:
        return tuple(sorted(p for p, d in self.grade_dims.items() if d))


@dataclass(frozen=True)
class RestrictedRootData:
    label: str
    g: SimpleType
    restricted_type: SimpleType
    restriction: tuple[int, ...]  # alpha_j -> q (1-based), 0 for black nodes
    multiplicities: tuple[int, ...]  # per restricted simple root
    k: str

    def __post_init__(self) -> None:
        if len(self.restriction) != self.g.rank:
            raise GradingError(f"{self.label}: restriction has wrong length")
        if len(self.multiplicities) != self.restricted_type.rank:
            raise GradingError(f"{self.label}: multiplicities have wrong length")
        if set(self.restriction) - {0} != set(range(1, self.restricted_type.rank + 1)):
            raise GradingError(f"{self.label}: restriction is not onto the restricted simple roots")

    @property
    def rrs(self) -> RootSystem:
        return build_root_system(self.restricted_type)

    @property
    def highest(self) -> tuple[int, ...]:
        return self.rrs.highest_root

    @property
    def is_split(self) -> bool:
        return self.restriction == tuple(range(1, self.g.rank + 1))

    def mult(self, lam: Sequence[int]) -> int:
        # multiplicity is constant on Weyl orbits, i.e. on root lengths here
        rrs = self.rrs
        n2 = rrs.norm2(lam)
        for i, m in enumerate(self.multiplicities):
            if rrs.norm2(rrs.simple(i)) == n2:
                return m
        raise GradingError(f"{self.label}: no simple root of the length of {lam}")

    def preimages(self, q: int) -> tuple[int, ...]:
        """0-based simple roots of g restricting to lambda_q (q 1-based)."""
        return tuple(j for j, r in enumerate(self.restriction) if r == q)

    @property
    def reduced_roots(self) -> tuple:
        """Restricted roots lambda with 2 lambda not a root (all of them for reduced types)."""
        rrs = self.rrs
        return tuple(a for a in rrs.roots if not rrs.is_root(tuple(2 * x for x in a)))

    @property
    def dim_p(self) -> int:
        return self.restricted_type.rank + sum(self.mult(a) for a in self.rrs.positive_roots)

    @property
    def dim_m(self) -> int:
        return self.g.dim - self.restricted_type.rank - 2 * sum(self.mult(a) for a in self.rrs.positive_roots)

    @property
    def signature(self) -> int:
        """dim p - dim k, the index in the usual name e8(8), e8(-24), ..."""
        return self.dim_p - (self.g.dim - self.dim_p)


def _parse_satake(text: str) -> dict[str, RestrictedRootData]:
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 6:
            raise GradingError(f"bad satake line: {line!r}")
        label, g, rt, res, mult, k = cols
        out[label] = RestrictedRootData(
            label,
            SimpleType.parse(g),
            SimpleType.parse(rt),
            tuple(int(x) for x in res.split()),
            tuple(int(x) for x in mult.split()),
            k,
        )
    return out


@lru_cache(maxsize=None)
def load_satake() -> dict[str, RestrictedRootData]:
    return _parse_satake(resources.files("foursym.data").joinpath("satake.txt").read_text())


# ---------------------------------------------------------------------------
# Gradations


def _grade(weights: Sequence[int], lam: Sequence[int]) -> int:
    return sum(w * c for w, c in zip(weights, lam))


def gradation_from_partition(system: RootSystem | RestrictedRootData, p: Partition) -> Gradation:
    """Characteristic element, kind and grade dimensions of the gradation of a partition."""
    w = p.weights
    if isinstance(system, RestrictedRootData):
        rrs = system.rrs
        if p.rank != rrs.rank:
            raise GradingError("partition rank differs from the restricted rank")
        dims = Counter()
        for lam in rrs.roots:
            dims[_grade(w, lam)] += system.mult(lam)
        dims[0] += system.g.dim - sum(system.mult(a) for a in rrs.roots)
        top = rrs.highest_root
    else:
        if p.rank != system.rank:
            raise GradingError("partition rank differs from the root system rank")
        dims = Counter(_grade(w, a) for a in system.roots)
        dims[0] += system.rank
        top = system.highest_root
    Z = CoweightVector(tuple(Q(x) for x in w))
    return Gradation(Z, _grade(w, top), dict(sorted(dims.items())))


@dataclass
class GradingReport:
    pairs: int
    violations: list = field(default_factory=list)
    symmetric: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations and self.symmetric


def check_grading(grad: Gradation, st: StructureTable, samples: int | None = None, seed: int = 0) -> GradingReport:
    """[g_p, g_q] in g_{p+q} on basis pairs, and grade negation under E_a -> E_{-a}.

    All pairs u <= v when samples is None, else that many ordered pairs drawn
    uniformly with a seeded generator.
    """
    rs = st.rs

    def deg(b: int) -> Q:
        r = st.root_of(b)
        return Q(0) if r is None else eval(r, grad.Z)

    degs = [deg(b) for b in range(st.dim)]
    if samples is None:
        pairs = ((u, v) for u in range(st.dim) for v in range(u, st.dim))
    else:
        rng = random.Random(seed)
        pairs = ((rng.randrange(st.dim), rng.randrange(st.dim)) for _ in range(samples))
    rep = GradingReport(0)
    for u, v in pairs:
        rep.pairs += 1
        want = degs[u] + degs[v]
        for b, c in st.basis_bracket(u, v):
            if c and degs[b] != want:
                rep.violations.append((u, v, b))
    rep.symmetric = all(eval(tuple(-x for x in a), grad.Z) == -eval(a, grad.Z) for a in rs.roots)
    return rep


# ---------------------------------------------------------------------------
# Restricted coweights


def lift_restricted_coweight(data: RestrictedRootData, q: int) -> CoweightVector:
    """h_q = sum of K_j over the alpha_j restricting to lambda_q (q 1-based)."""
    pre = data.preimages(q)
    if not pre:
        raise GradingError(f"{data.label}: lambda_{q} is not a restricted simple root")
    return CoweightVector(tuple(Q(1) if j in pre else Q(0) for j in range(data.g.rank)))


def grade_zero_compact_dim(data: RestrictedRootData, q: int) -> int:
    """dim(k cap g_0) for the gradation with Pi_1 = {lambda_q}: dim m plus m_lambda over grade-0 positive lambda."""
    rrs = data.rrs
    return data.dim_m + sum(data.mult(a) for a in rrs.positive_roots if a[q - 1] == 0)


def table6_triple(data: RestrictedRootData, g: str, node: int) -> tuple[str, str] | None:
    """(restricted type, Pi_1 node) when K_node lifts a restricted simple root of coefficient 3."""
    if str(data.g) != g:
        return None
    for q in range(1, data.restricted_type.rank + 1):
        h = lift_restricted_coweight(data, q)
        if h == CoweightVector.basis(data.g.rank, node - 1) and data.highest[q - 1] == 3:
            return str(data.restricted_type), f"a{node}"
    return None


# ---------------------------------------------------------------------------
# Case filter for order-four candidates


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str


def _center_centralizer_roots(rs: RootSystem, fixed: frozenset) -> frozenset:
    """Roots vanishing on the center of the subalgebra spanned by t and the fixed roots."""
    if not fixed:
        return frozenset()
    M = Matrix([list(a) for a in fixed])
    z = M.nullspace()
    return frozenset(a for a in rs.roots if all(sum(a[i] * v[i] for i in range(rs.rank)) == 0 for v in z))


def prop61_filter(rs: RootSystem, h: CoweightVector, data: RestrictedRootData | None = None) -> Verdict:
    """Classify a candidate h for sigma = tau_{h/2} as eliminated (with reason) or accepted."""
    kind = is_symmetric_or_3symmetric(rs, h)
    if kind != "genuinely4":
        return Verdict(False, kind)
    half = h.scale(Q(1, 2))
    fs = fixed_subalgebra(TorsionAut(half, rs))
    if fs.center_dim != 1:
        return Verdict(False, "wrong center dim")
    fixed = frozenset(a for a in rs.roots if eval(a, h) % 4 == 0)
    if _center_centralizer_roots(rs, fixed) != fixed:
        return Verdict(False, "not a centralizer")
    if data is not None:
        for q in range(1, data.restricted_type.rank + 1):
            if lift_restricted_coweight(data, q) == h:
                if data.highest[q - 1] == 3:
                    return Verdict(True, f"h = h_{q}, n_{q} = 3")
                return Verdict(False, f"h = h_{q} with n_{q} = {data.highest[q - 1]}")
        return Verdict(False, "not a restricted coweight")
    return Verdict(True, "genuinely of order four with one-dimensional center")
