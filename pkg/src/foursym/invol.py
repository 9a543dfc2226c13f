"""Involutions of g that preserve the fixed algebra h of sigma = tau_{K_i/2}.

An automorphism preserving t is stored as a pair (L, theta): L is its action
on roots and tau(E_beta) = exp(pi i theta_beta) E_{L beta}.  Fixing theta on
simple roots determines the automorphism; the remaining phases follow from
tau[E_a, E_b] = [tau E_a, tau E_b].

Classification inside one connected component of Aut_h(g): an involution
preserving (t, Pi(h)) has the form tau_L o tau_q with tau_L a fixed base
involution and q in the L-invariant coweight lattice, taken modulo (1 + L).
Conjugacy within the component is the orbit relation of the centralizer of L
in W(h) and in the diagram group D(h), acting by affine maps on q.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property
from typing import Sequence

from .chevalley import StructureTable, build_structure_table
from .lattice import LatticeBasis, SubLattice, integer_kernel, inverse, matmul, matvec, solve_mod2, transpose
from .rootsys import (
    CoweightVector,
    LieType,
    Root,
    RootSystem,
    RootSystemError,
    SimpleType,
    build_root_system,
    eval,
    identify_type,
    subsystem_base,
)
from .symmetric import fixed_type_by_dim, split_compact, symmetric_subalgebras


class InvolError(ValueError):
    pass


def _neg(a: Root) -> Root:
    return tuple(-x for x in a)


def _m2(x) -> Q:
    return Q(x) % 2


# ---------------------------------------------------------------------------
# Linear maps on roots


@dataclass(frozen=True)
class CartanMap:
    """Linear map on t*: column j of ``matrix`` is the image of alpha_j."""

    rs: RootSystem = field(compare=False, repr=False)
    matrix: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, rs: RootSystem) -> "CartanMap":
        n = rs.rank
        return cls(rs, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_images(cls, rs: RootSystem, images: Sequence[Sequence[int]]) -> "CartanMap":
        n = rs.rank
        return cls(rs, tuple(tuple(int(images[j][i]) for j in range(n)) for i in range(n)))

    @classmethod
    def solve(cls, rs: RootSystem, src: Sequence[Sequence], dst: Sequence[Sequence]) -> "CartanMap | None":
        """The map sending each src vector to dst (src a basis); None if not integral."""
        B = transpose([list(map(Q, s)) for s in src])
        C = transpose([list(map(Q, d)) for d in dst])
        M = matmul(C, inverse(B))
        if any(x.denominator != 1 for row in M for x in row):
            return None
        return cls(rs, tuple(tuple(int(x) for x in row) for row in M))

    def __call__(self, v: Sequence) -> tuple:
        return matvec(self.matrix, v)

    @property
    def images(self) -> list[Root]:
        n = self.rs.rank
        return [tuple(self.matrix[i][j] for i in range(n)) for j in range(n)]

    def compose(self, other: "CartanMap") -> "CartanMap":
        return CartanMap(self.rs, tuple(tuple(r) for r in matmul(self.matrix, other.matrix)))

    def inverse(self) -> "CartanMap":
        inv = inverse(self.matrix)
        return CartanMap(self.rs, tuple(tuple(int(x) for x in r) for r in inv))

    @property
    def is_identity(self) -> bool:
        return self == CartanMap.identity(self.rs)

    @property
    def is_involution(self) -> bool:
        return self.compose(self).is_identity

    def preserves_roots(self) -> bool:
        return all(self(r) in self.rs.index for r in self.rs.positive_roots)

    def preserves_form(self) -> bool:
        rs = self.rs
        im = self.images
        n = rs.rank
        return all(rs.ip(im[i], im[j]) == rs.form[i][j] for i in range(n) for j in range(n))

    @cached_property
    def coweight_matrix(self) -> list[list[int]]:
        """T with (L alpha)(T x) = alpha(x): T = (L^T)^{-1}."""
        inv = inverse(transpose(self.matrix))
        return [[int(x) for x in r] for r in inv]

    def on_coweight(self, x: Sequence) -> tuple:
        return matvec(self.coweight_matrix, x)

    def plus_dim(self) -> int:
        n = self.rs.rank
        A = [[self.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n)]
        return len(integer_kernel(A))


def reflection_map(rs: RootSystem, beta: Root) -> CartanMap:
    imgs = []
    for j in range(rs.rank):
        a = rs.simple(j)
        k = rs.pairing(a, beta)
        imgs.append(tuple(x - k * b for x, b in zip(a, beta)))
    return CartanMap.from_images(rs, imgs)


def is_outer(L: CartanMap) -> bool:
    """Whether L lies outside the Weyl group (checked on a regular dominant coweight)."""
    rs = L.rs
    n = rs.rank
    v = tuple(Q(j + 1) for j in range(n))
    y = list(L.on_coweight(v))
    # move y into the dominant chamber with simple reflections
    while True:
        for i in range(n):
            if y[i] < 0:
                c = y[i]
                cv = rs.coroot_K(rs.simple(i))
                y = [a - c * b for a, b in zip(y, cv)]
                break
        else:
            break
    return tuple(y) != v


# ---------------------------------------------------------------------------
# Automorphisms


@dataclass
class Automorphism:
    cmap: CartanMap
    theta: dict  # root -> phase in [0, 2)

    @property
    def rs(self) -> RootSystem:
        return self.cmap.rs

    @classmethod
    def lift(cls, L: CartanMap, simple_theta: Sequence | None = None, st: StructureTable | None = None) -> "Automorphism":
        """The automorphism with root map L and the given phases on simple roots."""
        rs = L.rs
        st = st or build_structure_table(rs)
        n = rs.rank
        th = [Q(0)] * n if simple_theta is None else [Q(x) for x in simple_theta]
        theta: dict[Root, Q] = {}
        pos = set(rs.positive_roots)
        for beta in rs.positive_roots:
            if sum(beta) == 1:
                theta[beta] = _m2(th[beta.index(1)])
                continue
            for j in range(n):
                eta = tuple(b - int(i == j) for i, b in enumerate(beta))
                if eta in pos:
                    break
            a = rs.simple(j)
            r = Q(st.n(L(a), L(eta)), st.n(a, eta))
            if r not in (1, -1):
                raise InvolError("root map does not preserve structure constants")
            theta[beta] = _m2(theta[a] + theta[eta] + (0 if r == 1 else 1))
        for beta in rs.positive_roots:
            theta[_neg(beta)] = _m2(-theta[beta])
        return cls(L, theta)

    @classmethod
    def torus(cls, rs: RootSystem, x: Sequence) -> "Automorphism":
        return cls(CartanMap.identity(rs), {r: _m2(eval(r, tuple(x))) for r in rs.roots})

    def image(self, beta: Root) -> tuple[Q, Root]:
        return self.theta[beta], self.cmap(beta)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self o other."""
        th = {}
        for b in self.rs.roots:
            t2, img = other.image(b)
            th[b] = _m2(t2 + self.theta[img])
        return Automorphism(self.cmap.compose(other.cmap), th)

    def inverse(self) -> "Automorphism":
        Li = self.cmap.inverse()
        th = {}
        for g in self.rs.roots:
            b = Li(g)
            th[g] = _m2(-self.theta[b])
        return Automorphism(Li, th)

    def conj(self, nu: "Automorphism") -> "Automorphism":
        """nu o self o nu^{-1}."""
        return nu.compose(self).compose(nu.inverse())

    def simple_phases(self) -> tuple[Q, ...]:
        return tuple(self.theta[self.rs.simple(j)] for j in range(self.rs.rank))

    def is_involution(self) -> bool:
        if not self.cmap.is_involution:
            return False
        return all(_m2(self.theta[b] + self.theta[self.cmap(b)]) == 0 for b in self.rs.roots)

    def bracket_violations(self, st: StructureTable | None = None) -> list:
        """Pairs (a, b) where tau[E_a, E_b] != [tau E_a, tau E_b]."""
        rs = self.rs
        st = st or build_structure_table(rs)
        L = self.cmap
        bad = []
        for (ia, ib), nab in st.N.items():
            a, b = rs.roots[ia], rs.roots[ib]
            s = tuple(x + y for x, y in zip(a, b))
            r = Q(st.n(L(a), L(b)), nab)
            if r not in (1, -1):
                bad.append((a, b))
                continue
            if _m2(self.theta[s] - self.theta[a] - self.theta[b] - (0 if r == 1 else 1)) != 0:
                bad.append((a, b))
        return bad

    def ratio_coweight(self, other: "Automorphism") -> tuple[Q, ...]:
        """c with other = self o tau_c (both with the same root map)."""
        if self.cmap != other.cmap:
            raise InvolError("different root maps")
        return tuple(_m2(a - b) for a, b in zip(other.simple_phases(), self.simple_phases()))


def extend_to_involution(L: CartanMap, eigen: dict | None = None, st: StructureTable | None = None) -> Automorphism:
    """An involution with root map L; ``eigen`` fixes phases (0 or 1) on L-fixed simple roots.

    Phases theta on simple roots enter every theta_beta linearly, so
    tau^2 = Id on simple root vectors is a linear congruence mod 2.
    """
    rs = L.rs
    n = rs.rank
    if not L.is_involution:
        raise InvolError("root map is not an involution")
    zero = Automorphism.lift(L, None, st)
    rows, rhs = [], []
    for j in range(n):
        a = rs.simple(j)
        img = L(a)
        # theta_j + <img, theta> + s_img = 0
        rows.append([int(i == j) + img[i] for i in range(n)])
        rhs.append(-zero.theta[img])
    for j, e in (eigen or {}).items():
        if L(rs.simple(j)) != rs.simple(j):
            raise InvolError(f"alpha_{j + 1} is not fixed by L")
        rows.append([int(i == j) for i in range(n)])
        rhs.append(Q(e))
    sol = solve_mod2(rows, rhs)
    if sol is None:
        raise InvolError("no phases make tau an involution")
    tau = Automorphism.lift(L, sol, st)
    if not tau.is_involution():
        raise InvolError("internal: solved phases do not give an involution")
    return tau


# ---------------------------------------------------------------------------
# Fixed algebras


@dataclass(frozen=True)
class FixedAlgebraReport:
    dim: int
    rank_plus: int
    type: LieType
    dim_formula: int
    dim_direct: int
    rank_check: int | None = None

    @property
    def types(self):
        return self.type.simple

    @property
    def abelian_dim(self) -> int:
        return self.type.abelian


def _counts(tau: Automorphism, roots: Sequence[Root]) -> tuple[int, int]:
    """(root-count formula, direct eigenvector count) over the given symmetric root set."""
    L = tau.cmap
    pos = [r for r in roots if sum(r) > 0]
    fixed = [r for r in pos if L(r) == r]
    compact = [r for r in fixed if tau.theta[r] == 0]
    formula = len(pos) + 2 * len(compact) - len(fixed)
    direct = 0
    seen = set()
    for r in roots:
        if r in seen:
            continue
        img = L(r)
        if img == r:
            direct += tau.theta[r] == 0
            seen.add(r)
        elif img == _neg(r):
            if sum(r) > 0:
                direct += 1
        else:
            direct += 1
            seen.update((r, img))
    return formula, direct


def _real_rank(rs: RootSystem, L: CartanMap, keep) -> int:
    base = subsystem_base(rs, lambda r: keep(r) and L(r) == _neg(r))
    if not base:
        return 0
    return sum(split_compact(t).rank for t in identify_type(base, rs.ip))


def dim_fixed(tau: Automorphism) -> FixedAlgebraReport:
    rs = tau.rs
    L = tau.cmap
    tp = L.plus_dim()
    f, d = _counts(tau, rs.roots)
    f += tp
    d += tp
    if f != d:
        raise InvolError(f"fixed dimension mismatch: formula {f}, direct {d}")
    if L.is_identity:
        base = subsystem_base(rs, lambda r: tau.theta[r] == 0)
        lt = LieType.make(identify_type(base, rs.ip), rs.rank - len(base))
        rk = None
    else:
        lt = fixed_type_by_dim(rs.type, is_outer(L), f)
        rk = tp + _real_rank(rs, L, lambda r: True)
        if rk != lt.rank:
            raise InvolError(f"rank check failed: {lt} has rank {lt.rank}, expected {rk}")
    if lt.dim != f:
        raise InvolError("type dimension mismatch")
    return FixedAlgebraReport(f, tp, lt, f, d, rk)


def dim_fixed_on_roots(tau: Automorphism, roots: Sequence[Root], tplus: int) -> tuple[int, int]:
    f, d = _counts(tau, roots)
    return f + tplus, d + tplus


# ---------------------------------------------------------------------------
# The subalgebra h and its diagram group


def _components(rs: RootSystem, base: Sequence[Root]) -> list[list[Root]]:
    m = len(base)
    adj = {i: [j for j in range(m) if j != i and rs.ip(base[i], base[j]) != 0] for i in range(m)}
    seen, comps = set(), []
    for i in range(m):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            k = stack.pop()
            comp.append(k)
            for j in adj[k]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append([base[k] for k in sorted(comp)])
    return comps


def _graph_automorphisms(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Permutations p with A[p a][p b] = A[a][b]."""
    m = len(A)
    out = []

    def rec(p: list[int], used: set) -> None:
        a = len(p)
        if a == m:
            out.append(tuple(p))
            return
        for c in range(m):
            if c in used or A[c][c] != A[a][a]:
                continue
            if all(A[p[b]][c] == A[b][a] and A[c][p[b]] == A[a][b] for b in range(a)):
                p.append(c)
                used.add(c)
                rec(p, used)
                p.pop()
                used.discard(c)

    rec([], set())
    return out


def root_label(rs: RootSystem, r: Root) -> str:
    if r == _neg(rs.highest_root):
        return "a0"
    if sum(r) == 1 and min(r) == 0:
        return f"a{r.index(1) + 1}"
    return "(" + ",".join(map(str, r)) + ")"


class HContext:
    """Data attached to (g, sigma = tau_{K_i/2}) with m_i in {3, 4}."""

    def __init__(self, rs: RootSystem | str, node: int):
        if isinstance(rs, str):
            rs = build_root_system(rs)
        self.rs = rs
        self.node = node  # 0-based index of alpha_i
        self.mark = rs.marks[node]
        if self.mark not in (3, 4):
            raise InvolError(f"out of scope: mark of alpha_{node + 1} is {self.mark}")
        self.st = build_structure_table(rs)
        n = rs.rank
        self.K = tuple(Q(int(j == node)) for j in range(n))
        self.delta_h = [r for r in rs.roots if r[node] % 4 == 0]
        self.delta_h_set = set(self.delta_h)
        # m_i = 4: extended base minus alpha_i; m_i = 3: base minus alpha_i
        self.pi_h = [rs.simple(j) for j in range(n) if j != node]
        if self.mark == 4:
            self.pi_h = [_neg(rs.highest_root)] + self.pi_h
        self.dim_z = n - len(self.pi_h)
        self.components = _components(rs, self.pi_h)
        # center direction: the weight dual to alpha_i, in root coordinates
        Cinv = inverse([[rs.form[a][b] for b in range(n)] for a in range(n)])
        self.z_weight = tuple(Cinv[a][node] for a in range(n))

    # -- h itself ---------------------------------------------------------
    @cached_property
    def h_type(self) -> LieType:
        return LieType.make(identify_type(self.pi_h, self.rs.ip), self.dim_z)

    def component_roots(self, comp: Sequence[Root]) -> list[Root]:
        """Roots of Delta(h) lying in the span of one component of Pi(h)."""
        rs = self.rs
        G = [[rs.ip(a, b) for b in comp] for a in comp]
        Gi = inverse(G)
        out = []
        for r in self.delta_h:
            v = [rs.ip(r, b) for b in comp]
            c = matvec(Gi, v)
            rec = [sum(ci * b[k] for ci, b in zip(c, comp)) for k in range(rs.rank)]
            if tuple(rec) == r:
                out.append(r)
        return out

    # -- diagram group ----------------------------------------------------
    @cached_property
    def diagram_group(self) -> list[CartanMap]:
        """D(h): elements of Aut(Delta) stabilizing Pi(h)."""
        rs = self.rs
        P = self.pi_h
        A = [[rs.pairing(a, b) for b in P] for a in P]
        out = []
        signs = (1, -1) if self.dim_z == 1 else (1,)
        if self.dim_z > 1:
            raise InvolError("dim z > 1 not supported")
        for p in _graph_automorphisms(A):
            for eps in signs:
                src = list(P)
                dst = [P[p[k]] for k in range(len(P))]
                if self.dim_z == 1:
                    src.append(self.z_weight)
                    dst.append(tuple(eps * x for x in self.z_weight))
                L = CartanMap.solve(rs, src, dst)
                if L is not None and L.preserves_roots():
                    out.append(L)
        return out

    def involution_classes(self) -> list[CartanMap]:
        """Involutive elements of D(h) up to D(h)-conjugacy (identity first)."""
        D = self.diagram_group
        invs = [L for L in D if L.is_involution]
        reps: list[CartanMap] = []
        seen: set = set()
        invs.sort(key=lambda L: (not L.is_identity, L.matrix))
        for L in invs:
            if L.matrix in seen:
                continue
            reps.append(L)
            for d in D:
                seen.add(d.compose(L).compose(d.inverse()).matrix)
        return reps

    def commutation_type(self, L: CartanMap) -> str:
        TK = L.on_coweight(self.K)
        if all((a - b) % 4 == 0 for a, b in zip(TK, self.K)):
            return "commutes"
        if all((a + b) % 4 == 0 for a, b in zip(TK, self.K)):
            return "anticommutes"
        raise InvolError("tau does not preserve h")

    def describe_map(self, L: CartanMap) -> str:
        rs = self.rs
        parts = []
        for a in self.pi_h:
            img = L(a)
            if img != a:
                parts.append(f"{root_label(rs, a)}->{root_label(rs, img)}")
        if not parts and not L.is_identity:
            # trivial on Pi(h) but not on the center: list the moved simple roots
            for i in range(rs.rank):
                a = rs.simple(i)
                if L(a) != a:
                    parts.append(f"{root_label(rs, a)}->{root_label(rs, L(a))}")
        return ", ".join(parts) if parts else "id"

    # -- h cap k ------------------------------------------------------------
    def h_cap_fixed(self, tau: Automorphism) -> FixedAlgebraReport:
        rs = self.rs
        L = tau.cmap
        tp = L.plus_dim()
        f, d = dim_fixed_on_roots(tau, self.delta_h, tp)
        if f != d:
            raise InvolError(f"h cap k dimension mismatch: {f} vs {d}")
        simple: list[SimpleType] = []
        ab = 0
        rank_exp = 0
        comps = self.components
        done = set()
        for ci, comp in enumerate(comps):
            if ci in done:
                continue
            img = sorted(L(a) for a in comp)
            cj = next(k for k, c in enumerate(comps) if sorted(c) == img)
            ctype = identify_type(comp, rs.ip)
            if cj != ci:
                done.update((ci, cj))
                simple.extend(ctype)
                rank_exp += sum(t.rank for t in ctype)
                continue
            done.add(ci)
            croots = self.component_roots(comp)
            if all(L(a) == a for a in comp):
                base = subsystem_base(rs, lambda r: r in set(croots) and tau.theta[r] == 0)
                sub = identify_type(base, rs.ip)
                simple.extend(sub)
                ab += len(comp) - len(base)
                rank_exp += len(comp)
                continue
            # nontrivial diagram symmetry on this simple factor
            (stype,) = ctype
            M = [[rs.pairing(a, b) for b in comp] for a in comp]
            # dimension of the L-fixed part of the Cartan of the factor
            P = [[int(L(a) == b) for a in comp] for b in comp]
            tps = len(integer_kernel([[P[i][j] - int(i == j) for j in range(len(comp))] for i in range(len(comp))]))
            del M
            fs, _ = dim_fixed_on_roots(tau, croots, tps)
            lt = fixed_type_by_dim(stype, True, fs)
            cset = set(croots)
            rk = tps + _real_rank(rs, L, lambda r: r in cset)
            if rk != lt.rank:
                raise InvolError(f"rank check failed on factor {stype}: {lt} vs {rk}")
            simple.extend(lt.simple)
            ab += lt.abelian
            rank_exp += lt.rank
        if self.dim_z == 1:
            zimg = L(self.z_weight)
            if zimg == self.z_weight:
                ab += 1
        lt = LieType.make(simple, ab)
        if lt.dim != f:
            raise InvolError(f"h cap k type {lt} has dim {lt.dim}, counted {f}")
        return FixedAlgebraReport(f, tp, lt, f, d, None)

    def ideals_in_h(self, tau: Automorphism) -> tuple | None:
        """For L = Id: the simple ideals of k with a flag telling whether they lie in h."""
        rs = self.rs
        if not tau.cmap.is_identity:
            return None
        base = subsystem_base(rs, lambda r: tau.theta[r] == 0)
        out = []
        for comp in _components(rs, base):
            (t,) = identify_type(comp, rs.ip) if len(identify_type(comp, rs.ip)) == 1 else (None,)
            inside = all(a in self.delta_h_set for a in comp)
            out.append((str(t), inside))
        return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Involution classes in one component


@dataclass
class InvolutionClass:
    L: CartanMap
    q: tuple  # coweight coordinates of the twist
    tau: Automorphism
    size: int  # number of q-classes in the orbit
    commutation: str
    k: FixedAlgebraReport | None = None
    hk: FixedAlgebraReport | None = None
    ideals: tuple | None = None
    members: list = field(default_factory=list)

    def invariants(self) -> tuple:
        return (str(self.k.type), str(self.hk.type), self.commutation, self.ideals)


class Component:
    """Involutions tau_L o tau_q, q in the L-invariant coweight lattice mod (1 + L)."""

    def __init__(self, ctx: HContext, L: CartanMap, base: Automorphism | None = None):
        self.ctx = ctx
        self.L = L
        rs = ctx.rs
        n = rs.rank
        T = L.coweight_matrix
        self.T = T
        ker = integer_kernel([[T[i][j] - int(i == j) for j in range(n)] for i in range(n)])
        self.lat = LatticeBasis(ker, n)
        gens = []
        for j in range(n):
            col = tuple(T[i][j] + int(i == j) for i in range(n))
            gens.append(self.lat.coords(col))
        self.sub = SubLattice(gens, len(ker))
        self.base = base if base is not None else (
            Automorphism.torus(rs, [0] * n) if L.is_identity else extend_to_involution(L, None, ctx.st)
        )

    def key(self, q: Sequence) -> tuple:
        return self.sub.key(self.lat.coords(q))

    def reduce(self, x: Sequence) -> tuple:
        """Class representative of tau_L o tau_x: q = (1 + T) x / 2."""
        Tx = matvec(self.T, x)
        q = tuple(Q(a + b) / 2 for a, b in zip(x, Tx))
        if any(v.denominator != 1 for v in q):
            raise InvolError("tau_L o tau_x is not an involution")
        return tuple(int(v) for v in q)

    def all_classes(self) -> dict:
        out = {}
        k = len(self.lat.basis)
        for bits in itertools.product((0, 1), repeat=k):
            q = self.lat.vector(bits)
            key = self.key(q)
            if key not in out:
                out[key] = q
        return out

    def involution(self, q: Sequence) -> Automorphism:
        return self.base.compose(Automorphism.torus(self.ctx.rs, q))

    def _generators(self) -> list[Automorphism]:
        ctx = self.ctx
        rs = ctx.rs
        L = self.L
        maps: list[CartanMap] = []
        for b in ctx.delta_h:
            if sum(b) <= 0:
                continue
            lb = L(b)
            if lb == b or lb == _neg(b):
                maps.append(reflection_map(rs, b))
            elif rs.ip(b, lb) == 0 and sum(lb) > 0 and lb > b:
                maps.append(reflection_map(rs, b).compose(reflection_map(rs, lb)))
        for d in ctx.diagram_group:
            if not d.is_identity and d.compose(L) == L.compose(d):
                maps.append(d)
        uniq = {m.matrix: m for m in maps}
        return [Automorphism.lift(m, None, ctx.st) for m in uniq.values()]

    @cached_property
    def affine_generators(self) -> list[tuple[list[list[int]], tuple]]:
        """Pairs (T_nu, shift) acting by q -> shift + T_nu q."""
        out = []
        for nu in self._generators():
            conj = self.base.conj(nu)
            if conj.cmap != self.L:
                raise InvolError("generator does not commute with L")
            c = self.base.ratio_coweight(conj)
            shift = self.reduce(c)
            out.append((nu.cmap.coweight_matrix, shift))
        return out

    def orbits(self) -> list[list[tuple]]:
        classes = self.all_classes()
        if self.L.is_identity:
            zero = self.key((0,) * self.ctx.rs.rank)
            classes.pop(zero, None)
        gens = self.affine_generators
        seen: set = set()
        orbits = []
        for key in sorted(classes):
            if key in seen:
                continue
            orb = [classes[key]]
            seen.add(key)
            stack = [classes[key]]
            while stack:
                q = stack.pop()
                for Tn, sh in gens:
                    q2 = tuple(a + b for a, b in zip(sh, matvec(Tn, q)))
                    k2 = self.key(q2)
                    if k2 not in seen:
                        seen.add(k2)
                        q2 = classes[k2]
                        orb.append(q2)
                        stack.append(q2)
            orbits.append(orb)
        return orbits


def _q_size(q: Sequence) -> tuple:
    return (sum(1 for x in q if x), sum(abs(x) for x in q), tuple(-abs(x) for x in q))


def classify_component(ctx: HContext, L: CartanMap, base: Automorphism | None = None) -> list[InvolutionClass]:
    try:
        comp = Component(ctx, L, base)
    except InvolError:
        return []
    com = ctx.commutation_type(L)
    out = []
    for orb in comp.orbits():
        q = min(orb, key=_q_size)
        tau = comp.involution(q)
        cls = InvolutionClass(L, q, tau, len(orb), com, members=sorted(orb, key=_q_size))
        cls.k = dim_fixed(tau)
        cls.hk = ctx.h_cap_fixed(tau)
        cls.ideals = ctx.ideals_in_h(tau)
        out.append(cls)
    return out


def enumerate_inner_classes(rs: RootSystem | str, node: int) -> list[CoweightVector]:
    """One coweight h per Aut_h(g)-class of inner involutions tau_h (tau|_t = Id)."""
    ctx = HContext(rs, node)
    L = CartanMap.identity(ctx.rs)
    return [CoweightVector(tuple(Q(x) for x in c.q)) for c in classify_component(ctx, L)]


def table1_candidates(rs: RootSystem | str, node: int) -> list[CartanMap]:
    """Nontrivial involutive root maps preserving Pi(h), one per D(h)-class (m_i = 4)."""
    ctx = HContext(rs, node)
    if ctx.mark != 4:
        raise InvolError("Table 1 candidates are defined for nodes of mark 4")
    return [L for L in ctx.involution_classes() if not L.is_identity]


def dim_h_cap_fixed(ctx: HContext, tau: Automorphism) -> FixedAlgebraReport:
    return ctx.h_cap_fixed(tau)


def solve_coweight_basis(rs: RootSystem | str, node: int, factor: Sequence[int]) -> list[CoweightVector]:
    """Coweights v with alpha(v) = [alpha = alpha_j] on Pi(h), one per j in ``factor``.

    ``factor`` lists 1-based labels of roots of Pi(h) (0 for alpha_0).  When
    dim z = 1 the extra condition (v, K_i) = 0 makes v orthogonal to the center.
    """
    ctx = HContext(rs, node)
    rs = ctx.rs
    n = rs.rank
    labels = [0 if r == _neg(rs.highest_root) else r.index(1) + 1 for r in ctx.pi_h]
    rows = [list(r) for r in ctx.pi_h]
    if ctx.dim_z == 1:
        Ginv = inverse([[rs.form[a][b] for b in range(n)] for a in range(n)])
        rows.append([Ginv[a][node] for a in range(n)])
    Minv = inverse(rows)
    out = []
    for j in factor:
        if j not in labels:
            raise InvolError(f"alpha_{j} is not in Pi(h)")
        rhs = [Q(int(lab == j)) for lab in labels] + [Q(0)] * ctx.dim_z
        out.append(CoweightVector(tuple(matvec(Minv, rhs))))
    return out
