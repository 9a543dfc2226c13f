"""Root data for simple Lie algebras of types A to G.

Numbering of simple roots follows Bourbaki throughout.  The inner product
is normalized so that long roots have squared length 2.  Roots are stored
as integer tuples of coordinates in the basis of simple roots.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Callable, Iterable, Sequence

Vec = tuple[int, ...]
Root = Vec  # coordinates n_i of sum n_i alpha_i

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 1,
            "C": n >= 1,
            "D": n >= 2,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(f, False)
        if not ok:
            raise RootSystemError(f"no simple type {f}{n}")

    @classmethod
    def parse(cls, s: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", s)
        if not m:
            raise RootSystemError(f"cannot parse type {s!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dim(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 2),
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(n, 0),
            "F": 52,
            "G": 14,
        }[self.family]


def _dynkin(t: SimpleType) -> tuple[list[Q], list[tuple[int, int]]]:
    """Squared lengths of simple roots and the (simple) edges of the diagram."""
    f, n = t.family, t.rank
    one, two = Q(1), Q(2)
    chain = [(i, i + 1) for i in range(n - 1)]
    if f == "A":
        return [two] * n, chain
    if f == "B":
        return [two] * (n - 1) + [one], chain
    if f == "C":
        return [one] * (n - 1) + [two], chain
    if f == "D":
        if n == 2:
            return [two, two], []
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if f == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [two] * n, edges
    if f == "F":
        return [two, two, one, one], chain
    if f == "G":
        return [Q(2, 3), two], [(0, 1)]
    raise RootSystemError(str(t))


def _form_from_dynkin(lengths: list[Q], edges: list[tuple[int, int]]) -> list[list[Q]]:
    n = len(lengths)
    B = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = lengths[i]
    for i, j in edges:
        # for a simple edge with the shorter root s: (a_i, a_j) = -(s, s)/2 * m
        # where m is the bond multiplicity; equivalently -max(|a|^2)/2
        v = -max(lengths[i], lengths[j]) / 2
        B[i][j] = B[j][i] = v
    return B


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]  # cartan[i][j] = <alpha_i, alpha_j^vee>
    form: tuple[tuple[Q, ...], ...]
    positive_roots: tuple[Root, ...]
    roots: tuple[Root, ...]
    highest_root: Root
    numbering: str = "bourbaki"
    index: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def marks(self) -> Vec:
        return self.highest_root

    @property
    def dim(self) -> int:
        return len(self.roots) + self.rank

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.index

    def ip(self, a: Sequence, b: Sequence) -> Q:
        """Inner product of two vectors in simple-root coordinates."""
        s = Q(0)
        F = self.form
        for i, x in enumerate(a):
            if x:
                row = F[i]
                for j, y in enumerate(b):
                    if y and row[j]:
                        s += x * y * row[j]
        return s

    def norm2(self, a: Sequence) -> Q:
        return self.ip(a, a)

    def pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
        v = 2 * self.ip(beta, alpha) / self.ip(alpha, alpha)
        if v.denominator != 1:
            raise RootSystemError(f"non-integral pairing {beta} {alpha}")
        return int(v)

    def coroot_K(self, alpha: Sequence[int]) -> tuple[Q, ...]:
        """alpha^vee in the fundamental coweight basis: coefficients alpha_i(alpha^vee)."""
        return tuple(Q(self.pairing(self.simple(i), alpha)) for i in range(self.rank))

    def simple(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def height(self, a: Sequence[int]) -> int:
        return sum(a)

    def is_long(self, a: Sequence[int]) -> bool:
        return self.norm2(a) == 2


def _pair_int(cartan, beta: Sequence[int], i: int) -> int:
    return sum(b * cartan[j][i] for j, b in enumerate(beta))


def positive_roots_from_cartan(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """Positive roots by root strings through simple roots, ordered by height."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p: how far the alpha_i-string extends downward from beta
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in known:
                        p += 1
                    else:
                        break
                q = p - _pair_int(cartan, beta, i)
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        nxt.append(t)
        nxt.sort(key=lambda r: tuple(-x for x in r))
        out.extend(nxt)
        layer = nxt
    return out


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    lengths, edges = _dynkin(t)
    B = _form_from_dynkin(lengths, edges)
    n = t.rank
    cartan = tuple(tuple(int(2 * B[i][j] / B[j][j]) for j in range(n)) for i in range(n))
    pos = positive_roots_from_cartan(cartan)
    neg = [tuple(-x for x in r) for r in pos]
    roots = tuple(pos + neg)
    top = max(pos, key=sum)
    for r in pos:
        if any(x > y for x, y in zip(r, top)):
            raise RootSystemError("highest root does not dominate")
    index = {r: k for k, r in enumerate(roots)}
    return RootSystem(
        type=t,
        cartan=cartan,
        form=tuple(tuple(row) for row in B),
        positive_roots=tuple(pos),
        roots=roots,
        highest_root=top,
        index=index,
    )


def highest_root(rs: RootSystem) -> Root:
    return rs.highest_root


@dataclass(frozen=True)
class CoweightVector:
    """Element sum c_j K_j of the coweight span, alpha_i(K_j) = delta_ij."""

    coeffs: tuple[Q, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))

    @classmethod
    def zero(cls, n: int) -> "CoweightVector":
        return cls((Q(0),) * n)

    @classmethod
    def basis(cls, n: int, j: int, c=1) -> "CoweightVector":
        """c*K_{j+1} (j is 0-based)."""
        return cls(tuple(Q(c) if k == j else Q(0) for k in range(n)))

    @classmethod
    def parse(cls, s: str, n: int) -> "CoweightVector":
        return cls(parse_coweight(s, n))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __add__(self, o: "CoweightVector") -> "CoweightVector":
        _same(self, o)
        return CoweightVector(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o: "CoweightVector") -> "CoweightVector":
        _same(self, o)
        return CoweightVector(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "CoweightVector":
        return CoweightVector(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "CoweightVector":
        return CoweightVector(tuple(Q(c) * a for a in self.coeffs))

    def __str__(self) -> str:
        return format_coweight(self.coeffs)


def _same(a: CoweightVector, b: CoweightVector) -> None:
    if a.rank != b.rank:
        raise RootSystemError("rank mismatch")


_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?K_?(\d+)")


def parse_coweight(s: str, n: int) -> tuple[Q, ...]:
    """Parse '1/2*K3 + K6' (whitespace-insensitive) into K-coefficients."""
    text = re.sub(r"\s+", "", s)
    if text in ("0", ""):
        return (Q(0),) * n
    coeffs = [Q(0)] * n
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise RootSystemError(f"cannot parse coweight {s!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = Q(m.group(2)) if m.group(2) else Q(1)
        j = int(m.group(3))
        if not 1 <= j <= n:
            raise RootSystemError(f"K{j} out of range for rank {n}")
        coeffs[j - 1] += sign * c
        pos = m.end()
    return tuple(coeffs)


def format_coweight(c: Sequence[Q]) -> str:
    parts = []
    for j, x in enumerate(c):
        if x == 0:
            continue
        mag = abs(x)
        body = f"K{j + 1}" if mag == 1 else f"{mag}*K{j + 1}"
        parts.append(("-" if x < 0 else "+") + body)
    if not parts:
        return "0"
    s = " ".join(p[0] + " " + p[1:] for p in parts)
    return s[2:] if s.startswith("+") else "-" + s[2:]


def eval(alpha: Sequence[int], H: CoweightVector | Sequence) -> Q:  # noqa: A001
    c = H.coeffs if isinstance(H, CoweightVector) else tuple(H)
    if len(c) != len(alpha):
        raise RootSystemError("rank mismatch")
    return sum((Q(n) * x for n, x in zip(alpha, c)), Q(0))


def extended_base(rs: RootSystem) -> list[Root]:
    return [tuple(-x for x in rs.highest_root)] + [rs.simple(i) for i in range(rs.rank)]


def subsystem_base(rs: RootSystem, pred: Callable[[Root], bool]) -> list[Root]:
    """Simple system of the closed subsystem {alpha : pred(alpha)} in the induced order."""
    sel = {r for r in rs.roots if pred(r)}
    for r in sel:
        if tuple(-x for x in r) not in sel:
            raise RootSystemError("predicate set is not symmetric")
    pos = [r for r in rs.positive_roots if r in sel]
    pos_set = set(pos)
    base = []
    for r in pos:
        decomposable = False
        for s in pos:
            d = tuple(a - b for a, b in zip(r, s))
            if d in pos_set:
                decomposable = True
                break
        if not decomposable:
            base.append(r)
    return base


# ---------------------------------------------------------------------------
# Type recognition and labels


def cartan_of(base: Sequence[Sequence], ip: Callable) -> list[list[int]]:
    m = len(base)
    A = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            v = 2 * ip(base[i], base[j]) / ip(base[j], base[j])
            if v.denominator != 1 or (i != j and v not in (0, -1, -2, -3)):
                raise RootSystemError("input is not a valid base")
            A[i][j] = int(v)
    return A


def _classify_component(nodes: list[int], A, lengths) -> SimpleType:
    n = len(nodes)
    if n == 1:
        return SimpleType("A", 1)
    nbr = {i: [j for j in nodes if j != i and A[i][j] != 0] for i in nodes}
    mult = {(i, j): A[i][j] * A[j][i] for i in nodes for j in nbr[i]}
    if n != len(nodes) or sum(len(v) for v in nbr.values()) != 2 * (n - 1):
        raise RootSystemError("diagram is not a tree")
    if 3 in mult.values():
        if n != 2:
            raise RootSystemError("triple bond in rank > 2")
        return SimpleType("G", 2)
    if 2 in mult.values():
        if n == 2:
            return SimpleType("B", 2)
        if any(len(v) > 2 for v in nbr.values()):
            raise RootSystemError("branched diagram with double bond")
        longest = max(lengths[i] for i in nodes)
        nlong = sum(1 for i in nodes if lengths[i] == longest)
        if n == 4 and nlong == 2:
            ends = [i for i in nodes if len(nbr[i]) == 1]
            dbl = [k for k, v in mult.items() if v == 2][0]
            if all(len(nbr[x]) == 2 for x in dbl) and len(ends) == 2:
                return SimpleType("F", 4)
        if nlong == n - 1:
            return SimpleType("B", n)
        if nlong == 1:
            return SimpleType("C", n)
        raise RootSystemError("unrecognized non-simply-laced diagram")
    branch = [i for i in nodes if len(nbr[i]) >= 3]
    if not branch:
        return SimpleType("A", n)
    if len(branch) > 1 or len(nbr[branch[0]]) != 3:
        raise RootSystemError("unrecognized simply-laced diagram")
    c = branch[0]
    arms = []
    for s in nbr[c]:
        length, prev, cur = 1, c, s
        while True:
            nx = [j for j in nbr[cur] if j != prev]
            if not nx:
                break
            prev, cur = cur, nx[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return SimpleType("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return SimpleType("E", n)
    raise RootSystemError("unrecognized branched diagram")


def canonical_type(t: SimpleType) -> list[SimpleType]:
    """Low-rank label canon: D1 -> abelian (empty list), D2 -> 2A1, D3 -> A3, B1 = C1 = A1, C2 -> B2."""
    f, n = t.family, t.rank
    if f in "BC" and n == 1:
        return [SimpleType("A", 1)]
    if f == "C" and n == 2:
        return [SimpleType("B", 2)]
    if f == "D" and n == 2:
        return [SimpleType("A", 1), SimpleType("A", 1)]
    if f == "D" and n == 3:
        return [SimpleType("A", 3)]
    return [t]


def identify_type(base: Sequence[Sequence], form) -> list[SimpleType]:
    """Simple types of the connected components of the Dynkin diagram of base."""
    if callable(form):
        ip = form
    else:
        F = form

        def ip(a, b):
            return sum((Q(a[i]) * Q(b[j]) * F[i][j] for i in range(len(a)) for j in range(len(b)) if a[i] and b[j]), Q(0))

    base = list(base)
    if not base:
        return []
    A = cartan_of(base, ip)
    lengths = [ip(b, b) for b in base]
    m = len(base)
    seen, comps = set(), []
    for s in range(m):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(m):
                if j not in seen and A[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        out.extend(canonical_type(_classify_component(comp, A, lengths)))
    return sort_types(out)


_FORDER = {f: k for k, f in enumerate("EFGDBCA")}


def sort_types(ts: Iterable[SimpleType]) -> list[SimpleType]:
    return sorted(ts, key=lambda t: (_FORDER[t.family], -t.rank))


@dataclass(frozen=True)
class LieType:
    """Reductive type: multiset of simple factors plus abelian dimension."""

    simple: tuple[SimpleType, ...]
    abelian: int = 0

    @classmethod
    def make(cls, simple: Iterable[SimpleType], abelian: int = 0) -> "LieType":
        flat: list[SimpleType] = []
        ab = abelian
        for t in simple:
            if t.family == "D" and t.rank == 1:
                ab += 1
                continue
            flat.extend(canonical_type(t))
        return cls(tuple(sort_types(flat)), ab)

    @property
    def dim(self) -> int:
        return sum(t.dim for t in self.simple) + self.abelian

    @property
    def rank(self) -> int:
        return sum(t.rank for t in self.simple) + self.abelian

    def __str__(self) -> str:
        parts = [str(t) for t in self.simple]
        if self.abelian == 1:
            parts.append("R")
        elif self.abelian > 1:
            parts.append(f"R^{self.abelian}")
        return "+".join(parts) if parts else "0"

    @classmethod
    def parse(cls, s: str) -> "LieType":
        """Parse the canonical rendering, e.g. 'E7+A1' or 'A3+A3+A1+R^2'."""
        simple, ab = [], 0
        for p in s.replace(" ", "").split("+"):
            if not p or p == "0":
                continue
            m = re.fullmatch(r"R(?:\^(\d+))?", p)
            if m:
                ab += int(m.group(1) or 1)
                continue
            t = re.fullmatch(r"([A-G])_?(\d+)", p)
            if not t:
                raise RootSystemError(f"bad type label {s!r}")
            fam, n = t.group(1), int(t.group(2))
            if fam == "D" and n == 1:
                ab += 1
            else:
                simple.append(SimpleType(fam, n))
        return cls.make(simple, ab)


_LIE_NAMES = {"A": "su({})", "B": "so({})", "C": "sp({})", "D": "so({})"}


def lie_name(t: SimpleType) -> str:
    """Compact real form name, e.g. A7 -> su(8), D8 -> so(16)."""
    f, n = t.family, t.rank
    if f == "A":
        return f"su({n + 1})"
    if f == "B":
        return f"so({2 * n + 1})"
    if f == "C":
        return f"sp({n})"
    if f == "D":
        return f"so({2 * n})"
    return f"{f.lower()}{n}"


def render_lie(lt: LieType) -> str:
    parts = [lie_name(t) for t in lt.simple] + ["R"] * lt.abelian
    return "+".join(parts) if parts else "0"
