"""Weyl group actions on roots and coweights.

A word ``[a, b, c]`` denotes the composition t_a o t_b o t_c, so the
rightmost reflection acts first.  Coroots are written in the coweight
basis: the coefficient of K_i in alpha^vee is alpha_i(alpha^vee), which for a
simple root alpha_j is the entry ``cartan[i][j]`` (column j of the Cartan
matrix).
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .rootsys import CoweightVector, Root, RootSystem, RootSystemError, eval

WeylWord = list  # list of roots, each the label of a reflection t_alpha


def _check_root(rs: RootSystem, alpha: Sequence[int]) -> Root:
    a = tuple(alpha)
    if not rs.is_root(a):
        raise RootSystemError(f"{a} is not a root")
    return a


def reflect_root(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> Root:
    """t_alpha(beta) = beta - <beta, alpha^vee> alpha."""
    a = _check_root(rs, alpha)
    k = rs.pairing(beta, a)
    return tuple(b - k * x for b, x in zip(beta, a))


def reflect_coweight(rs: RootSystem, alpha: Sequence[int], H: CoweightVector) -> CoweightVector:
    """t_alpha(H) = H - alpha(H) alpha^vee."""
    a = _check_root(rs, alpha)
    if H.rank != rs.rank:
        raise RootSystemError("rank mismatch")
    c = eval(a, H)
    if c == 0:
        return H
    cv = rs.coroot_K(a)
    return CoweightVector(tuple(h - c * v for h, v in zip(H.coeffs, cv)))


def apply_word(rs: RootSystem, word: Iterable[Sequence[int]], x):
    """Apply t_{w[0]} o ... o t_{w[-1]} to a root or a coweight."""
    letters = [tuple(a) for a in word]
    for a in reversed(letters):
        if isinstance(x, CoweightVector):
            x = reflect_coweight(rs, a, x)
        else:
            x = reflect_root(rs, a, x)
    return x


def simple_reflection_matrices(rs: RootSystem) -> list[tuple[tuple[int, ...], ...]]:
    """Matrices of s_i on root coordinates (columns are images of simple roots)."""
    n = rs.rank
    mats = []
    for i in range(n):
        cols = [reflect_root(rs, rs.simple(i), rs.simple(j)) for j in range(n)]
        mats.append(tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))
    return mats


def _reduce_mod2(c: Sequence[Q]) -> tuple:
    return tuple(x % 2 for x in c)


def find_weyl_element(
    rs: RootSystem,
    goal: Sequence[tuple],
    depth_cap: int = 12,
    modulo_2pi: bool = False,
    generators: Sequence[Root] | None = None,
) -> list[Root] | None:
    """Breadth-first search for a word w with w(x) = y for every (x, y) in goal.

    Sources and targets are coweights or roots.  With ``modulo_2pi`` coweight
    targets are compared modulo the even coweight lattice.  Returns None when
    no word of length at most ``depth_cap`` exists over the generators; this
    is not a proof of non-existence.
    """
    gens = [tuple(g) for g in (generators or [rs.simple(i) for i in range(rs.rank)])]
    srcs = [x for x, _ in goal]
    tgts = [y for _, y in goal]

    def key(state):
        if not modulo_2pi:
            return tuple(s.coeffs if isinstance(s, CoweightVector) else s for s in state)
        return tuple(_reduce_mod2(s.coeffs) if isinstance(s, CoweightVector) else s for s in state)

    target_key = key(tgts)
    start = tuple(srcs)
    if key(start) == target_key:
        return []
    seen = {key(start)}
    # word is built so that state = w(srcs) with w = t_{word[0]} o ... ; a new
    # letter applied after w is prepended
    queue = deque([(start, [])])
    while queue:
        state, word = queue.popleft()
        if len(word) >= depth_cap:
            continue
        for g in gens:
            nxt = tuple(apply_word(rs, [g], s) for s in state)
            k = key(nxt)
            if k in seen:
                continue
            nw = [g] + word
            if k == target_key:
                return nw
            seen.add(k)
            queue.append((nxt, nw))
    return None


def enumerate_weyl_group(rs: RootSystem, limit: int = 100000) -> list[list[int]]:
    """All elements of W as words in simple reflection indices (small ranks only).

    Elements are in bijection with the orbit of the regular coweight sum K_j.
    """
    n = rs.rank
    rho = CoweightVector(tuple(Q(1) for _ in range(n)))
    seen = {rho.coeffs: []}
    queue = deque([rho])
    while queue:
        v = queue.popleft()
        w = seen[v.coeffs]
        for i in range(n):
            u = reflect_coweight(rs, rs.simple(i), v)
            if u.coeffs not in seen:
                seen[u.coeffs] = [i] + w
                if len(seen) > limit:
                    raise RootSystemError("Weyl group too large to enumerate")
                queue.append(u)
    return list(seen.values())


def word_from_indices(rs: RootSystem, idx: Sequence[int]) -> list[Root]:
    return [rs.simple(i) for i in idx]


def longest_element(rs: RootSystem) -> list[Root]:
    """A reduced word for w_0, found by sending the regular coweight to its negative."""
    n = rs.rank
    rho = CoweightVector(tuple(Q(1) for _ in range(n)))
    w: list[Root] = []
    v = rho
    while True:
        for i in range(n):
            if v.coeffs[i] > 0:
                v = reflect_coweight(rs, rs.simple(i), v)
                w = [rs.simple(i)] + w
                break
        else:
            return w


def weyl_matrix(rs: RootSystem, word: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Matrix on root coordinates whose column j is w(alpha_j)."""
    n = rs.rank
    cols = [apply_word(rs, word, rs.simple(j)) for j in range(n)]
    return tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))
