"""Acceptance criteria 1-8 as cached checks shared by the module tests and the acceptance summary.

Each ``criterionN`` returns a ``Result``; the finer helpers return the raw
data the module tests assert on.  Expected values marked printed are read off
the tables; the others come from ``oracle`` and are frozen here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cache

import oracle
from foursym.chevalley import build_structure_table, verify_jacobi
from foursym.classify import (
    all_blocks,
    build_block,
    compare_table,
    descriptor_candidates,
    diff_lines,
    invariants,
    load_witnesses,
    named_candidates,
    table1_report,
    table_passes,
    verify_witness,
    _single,
)
from foursym.config import EXCEPTIONAL, SuiteConfig
from foursym.glie import Partition, check_grading, gradation_from_partition
from foursym.invol import dim_fixed
from foursym.labels import parse_label
from foursym.rootsys import CoweightVector, build_root_system, eval
from foursym.torsion import TorsionAut, fixed_subalgebra

CFG = SuiteConfig.from_env()


@dataclass
class Result:
    ok: bool
    detail: str
    failures: list = field(default_factory=list)


def _result(failures: list, passed: str) -> Result:
    return Result(not failures, passed if not failures else "; ".join(map(str, failures[:4])), failures)


# ---------------------------------------------------------------------------
# 1. root data

ROOT_COUNTS = {"E8": 240, "E7": 126, "E6": 72, "F4": 48, "G2": 12}
# E8 highest root as displayed on the diagram: alpha_2 above alpha_4, row alpha_1 alpha_3 ... alpha_8
E8_DISPLAY_TOP, E8_DISPLAY_ROW = 3, (2, 4, 6, 5, 4, 3, 2)


def e8_display_marks() -> tuple[int, ...]:
    r = E8_DISPLAY_ROW
    return (r[0], E8_DISPLAY_TOP, *r[1:])


@cache
def criterion1() -> Result:
    bad = []
    for t, n in ROOT_COUNTS.items():
        rs = build_root_system(t)
        ref = oracle.roots(t)
        if len(rs.roots) != n or len(ref) != n or set(rs.roots) != ref:
            bad.append(f"{t}: {len(rs.roots)} roots, oracle {len(ref)}, printed {n}")
    if build_root_system("E8").marks != e8_display_marks():
        bad.append(f"E8 marks {build_root_system('E8').marks}")
    return _result(bad, "240/126/72/48/12 roots agree with the closure oracle; E8 marks (2,3,4,6,5,4,3,2)")


# ---------------------------------------------------------------------------
# 2. fixed subalgebras of sigma

# (g, node, printed h, dim z)
SIGMA_PAIRS = [
    ("E7", 4, "so(6)+so(6)+su(2)", 0),
    ("E8", 3, "su(8)+su(2)", 0),
    ("E8", 6, "so(10)+so(6)", 0),
    ("F4", 3, "so(6)+so(3)", 0),
    ("E6", 4, "su(3)+su(3)+su(2)+R", 1),
    ("E7", 5, "su(5)+su(3)+R", 1),
    ("E7", 3, "su(6)+su(2)+R", 1),
    ("E8", 2, "su(8)+R", 1),
    ("E8", 7, "su(2)+e6+R", 1),
    ("F4", 2, "su(3)+su(2)+R", 1),
    ("G2", 1, "su(2)+R", 1),
]


def sigma_fixed(g: str, node: int):
    rs = build_root_system(g)
    return fixed_subalgebra(TorsionAut(CoweightVector.basis(rs.rank, node - 1, Q(1, 2)), rs))


@cache
def criterion2() -> Result:
    bad = []
    for g, node, h, z in SIGMA_PAIRS:
        fs = sigma_fixed(g, node)
        if (fs.type, fs.center_dim) != (parse_label(h), z):
            bad.append(f"({g}, K{node}): {fs.type}, dim z {fs.center_dim}; printed {h}, {z}")
    return _result(bad, f"all {len(SIGMA_PAIRS)} pairs of the dim z = 0 and dim z = 1 lists")


# ---------------------------------------------------------------------------
# 3. Table 1

TABLE1_COMMUTATION = {"I": "commutes", "II": "anticommutes", "III": "anticommutes",
                      "IV": "anticommutes", "V": "anticommutes", "VI": "anticommutes"}
TABLE1_CHECKS = ("images_are_roots", "preserves_roots", "involution", "preserves_pi_h", "forced_ok")


@cache
def table1() -> list[dict]:
    return table1_report()


@cache
def criterion3() -> Result:
    rows = table1()
    bad = [f"type {r['type']}: {c}" for r in rows for c in TABLE1_CHECKS if not r[c]]
    bad += [f"type {r['type']}: {r['commutation']}" for r in rows if r["commutation"] != TABLE1_COMMUTATION[r["type"]]]
    if sorted(r["type"] for r in rows) != sorted(TABLE1_COMMUTATION):
        bad.append("row set differs from types I-VI")
    return _result(bad, "six rows: roots, Delta-preserving involutions, I commutes, II-VI anticommute")


# ---------------------------------------------------------------------------
# 4. dimension milestones


@cache
def milestones() -> dict:
    """name -> (report, expected dim, expected type or None)."""
    e8 = build_block("E8", 3)
    e7 = build_block("E7", 4)
    (t1,) = named_candidates(e8, "tauPi1")
    (t3,) = named_candidates(e7, "tauPi3")
    (phi,) = named_candidates(e7, "phi")
    (t1k6,) = descriptor_candidates(e8, "tauPi1 o K6")
    return {
        "E8 h cap k (tauPi1)": (e8.ctx.h_cap_fixed(t1), 29, None),
        "E7 h cap k (tauPi3)": (e7.ctx.h_cap_fixed(t3), 13, None),
        "E8 g^(tauPi1 o K6)": (dim_fixed(t1k6), 136, "E7+A1"),
        "E7 g^phi": (dim_fixed(phi), 79, "E6+R"),
    }


@cache
def criterion4() -> Result:
    bad = []
    for name, (rep, d, t) in milestones().items():
        if not rep.dim_formula == rep.dim_direct == rep.dim == d:
            bad.append(f"{name}: formula {rep.dim_formula}, eigencount {rep.dim_direct}, expected {d}")
        if t is not None and rep.type != parse_label(t):
            bad.append(f"{name}: type {rep.type}, expected {t}")
    return _result(bad, "29, 13, 136 (E7+A1), 79 (E6+R); both counts agree")


# ---------------------------------------------------------------------------
# 5. table regeneration

REGEN_TABLES = (2, 3, 4, 5, 6, 7, 8)


@cache
def table_report(tid: int) -> dict:
    return compare_table(tid)


def e8_split_k2_count() -> int:
    """|{alpha > 0 : alpha(K_2) = 0 mod 4}| in E8, from the oracle."""
    return oracle.count_fixed("E8", (0, 1, 0, 0, 0, 0, 0, 0), 4)


@cache
def criterion5() -> Result:
    bad = []
    for tid in REGEN_TABLES:
        rep = table_report(tid)
        if not table_passes(rep):
            bad += diff_lines(rep)
    rep6 = table_report(6)
    row = next(r for r in rep6["rows"] if r.block == "e8/K2" and r.tau == "e8(8)")
    n = e8_split_k2_count()
    if not (n == row.computed["hk_count"] == parse_label("so(8)").dim and row.computed["hk"] == str(parse_label("so(8)"))):
        bad.append(f"e8(8)/K2: count {n}, computed {row.computed}")
    flagged = sum(r.status == "flagged" for t in REGEN_TABLES for r in table_report(t)["rows"])
    return _result(bad, f"Tables 2-8 row-for-row; {flagged} rows flagged as printed-label errata")


# ---------------------------------------------------------------------------
# 6. witnesses and separations

SEPARATIONS = [("E8", 2, "K3", "K2+K3"), ("E7", 3, "K4", "K3+K4")]


def su2_membership_separates(g: str, node: int, a: str, b: str) -> bool:
    """All invariants agree except the flags telling which simple ideals of k lie in h."""
    block = build_block(g, node)
    ia, ib = invariants(block, _single(block, a)), invariants(block, _single(block, b))
    return ia[:-1] == ib[:-1] and ia[-1] != ib[-1]


@cache
def criterion6() -> Result:
    bad = [w.id for w in load_witnesses() if not verify_witness(w)]
    bad += [f"{g}/K{n}: {a} vs {b}" for g, n, a, b in SEPARATIONS if not su2_membership_separates(g, n, a, b)]
    return _result(bad, f"{len(load_witnesses())} witnesses verify; both separations found by su_alpha(2) membership")


# ---------------------------------------------------------------------------
# 7. gradations


def mark_nodes(t: str, m: int) -> list[int]:
    rs = build_root_system(t)
    return [i + 1 for i in range(rs.rank) if rs.marks[i] == m]


def node_gradation(t: str, node: int):
    rs = build_root_system(t)
    return gradation_from_partition(rs, Partition.of(rs.rank, [node - 1]))


@cache
def grading_closure(t: str) -> tuple[int, int]:
    """(pairs checked, violations) over the gradations of all mark-3 and mark-4 nodes of t."""
    st = build_structure_table(t)
    nodes = mark_nodes(t, 3) + mark_nodes(t, 4)
    pairs = bad = 0
    if t in ("F4", "G2"):
        for k in nodes:
            rep = check_grading(node_gradation(t, k), st)
            pairs, bad = pairs + rep.pairs, bad + len(rep.violations) + (not rep.symmetric)
        return pairs, bad
    share = -(-CFG.grading_pairs // len(nodes))
    for j, k in enumerate(nodes):
        rep = check_grading(node_gradation(t, k), st, samples=share, seed=CFG.seed + j)
        pairs, bad = pairs + rep.pairs, bad + len(rep.violations) + (not rep.symmetric)
    return pairs, bad


@cache
def criterion7() -> Result:
    bad = []
    for t in EXCEPTIONAL:
        for k in mark_nodes(t, 3):
            spec = node_gradation(t, k).spectrum
            if spec != tuple(range(-3, 4)):
                bad.append(f"{t} K{k}: spectrum {spec}")
        for k in mark_nodes(t, 4):
            if node_gradation(t, k).kind != 4:
                bad.append(f"{t} K{k}: kind {node_gradation(t, k).kind}")
    for t in EXCEPTIONAL:
        pairs, nbad = grading_closure(t)
        if nbad or (t not in ("F4", "G2") and pairs < CFG.grading_pairs):
            bad.append(f"{t}: {nbad} closure violations on {pairs} pairs")
    return _result(bad, "spectra {0,+-1,+-2,+-3}, kind 4 on mark-4 nodes, closure exhaustive on F4/G2, sampled on E6-E8")


# ---------------------------------------------------------------------------
# 8. property suites

JACOBI_EXHAUSTIVE = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2")


@cache
def jacobi(t: str) -> tuple[int, int]:
    st = build_structure_table(t)
    samples = None if t in JACOBI_EXHAUSTIVE else CFG.jacobi_samples
    rep = verify_jacobi(st, samples=samples, seed=CFG.seed)
    return rep.checked, len(rep.violations)


def coweight(n: int, i: int, c: int = 1) -> tuple[int, ...]:
    return tuple(c if j == i - 1 else 0 for j in range(n))


def flip_claims() -> list[tuple[str, int, int]]:
    """(type, i, j) with K_i ~ K_j claimed by the coweight flip for A_n (n <= 5) and D_4."""
    out = [(f"A{n}", i, n + 1 - i) for n in range(1, 6) for i in range(1, n + 1)]
    out += [("D4", i, 4 - i) for i in range(1, 3)]
    return out


@cache
def flip_holds(t: str, i: int, j: int) -> bool:
    n = int(t[1:])
    return oracle.orbit_meets_mod2(t, coweight(n, i), coweight(n, j, -1))


@cache
def count_formula_disagreements() -> list[str]:
    """Involutions where the root-count formula and the direct eigencount differ."""
    bad = []
    for block in all_blocks():
        for ci, oi, cls in block.iter_classes():
            for name, rep in (("k", cls.k), ("h cap k", cls.hk)):
                if rep.dim_formula != rep.dim_direct:
                    bad.append(f"{block.name} class {ci}.{oi} {name}")
    for name, (rep, _, _) in milestones().items():
        if rep.dim_formula != rep.dim_direct:
            bad.append(name)
    return bad


def h4_h5_shapes(t: str) -> list[tuple[str, tuple, tuple, int]]:
    """(shape, h, comparison coweight, modulus) for the h4/h5 fixed-set equalities."""
    rs = build_root_system(t)
    n, m = rs.rank, rs.marks
    ones = [i + 1 for i in range(n) if m[i] == 1]
    out = [("h4", coweight(n, i), coweight(n, i), 2) for i in ones]
    for p in ones:
        for q in ones:
            if p != q:
                h = tuple(a + b for a, b in zip(coweight(n, p, 2), coweight(n, q)))
                out.append(("h5", h, tuple(a + b for a, b in zip(coweight(n, p), coweight(n, q))), 3))
    out += [("h5", coweight(n, i + 1), coweight(n, i + 1), 3) for i in range(n) if m[i] == 2]
    return out


H4_H5_TYPES = ("A2", "A3", "A5", "D4", "D5", "E6", "E7", "E8", "F4", "G2")


def h4_h5_failures() -> list[str]:
    bad = []
    for t in H4_H5_TYPES:
        rs = build_root_system(t)
        for shape, h, x, mod in h4_h5_shapes(t):
            lhs = {a for a in rs.roots if eval(a, h) % 4 == 0}
            rhs = {a for a in rs.roots if eval(a, x) % mod == 0}
            if lhs != rhs:
                bad.append(f"{t} {shape} {h}")
    return bad


@cache
def criterion8() -> Result:
    bad = []
    for t in ("E6", "E7", "E8") + JACOBI_EXHAUSTIVE:
        checked, nbad = jacobi(t)
        if nbad:
            bad.append(f"Jacobi {t}: {nbad} of {checked}")
    bad += [f"coweight flip {t}: K{i} ~ K{j} refuted by W" for t, i, j in flip_claims() if not flip_holds(t, i, j)]
    bad += [f"root-count formula vs eigencount: {s}" for s in count_formula_disagreements()]
    bad += [f"h4/h5 fixed sets: {s}" for s in h4_h5_failures()]
    return _result(bad, "Jacobi, coweight flips by full W, formula = eigencount, h4/h5 fixed-set equalities")


CRITERIA = {1: criterion1, 2: criterion2, 3: criterion3, 4: criterion4,
            5: criterion5, 6: criterion6, 7: criterion7, 8: criterion8}
