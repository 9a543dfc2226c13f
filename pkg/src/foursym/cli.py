"""Command-line interface: root systems, fixed subalgebras, involution classes, gradings, tables, witnesses.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction as Q
from typing import Sequence

from . import __version__
from .rootsys import CoweightVector, RootSystemError, build_root_system, format_coweight, render_lie

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
THREADS_ENV = "FOURSYM_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _json_default(o):
    if isinstance(o, Q):
        return str(o)
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    return str(o)


def _emit(doc: dict, fmt: str, text: Sequence[str]) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=1, default=_json_default, sort_keys=True))
    else:
        print("\n".join(text))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer")


# ---------------------------------------------------------------------------
# Commands


def cmd_rootsys(args) -> int:
    rs = build_root_system(args.type)
    n = rs.rank
    doc = {
        "type": str(rs.type),
        "rank": n,
        "dim": rs.dim,
        "roots": len(rs.roots),
        "positive_roots": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
        "marks": list(rs.marks),
        "coweights": [f"K{j + 1}" for j in range(n)],
        "cartan": [list(r) for r in rs.cartan],
    }
    text = [
        f"type {doc['type']}  rank {n}  dim {rs.dim}",
        f"|roots| = {doc['roots']}  (positive {doc['positive_roots']})",
        f"highest root {tuple(rs.highest_root)}",
        "marks " + " ".join(f"m{j + 1}={m}" for j, m in enumerate(rs.marks)),
        "coweights " + " ".join(doc["coweights"]),
    ]
    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_fix(args) -> int:
    from .torsion import TorsionAut, fixed_subalgebra, order

    rs = build_root_system(args.type)
    tau = TorsionAut.of(rs, args.H)
    fs = fixed_subalgebra(tau)
    doc = {
        "type": str(rs.type),
        "H": format_coweight(tau.H.coeffs),
        "order": order(tau),
        "fixed_type": str(fs.type),
        "fixed_real": render_lie(fs.type),
        "dim": fs.dim,
        "dim_z": fs.center_dim,
    }
    text = [f"{doc['type']}^tau_H, H = {doc['H']}, order {doc['order']}",
            f"fixed {doc['fixed_type']} ({doc['fixed_real']}), dim {fs.dim}, dim z {fs.center_dim}"]
    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_invol(args) -> int:
    from .classify import block_rows, build_block, evaluate

    block = build_block(args.type.upper(), args.node)
    if args.descriptor:
        rows = {(r.component, r.q): r for r in block_rows(block)}
        hits = evaluate(block, args.descriptor)
        out = []
        for ci, oi in hits:
            cd = block.comps[ci]
            cls = cd.classes[oi]
            out.append(rows[(cd.label, format_coweight(cls.q))].to_dict())
        doc = {"block": block.name, "descriptor": args.descriptor, "classes": out}
        text = [f"{block.name} {args.descriptor}: {len(out)} class(es)"]
        text += [f"  k = {r['k_type']}  h∩k = {r['hk_type']}  {r['commutation']}  [{r['tau']}]" for r in out]
        _emit(doc, args.format, text)
        return EXIT_OK if len(out) == 1 else EXIT_FAIL
    rows = [r.to_dict() for r in block_rows(block)]
    doc = {"block": block.name, "h": str(block.ctx.h_type), "dim_z": block.ctx.dim_z, "classes": rows}
    text = [f"{block.name}: h = {doc['h']}, dim z = {doc['dim_z']}, {len(rows)} involution classes"]
    text += [f"  {r['tau']:<28} k = {r['k_type']:<12} h∩k = {r['hk_type']:<16} {r['commutation']}" for r in rows]
    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_grade(args) -> int:
    from .chevalley import build_structure_table
    from .glie import Partition, check_grading, gradation_from_partition, load_satake

    if args.real_form:
        data = load_satake().get(args.real_form)
        if data is None:
            raise UsageError(f"unknown real form {args.real_form!r}; known: {', '.join(load_satake())}")
        system, rank = data, data.restricted_type.rank
    else:
        if not args.type:
            raise UsageError("give a type or --real-form")
        system = build_root_system(args.type)
        rank = system.rank
    blocks = [[int(x) - 1 for x in b.split(",") if x] for b in args.pi]
    if any(not 0 <= i < rank for b in blocks for i in b):
        raise UsageError(f"simple root index out of range 1..{rank}")
    try:
        grad = gradation_from_partition(system, Partition.of(rank, *blocks))
    except RootSystemError as e:
        raise UsageError(str(e))
    doc = {
        "system": args.real_form or str(system.type),
        "Z": format_coweight(grad.Z.coeffs),
        "kind": grad.kind,
        "grade_dims": {str(k): v for k, v in grad.grade_dims.items()},
        "spectrum": list(grad.spectrum),
    }
    text = [f"{doc['system']}: Z = {doc['Z']}, kind {grad.kind}",
            "grades " + " ".join(f"{k}:{v}" for k, v in grad.grade_dims.items())]
    code = EXIT_OK
    if args.check:
        if args.real_form:
            raise UsageError("--check needs a complex type, not a real form")
        rep = check_grading(grad, build_structure_table(system))
        doc["check"] = {"pairs": rep.pairs, "violations": len(rep.violations), "ok": rep.ok}
        text.append(f"bracket closure on {rep.pairs} pairs: {'ok' if rep.ok else 'FAILED'}")
        code = EXIT_OK if rep.ok else EXIT_FAIL
    _emit(doc, args.format, text)
    return code


def _regen_one(tid: int) -> dict:
    from .classify import regenerate_tables

    return regenerate_tables([tid])["tables"][str(tid)]


def cmd_tables(args) -> int:
    from .classify import TABLE_IDS, regenerate_tables

    ids = args.ids or list(TABLE_IDS)
    bad = [t for t in ids if t not in TABLE_IDS]
    if bad:
        raise UsageError(f"unknown table(s) {bad}; tables are {list(TABLE_IDS)}")
    threads = _threads()
    if threads > 1 and len(ids) > 1:
        with ProcessPoolExecutor(threads) as ex:
            doc = {"schema_version": 1, "tables": dict(zip(map(str, ids), ex.map(_regen_one, ids)))}
    else:
        doc = regenerate_tables(ids)
    doc["provenance"] = {
        "engine": f"foursym {__version__}",
        "numbering": "bourbaki",
        "convention": "tau_H = Ad(exp(pi i H)); tau E_beta = exp(pi i theta_beta) E_{L beta}",
    }
    failing = _table_failures(doc)
    if args.diff:
        text = failing or ["no differences"]
        _emit({"diff": failing}, args.format, text)
        return EXIT_FAIL if failing else EXIT_OK
    text = []
    for tid, t in doc["tables"].items():
        text.append(f"Table {tid}")
        for r in t["rows"]:
            if "type" in r:
                text.append(f"  Type {r['type']} {r['g']} K{r['node']}: {r['map']}  {r['commutation']}")
                continue
            c = r["computed"]
            text.append(f"  {r['block']:<7} {r['tau']:<28} k = {c.get('k', '?'):<12} h∩k = {c.get('hk', '?'):<16} {r['status']}")
    _emit(doc, args.format, text)
    return EXIT_OK


def _table_failures(doc: dict) -> list[str]:
    out = []
    for tid, t in doc["tables"].items():
        if tid == "1":
            for r in t["rows"]:
                checks = ("images_are_roots", "preserves_roots", "involution", "preserves_pi_h", "forced_ok", "commutation_ok")
                out += [f"table 1 type {r['type']}: {c} fails" for c in checks if not r[c]]
            continue
        for r in t["rows"]:
            if r["status"] == "unresolved":
                out.append(f"table {tid} {r['block']} {r['tau']}: " + "; ".join(r["notes"]))
        for c in t["coverage"]:
            if not c["ok"]:
                out.append(f"table {tid} {c['block']}: orbit coverage fails (missing {c['missing']}, extra {c['extra']})")
    return out


def cmd_witness(args) -> int:
    from .classify import load_witnesses, verify_witness

    ws = load_witnesses()
    if args.ids:
        known = {w.id for w in ws}
        bad = [i for i in args.ids if i not in known]
        if bad:
            raise UsageError(f"unknown witness id(s) {bad}")
        ws = [w for w in ws if w.id in args.ids]
    results = {w.id: verify_witness(w) for w in ws}
    doc = {"witnesses": [{"id": w.id, "kind": w.kind, "ok": results[w.id]} for w in ws]}
    text = [f"{'ok  ' if results[w.id] else 'FAIL'} {w.id} ({w.kind})" for w in ws]
    _emit(doc, args.format, text)
    return EXIT_OK if all(results.values()) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="foursym", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"foursym {__version__}")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("rootsys", parents=[fmt], help="root system summary")
    s.add_argument("type", help="e.g. E8, F4, A5")
    s.set_defaults(func=cmd_rootsys)

    s = sub.add_parser("fix", parents=[fmt], help="fixed subalgebra of tau_H")
    s.add_argument("type")
    s.add_argument("H", help="coweight such as '1/2*K3 + K6'")
    s.set_defaults(func=cmd_fix)

    s = sub.add_parser("invol", parents=[fmt], help="involution classes for sigma = tau_{K_node/2}")
    s.add_argument("type")
    s.add_argument("node", type=int)
    s.add_argument("--descriptor", help="e.g. 'tauPi1 o K6 o 1/2*K3'")
    s.set_defaults(func=cmd_invol)

    s = sub.add_parser("grade", parents=[fmt], help="gradation of a partition")
    s.add_argument("type", nargs="?")
    s.add_argument("--real-form", help="restricted-root data label, e.g. e8(-24)")
    s.add_argument("--pi", action="append", default=[], required=True,
                   help="comma-separated 1-based simple roots of Pi_1; repeat for Pi_2, ...")
    s.add_argument("--check", action="store_true", help="verify bracket closure on all basis pairs")
    s.set_defaults(func=cmd_grade)

    s = sub.add_parser("tables", parents=[fmt], help="regenerate tables and compare with the golden files")
    s.add_argument("ids", nargs="*", type=int)
    s.add_argument("--diff", action="store_true", help="print only unresolved differences")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("witness", parents=[fmt], help="replay conjugation witnesses")
    s.add_argument("ids", nargs="*")
    s.set_defaults(func=cmd_witness)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    from .classify import ClassifyError

    try:
        return args.func(args)
    except (UsageError, RootSystemError, ClassifyError) as e:
        print(f"foursym: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
