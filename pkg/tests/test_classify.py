from __future__ import annotations

import copy
import json
import re

import pytest

import criteria
import oracle
from foursym.classify import (
    ClassifyError,
    Witness,
    build_block,
    classify,
    evaluate,
    load_golden,
    load_witnesses,
    separate,
    table1_map,
    table1_rows,
    verify_witness,
)
from foursym.labels import parse_label
from foursym.rootsys import build_root_system

# ---------------------------------------------------------------------------
# Table 1


@pytest.mark.parametrize("row", criteria.table1(), ids=lambda r: r["type"])
def test_table1_row(row):
    for c in criteria.TABLE1_CHECKS:
        assert row[c], c
    assert row["commutation"] == criteria.TABLE1_COMMUTATION[row["type"]]


def test_table1_II_III_labels_swapped():
    """The row printed as II fixes a 5-dimensional torus, the row printed as III a 4-dimensional one."""
    tplus = {r.type: table1_map(r).plus_dim() for r in table1_rows()}
    assert (tplus["II"], tplus["III"]) == (5, 4)
    errata = load_golden(1)["errata"]
    assert any(e["row"] == "II/III" and e.get("evidence") == "t_plus" for e in errata)


def test_table1_type_IV_is_tauPi1_root_map():
    from foursym.classify import named_map

    (row,) = [r for r in table1_rows() if r.type == "IV"]
    assert table1_map(row) == named_map("tauPi1")[1]


# ---------------------------------------------------------------------------
# Tables 2-8


@pytest.mark.parametrize("tid", criteria.REGEN_TABLES)
def test_table_regenerates(tid):
    rep = criteria.table_report(tid)
    assert [r for r in rep["rows"] if r.status == "unresolved"] == []
    assert all(c["ok"] for c in rep["coverage"]), rep["coverage"]


@pytest.mark.parametrize("tid", criteria.REGEN_TABLES)
def test_flagged_rows_are_exactly_the_errata(tid):
    doc = load_golden(tid)
    with_errata = {(f"{b['g'].lower()}/K{b['node']}", r.get("tau", r.get("real_form"))) for b in doc["blocks"] for r in b["rows"] if r.get("errata")}
    flagged = {(r.block, r.tau) for r in criteria.table_report(tid)["rows"] if r.status == "flagged"}
    assert flagged == with_errata


def _cross_refs():
    for tid in criteria.REGEN_TABLES:
        for b in load_golden(tid)["blocks"]:
            for r in b["rows"]:
                for e in r.get("errata", []):
                    if e.get("evidence") == "cross_table":
                        yield tid, b, r, e


@pytest.mark.parametrize("tid,b,r,e", list(_cross_refs()), ids=lambda x: x.get("tau", "") if isinstance(x, dict) else str(x))
def test_cross_table_references(tid, b, r, e):
    """A cross-table erratum cites a row of another table that prints the expected type."""
    ref = e["ref"]
    other = load_golden(ref["table"])
    (rb,) = [x for x in other["blocks"] if (x["g"], x["node"]) == (b["g"], b["node"]) and any(y["tau"] == ref["tau"] for y in x["rows"])]
    (rr,) = [y for y in rb["rows"] if y["tau"] == ref["tau"]]
    assert parse_label(rr[e["field"]]) == parse_label(e["expected"])
    assert parse_label(r[e["field"]]) != parse_label(e["expected"])


_INNER = re.compile(r"^K\d(?:\+K\d)*$")


def _inner_dimension_errata():
    for tid in criteria.REGEN_TABLES:
        for b in load_golden(tid)["blocks"]:
            for r in b["rows"]:
                for e in r.get("errata", []):
                    if e.get("evidence") == "dimension" and e["field"] == "hk" and _INNER.match(r.get("tau", "")):
                        yield tid, b["g"], b["node"], r["tau"], r["hk"], e["expected"]


def _oracle_hk_dim(g: str, node: int, tau: str) -> int:
    """dim(h cap g^tau) for tau = tau_x: rank + |{alpha in Delta(h) : alpha(x) even}|."""
    n = build_root_system(g).rank
    x = [0] * n
    for k in re.findall(r"K(\d)", tau):
        x[int(k) - 1] += 1
    return n + sum(1 for a in oracle.roots(g) if a[node - 1] % 4 == 0 and sum(p * q for p, q in zip(a, x)) % 2 == 0)


@pytest.mark.parametrize("tid,g,node,tau,printed,expected", list(_inner_dimension_errata()))
def test_dimension_errata_against_oracle(tid, g, node, tau, printed, expected):
    d = _oracle_hk_dim(g, node, tau)
    assert parse_label(expected).dim == d
    assert parse_label(printed).dim != d


def test_e7_k3k4_not_d3d3a1():
    """The printed D3+D3+A1 for E7/K4, tau = K3+K4 would need dimension 33; the root count gives 25."""
    assert _oracle_hk_dim("E7", 4, "K3+K4") == 25 == _oracle_hk_dim("E7", 4, "K1")
    assert parse_label("D3+D3+A1").dim == 33


def test_descriptor_reaches_one_class():
    block = build_block("E8", 3)
    assert len(evaluate(block, "tauPi1 o K6")) == 1
    with pytest.raises(ValueError):
        evaluate(block, "nosuchmap")


def test_classify_entry_point():
    rows = classify("E8", "1/2*K3")
    assert len(rows) == sum(len(cd.classes) for cd in build_block("E8", 3).comps)
    assert {r.commutation for r in rows} == {"commutes", "anticommutes"}


def test_golden_schema_shape():
    for tid in criteria.REGEN_TABLES:
        doc = load_golden(tid)
        assert doc["table"] == tid and doc["blocks"]
        for b in doc["blocks"]:
            assert b["rows"] and "covers" in b


# ---------------------------------------------------------------------------
# witnesses


@pytest.mark.parametrize("w", load_witnesses(), ids=lambda w: w.id)
def test_witness(w):
    assert verify_witness(w)


def _mutated(wid: str, edit) -> Witness:
    (w,) = [x for x in load_witnesses() if x.id == wid]
    w = copy.deepcopy(w)
    edit(w)
    return w


def test_negative_witnesses():
    bad = [
        _mutated("phi-coweights", lambda w: w.claim["coweights"].update({"K4": "K4+4*K7"})),
        _mutated("tauPi2-t8", lambda w: w.claim.update({"twist": "0*K1"})),
        _mutated("mu1-inverse", lambda w: w.claim["coweights"].update({"K2+K5": "K1-K2+2*K4"})),
        _mutated("e6-t2-k2", lambda w: w.claim.update({"equals": "K2+K4"})),
        _mutated("sep-e8k2", lambda w: w.payload.update({"b": "K3"})),
    ]
    for w in bad:
        assert not verify_witness(w), w.id


def test_malformed_witness_kind():
    with pytest.raises(ClassifyError):
        verify_witness(Witness("x", "bogus", {"g": "E8"}))


@pytest.mark.parametrize("g,node,a,b", criteria.SEPARATIONS)
def test_separation_by_su2_membership(g, node, a, b):
    assert separate(build_block(g, node), a, b) == "distinct"
    assert criteria.su2_membership_separates(g, node, a, b)


def test_witness_file_ids_unique():
    ids = [w.id for w in load_witnesses()]
    assert len(ids) == len(set(ids))
