from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

import criteria
import oracle
from foursym.labels import LabelError, parse_label
from foursym.rootsys import (
    CoweightVector,
    LieType,
    RootSystemError,
    SimpleType,
    build_root_system,
    eval,
    format_coweight,
    identify_type,
    parse_coweight,
    subsystem_base,
)

ORACLE_TYPES = ["A1", "A3", "A5", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("t", ORACLE_TYPES)
def test_roots_match_closure_oracle(t):
    rs = build_root_system(t)
    assert set(rs.roots) == oracle.roots(t)
    assert rs.highest_root == oracle.highest_root(t)
    assert rs.dim == oracle.lie_algebra_dim(t)


@pytest.mark.parametrize("t,n", sorted(criteria.ROOT_COUNTS.items()))
def test_exceptional_root_counts(t, n):
    assert len(build_root_system(t).roots) == n == len(oracle.roots(t))


def test_e8_marks_match_display():
    assert build_root_system("E8").marks == criteria.e8_display_marks() == (2, 3, 4, 6, 5, 4, 3, 2)


@pytest.mark.parametrize("t,marks", [("E7", (2, 2, 3, 4, 3, 2, 1)), ("E6", (1, 2, 2, 3, 2, 1)), ("F4", (2, 3, 4, 2)), ("G2", (3, 2))])
def test_other_marks(t, marks):
    assert build_root_system(t).marks == marks


@pytest.mark.parametrize("t", ["B3", "C3", "B4", "C4", "D6", "A7"])
def test_classical_counts(t):
    fam, n = t[0], int(t[1:])
    want = {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1)}[fam]
    assert len(build_root_system(t).roots) == want


def test_highest_root_dominates():
    rs = build_root_system("E8")
    assert all(all(h >= c for h, c in zip(rs.highest_root, a)) for a in rs.positive_roots)


def test_bad_type_rejected():
    with pytest.raises(RootSystemError):
        build_root_system("E9")
    with pytest.raises(RootSystemError):
        SimpleType.parse("Q3")


@pytest.mark.parametrize("t", ["E6", "E7", "E8", "F4"])
def test_identify_full_system(t):
    rs = build_root_system(t)
    base = subsystem_base(rs, lambda a: True)
    assert [str(x) for x in identify_type(base, rs.ip)] == [t]


def test_identify_mod4_subsystem():
    rs = build_root_system("E8")
    base = subsystem_base(rs, lambda a: a[2] % 4 == 0)
    assert LieType.make(identify_type(base, rs.ip), 8 - len(base)) == parse_label("A7+A1")


coeffs = st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=8, max_size=8)


@given(coeffs)
def test_coweight_format_parse_roundtrip(c):
    c = tuple(Q(x) for x in c)
    assert parse_coweight(format_coweight(c), 8) == c


@given(coeffs, st.sampled_from(build_root_system("E8").roots))
def test_eval_is_linear(c, a):
    H = CoweightVector(tuple(Q(x) for x in c))
    assert eval(a, H + H) == 2 * eval(a, H)
    assert eval(a, -H) == -eval(a, H)


@pytest.mark.parametrize(
    "label,canon",
    [
        ("so(6)+so(6)+su(2)", "A3+A3+A1"),
        ("s(u(6)+u(2))+su(2)", "A5+A1+A1+R"),
        ("sp(1)", "A1"),
        ("so(5)", "B2"),
        ("so(4)", "A1+A1"),
        ("so(2)", "R"),
        ("e6+su(2)+R", "E6+A1+R"),
        ("4*B1+R", "A1+A1+A1+A1+R"),
        ("A1+R^2", "A1+R+R"),
    ],
)
def test_label_canonicalization(label, canon):
    assert parse_label(label) == parse_label(canon)


@pytest.mark.parametrize("bad", ["so(", "s(u(3)+u(2)+s(u(2)+u(1))+R", "x7", "A"])
def test_malformed_labels_raise(bad):
    with pytest.raises(LabelError):
        parse_label(bad)
