import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from sdbialg.knot import PDError, count_colorings, diagram, parse_pd
from sdbialg.quandle import CayleyTable, all_quandles, dihedral_quandle, trivial_quandle

DATA = Path(__file__).parent / "data"
FIXTURES = ["trefoil", "trefoil_mirror", "figure8", "kink", "unknot", "hopf"]


def load(name):
    return diagram((DATA / f"{name}.json").read_text())


def test_parse_examples():
    T = parse_pd('{"pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]}')
    assert len(T.crossings) == 3 and T.edges == 6
    empty = diagram('{"pd": []}')
    assert empty.components == 1 and empty.edges == 0
    kink = diagram('{"pd":[[1,2,2,1]]}')
    assert kink.components == 1


@pytest.mark.parametrize(
    "text",
    [
        "{",
        '{"crossings": []}',
        '{"pd": [[1, 2, 3]]}',
        '{"pd": [[1, 2, 2, 2]]}',
        '{"pd": [[1, 2, 3, 4]]}',
        '{"pd": [[1, 3, 3, 1]]}',
        '{"pd": [[0, 1, 1, 0]]}',
        '{"pd": [[1.0, 2, 2, 1]]}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(PDError):
        parse_pd(text)


def test_components():
    assert [load(n).components for n in FIXTURES] == [1, 1, 1, 1, 1, 2]


def test_rejects_non_quandle():
    with pytest.raises(ValueError):
        count_colorings(load("trefoil"), CayleyTable([[0, 1], [0, 1]]))


def test_counts():
    trefoil, fig8 = load("trefoil"), load("figure8")
    assert count_colorings(trefoil, dihedral_quandle(3)) == 9
    assert count_colorings(fig8, dihedral_quandle(3)) == 3
    assert count_colorings(fig8, dihedral_quandle(5)) == 25
    for n in range(1, 6):
        assert count_colorings(trefoil, trivial_quandle(n)) == n
    assert count_colorings(load("hopf"), dihedral_quandle(3)) == 3


def test_dihedral_series_against_brute_force():
    trefoil, fig8 = load("trefoil"), load("figure8")
    got = [count_colorings(trefoil, dihedral_quandle(n)) for n in range(3, 8)]
    assert got == [oracles.colorings(trefoil.crossings, dihedral_quandle(n).table) for n in range(3, 8)]
    assert got == [9, 4, 5, 18, 7]
    got = [count_colorings(fig8, dihedral_quandle(n)) for n in range(3, 7)]
    assert got == [oracles.colorings(fig8.crossings, dihedral_quandle(n).table) for n in range(3, 7)]
    assert got == [3, 4, 25, 6]


def test_mirror_trefoil_agrees():
    a, b = load("trefoil"), load("trefoil_mirror")
    for n in range(3, 9):
        Q = dihedral_quandle(n)
        assert count_colorings(a, Q) == count_colorings(b, Q)


@pytest.mark.parametrize("name", FIXTURES)
def test_trivial_quandles_count_components(name):
    D = load(name)
    for n in range(1, 5):
        Q = trivial_quandle(n)
        assert count_colorings(D, Q) == n ** D.components == oracles.colorings(D.crossings, Q.table)


QUANDLES = all_quandles(3) + [dihedral_quandle(4), trivial_quandle(2), dihedral_quandle(5)]


@settings(max_examples=100, deadline=None)
@given(name=st.sampled_from(FIXTURES[:4] + FIXTURES[5:]), q=st.sampled_from(QUANDLES))
def test_counts_match_brute_force(name, q):
    D = load(name)
    if q.n ** D.edges > 400_000:
        q = dihedral_quandle(3)
    n = count_colorings(D, q)
    assert n == oracles.colorings(D.crossings, q.table)
    assert n >= q.n
