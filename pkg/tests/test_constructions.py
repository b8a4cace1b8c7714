import json

import pytest

from leakyforce.constructions import (
    construct,
    construct_b1_kn_ct,
    construct_b1_kn_kn,
    construct_b1_kn_pt,
    load_constructed_set,
    load_q5_candidate,
)
from leakyforce.graph import GraphError, hypercube_graph, popcount
from leakyforce.search import min_leaky_forcing_number
from leakyforce.verify import is_leaky_forcing_set

DRAWN_K4_P6 = {(4, 1), (3, 1), (3, 2), (2, 2), (3, 3), (2, 3), (1, 4), (4, 4), (3, 5), (2, 5), (2, 6), (1, 6)}

# Rows per column read off the K_5 x P_8 drawing.
DRAWN_K5_P8_ROWS = {1: {3, 4, 5}, 2: {2, 3, 4}, 3: {2, 3, 4}, 4: {1, 2, 5}, 5: {2, 3, 4}, 6: {1, 4, 5}, 7: {2, 3, 4}, 8: {1, 2, 3}}
DRAWN_K5_P8 = {(r, c) for c, rows in DRAWN_K5_P8_ROWS.items() for r in rows}


def expected_size(family, n, t):
    if family == "kn_pt":
        return (n - 2) * t + (2 if t % 2 else 0)
    return (n - 2) * t + (2 if t % 2 else 4)


def test_k4_p6_matches_drawing():
    cs = construct_b1_kn_pt(4, 6)
    assert cs.coords == DRAWN_K4_P6
    assert cs.case_tag == "t even, n even"


def test_k5_p8_matches_drawing():
    assert construct_b1_kn_pt(5, 8).coords == DRAWN_K5_P8
    assert len(DRAWN_K5_P8) == 24


def test_k4_p7_adds_full_last_column():
    cs = construct_b1_kn_pt(4, 7)
    assert cs.coords == DRAWN_K4_P6 | {(r, 7) for r in range(1, 5)}
    assert len(cs.coords) == 16 == (4 - 2) * 7 + 2


def test_k3_k3_and_kn_kn_complement():
    assert construct_b1_kn_kn(3).coords == {(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)}
    cs = construct_b1_kn_kn(4)
    everything = {(i, j) for i in range(1, 5) for j in range(1, 5)}
    assert everything - cs.coords == {(1, 3), (1, 4), (4, 1), (4, 2)}
    for n in range(3, 9):
        assert len(construct_b1_kn_kn(n).coords) == n * n - 4


def test_cycle_case_sizes():
    assert len(construct_b1_kn_ct(4, 6).coords) == 16
    assert len(construct_b1_kn_ct(3, 5).coords) == 7


@pytest.mark.parametrize("n", range(3, 10))
def test_size_formulas(n):
    for t in range(2, 13):
        assert len(construct_b1_kn_pt(n, t).coords) == expected_size("kn_pt", n, t)
    for t in range(3, 13):
        assert len(construct_b1_kn_ct(n, t).coords) == expected_size("kn_ct", n, t)


@pytest.mark.parametrize("n", range(3, 10))
def test_every_column_has_n_minus_2_except_full_ones(n):
    for t in range(2, 13):
        cs = construct_b1_kn_pt(n, t)
        per_col = [sum(1 for r, c in cs.coords if c == col) for col in range(1, t + 1)]
        if t % 2:
            assert per_col == [n - 2] * (t - 1) + [n]
        else:
            assert per_col == [n - 2] * t


@pytest.mark.parametrize("t", [3, 5, 7, 9, 11])
def test_odd_cycles_reuse_path_sets(t):
    for n in range(3, 8):
        assert construct_b1_kn_ct(n, t).coords == construct_b1_kn_pt(n, t).coords


def test_mod4_overlap_resolved_by_last_column():
    # t = 8 is divisible by 4; the last column keeps rows 1..n-2.
    cs = construct_b1_kn_pt(7, 8)
    assert {r for r, c in cs.coords if c == 8} == set(range(1, 6))


@pytest.mark.parametrize("n", range(4, 8))
def test_constructions_one_leaky_for_n_at_least_4(n):
    for family, ts in (("kn_pt", range(2, 11)), ("kn_ct", range(3, 11))):
        for t in ts:
            cs = construct(family, n, t)
            g, lab = cs.graph()
            assert is_leaky_forcing_set(g, cs.mask(lab), 1).passed, (family, n, t)


# Odd-n pattern needs rows n-2, n-1 colored in odd columns; for n = 3 those
# collapse onto rows the columns leave uncolored.
N3_FAILURES = {("kn_pt", 4), ("kn_pt", 6), ("kn_pt", 8), ("kn_pt", 10), ("kn_ct", 5), ("kn_ct", 7), ("kn_ct", 9)}


def test_n3_outcomes_recorded():
    failing = set()
    for family, ts in (("kn_pt", range(2, 11)), ("kn_ct", range(3, 11))):
        for t in ts:
            cs = construct(family, 3, t)
            g, lab = cs.graph()
            if not is_leaky_forcing_set(g, cs.mask(lab), 1).passed:
                failing.add((family, t))
    assert failing == N3_FAILURES


def test_n3_failures_are_construction_not_resilience():
    for family, t in [("kn_pt", 4), ("kn_ct", 5)]:
        cs = construct(family, 3, t)
        g, _ = cs.graph()
        assert min_leaky_forcing_number(g, 1).value == len(cs.coords)


@pytest.mark.parametrize("n", range(3, 9))
def test_kn_kn_one_leaky(n):
    cs = construct_b1_kn_kn(n)
    g, lab = cs.graph()
    assert is_leaky_forcing_set(g, cs.mask(lab), 1).passed


@pytest.mark.parametrize(
    "family,n,t", [("kn_pt", 3, 3), ("kn_pt", 4, 2), ("kn_pt", 4, 4), ("kn_ct", 3, 4), ("kn_ct", 4, 3), ("kn_kn", 3, None), ("kn_kn", 4, None)]
)
def test_constructions_have_minimum_zero_forcing_size(family, n, t):
    cs = construct(family, n, t)
    g, _ = cs.graph()
    assert min_leaky_forcing_number(g, 0).value == len(cs.coords)


@pytest.mark.parametrize(
    "call",
    [lambda: construct_b1_kn_pt(2, 3), lambda: construct_b1_kn_pt(3, 1), lambda: construct_b1_kn_ct(4, 2), lambda: construct_b1_kn_kn(2)],
)
def test_parameter_errors(call):
    with pytest.raises(GraphError):
        call()


def test_json_round_trip():
    cs = construct_b1_kn_ct(5, 6)
    doc = json.loads(json.dumps(cs.to_json()))
    assert set(doc) == {"family", "n", "t", "case_tag", "coords"}
    back = load_constructed_set(doc)
    assert back.coords == cs.coords and back.family == "kn_ct"


def test_q5_candidate_file():
    g = hypercube_graph(5)
    for variant in ("primary", "alternate"):
        cand = load_q5_candidate(variant)
        assert cand.provenance == "drawing-transcription-unverified"
        assert len(set(cand.labels)) == 18
        assert popcount(cand.mask(g)) == 18
