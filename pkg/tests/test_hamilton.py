from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from gens import digraphs
from redeiberge.digraph import (
    complement,
    complete_digraph,
    digraph,
    directed_path_digraph,
    empty_digraph,
    random_acyclic_digraph,
    random_tournament,
)
from redeiberge.guards import DisagreementError, GuardError
from redeiberge.hamilton import (
    ham_cycles,
    ham_cycles_bruteforce,
    ham_detper,
    ham_dp,
    ham_paths_bruteforce,
    ham_report,
    parity_suite,
    wiseman_check,
)


# ------------------------------------------------------------------- paths

@given(digraphs(max_n=6))
def test_path_routes_match_permutation_oracle(D):
    expected = oracles.ham_paths_oracle(D)
    assert ham_detper(D) == expected
    assert ham_dp(D) == expected
    assert ham_paths_bruteforce(D) == expected


def test_path_conventions():
    assert ham_detper(empty_digraph(0)) == 1
    assert ham_dp(empty_digraph(0)) == 1
    assert ham_paths_bruteforce(empty_digraph(0)) == 1
    assert ham_detper(empty_digraph(1)) == 1
    assert ham_detper(digraph(1, [(1, 1)])) == 1  # the loop adds no path
    for n in range(2, 7):
        assert ham_detper(complete_digraph(n)) == factorial(n)
        assert ham_dp(empty_digraph(n)) == 0
    assert ham_dp(directed_path_digraph(5)) == 1


def test_path_guards():
    with pytest.raises(GuardError):
        ham_detper(empty_digraph(19))
    with pytest.raises(GuardError):
        ham_dp(empty_digraph(23))
    with pytest.raises(GuardError):
        ham_paths_bruteforce(empty_digraph(13))


# ------------------------------------------------------------------ cycles

@given(digraphs(max_n=6))
def test_cycle_routes_match_oracle(D):
    expected = oracles.ham_cycles_oracle(D)
    assert ham_cycles_bruteforce(D) == expected
    if D.n >= 1:
        assert ham_cycles(D, "formula_a") == expected
        assert ham_cycles(D, "formula_b") == expected


@given(digraphs(min_n=1, max_n=5))
def test_cycle_formula_a_is_anchor_independent(D):
    values = {ham_cycles(D, "formula_a", i=i) for i in range(1, D.n + 1)}
    assert len(values) == 1


def test_cycle_conventions():
    assert ham_cycles_bruteforce(empty_digraph(0)) == 0
    assert ham_cycles_bruteforce(digraph(1, [])) == 0
    assert ham_cycles_bruteforce(digraph(1, [(1, 1)])) == 1
    assert ham_cycles(digraph(1, [(1, 1)]), "formula_a") == 1
    assert ham_cycles(digraph(1, [(1, 1)]), "formula_b") == 1
    for n in range(2, 7):
        assert ham_cycles(complete_digraph(n), "formula_a") == factorial(n - 1)
    with pytest.raises(ValueError):
        ham_cycles(empty_digraph(0), "formula_a")
    with pytest.raises(ValueError):
        ham_cycles(empty_digraph(3), "nope")
    with pytest.raises(ValueError):
        ham_cycles(empty_digraph(3), "formula_a", i=4)


# ----------------------------------------------------------------- reports

def test_ham_report_structure():
    D = complete_digraph(4)
    report = ham_report(D, cycles=True)
    assert report.ham_paths == 24
    assert report.ham_cycles == 6
    assert set(report.routes) == {"detper", "dp", "bruteforce"}
    assert set(report.cycle_routes) == {"formula_a", "formula_b", "bruteforce"}
    payload = report.to_json_dict()
    assert "timings_ms" not in payload
    assert payload["ham_paths"] == 24
    timed = report.to_json_dict(include_timings=True)
    assert set(timed["timings_ms"]) == {
        "paths:detper",
        "paths:dp",
        "paths:bruteforce",
        "cycles:formula_a",
        "cycles:formula_b",
        "cycles:bruteforce",
    }


def test_ham_report_zero_vertices():
    report = ham_report(empty_digraph(0), cycles=True)
    assert report.ham_paths == 1
    assert report.ham_cycles == 0


@given(digraphs(max_n=5))
def test_ham_report_agrees_with_oracle(D):
    report = ham_report(D, cycles=True)
    assert report.ham_paths == oracles.ham_paths_oracle(D)
    assert report.ham_cycles == oracles.ham_cycles_oracle(D)


# ------------------------------------------------------------------- parity

@given(digraphs(max_n=5))
def test_berge_parity_on_random_digraphs(D):
    out = parity_suite(D)
    assert out["berge_ok"]
    assert out["ham_paths"] == oracles.ham_paths_oracle(D)


def test_redei_oddness_on_tournaments():
    for seed in range(40):
        T = random_tournament(seed % 7 + 1, seed)
        out = parity_suite(T)
        assert out["is_tournament"]
        assert out["redei_ok"]
    out = parity_suite(digraph(2, [(1, 2), (2, 1)]))
    assert out["redei_ok"] is None


# ------------------------------------------------------------------ acyclic

def test_wiseman_on_acyclic_digraphs():
    for seed in range(25):
        D = random_acyclic_digraph(seed % 6 + 1, 0.5, seed)
        out = wiseman_check(D)
        assert out["count"] == ham_dp(complement(D))
    with pytest.raises(ValueError):
        wiseman_check(digraph(1, [(1, 1)]))
    with pytest.raises(GuardError):
        wiseman_check(empty_digraph(9))
