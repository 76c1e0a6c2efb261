from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from gens import digraphs
from redeiberge.digraph import (
    digraph,
    directed_path_digraph,
    empty_digraph,
    random_acyclic_digraph,
)
from redeiberge.guards import GuardError
from redeiberge.hamilton import ham_dp
from redeiberge.walks import (
    denominator_series,
    gamma,
    verify_walk_identity,
    walk_series,
    xi,
)


# ------------------------------------------------------------------ xi

@given(digraphs(max_n=5))
def test_xi_counts_paths_by_vertex_set(D):
    n = D.n
    for k in range(0, n + 2):
        lib = {
            frozenset(v + 1 for v in range(n) if mask >> v & 1): c
            for mask, c in xi(D, k).value.terms.items()
        }
        assert lib == oracles.path_sets_oracle(D, k), k
    assert not xi(D, -1).value.terms


def test_xi_examples():
    D = digraph(3, [(1, 1), (1, 3), (3, 2)])
    # loops never extend a path; xi_2 = x1 x3 + x3 x2
    assert xi(D, 2).value.terms == {0b101: 1, 0b110: 1}
    assert xi(D, 3).value.terms == {0b111: 1}
    assert xi(D, 0).value.terms == {0: 1}
    P = directed_path_digraph(4)
    assert xi(P, 4).value.coeff({1, 2, 3, 4}) == 1


@given(digraphs(min_n=1, max_n=5))
def test_xi_full_support_counts_hamiltonian_paths(D):
    assert xi(D, D.n).value.coeff(range(1, D.n + 1)) == ham_dp(D)


# ------------------------------------------------------------------- gamma

@given(digraphs(min_n=1, max_n=5), st.integers(min_value=0, max_value=5))
def test_gamma_counts_weighted_walks(D, k):
    pt = [((v * 7) % 5) - 2 for v in range(1, D.n + 1)]
    assert gamma(D, k, pt) == oracles.walks_oracle(D, pt, k + 1)


def test_gamma_validation():
    D = empty_digraph(2)
    with pytest.raises(ValueError):
        gamma(D, -1, [1, 1])
    with pytest.raises(ValueError):
        gamma(D, 1, [1])
    with pytest.raises(GuardError):
        gamma(D, 13, [1, 1])


# ------------------------------------------------------------- walk series

@given(digraphs(min_n=1, max_n=4), st.integers(min_value=0, max_value=3))
def test_walk_series_matches_enumeration(D, shift):
    K = 2 * D.n + 1
    pt = [((v + shift) % 3) - 1 for v in range(1, D.n + 1)]
    series = walk_series(D, pt, K)
    assert series[0] == 1
    for k in range(1, K + 1):
        assert series[k] == oracles.walks_oracle(D, pt, k), k


def test_acyclic_denominator_is_one():
    for seed in range(12):
        D = random_acyclic_digraph(seed % 5 + 1, 0.6, seed)
        pt = [1] * D.n
        assert denominator_series(D, pt, 2 * D.n + 1) == [1] + [0] * (2 * D.n + 1)
    loop = digraph(1, [(1, 1)])
    assert denominator_series(loop, [1], 3) == [1, -1, 0, 0]


# ------------------------------------------------------------- verification

@given(digraphs(max_n=5))
def test_walk_identity_report_passes(D):
    from redeiberge.digraph import is_acyclic

    report = verify_walk_identity(D, trials=2, seed=11)
    assert report.ok, report.failures
    assert report.K == 2 * D.n + 1
    assert report.acyclic == is_acyclic(D)


def test_walk_identity_guards():
    with pytest.raises(GuardError):
        verify_walk_identity(empty_digraph(9))
    with pytest.raises(GuardError):
        verify_walk_identity(empty_digraph(4), K=30)
