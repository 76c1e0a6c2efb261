import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from gens import digraphs
from redeiberge.digraph import (
    Digraph,
    all_digraphs,
    all_tournaments,
    complement,
    complete_digraph,
    d_descent_set,
    digraph,
    digraph_from_json_dict,
    digraph_from_text,
    digraph_hash,
    digraph_to_json_dict,
    digraph_to_text,
    directed_path_digraph,
    empty_digraph,
    enumerate_cycle_covers,
    enumerate_path_covers,
    enumerate_path_cycle_covers,
    has_only_descending_edges,
    induced,
    is_acyclic,
    is_tournament,
    is_two_cycle_free,
    load_digraph,
    opposite,
    perms_with_all_cycles_in,
    perms_with_cycles_in_either,
    poset_digraph,
    random_acyclic_digraph,
    random_digraph,
    random_tournament,
    star_partition_digraph,
)
from redeiberge.guards import GuardError


# ------------------------------------------------------------- construction

def test_constructor_validates_edges():
    with pytest.raises(ValueError):
        digraph(2, [(0, 1)])
    with pytest.raises(ValueError):
        digraph(2, [(1, 3)])
    with pytest.raises(ValueError):
        Digraph(-1, frozenset())
    D = digraph(3, [(1, 2), (1, 2)])
    assert D.edge_count() == 1
    assert D.has_edge(1, 2) and not D.has_edge(2, 1)
    assert D.out_neighbors(1) == [2]
    assert D.adjacency() == [[0, 1, 0], [0, 0, 0], [0, 0, 0]]


def test_zero_vertex_digraph():
    D = empty_digraph(0)
    assert list(D.vertices()) == []
    assert D.adjacency() == []
    assert complement(D).edges == frozenset()


# --------------------------------------------------------------- operations

@given(digraphs())
def test_complement_is_an_involution_and_partitions_pairs(D):
    Dbar = complement(D)
    assert complement(Dbar) == D
    assert len(D.edges) + len(Dbar.edges) == D.n * D.n
    assert not (D.edges & Dbar.edges)


@given(digraphs())
def test_opposite_is_an_involution(D):
    assert opposite(opposite(D)) == D
    assert len(opposite(D).edges) == len(D.edges)
    # complement and opposite commute
    assert opposite(complement(D)) == complement(opposite(D))


def test_induced_keeps_labels():
    D = digraph(4, [(1, 2), (2, 3), (3, 4), (4, 4)])
    sub = induced(D, {2, 3})
    assert sub.edges == frozenset({(2, 3)})
    assert sub.n == 4
    with pytest.raises(ValueError):
        induced(D, {5})


@given(digraphs(max_n=4))
def test_acyclicity_matches_nilpotent_adjacency(D):
    # A digraph has no directed cycle iff its adjacency matrix is nilpotent
    A = D.adjacency()
    n = D.n
    M = [row[:] for row in A]
    for _ in range(max(n - 1, 0)):
        M = [
            [sum(M[i][k] * A[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    nilpotent = all(M[i][j] == 0 for i in range(n) for j in range(n))
    assert is_acyclic(D) == nilpotent


def test_predicates():
    assert is_tournament(digraph(3, [(1, 2), (2, 3), (3, 1)]))
    assert not is_tournament(digraph(3, [(1, 2), (2, 1), (2, 3), (3, 1)]))
    assert not is_tournament(digraph(2, [(1, 2), (1, 1)]))
    assert is_two_cycle_free(digraph(3, [(1, 2), (2, 3)]))
    assert not is_two_cycle_free(digraph(2, [(1, 2), (2, 1)]))
    assert not is_two_cycle_free(digraph(1, [(1, 1)]))
    assert has_only_descending_edges(directed_path_digraph(4))
    assert not has_only_descending_edges(digraph(2, [(1, 2)]))


def test_descent_set():
    D = digraph(3, [(1, 1), (1, 3), (3, 2)])
    assert d_descent_set(D, (1, 3, 2)) == frozenset({1, 2})
    assert d_descent_set(D, (2, 1, 3)) == frozenset({2})
    assert d_descent_set(D, (2, 3, 1)) == frozenset()


# ----------------------------------------------------------------- generators

def test_generator_shapes():
    assert complete_digraph(3).edge_count() == 6
    assert complete_digraph(3, loops=True).edge_count() == 9
    assert directed_path_digraph(4).edges == frozenset({(2, 1), (3, 2), (4, 3)})
    star = star_partition_digraph([1, 2], [3])
    assert star.edges == frozenset({(3, 1), (3, 2)})
    with pytest.raises(ValueError):
        star_partition_digraph([1], [3])


def test_poset_digraph_transitive_closure():
    D = poset_digraph(3, [(1, 2), (2, 3)])
    # a < b gives the descending edge (b, a)
    assert D.edges == frozenset({(2, 1), (3, 2), (3, 1)})
    assert has_only_descending_edges(D)
    with pytest.raises(ValueError):
        poset_digraph(2, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        poset_digraph(2, [(1, 3)])


def test_random_generators_are_seeded_and_in_family():
    assert random_digraph(5, 0.4, seed=11) == random_digraph(5, 0.4, seed=11)
    assert random_tournament(6, seed=3) == random_tournament(6, seed=3)
    for seed in range(10):
        assert is_tournament(random_tournament(5, seed))
        assert is_acyclic(random_acyclic_digraph(6, 0.5, seed))
    assert random_digraph(4, 0.0, seed=0).edge_count() == 0
    assert random_digraph(4, 1.0, seed=0).edge_count() == 16


def test_exhaustive_generators():
    threes = list(all_digraphs(2))
    assert len(threes) == 16
    assert len({d.edges for d in threes}) == 16
    tours = list(all_tournaments(3))
    assert len(tours) == 8
    assert all(is_tournament(t) for t in tours)


# -------------------------------------------------------------------- covers

@given(digraphs(max_n=4))
def test_covers_match_edge_subset_enumeration(D):
    by_type: dict = {}
    for cover in enumerate_path_cycle_covers(D):
        key = (cover.path_partition(), cover.cycle_partition())
        by_type[key] = by_type.get(key, 0) + 1
    assert by_type == oracles.covers_by_edge_subsets(D)


@given(digraphs(max_n=4))
def test_cover_components_partition_vertices(D):
    for cover in enumerate_path_cycle_covers(D):
        elements = [v for p in cover.paths for v in p] + [
            v for c in cover.cycles for v in c
        ]
        assert sorted(elements) == list(D.vertices())
        for c in cover.cycles:
            assert c[0] == min(c)


def test_cover_filters():
    D = digraph(2, [(1, 2), (2, 1)])
    full = enumerate_path_cycle_covers(D)
    assert len(full) == 4  # {1}{2}, 1->2, 2->1, cycle(12)
    assert len(enumerate_path_covers(D)) == 3
    assert len(enumerate_cycle_covers(D)) == 1
    assert enumerate_cycle_covers(empty_digraph(2)) == []
    only = enumerate_path_cycle_covers(empty_digraph(2))
    assert len(only) == 1 and only[0].path_partition() == (1, 1)
    with pytest.raises(GuardError):
        enumerate_path_cycle_covers(empty_digraph(9))


def test_covers_on_vertex_subset():
    D = digraph(3, [(1, 2), (2, 1), (2, 3)])
    covers = enumerate_path_cycle_covers(D, verts={1, 2})
    types = sorted(
        (c.path_partition(), c.cycle_partition()) for c in covers
    )
    assert types == [((), (2,)), ((1, 1), ()), ((2,), ()), ((2,), ())]


# ------------------------------------------------- permutations tied to edges

def test_perms_with_cycles_in_digraph():
    D = digraph(3, [(1, 2), (2, 1)])
    sigmas = perms_with_all_cycles_in(D)
    images = sorted(tuple(s[v] for v in (1, 2, 3)) for s in sigmas)
    # identity always allowed (fixed points unconstrained); swap 1,2 allowed
    assert images == [(1, 2, 3), (2, 1, 3)]
    # transpositions (13), (23) live in the complement; the 3-cycles mix
    # edges of D and Dbar and are excluded
    both = perms_with_cycles_in_either(D)
    assert len(both) == 4


@given(digraphs(max_n=4))
def test_perm_families_nest(D):
    inner = {tuple(sorted(s.items())) for s in perms_with_all_cycles_in(D)}
    outer = {tuple(sorted(s.items())) for s in perms_with_cycles_in_either(D)}
    assert inner <= outer


# ------------------------------------------------------------- serialization

@given(digraphs())
def test_text_and_json_roundtrip(D):
    assert digraph_from_text(digraph_to_text(D)) == D
    assert digraph_from_json_dict(digraph_to_json_dict(D)) == D


def test_text_format_tolerates_comments():
    D = digraph_from_text("# sample\n3\n1 2\n\n3 3  # loop\n")
    assert D == digraph(3, [(1, 2), (3, 3)])
    with pytest.raises(ValueError):
        digraph_from_text("")
    with pytest.raises(ValueError):
        digraph_from_text("2\n1 2 3\n")


def test_load_digraph_sniffs_format(tmp_path):
    D = digraph(3, [(1, 3), (2, 2)])
    text_path = tmp_path / "d.dg"
    text_path.write_text(digraph_to_text(D), encoding="utf-8")
    json_path = tmp_path / "d.json"
    json_path.write_text(json.dumps(digraph_to_json_dict(D)), encoding="utf-8")
    assert load_digraph(str(text_path)) == D
    assert load_digraph(str(json_path)) == D


def test_hash_is_stable_and_label_sensitive():
    D1 = digraph(3, [(1, 2), (2, 3)])
    D2 = digraph(3, [(2, 3), (1, 2)])
    D3 = digraph(3, [(2, 1), (3, 2)])
    assert digraph_hash(D1) == digraph_hash(D2)
    assert digraph_hash(D1) != digraph_hash(D3)
    assert len(digraph_hash(D1)) == 16
