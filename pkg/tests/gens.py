"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from redeiberge.combinat import partitions_of
from redeiberge.digraph import digraph


@st.composite
def digraphs(draw, min_n=0, max_n=5, loops=True):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if loops or u != v
    ]
    if not pairs:
        return digraph(n, [])
    edges = draw(st.sets(st.sampled_from(pairs)))
    return digraph(n, edges)


@st.composite
def partitions(draw, min_weight=0, max_weight=8):
    n = draw(st.integers(min_value=min_weight, max_value=max_weight))
    return draw(st.sampled_from(partitions_of(n)))


@st.composite
def perms(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return tuple(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def int_matrices(draw, min_n=1, max_n=5, lo=-4, hi=4):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return [
        [draw(st.integers(min_value=lo, max_value=hi)) for _ in range(n)]
        for _ in range(n)
    ]
