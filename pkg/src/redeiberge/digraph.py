"""Digraphs on [n] with loops, and the enumerations built on them.

A digraph is a vertex count n together with a set of directed edges in
[n] x [n]; loops are allowed, antiparallel pairs are allowed, multiple
edges are not.  Vertices are labelled 1..n everywhere, including in
induced subgraphs, which keep their original labels and simply restrict
the edge set.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from itertools import permutations as _it_permutations

from .combinat import is_digraph_cycle
from .guards import guard


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            if (
                not isinstance(e, tuple)
                or len(e) != 2
                or not all(isinstance(v, int) and 1 <= v <= self.n for v in e)
            ):
                raise ValueError(f"edge {e!r} not inside [1, {self.n}]^2")

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def out_neighbors(self, u: int) -> list:
        return sorted(v for (a, v) in self.edges if a == u)

    def adjacency(self) -> list:
        """0/1 matrix A with A[i-1][j-1] = 1 iff (i, j) is an edge."""
        A = [[0] * self.n for _ in range(self.n)]
        for (u, v) in self.edges:
            A[u - 1][v - 1] = 1
        return A

    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __repr__(self) -> str:
        es = " ".join(f"{u}->{v}" for u, v in self.sorted_edges())
        return f"Digraph(n={self.n}, {es or 'no edges'})"


def digraph(n: int, edges) -> Digraph:
    return Digraph(n, frozenset((int(u), int(v)) for u, v in edges))


# ------------------------------------------------------------------ operations

def complement(D: Digraph) -> Digraph:
    """All pairs of [n] x [n] (loops included) that are not edges of D."""
    return Digraph(
        D.n,
        frozenset(
            (u, v)
            for u in D.vertices()
            for v in D.vertices()
            if (u, v) not in D.edges
        ),
    )


def opposite(D: Digraph) -> Digraph:
    return Digraph(D.n, frozenset((v, u) for (u, v) in D.edges))


def induced(D: Digraph, verts) -> Digraph:
    """Restrict the edge set to verts x verts; labels are kept."""
    vs = set(verts)
    if not vs <= set(D.vertices()):
        raise ValueError("vertex subset out of range")
    return Digraph(
        D.n, frozenset(e for e in D.edges if e[0] in vs and e[1] in vs)
    )


def is_acyclic(D: Digraph) -> bool:
    """No directed cycle; a loop is a cycle."""
    color = [0] * (D.n + 1)
    adj = {u: D.out_neighbors(u) for u in D.vertices()}

    def dfs(u: int) -> bool:
        color[u] = 1
        for v in adj[u]:
            if color[v] == 1 or (color[v] == 0 and dfs(v)):
                return True
        color[u] = 2
        return False

    return not any(color[u] == 0 and dfs(u) for u in D.vertices())


def is_tournament(D: Digraph) -> bool:
    """Loopless, exactly one of (u,v), (v,u) for each unordered pair."""
    if any(u == v for (u, v) in D.edges):
        return False
    for u in D.vertices():
        for v in range(u + 1, D.n + 1):
            if ((u, v) in D.edges) == ((v, u) in D.edges):
                return False
    return True


def is_two_cycle_free(D: Digraph) -> bool:
    """No loops and no antiparallel pair of edges."""
    return all(u != v and (v, u) not in D.edges for (u, v) in D.edges)


def has_only_descending_edges(D: Digraph) -> bool:
    return all(u > v for (u, v) in D.edges)


def d_descent_set(D: Digraph, word) -> frozenset:
    """Positions i with (word[i-1], word[i]) an edge of D."""
    return frozenset(
        i for i in range(1, len(word)) if D.has_edge(word[i - 1], word[i])
    )


# ----------------------------------------------------------------- generators

def empty_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset())


def complete_digraph(n: int, loops: bool = False) -> Digraph:
    return Digraph(
        n,
        frozenset(
            (u, v)
            for u in range(1, n + 1)
            for v in range(1, n + 1)
            if loops or u != v
        ),
    )


def directed_path_digraph(n: int) -> Digraph:
    """Edges (i+1, i): every edge descends, the unique increasing path is 1..n."""
    return Digraph(n, frozenset((i + 1, i) for i in range(1, n)))


def star_partition_digraph(*blocks) -> Digraph:
    """Blocks V_1, ..., V_k partition [n]; edges are all of V_i x V_j for i > j."""
    blocks = [sorted(set(b)) for b in blocks]
    flat = [v for b in blocks for v in b]
    n = len(flat)
    if sorted(flat) != list(range(1, n + 1)):
        raise ValueError("blocks must partition [n]")
    edges = set()
    for i in range(len(blocks)):
        for j in range(i):
            for u in blocks[i]:
                for v in blocks[j]:
                    edges.add((u, v))
    return Digraph(n, frozenset(edges))


def poset_digraph(n: int, relations) -> Digraph:
    """Strict-order digraph of the poset generated by the given relations.

    relations contains pairs (a, b) meaning a < b; the transitive closure
    is taken and must be irreflexive.  Edges point downward: (j, i) for i < j.
    """
    below = [[False] * (n + 1) for _ in range(n + 1)]
    for a, b in relations:
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"relation ({a}, {b}) out of range")
        below[a][b] = True
    for k in range(1, n + 1):
        for a in range(1, n + 1):
            if below[a][k]:
                for b in range(1, n + 1):
                    if below[k][b]:
                        below[a][b] = True
    for a in range(1, n + 1):
        if below[a][a]:
            raise ValueError("relations generate a cycle, not a partial order")
    return Digraph(
        n,
        frozenset(
            (j, i)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if below[i][j]
        ),
    )


def random_digraph(n: int, p: float, seed) -> Digraph:
    """Each of the n^2 possible edges (loops included) kept with probability p."""
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if rng.random() < p
    ]
    return Digraph(n, frozenset(edges))


def random_tournament(n: int, seed) -> Digraph:
    rng = random.Random(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, frozenset(edges))


def random_acyclic_digraph(n: int, p: float, seed) -> Digraph:
    """Random digraph whose edges all descend through a random vertex order."""
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if u != v and rank[u] > rank[v] and rng.random() < p
    ]
    return Digraph(n, frozenset(edges))


def all_digraphs(n: int):
    """All 2^(n^2) digraphs on [n], loops included; lexicographic edge masks."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield Digraph(
            n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        )


def all_tournaments(n: int):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield Digraph(
            n,
            frozenset(
                (u, v) if mask >> i & 1 else (v, u)
                for i, (u, v) in enumerate(pairs)
            ),
        )


# ------------------------------------------------------------------- covers

@dataclass(frozen=True)
class PathCycleCover:
    """Disjoint paths and cycles covering a vertex set.

    Paths are vertex sequences (singletons allowed); cycles are vertex
    sequences rotated to start at their minimum, with the closing edge
    implied.  A loop is the cycle (v,).
    """

    paths: tuple
    cycles: tuple

    def path_partition(self) -> tuple:
        return tuple(sorted((len(p) for p in self.paths), reverse=True))

    def cycle_partition(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))


def _canonical_cycle(cyc: tuple) -> tuple:
    k = cyc.index(min(cyc))
    return cyc[k:] + cyc[:k]


def enumerate_path_cycle_covers(
    D: Digraph, verts=None, allow_paths: bool = True, allow_cycles: bool = True
) -> list:
    """All covers of the vertex set by disjoint paths/cycles along edges of D.

    Every vertex lies in exactly one component; singleton paths need no
    edges, so the all-singletons cover is always present when paths are
    allowed.
    """
    vs = sorted(D.vertices() if verts is None else set(verts))
    guard("covers", len(vs), 8)
    vset = set(vs)
    succ: dict = {}
    has_pred: set = set()
    out = []

    def harvest():
        starts = [v for v in vs if v not in has_pred]
        paths, cycles, on_path = [], [], set()
        for s in starts:
            path = [s]
            while path[-1] in succ:
                path.append(succ[path[-1]])
            on_path.update(path)
            paths.append(tuple(path))
        if not allow_paths and paths:
            return
        seen = set(on_path)
        for v in vs:
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            cur = succ[v]
            while cur != v:
                cyc.append(cur)
                seen.add(cur)
                cur = succ[cur]
            cycles.append(_canonical_cycle(tuple(cyc)))
        if not allow_cycles and cycles:
            return
        out.append(
            PathCycleCover(tuple(sorted(paths)), tuple(sorted(cycles)))
        )

    def rec(idx: int):
        if idx == len(vs):
            harvest()
            return
        v = vs[idx]
        rec(idx + 1)
        for w in D.out_neighbors(v):
            if w in vset and w not in has_pred:
                succ[v] = w
                has_pred.add(w)
                rec(idx + 1)
                del succ[v]
                has_pred.discard(w)

    rec(0)
    return out


def enumerate_path_covers(D: Digraph, verts=None) -> list:
    return enumerate_path_cycle_covers(D, verts, allow_cycles=False)


def enumerate_cycle_covers(D: Digraph, verts=None) -> list:
    return enumerate_path_cycle_covers(D, verts, allow_paths=False)


# ------------------------------------------------- permutations tied to edges

def perms_with_all_cycles_in(D: Digraph, verts=None) -> list:
    """Permutations of the vertex set whose nontrivial cycles are cycles of D.

    Fixed points are unconstrained.  Returned as dicts on the vertex set.
    """
    vs = sorted(D.vertices() if verts is None else set(verts))
    guard("perms", len(vs), 8)
    return [
        sigma
        for sigma in _perm_dicts(vs)
        if _cycles_ok(sigma, lambda c: is_digraph_cycle(c, D))
    ]


def perms_with_cycles_in_either(D: Digraph, verts=None) -> list:
    """Permutations whose nontrivial cycles are each a cycle of D or of its
    complement; fixed points are unconstrained."""
    vs = sorted(D.vertices() if verts is None else set(verts))
    guard("perms", len(vs), 8)
    Dbar = complement(D)
    return [
        sigma
        for sigma in _perm_dicts(vs)
        if _cycles_ok(
            sigma,
            lambda c: is_digraph_cycle(c, D) or is_digraph_cycle(c, Dbar),
        )
    ]


def _perm_dicts(vs: list):
    for images in _it_permutations(vs):
        yield dict(zip(vs, images))


def _cycles_ok(sigma: dict, accept) -> bool:
    seen = set()
    for start in sigma:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = sigma[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = sigma[cur]
        if len(cyc) >= 2 and not accept(tuple(cyc)):
            return False
    return True


# ------------------------------------------------------------- serialization

def digraph_to_text(D: Digraph) -> str:
    lines = [str(D.n)] + [f"{u} {v}" for u, v in D.sorted_edges()]
    return "\n".join(lines) + "\n"


def digraph_from_text(text: str) -> Digraph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            n = int(line)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("missing vertex count line")
    return digraph(n, edges)


def digraph_to_json_dict(D: Digraph) -> dict:
    return {"n": D.n, "edges": [[u, v] for u, v in D.sorted_edges()]}


def digraph_from_json_dict(data: dict) -> Digraph:
    return digraph(int(data["n"]), [tuple(e) for e in data["edges"]])


def load_digraph(path: str) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return digraph_from_json_dict(json.loads(text))
    return digraph_from_text(text)


def digraph_hash(D: Digraph) -> str:
    key = json.dumps(digraph_to_json_dict(D), sort_keys=True)
    return hashlib.sha256(key.encode()).hexdigest()[:16]
