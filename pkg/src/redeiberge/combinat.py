"""Integer partitions, permutations, and symmetric group characters.

Conventions used throughout the package:

- A partition is a tuple of weakly decreasing positive integers; the
  empty tuple is the unique partition of 0.
- A permutation of [n] = {1, ..., n} is a tuple in one-line notation,
  sigma[i-1] is the image of i.  Permutations of an arbitrary finite
  subset of positive integers are dicts mapping each element to its
  image.
- Partitions of equal weight are listed reverse-lexicographically,
  from (n) down to (1,)*n; across weights, smaller weight first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _it_permutations
from math import factorial

from .guards import guard

Partition = tuple
Permutation = tuple


# ---------------------------------------------------------------- partitions

def is_partition(lam) -> bool:
    return (
        isinstance(lam, tuple)
        and all(isinstance(p, int) and p > 0 for p in lam)
        and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
    )


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None) -> list:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    guard("partitions_of", n, 25)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n if max_part is None else min(max_part, n)))


def partition_key(lam: Partition):
    """Sort key: by weight, then reverse-lexicographic within a weight."""
    return (sum(lam), tuple(-p for p in lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def multiplicity_factorial(lam: Partition) -> int:
    """Product of r_i! where r_i is the multiplicity of part i in lam."""
    out, run = 1, 1
    for i in range(1, len(lam)):
        run = run + 1 if lam[i] == lam[i - 1] else 1
        out *= run
    return out


def z_lambda(lam: Partition) -> int:
    """Centralizer order: product of i^{r_i} r_i! over part values i."""
    out = 1
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for i, r in mult.items():
        out *= i**r * factorial(r)
    return out


def sgn_of_type(lam: Partition) -> int:
    """Sign of any permutation with cycle type lam."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff lam >= mu in dominance order (equal weights assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_partition(i: int, n: int) -> Partition:
    """The hook (i, 1^{n-i})."""
    if not 1 <= i <= n:
        raise ValueError("hook arm must satisfy 1 <= i <= n")
    return (i,) + (1,) * (n - i)


# --------------------------------------------------------------- permutations

def permutations_of(n: int):
    """All permutations of [n] in one-line notation, lexicographic."""
    return _it_permutations(range(1, n + 1))


def perm_to_dict(sigma: Permutation) -> dict:
    return {i: v for i, v in enumerate(sigma, start=1)}


def cycles_of(sigma) -> list:
    """Disjoint cycles, each starting at its minimum, ordered by minimum.

    Accepts one-line tuples (domain [n]) or dicts on any finite domain.
    Successive entries follow sigma: cycle (c0, c1, ...) has sigma(ct) = c(t+1).
    """
    mapping = perm_to_dict(sigma) if isinstance(sigma, tuple) else sigma
    seen = set()
    cycles = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = mapping[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = mapping[cur]
        cycles.append(tuple(cyc))
    return cycles


def cycle_type(sigma) -> Partition:
    return tuple(sorted((len(c) for c in cycles_of(sigma)), reverse=True))


def sgn(sigma) -> int:
    return sgn_of_type(cycle_type(sigma))


def psi(sigma) -> int:
    """Number of nontrivial (length >= 2) cycles."""
    return sum(1 for c in cycles_of(sigma) if len(c) >= 2)


def perm_from_cycles(n: int, cycles) -> Permutation:
    """One-line permutation of [n] from disjoint cycles (fixed points omitted)."""
    img = list(range(1, n + 1))
    for cyc in cycles:
        for t, v in enumerate(cyc):
            img[v - 1] = cyc[(t + 1) % len(cyc)]
    return tuple(img)


def is_digraph_cycle(cyc, digraph) -> bool:
    """True iff following the cycle (incl. closing step) walks along edges.

    A fixed point (v,) requires the loop (v, v).
    """
    k = len(cyc)
    return all(digraph.has_edge(cyc[t], cyc[(t + 1) % k]) for t in range(k))


def phi(sigma, digraph) -> int:
    """Sum of (length - 1) over the cycles of sigma that are cycles of the digraph."""
    return sum(
        len(c) - 1 for c in cycles_of(sigma) if is_digraph_cycle(c, digraph)
    )


# ------------------------------------------------- records and Foata's map

def record_positions(word) -> list:
    """Positions r (1-based) with word[r-1] greater than everything before it."""
    out, best = [], 0
    for r, v in enumerate(word, start=1):
        if v > best:
            out.append(r)
            best = v
    return out


def record_partition(word) -> Partition:
    """Gaps between successive record positions (last gap runs to n+1), sorted."""
    recs = record_positions(word)
    recs.append(len(word) + 1)
    gaps = [recs[t + 1] - recs[t] for t in range(len(recs) - 1)]
    return tuple(sorted(gaps, reverse=True))


def foata_linearize(sigma: Permutation) -> Permutation:
    """One-line word listing each cycle as (max, preimage of max, ...),
    cycles concatenated in increasing order of their maxima.

    Bijection on permutations of [n] with record_partition(foata(sigma))
    equal to cycle_type(sigma).
    """
    n = len(sigma)
    inv = [0] * (n + 1)
    for i, v in enumerate(sigma, start=1):
        inv[v] = i
    word = []
    for cyc in sorted(cycles_of(sigma), key=max):
        cur = max(cyc)
        for _ in cyc:
            word.append(cur)
            cur = inv[cur]
    return tuple(word)


# ------------------------------------------------ descent sets, compositions

def descent_composition(descents, n: int) -> tuple:
    """Composition of n whose partial-sum set is the given descent set."""
    cuts = sorted(descents)
    if cuts and not (1 <= cuts[0] and cuts[-1] <= n - 1):
        raise ValueError("descents must lie in [1, n-1]")
    prev, parts = 0, []
    for c in cuts + [n]:
        parts.append(c - prev)
        prev = c
    return tuple(parts)


def composition_descents(alpha) -> frozenset:
    """Partial sums of alpha except the last."""
    out, acc = [], 0
    for part in alpha[:-1]:
        acc += part
        out.append(acc)
    return frozenset(out)


# ----------------------------------------------------------------- characters

def _beta_numbers(lam: Partition, slots: int) -> tuple:
    return tuple(
        (lam[i] if i < len(lam) else 0) + slots - 1 - i for i in range(slots)
    )


def _strip_removals(lam: Partition, k: int):
    """Yield (partition after removing a border strip of size k, strip height)."""
    m = max(len(lam), 1)
    beta = set(_beta_numbers(lam, m))
    for b in sorted(beta):
        c = b - k
        if c < 0 or c in beta:
            continue
        height = sum(1 for e in beta if c < e < b)
        nb = sorted((beta - {b}) | {c}, reverse=True)
        parts = tuple(nb[i] - (m - 1 - i) for i in range(m))
        yield tuple(p for p in parts if p > 0), height


@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi^lam evaluated on the class mu.

    Murnaghan-Nakayama recursion over border strips, using beta numbers.
    """
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must have equal weight")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for smaller, height in _strip_removals(lam, k):
        total += (-1) ** height * character(smaller, rest)
    return total


def character_degree(lam: Partition) -> int:
    return character(lam, (1,) * sum(lam))
