"""k-uniform hypergraphs on vertices ``0..n-1`` and the instance families used by the bounds.

Edges are kept as sorted vertex tuples in lexicographic order, which makes the
edge tuple itself the canonical form (equality, hashing and serialization all
go through it).  Bit masks for the exact solver are derived lazily.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    AttemptsExhausted,
    DuplicateEdge,
    EdgeWrongSize,
    InfeasibleParams,
    InvalidParams,
    VertexOutOfRange,
)

Edge = tuple[int, ...]
DegreeSequence = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParams(f"vertex count must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidParams(f"uniformity must be an integer >= 2, got {self.k!r}")
        canon = []
        for raw in self.edges:
            e = tuple(sorted(raw))
            _check_edge(e, self.n, self.k)
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a} appears more than once")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def incident_masks(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the masks of the edges that contain it."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for e, mask in zip(self.edges, self.edge_masks):
            for v in e:
                out[v].append(mask)
        return tuple(tuple(x) for x in out)

    def degrees(self) -> DegreeSequence:
        return degree_sequence(self)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, m={self.m})"


def _check_edge(e: Edge, n: int, k: int) -> None:
    if len(set(e)) != len(e):
        raise EdgeWrongSize(f"edge {e} repeats a vertex")
    if len(e) != k:
        raise EdgeWrongSize(f"edge {e} has {len(e)} vertices, expected {k}")
    for v in e:
        if not isinstance(v, int) or v < 0 or v >= n:
            raise VertexOutOfRange(f"vertex {v!r} of edge {e} not in 0..{n - 1}")


def validate(h: Hypergraph) -> None:
    """Re-check every structural invariant of ``h``; raises on the first failure."""
    seen = set()
    for e in h.edges:
        _check_edge(tuple(e), h.n, h.k)
        key = frozenset(e)
        if key in seen:
            raise DuplicateEdge(f"edge {tuple(e)} appears more than once")
        seen.add(key)
    if len(h.edges) > comb(h.n, h.k):
        raise InvalidParams("more edges than k-subsets")


def degree_sequence(h: Hypergraph) -> DegreeSequence:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return tuple(deg)


def is_independent(h: Hypergraph, s: Iterable[int]) -> bool:
    """True iff no edge of ``h`` lies entirely inside ``s``."""
    mask = 0
    for v in s:
        if v < 0 or v >= h.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{h.n - 1}")
        mask |= 1 << v
    return all(em & mask != em for em in h.edge_masks)


# --- deterministic families -------------------------------------------------


def complete(n: int, k: int) -> Hypergraph:
    if n < k or k < 2:
        raise InvalidParams(f"complete hypergraph needs n >= k >= 2, got n={n}, k={k}")
    return Hypergraph(n, k, tuple(combinations(range(n), k)))


def empty(n: int, k: int) -> Hypergraph:
    return Hypergraph(n, k, ())


def complete_minus_one_edge(n: int, k: int) -> Hypergraph:
    """All k-subsets except ``{0, ..., k-1}``."""
    if n < k or k < 2:
        raise InvalidParams(f"need n >= k >= 2, got n={n}, k={k}")
    it = combinations(range(n), k)
    next(it)  # lexicographically first subset is (0, ..., k-1)
    return Hypergraph(n, k, tuple(it))


# --- random families --------------------------------------------------------


def unrank_combination(rank: int, n: int, k: int) -> Edge:
    """The ``rank``-th k-subset of ``range(n)`` in lexicographic order."""
    out = []
    x = 0
    for slots in range(k, 0, -1):
        while True:
            c = comb(n - x - 1, slots - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def random_uniform(n: int, k: int, m: int, seed: int | str = 0) -> Hypergraph:
    """A uniformly random set of ``m`` distinct k-subsets."""
    total = comb(n, k)
    if not 0 <= m <= total:
        raise InvalidParams(f"m={m} outside 0..{total} for n={n}, k={k}")
    rng = random.Random(seed)
    ranks = rng.sample(range(total), m)
    return Hypergraph(n, k, tuple(unrank_combination(r, n, k) for r in ranks))


def _defects(groups: Sequence[list[int]], k: int) -> int:
    bad = 0
    keys = Counter()
    for g in groups:
        distinct = len(set(g))
        if distinct < k:
            bad += k - distinct
        else:
            keys[tuple(sorted(g))] += 1
    return bad + sum(c - 1 for c in keys.values())


def random_regular(
    n: int, k: int, d: int, seed: int | str = 0, max_attempts: int = 50
) -> Hypergraph:
    """Random d-regular k-uniform hypergraph.

    Vertex stubs are shuffled into k-groups, then repaired by stub swaps that
    never increase the number of defects (repeated vertices or duplicate
    groups).  Each attempt gets a bounded number of swaps before reshuffling.
    """
    if n < 1 or k < 2 or d < 0:
        raise InvalidParams(f"bad parameters n={n}, k={k}, d={d}")
    if (n * d) % k:
        raise InfeasibleParams(f"n*d = {n * d} is not divisible by k = {k}")
    if d > comb(n - 1, k - 1):
        raise InfeasibleParams(f"degree {d} exceeds C(n-1, k-1) = {comb(n - 1, k - 1)}")
    m = n * d // k
    if m == 0:
        return empty(n, k)
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    swaps = 400 * m + 2000
    for _ in range(max_attempts):
        rng.shuffle(stubs)
        groups = [stubs[i * k:(i + 1) * k] for i in range(m)]
        cost = _defects(groups, k)
        for _ in range(swaps):
            if cost == 0:
                break
            i = _pick_bad_group(groups, k, rng)
            j = rng.randrange(m - 1)
            if j >= i:
                j += 1
            p, q = rng.randrange(k), rng.randrange(k)
            groups[i][p], groups[j][q] = groups[j][q], groups[i][p]
            new_cost = _defects(groups, k)
            if new_cost <= cost:
                cost = new_cost
            else:
                groups[i][p], groups[j][q] = groups[j][q], groups[i][p]
        if cost == 0:
            return Hypergraph(n, k, tuple(tuple(g) for g in groups))
    raise AttemptsExhausted(
        f"no {d}-regular {k}-uniform hypergraph on {n} vertices after {max_attempts} attempts"
    )


def _pick_bad_group(groups: list[list[int]], k: int, rng: random.Random) -> int:
    keys = Counter(tuple(sorted(g)) for g in groups)
    bad = [i for i, g in enumerate(groups) if len(set(g)) < k or keys[tuple(sorted(g))] > 1]
    return rng.choice(bad)


def all_hypergraphs(n: int, k: int):
    """Yield every k-uniform hypergraph on ``n`` labelled vertices (2**C(n,k) of them)."""
    subsets = list(combinations(range(n), k))
    for bits in range(1 << len(subsets)):
        yield Hypergraph(n, k, tuple(s for i, s in enumerate(subsets) if bits >> i & 1))
