"""Spanning trees and their correspondence with minimal separating families.

A minimal separating family of the maximum size n-1 determines a spanning
tree on {1..n} (edge {i,j} when exactly one member cuts i and j) and every
spanning tree arises from exactly one such family (one bipartition per
edge: the two components left when the edge is removed). Trees are
enumerated through their length-(n-2) codes.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import Bipartition, BipartitionFamily, CapacityError, GroundSet

TREE_ENUM_MAX_N = 9


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Simple graph on vertices {1..n}; edges held as (i, j) pairs with i < j."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs n >= 1, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            if not (isinstance(e, tuple) and len(e) == 2):
                raise ValueError(f"edge {e!r} must be a vertex pair")
            i, j = e
            if not 1 <= i < j <= self.n:
                raise ValueError(f"edge {e} must satisfy 1 <= i < j <= {self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> LabeledGraph:
        """Normalize endpoint order; rejects self-loops and repeated edges."""
        norm = []
        for i, j in pairs:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            norm.append((min(i, j), max(i, j)))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


@dataclass(frozen=True, eq=False)
class LabeledTree(LabeledGraph):
    """A spanning tree on {1..n}."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_spanning_tree(self):
            raise ValueError("edges do not form a spanning tree")


def is_spanning_tree(g: LabeledGraph) -> bool:
    """Connected with exactly n-1 edges (which forces acyclicity)."""
    if len(g.edges) != g.n - 1:
        return False
    adj = g.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def unique_cut_graph(f: BipartitionFamily) -> LabeledGraph:
    """Edge {i, j} appears when exactly one family member cuts i and j."""
    edges = [
        (i, j)
        for i, j in GroundSet(f.n).pairs()
        if sum(1 for b in f if b.cuts(i, j)) == 1
    ]
    return LabeledGraph(f.n, frozenset(edges))


def edge_cut_family(g: LabeledGraph) -> BipartitionFamily:
    """One bipartition per edge: the two components left when it is removed.

    Input must be a spanning tree on n >= 2 vertices; this inverts
    unique_cut_graph on maximum-size minimal separating families.
    """
    if g.n < 2:
        raise ValueError("edge-cut family needs n >= 2")
    if not is_spanning_tree(g):
        raise ValueError("input is not a spanning tree")
    adj = g.adjacency()
    members = []
    full = set(range(1, g.n + 1))
    for u, v in g.sorted_edges():
        comp = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if (min(x, y), max(x, y)) == (u, v) or y in comp:
                    continue
                comp.add(y)
                stack.append(y)
        co = comp if 1 not in comp else full - comp
        members.append(Bipartition.from_coblock(g.n, co))
    return BipartitionFamily(g.n, tuple(members))


def prufer_encode(t: LabeledGraph) -> tuple[int, ...]:
    """Length n-2 code: repeatedly strip the smallest leaf, record its neighbor."""
    if t.n < 2:
        raise ValueError("codes are defined for n >= 2")
    if not is_spanning_tree(t):
        raise ValueError("input is not a spanning tree")
    adj = t.adjacency()
    leaves = [v for v in range(1, t.n + 1) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(t.n - 2):
        x = heapq.heappop(leaves)
        (y,) = adj[x]
        seq.append(y)
        adj[y].remove(x)
        adj[x].clear()
        if len(adj[y]) == 1:
            heapq.heappush(leaves, y)
    return tuple(seq)


def prufer_decode(n: int, seq: Sequence[int]) -> LabeledTree:
    """Rebuild the unique tree with code seq (length must be n-2)."""
    if n < 2:
        raise ValueError("codes are defined for n >= 2")
    code = tuple(seq)
    if len(code) != n - 2:
        raise ValueError(f"code length {len(code)} != n-2 = {n - 2}")
    for s in code:
        if not 1 <= s <= n:
            raise ValueError(f"code entry {s} outside {{1..{n}}}")
    deg = [1] * (n + 1)
    for s in code:
        deg[s] += 1
    leaves = [v for v in range(1, n + 1) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in code:
        x = heapq.heappop(leaves)
        edges.append((min(x, s), max(x, s)))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return LabeledTree(n, frozenset(edges))


def _check_enum_cap(n: int) -> None:
    if n < 2:
        raise ValueError(f"enumeration needs n >= 2, got {n}")
    if n > TREE_ENUM_MAX_N:
        raise CapacityError(f"tree enumeration is capped at n <= {TREE_ENUM_MAX_N} (got n={n})")


def spanning_trees(n: int) -> Iterator[LabeledTree]:
    """All n^(n-2) labeled spanning trees, in lexicographic code order."""
    _check_enum_cap(n)
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(n, seq)


def minimal_max_families(n: int) -> Iterator[BipartitionFamily]:
    """All minimal separating families of the maximum size n-1."""
    _check_enum_cap(n)
    for t in spanning_trees(n):
        yield edge_cut_family(t)
