"""Adjacency graphs of figures and the isomorphism gate."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .figure import Figure

__all__ = ["Graph", "adjacency_graph", "is_isomorphic", "degree_sequence"]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Pairs are stored normalised as ``(low, high)``.
    """

    vertex_count: int
    adjacency: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        pairs = set()
        for a, b in self.adjacency:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"self-loop on vertex {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"pair ({a}, {b}) out of range")
            pair = (a, b) if a < b else (b, a)
            if pair in pairs:
                raise ValueError(f"duplicate pair {pair}")
            pairs.add(pair)
        object.__setattr__(self, "adjacency", frozenset(pairs))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(vertex_count, frozenset(tuple(e) for e in edges))

    @property
    def edge_count(self) -> int:
        return len(self.adjacency)

    def neighbours(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.adjacency:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return nbrs

    def summary(self) -> str:
        degrees = ",".join(str(d) for d in sorted(degree_sequence(self), reverse=True))
        return f"{self.vertex_count} vertices, {self.edge_count} edges, degrees [{degrees}]"


def adjacency_graph(f: Figure) -> Graph:
    """Graph of ``f`` with vertices renumbered by their position in ``f.vertices``."""
    index = {v: i for i, v in enumerate(f.vertices)}
    return Graph.from_edges(len(f.vertices), ((index[a], index[b]) for a, b in f.edges))


def degree_sequence(g: Graph) -> list[int]:
    deg = [0] * g.vertex_count
    for a, b in g.adjacency:
        deg[a] += 1
        deg[b] += 1
    return deg


def _search_order(nbrs: list[set[int]]) -> list[int]:
    # Grow the order through already-placed vertices so that each new vertex
    # is constrained by as many mapped neighbours as possible.
    remaining = set(range(len(nbrs)))
    order: list[int] = []
    placed_links = [0] * len(nbrs)
    while remaining:
        v = max(remaining, key=lambda x: (placed_links[x], len(nbrs[x]), -x))
        order.append(v)
        remaining.discard(v)
        for w in nbrs[v]:
            placed_links[w] += 1
    return order


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """True iff some vertex bijection maps ``a``'s adjacency exactly onto ``b``'s.

    Backtracking over a connectivity-first vertex order; candidates must match
    degree and the sorted degrees of their neighbourhood, and every partial
    map must preserve both edges and non-edges among mapped vertices.
    """
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    deg_a, deg_b = degree_sequence(a), degree_sequence(b)
    if Counter(deg_a) != Counter(deg_b):
        return False

    nbr_a, nbr_b = a.neighbours(), b.neighbours()

    def signature(v: int, nbrs: list[set[int]], deg: list[int]) -> tuple:
        return (deg[v], tuple(sorted(deg[w] for w in nbrs[v])))

    sig_a = [signature(v, nbr_a, deg_a) for v in range(a.vertex_count)]
    sig_b = [signature(v, nbr_b, deg_b) for v in range(b.vertex_count)]
    if Counter(sig_a) != Counter(sig_b):
        return False
    candidates: dict[tuple, list[int]] = {}
    for v, s in enumerate(sig_b):
        candidates.setdefault(s, []).append(v)

    order = _search_order(nbr_a)
    mapping: dict[int, int] = {}
    used = [False] * b.vertex_count

    def consistent(v: int, w: int) -> bool:
        for x, y in mapping.items():
            if (x in nbr_a[v]) != (y in nbr_b[w]):
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for w in candidates[sig_a[v]]:
            if used[w] or not consistent(v, w):
                continue
            mapping[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return extend(0)
