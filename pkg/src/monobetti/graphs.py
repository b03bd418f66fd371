"""Simple graphs on vertices 1..n, edge ideals, clique complexes and chordality."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .betti import has_linear_resolution
from .complexes import SimplicialComplex
from .errors import ZeroIdealError
from .homology import FieldSpec, QQ
from .ideal import Monomial, MonomialIdeal, PolynomialContext


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside vertices 1..{n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(k, k % n + 1) for k in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(k, k + 1) for k in range(1, n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(1, n + 1), 2))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, int]:
        """Neighbourhood bitmask per vertex (bit ``v`` for vertex ``v``)."""
        adj = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 1..k in increasing vertex order."""
        keep = sorted(vertices)
        new = {v: k for k, v in enumerate(keep, 1)}
        return Graph(len(keep), [(new[u], new[v]) for u, v in self.edges if u in new and v in new])

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on vertices 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def complement(G: Graph) -> Graph:
    return Graph(G.n, [p for p in combinations(G.vertices, 2) if p not in G.edges])


def edge_ideal(G: Graph, ctx: PolynomialContext | None = None) -> MonomialIdeal:
    """I(G) = (x_u x_v : uv an edge)."""
    if ctx is None:
        ctx = PolynomialContext.standard(G.n)
    if ctx.n != G.n:
        raise ValueError(f"graph has {G.n} vertices but the ring has {ctx.n} variables")
    gens = [Monomial.from_support((u - 1, v - 1), ctx.n) for u, v in sorted(G.edges)]
    return MonomialIdeal(ctx, tuple(gens))


def clique_complex(G: Graph) -> SimplicialComplex:
    """Complex of cliques of G on labels 1..n.

    Its minimal non-faces are exactly the non-edges, so its Stanley-Reisner
    ideal is the edge ideal of the complement.
    """
    labels = tuple(G.vertices)
    nonfaces = [(1 << (u - 1)) | (1 << (v - 1))
                for u, v in combinations(labels, 2) if (u, v) not in G.edges]
    return SimplicialComplex(labels, (1 << G.n) - 1, nonfaces=nonfaces)


def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties broken by smallest label)."""
    adj = G.adjacency()
    weight = {v: 0 for v in G.vertices}
    order: list[int] = []
    left = set(G.vertices)
    while left:
        v = max(sorted(left), key=lambda u: weight[u])
        order.append(v)
        left.discard(v)
        for u in left:
            if adj[v] >> u & 1:
                weight[u] += 1
    return order


def is_perfect_elimination_order(G: Graph, peo: list[int]) -> bool:
    adj = G.adjacency()
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [u for u in G.vertices if adj[v] >> u & 1 and pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        for u in later:
            if u != first and not adj[first] >> u & 1:
                return False
    return True


def is_chordal(G: Graph) -> bool:
    """MCS ordering reversed is a perfect elimination order iff G is chordal."""
    return is_perfect_elimination_order(G, mcs_order(G)[::-1])


def induced_cycles(G: Graph, min_len: int = 3) -> list[tuple[int, ...]]:
    """All chordless cycles of length >= ``min_len``.

    Each cycle is listed once, starting at its smallest vertex and heading
    towards the smaller of that vertex's two cycle neighbours.
    """
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    adj = G.adjacency()
    found: list[tuple[int, ...]] = []

    def grow(path: list[int], inner: int):
        # inner: union of neighbourhoods of path[1:-1], i.e. vertices that
        # would create a chord if appended
        start, last = path[0], path[-1]
        for v in G.vertices:
            if v <= start or not adj[last] >> v & 1 or v in path:
                continue
            if inner >> v & 1:
                continue
            if adj[start] >> v & 1:
                if len(path) >= 2 and path[1] < v and len(path) + 1 >= min_len:
                    found.append(tuple(path + [v]))
                continue
            grow(path + [v], inner | (adj[last] if len(path) > 1 else 0))

    for s in G.vertices:
        for u in G.vertices:
            if u > s and adj[s] >> u & 1:
                grow([s, u], 0)
    return sorted(found, key=lambda c: (len(c), c))


def index_via_cycles(G: Graph) -> float | int:
    """Green-Lazarsfeld index of I(complement G) from induced cycles of G.

    ``min |C| - 3`` over induced cycles longer than 3, ``math.inf`` for a
    chordal graph.
    """
    if G.is_complete():
        raise ZeroIdealError("complete graph: the complement has no edges")
    cycles = induced_cycles(G, 4)
    return min(len(c) for c in cycles) - 3 if cycles else math.inf


@dataclass(frozen=True)
class FrobergReport:
    linear: bool
    chordal: bool

    @property
    def agree(self) -> bool:
        return self.linear == self.chordal


def complement_edge_ideal(G: Graph) -> MonomialIdeal:
    if G.is_complete():
        raise ZeroIdealError("complete graph: the complement has no edges")
    return edge_ideal(complement(G))


def froberg_check(G: Graph, field: FieldSpec = QQ) -> FrobergReport:
    """Compare linearity of I(complement G) with chordality of G."""
    from .hochster import hochster_betti

    ideal = complement_edge_ideal(G)
    table = hochster_betti(ideal, field)
    return FrobergReport(linear=has_linear_resolution(table, ideal), chordal=is_chordal(G))


def homological_index(G: Graph, field: FieldSpec = QQ) -> float | int:
    """Index of I(complement G) read off its Betti table."""
    from .betti import green_lazarsfeld_index
    from .hochster import hochster_betti

    table = hochster_betti(complement_edge_ideal(G), field)
    return green_lazarsfeld_index(table, 2)
