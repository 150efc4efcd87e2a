"""Simple undirected graphs on vertices 0..n-1.

Adjacency is stored as one Python int bitmask per vertex, which keeps the
subset enumerations in :mod:`kcritical.factors` cheap for n up to ~40.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphInputError, ParameterError


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask. Construct through
    :func:`build_graph` or the other constructors rather than directly.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise GraphInputError("rows must have length n")
        full = (1 << self.n) - 1
        for v, r in enumerate(self.rows):
            if r >> v & 1:
                raise GraphInputError(f"self-loop at {v}")
            if r & ~full:
                raise GraphInputError(f"neighbour index out of range at {v}")
            for u in _bits(r):
                if not self.rows[u] >> v & 1:
                    raise GraphInputError("adjacency is not symmetric")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        if self.n == 0:
            raise ParameterError("minimum degree of the empty graph")
        return min(self.degrees())

    @property
    def e(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("perm must be a permutation of 0..n-1")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.e})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    return list(_bits(mask))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph of order ``n`` with the given (deduplicated) edges."""
    if n < 0:
        raise GraphInputError("n must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphInputError("n must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; ``g2``'s vertices are shifted up by ``g1.n``."""
    return Graph(g1.n + g2.n, g1.rows + tuple(r << g1.n for r in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    m1 = g1.full_mask
    m2 = g2.full_mask << g1.n
    rows = tuple(r | m2 for r in g1.rows) + tuple((r << g1.n) | m1 for r in g2.rows)
    return Graph(g1.n + g2.n, rows)


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on V minus ``removed``.

    Returns the subgraph and ``kept`` where ``kept[i]`` is the original index
    of new vertex ``i``.
    """
    gone = set()
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} not in graph of order {g.n}")
        gone.add(v)
    kept = [v for v in range(g.n) if v not in gone]
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return build_graph(len(kept), edges), kept


def components_mask(g: Graph, alive: int | None = None) -> list[int]:
    """Connected components of g[alive] as bitmasks, lowest vertex first."""
    rows = g.rows
    left = g.full_mask if alive is None else alive
    out = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            nxt &= left & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        left &= ~comp
    return out


def odd_components(g: Graph, alive: int | None = None) -> int:
    """o(g[alive]): number of components of odd order."""
    return sum(c.bit_count() & 1 for c in components_mask(g, alive))


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[tuple[int, ...], ...]
    component_count: int
    odd_count: int


def component_report(g: Graph) -> ComponentReport:
    comps = tuple(tuple(vertices_of(c)) for c in components_mask(g))
    return ComponentReport(comps, len(comps), sum(len(c) % 2 for c in comps))


def is_connected(g: Graph, alive: int | None = None) -> bool:
    alive = g.full_mask if alive is None else alive
    return len(components_mask(g, alive)) <= 1


# Exhaustive enumeration is used while the number of candidate cuts stays
# below this; beyond it we fall back to networkx's flow-based connectivity.
EXHAUSTIVE_CUT_BUDGET = 200_000


def is_k_connected(g: Graph, k: int, method: str = "auto") -> bool:
    """True iff n > k and deleting any fewer than k vertices leaves g connected.

    ``method`` is ``"exhaustive"``, ``"flow"`` or ``"auto"`` (exhaustive when
    the number of cuts of size < k is small).
    """
    if k < 0:
        raise ParameterError("k must be nonnegative")
    if g.n <= k:
        return False
    if k == 0:
        return True
    n_cuts = sum(comb(g.n, i) for i in range(k))
    if method == "auto":
        method = "exhaustive" if n_cuts <= EXHAUSTIVE_CUT_BUDGET else "flow"
    if method == "exhaustive":
        full = g.full_mask
        for size in range(k):
            for cut in combinations(range(g.n), size):
                if not is_connected(g, full & ~mask_of(cut)):
                    return False
        return True
    if method == "flow":
        return vertex_connectivity(g) >= k
    raise ValueError(f"unknown method {method!r}")


def vertex_connectivity(g: Graph) -> int:
    """kappa(G) via max-flow (networkx). K_n has connectivity n-1."""
    import networkx as nx

    if g.n <= 1:
        return 0
    return nx.node_connectivity(to_networkx(g))


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
