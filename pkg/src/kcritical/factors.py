"""[1,b]-odd factors, (1,f)-odd factors and k-criticality.

Two independent routes decide k-criticality:

* :func:`is_k_critical` evaluates the deficiency criterion
  ``o(G-S) <= b|S| - bk`` over every ``S`` with ``|S| >= k``;
* :func:`is_k_critical_direct` deletes every k-set ``X`` and runs the
  exhaustive factor search on ``G - X``.

They must agree on every graph; the test suite checks this exhaustively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .errors import CapacityError, GraphInputError, ParameterError, PreconditionError
from .graph import Graph, components_mask, mask_of, odd_components
from .graph6 import graph6_str, parse_graph6

FACTOR_CAP = 12
DEFICIENCY_CAP = 20


@dataclass(frozen=True)
class FactorParams:
    b: int
    k: int

    def __post_init__(self):
        if self.b < 1 or self.b % 2 == 0:
            raise ParameterError(f"b must be a positive odd integer, got {self.b}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class OddFactor:
    """Spanning subgraph given by its edge list (host vertex labels)."""

    edges: tuple[tuple[int, int], ...]

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_valid(self, g: Graph, upper: int | Sequence[int]) -> bool:
        f = _upper_bounds(g.n, upper)
        if len(set(self.edges)) != len(self.edges):
            return False
        if not all(g.has_edge(u, v) for u, v in self.edges):
            return False
        return all(d % 2 == 1 and d <= f[v] for v, d in enumerate(self.degrees(g.n)))


@dataclass(frozen=True)
class DeficiencyCertificate:
    """Witness ``S`` with ``t = o(G-S)`` and its deficiency.

    For the uniform case the deficiency is ``t - b*s + b*k``; for a general
    ``f`` (``b`` is None) it is ``t - sum_S f + (k largest f on S)``.
    """

    graph6: str
    b: int | None
    k: int
    witness: tuple[int, ...]
    odd_components: int
    deficiency: int

    @property
    def s(self) -> int:
        return len(self.witness)

    @property
    def t(self) -> int:
        return self.odd_components

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "b": self.b,
            "k": self.k,
            "deficiency": self.deficiency,
            "witness": list(self.witness),
            "oddComponents": self.odd_components,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Mapping | str) -> DeficiencyCertificate:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["graph6"], obj["b"], obj["k"], tuple(obj["witness"]),
                   obj["oddComponents"], obj["deficiency"])

    def recheck(self, g: Graph | None = None) -> bool:
        """Recompute ``o(G-S)`` and the deficiency from the host graph."""
        g = parse_graph6(self.graph6) if g is None else g
        t = odd_components(g, g.full_mask & ~mask_of(self.witness))
        if self.b is None:
            return t == self.odd_components
        return t == self.odd_components and self.deficiency == t - self.b * self.s + self.b * self.k


def _upper_bounds(n: int, upper: int | Sequence[int]) -> tuple[int, ...]:
    if isinstance(upper, int):
        f = (upper,) * n
    else:
        f = tuple(int(x) for x in upper)
        if len(f) != n:
            raise ParameterError(f"f has {len(f)} values for a graph of order {n}")
    for x in f:
        if x < 1 or x % 2 == 0:
            raise ParameterError(f"upper degree bounds must be positive odd integers, got {x}")
    return f


def _check_cap(n: int, cap: int, what: str):
    if n > cap:
        raise CapacityError(f"{what}: n={n} exceeds cap {cap}")


def has_odd_factor(g: Graph, b: int | Sequence[int], cap: int = FACTOR_CAP) -> OddFactor | None:
    """Exhaustive search for a (1,f)-odd factor; ``b`` may be a per-vertex list.

    Returns one factor or None. Exact: backtracking over vertices in index
    order, choosing an odd-completing set of forward edges at each vertex.
    """
    f = _upper_bounds(g.n, b)
    _check_cap(g.n, cap, "has_odd_factor")
    found = _search(g.rows, f)
    return None if found is None else OddFactor(found)


@lru_cache(maxsize=1 << 16)
def _search(rows: tuple[int, ...], f: tuple[int, ...]):
    n = len(rows)
    if n == 0:
        return ()
    # every component of a graph with an all-odd spanning subgraph has even order
    if any(c.bit_count() & 1 for c in components_mask(_RowsView(rows))):
        return None
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def feasible_after(v: int) -> bool:
        later = ((1 << n) - 1) >> (v + 1) << (v + 1)
        open_mask = 0
        for w in range(v + 1, n):
            if deg[w] < f[w]:
                open_mask |= 1 << w
        for w in range(v + 1, n):
            if deg[w] % 2 == 0 and not (rows[w] & open_mask & later):
                return False
        return True

    def step(v: int) -> bool:
        if v == n:
            return True
        cur = deg[v]
        room = f[v] - cur
        cands = [u for u in range(v + 1, n) if rows[v] >> u & 1 and deg[u] < f[u]]
        first = 0 if cur % 2 == 1 else 1
        for size in range(first, min(room, len(cands)) + 1, 2):
            for pick in combinations(cands, size):
                for u in pick:
                    deg[u] += 1
                    chosen.append((v, u))
                deg[v] += size
                if feasible_after(v) and step(v + 1):
                    return True
                deg[v] -= size
                for u in pick:
                    deg[u] -= 1
                    chosen.pop()
        return False

    return tuple(chosen) if step(0) else None


class _RowsView:
    """Just enough of :class:`Graph` for :func:`components_mask`."""

    __slots__ = ("rows", "full_mask")

    def __init__(self, rows):
        self.rows = rows
        self.full_mask = (1 << len(rows)) - 1


def _induced_rows(rows: tuple[int, ...], kept: Sequence[int]) -> tuple[int, ...]:
    out = []
    for v in kept:
        r = rows[v]
        nr = 0
        for i, u in enumerate(kept):
            if r >> u & 1:
                nr |= 1 << i
        out.append(nr)
    return tuple(out)


def _validate(g: Graph, params: FactorParams, cap: int, what: str):
    if g.n < params.k + 2:
        raise ParameterError(f"{what} needs n >= k+2 (n={g.n}, k={params.k})")
    _check_cap(g.n, cap, what)


def deficiency(g: Graph, params: FactorParams, cap: int = DEFICIENCY_CAP) -> tuple[int, DeficiencyCertificate]:
    """Max of ``o(G-S) - b|S| + bk`` over ``|S| >= k`` with a witness.

    Ties go to the smallest ``|S|``, then the lexicographically smallest ``S``.
    """
    _validate(g, params, cap, "deficiency")
    b, k, n = params.b, params.k, g.n
    full = g.full_mask
    best = None
    best_s: tuple[int, ...] = ()
    best_t = 0
    for size in range(k, n + 1):
        # o(G-S) <= n - |S| bounds every deficiency at this size
        if best is not None and (n - size) - b * size + b * k <= best:
            break
        for S in combinations(range(n), size):
            t = odd_components(g, full & ~mask_of(S))
            d = t - b * size + b * k
            if best is None or d > best:
                best, best_s, best_t = d, S, t
    cert = DeficiencyCertificate(graph6_str(g), b, k, best_s, best_t, best)
    return best, cert


def is_k_critical(g: Graph, params: FactorParams, cap: int = DEFICIENCY_CAP) -> tuple[bool, DeficiencyCertificate | None]:
    """Deficiency criterion; the certificate is returned only on failure."""
    d, cert = deficiency(g, params, cap)
    return (True, None) if d <= 0 else (False, cert)


def is_k_critical_direct(g: Graph, params: FactorParams, cap: int = FACTOR_CAP) -> tuple[bool, tuple[int, ...] | None]:
    """Definition: every ``G - X`` with ``|X| = k`` has a [1,b]-odd factor."""
    if g.n < params.k + 2:
        raise ParameterError(f"is_k_critical_direct needs n >= k+2 (n={g.n}, k={params.k})")
    _check_cap(g.n - params.k, cap, "is_k_critical_direct")
    rest = g.n - params.k
    f = (params.b,) * rest
    for X in combinations(range(g.n), params.k):
        gone = set(X)
        kept = [v for v in range(g.n) if v not in gone]
        if _search(_induced_rows(g.rows, kept), f) is None:
            return False, X
    return True, None


def is_k_critical_general(g: Graph, f: Sequence[int] | Mapping[int, int], k: int,
                          cap: int = DEFICIENCY_CAP) -> tuple[bool, DeficiencyCertificate | None]:
    """Criterion for k-criticality with respect to (1,f)-odd factors.

    Checks ``o(G-S) <= sum_S f - max_{X subset S, |X|=k} sum_X f`` for every
    ``|S| >= k``; the inner max is the sum of the k largest values on S.
    """
    if isinstance(f, Mapping):
        f = [f[v] for v in range(g.n)]
    fv = _upper_bounds(g.n, list(f))
    if k < 1:
        raise ParameterError("k must be >= 1")
    if g.n < k + 2:
        raise ParameterError(f"needs n >= k+2 (n={g.n}, k={k})")
    _check_cap(g.n, cap, "is_k_critical_general")
    n, full = g.n, g.full_mask
    best = None
    best_s: tuple[int, ...] = ()
    best_t = 0
    for size in range(k, n + 1):
        if best is not None and (n - size) - (size - k) <= best:
            break
        for S in combinations(range(n), size):
            t = odd_components(g, full & ~mask_of(S))
            vals = sorted((fv[v] for v in S), reverse=True)
            d = t - sum(vals) + sum(vals[:k])
            if best is None or d > best:
                best, best_s, best_t = d, S, t
    if best <= 0:
        return True, None
    return False, DeficiencyCertificate(graph6_str(g), None, k, best_s, best_t, best)


def is_k_critical_general_direct(g: Graph, f: Sequence[int], k: int, cap: int = FACTOR_CAP) -> tuple[bool, tuple[int, ...] | None]:
    """Definition route for (1,f)-odd factors, the oracle for the general criterion."""
    fv = _upper_bounds(g.n, list(f))
    if g.n < k + 2:
        raise ParameterError(f"needs n >= k+2 (n={g.n}, k={k})")
    _check_cap(g.n - k, cap, "is_k_critical_general_direct")
    for X in combinations(range(g.n), k):
        gone = set(X)
        kept = [v for v in range(g.n) if v not in gone]
        if _search(_induced_rows(g.rows, kept), tuple(fv[v] for v in kept)) is None:
            return False, X
    return True, None


def witness_certificate(g: Graph, params: FactorParams, witness: Sequence[int]) -> DeficiencyCertificate:
    """Certificate for a caller-chosen ``S`` (no enumeration)."""
    S = tuple(sorted(witness))
    if len(set(S)) != len(S) or any(not 0 <= v < g.n for v in S):
        raise GraphInputError("witness must be distinct vertices of g")
    if len(S) < params.k:
        raise ParameterError("witness must have at least k vertices")
    t = odd_components(g, g.full_mask & ~mask_of(S))
    return DeficiencyCertificate(graph6_str(g), params.b, params.k, S, t,
                                 t - params.b * len(S) + params.b * params.k)


def parity_audit(g: Graph, params: FactorParams, cert: DeficiencyCertificate) -> bool:
    """Check that a violating certificate has an even gap of at least 2.

    Requires ``n = k (mod 2)`` and a positive deficiency. Returns False when
    the stored ``t`` disagrees with the graph, the gap is odd, or it is < 2.
    """
    if (g.n - params.k) % 2:
        raise PreconditionError(f"parity audit needs n = k (mod 2); n={g.n}, k={params.k}")
    if cert.deficiency <= 0:
        raise PreconditionError("parity audit needs a violating certificate")
    t = odd_components(g, g.full_mask & ~mask_of(cert.witness))
    if t != cert.odd_components:
        return False
    bound = params.b * cert.s - params.b * params.k
    return (t - bound) % 2 == 0 and t >= bound + 2
