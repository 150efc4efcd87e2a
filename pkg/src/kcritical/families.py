"""Cluster joins K_s v (K_n1 u ... u K_nt) and the extremal graph G*.

Labeling convention: hub vertices 0..s-1 first, then the parts in
nonincreasing size, so certificates and quotient partitions are positional.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InvariantViolation, ParameterError
from .graph import Graph, complete, join, union


@dataclass(frozen=True)
class ExtremalParams:
    """Parameters of K_delta v (K_{n-(b+1)delta+bk-1} u (b*delta-bk+1)K_1)."""

    n: int
    b: int
    k: int
    delta: int

    def __post_init__(self):
        if self.b < 1 or self.b % 2 == 0:
            raise ParameterError(f"b must be a positive odd integer, got {self.b}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        if self.delta < self.k + 1:
            raise ParameterError(f"delta must be >= k+1 (delta={self.delta}, k={self.k})")
        if self.big_part < 1:
            raise ParameterError(f"n={self.n} too small: big clique would have {self.big_part} vertices")

    @property
    def big_part(self) -> int:
        return self.n - (self.b + 1) * self.delta + self.b * self.k - 1

    @property
    def singletons(self) -> int:
        return self.b * self.delta - self.b * self.k + 1

    @property
    def hub(self) -> tuple[int, ...]:
        return tuple(range(self.delta))

    def parts(self) -> list[int]:
        return [self.big_part] + [1] * self.singletons


def build_parts(s: int, parts: Sequence[int]) -> Graph:
    """K_s v (K_{n1} u ... u K_{nt}); parts are laid out largest first."""
    if s < 0:
        raise ParameterError("hub size must be nonnegative")
    if any(p < 1 for p in parts):
        raise ParameterError(f"every part must have >= 1 vertex, got {list(parts)}")
    rest = Graph(0, ())
    for p in sorted(parts, reverse=True):
        rest = union(rest, complete(p))
    return join(complete(s), rest)


def cluster_parts(n: int, s: int, t: int, p: int) -> list[int]:
    """Part list [n-s-p(t-1), p, ..., p] after validating the dominant part."""
    if s < 0 or t < 1 or p < 1:
        raise ParameterError(f"need s >= 0, t >= 1, p >= 1 (s={s}, t={t}, p={p})")
    big = n - s - p * (t - 1)
    if big < p:
        raise ParameterError(f"dominant part {big} smaller than p={p}")
    return [big] + [p] * (t - 1)


def build_cluster_join(n: int, s: int, t: int, p: int) -> Graph:
    """K_s v (K_{n-s-p(t-1)} u (t-1)K_p)."""
    return build_parts(s, cluster_parts(n, s, t, p))


def build_G_star(params: ExtremalParams) -> Graph:
    return build_cluster_join(params.n, params.delta, params.singletons + 1, 1)


def g2_parts(n: int, b: int, k: int, s: int) -> list[int]:
    m = b * s - b * k + 1
    big = n - (b + 1) * s + b * k - 1
    if m < 1 or big < 1:
        raise ParameterError(f"G2({n},{b},{k},{s}) has a nonpositive part (big={big}, singletons={m})")
    return [big] + [1] * m


def build_G2(n: int, b: int, k: int, s: int) -> Graph:
    """K_s v (K_{n-(b+1)s+bk-1} u (bs-bk+1)K_1)."""
    return build_parts(s, g2_parts(n, b, k, s))


def g3_parts(n: int, b: int, k: int, s: int, delta: int) -> list[int]:
    if s > delta:
        raise ParameterError(f"G3 needs s <= delta (s={s}, delta={delta})")
    m = b * s - b * k + 1
    small = delta + 1 - s
    big = n - s - m * small
    if m < 1 or big < 1:
        raise ParameterError(f"G3({n},{b},{k},{s},{delta}) has a nonpositive part (big={big}, count={m})")
    return [big] + [small] * m


def build_G3(n: int, b: int, k: int, s: int, delta: int) -> Graph:
    """K_s v (K_{n-s-(bs-bk+1)(delta+1-s)} u (bs-bk+1)K_{delta+1-s}).

    Intended for s <= delta-1; s = delta is accepted and gives G*.
    """
    return build_parts(s, g3_parts(n, b, k, s, delta))


def edges_parts(s: int, parts: Sequence[int]) -> int:
    """Closed-form e(K_s v (u K_{n_i}))."""
    rest = sum(parts)
    return comb(s, 2) + sum(comb(p, 2) for p in parts) + s * rest


def edge_count_star(params: ExtremalParams) -> int:
    """e(G*) = C(n - b*delta + bk - 1, 2) + delta*(b*delta - bk + 1)."""
    b, k, d, n = params.b, params.k, params.delta, params.n
    return comb(n - b * d + b * k - 1, 2) + d * (b * d - b * k + 1)


def _check_lemma_hypothesis(n: int, s: int, p: int, parts: Sequence[int]) -> int:
    parts = list(parts)
    t = len(parts)
    if t == 0 or p < 1:
        raise ParameterError("need at least one part and p >= 1")
    if parts != sorted(parts, reverse=True):
        raise ParameterError("parts must be sorted nonincreasing")
    if parts[-1] < p:
        raise ParameterError(f"every part must be >= p={p}")
    if sum(parts) + s != n:
        raise ParameterError(f"parts sum {sum(parts)} + s={s} != n={n}")
    dominant = n - s - p * (t - 1)
    if not parts[0] < dominant:
        raise ParameterError(f"hypothesis n1 < n-s-p(t-1) fails ({parts[0]} >= {dominant})")
    return t


def compare_edges_lemma24(n: int, s: int, p: int, parts: Sequence[int]) -> tuple[int, int]:
    """(e of the parts graph, e of the cluster join); raises unless lhs < rhs."""
    t = _check_lemma_hypothesis(n, s, p, parts)
    lhs = build_parts(s, parts).e
    rhs = build_cluster_join(n, s, t, p).e
    if not lhs < rhs:
        raise InvariantViolation(f"edge comparator not strict: {lhs} >= {rhs}")
    return lhs, rhs
