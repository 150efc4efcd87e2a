"""Adjacency spectra, quotient matrices and the characteristic cubics.

Quotient matrices and their characteristic polynomials are kept exact
(``Fraction``/``int``); floating point only appears in eigensolvers and in
the final conversion of an isolated root.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import poly
from .errors import GraphInputError, InvariantViolation, ParameterError
from .families import (
    _check_lemma_hypothesis,
    build_cluster_join,
    build_parts,
    g2_parts,
    g3_parts,
)
from .graph import Graph, mask_of

EIG_TOL = 1e-10
CROSS_TOL = 1e-8


def spectral_radius(g: Graph, tol: float = EIG_TOL) -> float:
    """Largest adjacency eigenvalue (dense symmetric eigensolver).

    The top eigenpair is validated by its residual ``||Ax - rho x||``.
    """
    if g.n == 0:
        raise ParameterError("spectral radius of the empty graph is undefined")
    a = g.adjacency_matrix()
    vals, vecs = np.linalg.eigh(a)
    rho = float(vals[-1])
    x = vecs[:, -1]
    resid = float(np.linalg.norm(a @ x - rho * x))
    if resid > max(tol, 1e-12 * g.n):
        raise InvariantViolation(f"eigenpair residual {resid:.3e} above tolerance {tol:.1e}")
    return rho


def adjacency_spectrum(g: Graph) -> np.ndarray:
    """All adjacency eigenvalues, descending."""
    return np.linalg.eigvalsh(g.adjacency_matrix())[::-1]


def power_iteration_radius(g: Graph, tol: float = EIG_TOL, max_iter: int = 100_000) -> float:
    """rho(G) by shifted power iteration from the all-ones vector.

    The shift ``A + I`` removes the bipartite sign oscillation. Assumes a
    connected graph (or at least that the all-ones start meets the top
    eigenspace, which holds for any nonnegative matrix).
    """
    if g.n == 0:
        raise ParameterError("spectral radius of the empty graph is undefined")
    a = g.adjacency_matrix() + np.eye(g.n)
    x = np.ones(g.n) / np.sqrt(g.n)
    lam = float(x @ a @ x)
    for _ in range(max_iter):
        y = a @ x
        x = y / np.linalg.norm(y)
        new = float(x @ a @ x)
        if np.linalg.norm(a @ x - new * x) < tol:
            return new - 1.0
        lam = new
    return lam - 1.0


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def validate(self, n: int):
        seen = [v for blk in self.blocks for v in blk]
        if any(len(blk) == 0 for blk in self.blocks):
            raise GraphInputError("partition blocks must be nonempty")
        if sorted(seen) != list(range(n)):
            raise GraphInputError("blocks must partition the vertex set")


def canonical_partition(s: int, parts: Sequence[int]) -> Partition:
    """(hub, first listed part, remaining parts) for a :func:`build_parts` graph.

    ``build_parts`` lays parts out largest first, so the block of
    ``parts[0]`` is located by size rather than assumed to come first.
    """
    layout = sorted(parts, reverse=True)
    pos = layout.index(parts[0])
    start = s + sum(layout[:pos])
    hub = tuple(range(s))
    big = tuple(range(start, start + parts[0]))
    rest = tuple(v for v in range(s, s + sum(parts)) if not start <= v < start + parts[0])
    return Partition(tuple(blk for blk in (hub, big, rest) if blk))


@dataclass
class QuotientCubic:
    """An r x r quotient matrix with its exact characteristic polynomial.

    ``coeffs`` is monic, highest degree first. For r = 3 these are
    ``[1, c2, c1, c0]``.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    coeffs: list
    equitable: bool = True
    family: str | None = None
    params: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.matrix)

    def roots(self, tol: float = 1e-12) -> list[float]:
        """Real roots with multiplicity, descending (eigenvalues of B)."""
        vals = np.linalg.eigvals(np.array(self.matrix, dtype=float))
        if np.max(np.abs(vals.imag)) > 1e-7:
            raise InvariantViolation("quotient matrix has non-real eigenvalues")
        return sorted(vals.real.tolist(), reverse=True)

    def largest_root(self, tol: float = 1e-12) -> float:
        return poly.largest_real_root(self.coeffs, tol)

    def __call__(self, x):
        return poly.evaluate(self.coeffs, x)

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "params": self.params,
            "matrix": [[_num(v) for v in row] for row in self.matrix],
            "coeffs": [_num(c) for c in self.coeffs],
            "equitable": self.equitable,
        }
        if self.order == 3:
            t1, t2, t3 = self.roots()
            out.update(theta1=t1, theta2=t2, theta3=t3)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _num(v):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else str(v)


def quotient_matrix(g: Graph, partition: Partition) -> QuotientCubic:
    """Block-average row-sum matrix of A(G); flags whether the partition is equitable."""
    partition.validate(g.n)
    masks = [mask_of(blk) for blk in partition.blocks]
    equitable = True
    rows = []
    for blk in partition.blocks:
        row = []
        for m in masks:
            sums = [(g.rows[v] & m).bit_count() for v in blk]
            if len(set(sums)) > 1:
                equitable = False
            row.append(Fraction(sum(sums), len(blk)))
        rows.append(tuple(row))
    matrix = tuple(rows)
    return QuotientCubic(matrix, poly.charpoly(matrix), equitable)


# Printed matrices and characteristic polynomials of the three cluster joins.

def _matrix_B2(n, b, k, s):
    return ((s - 1, n - (b + 1) * s + b * k - 1, b * s - b * k + 1),
            (s, n - (b + 1) * s + b * k - 2, 0),
            (s, 0, 0))


def _coeffs_B2(n, b, k, s):
    c2 = -n + b * s - b * k + 3
    c1 = -n - b * s**2 + b * k * s + b * s - s - b * k + 2
    c0 = (-b * (b + 1) * s**3 + b * n * s**2 + 2 * b**2 * k * s**2 + b * k * s**2
          - (3 * b + 1) * s**2 - b * k * n * s + n * s - b**2 * k**2 * s + 3 * b * k * s - 2 * s)
    return [1, c2, c1, c0]


def _matrix_B3(n, b, k, s, d):
    m = (b * s - b * k + 1) * (d + 1 - s)
    q = n - s - m
    return ((s - 1, q, m), (s, q - 1, 0), (s, 0, d - s))


def _coeffs_B3(n, b, k, s, d):
    c2 = -n - b * s**2 + b * d * s + b * k * s + b * s - b * k * d - b * k + 3
    c1 = ((b * d - b) * s**2 + (b * k + b + d - b * d**2 - b * k * d - n + 1) * s
          + d * n - n + b * k * d**2 - d**2 - 2 * d - b * k + 2)
    c0 = ((-b * s**3 + b * d * s**2 + b * k * s**2 + b * s**2 - s**2 - b * k * d * s - b * k * s + d * s + d) * n
          - b**2 * s**5
          + (2 * b**2 * d + 2 * b**2 * k + 2 * b**2 - b) * s**4
          - (b**2 * d**2 + 4 * b**2 * k * d + b**2 * k**2 + 2 * b**2 * d + 4 * b**2 * k + b**2
             - 3 * b * d - b * k - 3 * b) * s**3
          + (2 * b**2 * k * d**2 + 2 * b**2 * k**2 * d + 4 * b**2 * k * d + 2 * b**2 * k**2 - 3 * b * k * d
             + 2 * b**2 * k - 2 * b * d**2 - 3 * b * d - 3 * b * k - 2 * b + d + 1) * s**2
          - (b**2 * k**2 * d**2 + 2 * b**2 * k**2 * d + b**2 * k**2 - 2 * b * k * d**2 - 3 * b * k * d
             + b * d**2 - 2 * b * k + b * d + d**2 + d) * s
          + b * k * d**2 + b * k * d - d**2 - 2 * d)
    return [1, c2, c1, c0]


FAMILIES = ("B2", "Bstar", "B3")


def family_parts(family: str, n: int, b: int, k: int, delta: int | None = None,
                 s: int | None = None) -> tuple[int, list[int]]:
    """(hub size, part list) of the graph whose quotient a family describes."""
    if family == "B2":
        return s, g2_parts(n, b, k, s)
    if family == "Bstar":
        from .families import ExtremalParams

        return delta, ExtremalParams(n, b, k, delta).parts()
    if family == "B3":
        return s, g3_parts(n, b, k, s, delta)
    raise ParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")


def char_cubic(family: str, n: int, b: int, k: int, delta: int | None = None,
               s: int | None = None) -> QuotientCubic:
    """Matrix and characteristic cubic in closed form for B2, B* or B3.

    Parameters are validated against the corresponding builder so only
    cubics of real graphs are produced.
    """
    if b < 1 or b % 2 == 0 or k < 1:
        raise ParameterError("need odd b >= 1 and k >= 1")
    family_parts(family, n, b, k, delta, s)
    if family == "B2":
        matrix, coeffs = _matrix_B2(n, b, k, s), _coeffs_B2(n, b, k, s)
        params = {"n": n, "b": b, "k": k, "s": s}
    elif family == "Bstar":
        matrix, coeffs = _matrix_B2(n, b, k, delta), _coeffs_B2(n, b, k, delta)
        params = {"n": n, "b": b, "k": k, "delta": delta}
    else:
        matrix, coeffs = _matrix_B3(n, b, k, s, delta), _coeffs_B3(n, b, k, s, delta)
        params = {"n": n, "b": b, "k": k, "delta": delta, "s": s}
    matrix = tuple(tuple(Fraction(v) for v in row) for row in matrix)
    return QuotientCubic(matrix, coeffs, True, family, params)


def family_quotient(family: str, n: int, b: int, k: int, delta: int | None = None,
                    s: int | None = None) -> tuple[Graph, QuotientCubic]:
    """Build the family graph and its quotient over the canonical partition."""
    hub, parts = family_parts(family, n, b, k, delta, s)
    g = build_parts(hub, parts)
    q = quotient_matrix(g, canonical_partition(hub, parts))
    q.family = family
    return g, q


def interlacing_check(m: np.ndarray, keep: Sequence[int], tol: float = 1e-9) -> bool:
    """Cauchy interlacing for the principal submatrix on ``keep``."""
    m = np.asarray(m, dtype=float)
    if not np.allclose(m, m.T, atol=0):
        raise ParameterError("matrix must be symmetric")
    keep = sorted(set(keep))
    if not keep:
        raise ParameterError("keep must be nonempty")
    s, t = m.shape[0], len(keep)
    lm = np.linalg.eigvalsh(m)[::-1]
    ln = np.linalg.eigvalsh(m[np.ix_(keep, keep)])[::-1]
    return all(lm[i] + tol >= ln[i] >= lm[s - t + i] - tol for i in range(t))


def compare_rho_lemma26(n: int, s: int, p: int, parts: Sequence[int],
                        tol: float = EIG_TOL) -> tuple[float, float]:
    """(rho of the parts graph, rho of the cluster join); raises unless lhs < rhs - tol."""
    t = _check_lemma_hypothesis(n, s, p, parts)
    lhs = spectral_radius(build_parts(s, parts))
    rhs = spectral_radius(build_cluster_join(n, s, t, p))
    if not lhs < rhs - tol:
        raise InvariantViolation(f"spectral comparator not strict: {lhs} vs {rhs}")
    return lhs, rhs
