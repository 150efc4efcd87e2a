"""Exact univariate polynomials over the rationals.

Coefficient lists are highest degree first: ``[1, c2, c1, c0]`` is
x^3 + c2 x^2 + c1 x + c0. Roots are isolated with Sturm sequences and
refined by bisection; every sign decision is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Number = int | Fraction


def _trim(p: Sequence[Number]) -> list[Fraction]:
    p = [Fraction(c) for c in p]
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def evaluate(p: Sequence[Number], x: Number) -> Number:
    acc: Number = 0
    for c in p:
        acc = acc * x + c
    return acc


def derivative(p: Sequence[Number]) -> list[Number]:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])]


def poly_sub(p: Sequence[Number], q: Sequence[Number]) -> list[Number]:
    m = max(len(p), len(q))
    p = [0] * (m - len(p)) + list(p)
    q = [0] * (m - len(q)) + list(q)
    return [a - c for a, c in zip(p, q)]


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        factor = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= factor * b[i]
        a.pop(0)
    return _trim(a) if a else [Fraction(0)]


def charpoly(matrix: Sequence[Sequence[Number]]) -> list[Number]:
    """Monic characteristic polynomial det(xI - M), exact (Faddeev-LeVerrier)."""
    r = len(matrix)
    m = [[Fraction(v) for v in row] for row in matrix]
    coeffs: list[Fraction] = [Fraction(1)]
    acc = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for step in range(1, r + 1):
        prod = [[sum(m[i][l] * acc[l][j] for l in range(r)) for j in range(r)] for i in range(r)]
        c = -sum(prod[i][i] for i in range(r)) / step
        coeffs.append(c)
        acc = [[prod[i][j] + (c if i == j else 0) for j in range(r)] for i in range(r)]
    return [int(c) if c.denominator == 1 else c for c in coeffs]


def _integral(p: list[Fraction]) -> list[int]:
    # a positive multiple has the same signs everywhere
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in p]


def sturm_chain(p: Sequence[Number]) -> list[list[int]]:
    """Sturm sequence, each member scaled by a positive constant to integers."""
    p0 = _trim(p)
    chain = [p0]
    if len(p0) > 1:
        chain.append(_trim(derivative(p0)))
        while len(chain[-1]) > 1:
            r = _rem(chain[-2], chain[-1])
            if not any(r):
                break
            chain.append([-c for c in r])
    return [_integral(q) for q in chain]


def _scaled_value(q: list[int], x: Fraction) -> int:
    # den^deg * q(num/den): same sign as q(x), integer arithmetic only
    num, den = x.numerator, x.denominator
    acc = 0
    power = 1
    for c in q:
        acc = acc * num + c * power
        power *= den
    return acc


def _sign_changes(chain, x) -> int:
    x = Fraction(x)
    signs = [v > 0 for v in (_scaled_value(q, x) for q in chain) if v]
    return sum(1 for a, c in zip(signs, signs[1:]) if a != c)


def cauchy_bound(p: Sequence[Number]) -> Fraction:
    p = _trim(p)
    lead = abs(p[0])
    return 1 + max((abs(c) / lead for c in p[1:]), default=Fraction(0))


def isolate_real_roots(p: Sequence[Number]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open intervals (a, b], one per distinct real root, ascending."""
    chain = sturm_chain(p)
    if len(chain[0]) == 1:
        return []
    bound = cauchy_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        count = _sign_changes(chain, a) - _sign_changes(chain, b)
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        # split points must not be roots for the Sturm count to stay exact
        mid = (a + b) / 2
        shift = 3
        while _scaled_value(chain[0], mid) == 0:
            mid = a + (b - a) / shift
            shift += 1
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def refine_root(p: Sequence[Number], interval: tuple[Fraction, Fraction], tol: float,
                chain: list | None = None) -> Fraction:
    """Bisect an isolating interval (a, b] down to width <= tol; returns the midpoint."""
    chain = sturm_chain(p) if chain is None else chain
    a, b = interval
    tol = Fraction(tol)
    va = _sign_changes(chain, a)
    while b - a > tol:
        mid = (a + b) / 2
        if _scaled_value(chain[0], mid) == 0:
            return mid
        vm = _sign_changes(chain, mid)
        if va - vm == 1:
            b = mid
        else:
            a, va = mid, vm
    if _scaled_value(chain[0], b) == 0:
        return b
    return (a + b) / 2


def real_roots(p: Sequence[Number], tol: float = 1e-12) -> list[float]:
    """Distinct real roots, descending, each within ``tol``."""
    return sorted((float(refine_root(p, iv, tol)) for iv in isolate_real_roots(p)), reverse=True)


def largest_real_root(p: Sequence[Number], tol: float = 1e-12) -> float:
    """Largest real root of ``p`` within ``tol``; ValueError if there is none."""
    ivs = isolate_real_roots(p)
    if not ivs:
        raise ValueError("polynomial has no real root")
    return float(refine_root(p, ivs[-1], tol, sturm_chain(p)))


def format_poly(p: Sequence[Number], var: str = "x") -> str:
    d = len(p) - 1
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        e = d - i
        mag = abs(c)
        body = "" if (mag == 1 and e > 0) else str(mag)
        if e >= 1:
            body += var + (f"^{e}" if e > 1 else "")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])
