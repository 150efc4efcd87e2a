"""Exact checks of the closed forms and inequality chains behind both bounds.

Every verifier works in integer / ``Fraction`` arithmetic, returns a bool,
and raises :class:`PreconditionError` when called outside the range where
the statement is claimed. Polynomial identities are certified by evaluation
at more points than the degree of the difference.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import poly
from .errors import ParameterError, PreconditionError
from .families import ExtremalParams, build_G2, build_G3, build_G_star
from .spectral import _coeffs_B2, _coeffs_B3, char_cubic


def _require(cond: bool, msg: str):
    if not cond:
        raise PreconditionError(msg)


def _basic(b: int, k: int, delta: int):
    if b < 1 or b % 2 == 0 or k < 1:
        raise ParameterError("need odd b >= 1 and k >= 1")
    _require(delta >= k + 1, "needs delta >= k+1")


def _samples(xs: Iterable[int], need: int) -> list[int]:
    xs = sorted(set(xs))
    _require(len(xs) >= need, f"need at least {need} distinct sample points")
    return xs


def size_threshold_terms(b: int, k: int, delta: int) -> tuple[Fraction, Fraction]:
    """The two lower bounds on n in the size theorem."""
    first = Fraction(b * b * k * k - 2 * b * b * k * delta - 4 * b * b * k - b * k + b * b * delta * delta
                     + 4 * b * b * delta + 7 * b * delta + b * b + 8 * b + 1, 6 * b)
    second = (b + 5) * delta - (b + 4) * k - b + 1 + Fraction(5, b)
    return first, second


def _star_admissible(n, b, k, delta):
    try:
        ExtremalParams(n, b, k, delta)
    except ParameterError as exc:
        raise PreconditionError(str(exc)) from exc


# Size theorem, s >= delta + 1.

def case1_difference(n: int, b: int, k: int, delta: int, s: int) -> Fraction:
    """e(G2) - e(G*) in the factored form (s-delta)(...)/4."""
    return Fraction((s - delta) * (-4 * b * n + 2 * b * b * s + 4 * b * s + 2 * b * b * delta + 4 * b * delta
                                   - 4 * b * b * k - 4 * b * k + 6 * b + 4), 4)


def verify_case1_size(n: int, b: int, k: int, delta: int, s: int) -> bool:
    """Factored e(G2)-e(G*) is exact and negative under the theorem's bound on n."""
    _basic(b, k, delta)
    _require(s >= delta + 1, "needs s >= delta+1")
    _require(n >= (b + 1) * s - b * k + 2, "needs n >= (b+1)s - bk + 2")
    _require(n >= size_threshold_terms(b, k, delta)[1], "needs n >= (b+5)delta-(b+4)k-b+1+5/b")
    _star_admissible(n, b, k, delta)
    direct = build_G2(n, b, k, s).e - build_G_star(ExtremalParams(n, b, k, delta)).e
    return direct == case1_difference(n, b, k, delta, s) and direct < 0


# Size theorem, s <= delta - 1.

def g_coeffs(n: int, b: int, k: int, delta: int) -> list[int]:
    """The cubic g(x) with e(G3) - e(G*) = (s - delta) g(s) / 2."""
    d = delta
    return [
        b * b,
        -(2 * b * b * k + b * b * d + 2 * b * b - b),
        2 * b * n + 2 * b * b * k * d + b * b * k * k + 4 * b * b * k + b * b - 3 * b * d - b * k - 4 * b,
        -(2 * b * k + 2 * b - 2) * n - b * b * k * k * d - 2 * b * b * k * k - 2 * b * b * k + b * b * d
        + 3 * b * k * d + 4 * b * k + 2 * b * d - 2 * d + 3 * b - 2,
    ]


def g_prime_coeffs(n: int, b: int, k: int, delta: int) -> list[int]:
    """g'(x), transcribed separately from g for an independent derivative check."""
    d = delta
    return [
        3 * b * b,
        -2 * (2 * b * b * k + b * b * d + 2 * b * b - b),
        2 * b * n + 2 * b * b * k * d + b * b * k * k + 4 * b * b * k + b * b - 3 * b * d - b * k - 4 * b,
    ]


def verify_identity_3_4(n: int, b: int, k: int, delta: int, s: int) -> bool:
    """e(G3) - e(G*), counted on the built graphs, equals (s-delta)g(s)/2."""
    _basic(b, k, delta)
    _require(k + 1 <= s <= delta - 1, "needs k+1 <= s <= delta-1")
    _star_admissible(n, b, k, delta)
    try:
        g3 = build_G3(n, b, k, s, delta)
    except ParameterError as exc:
        raise PreconditionError(str(exc)) from exc
    direct = g3.e - build_G_star(ExtremalParams(n, b, k, delta)).e
    return 2 * direct == (s - delta) * poly.evaluate(g_coeffs(n, b, k, delta), s)


def verify_g_closed_form(n: int, b: int, k: int, delta: int) -> bool:
    """g(k+1) = 2n + bk - b*delta - 2*delta - 2, and it is positive under the bound."""
    _basic(b, k, delta)
    value = poly.evaluate(g_coeffs(n, b, k, delta), k + 1)
    if value != 2 * n + b * k - b * delta - 2 * delta - 2:
        return False
    if delta >= k + 2 and n >= size_threshold_terms(b, k, delta)[1]:
        lower = (b + 8) * delta - (b + 8) * k - 2 * b + Fraction(10, b)
        return value >= 2 * size_threshold_terms(b, k, delta)[1] + b * k - b * delta - 2 * delta - 2 \
            and value >= lower > 0
    return True


def verify_g_monotone(n: int, b: int, k: int, delta: int) -> bool:
    """g' is nonnegative at its vertex and g is nondecreasing on [k+1, delta-1]."""
    _basic(b, k, delta)
    _require(delta >= k + 2, "needs delta >= k+2")
    _require(n >= size_threshold_terms(b, k, delta)[0], "n below the first size threshold")
    gp = g_prime_coeffs(n, b, k, delta)
    if gp != poly.derivative(g_coeffs(n, b, k, delta)):
        return False
    vertex = Fraction(2 * b * k + b * delta + 2 * b - 1, 3 * b)
    at_vertex = poly.evaluate(gp, vertex)
    stated = Fraction(6 * b * n - b * b * k * k + 2 * b * b * k * delta + 4 * b * b * k + b * k
                       - b * b * delta * delta - 4 * b * b * delta - 7 * b * delta - b * b - 8 * b - 1, 3)
    # g' is an upward parabola, so its vertex value bounds it everywhere;
    # the vertex itself need not lie in [k+1, delta-1] (it exceeds delta-1
    # for b >= 3, delta = k+2).
    if at_vertex != stated or at_vertex < 0:
        return False
    vals = [poly.evaluate(g_coeffs(n, b, k, delta), x) for x in range(k + 1, delta)]
    return all(u <= v for u, v in zip(vals, vals[1:]))


# Spectral theorem, s >= delta + 1.

def f1_coeffs(n: int, b: int, k: int, delta: int, s: int) -> list[int]:
    d = delta
    return [
        b,
        -b * s - b * d + b * k + b - 1,
        -b * (b + 1) * (s * s + d * s + d * d) + (s + d) * (b * n + 2 * b * b * k + b * k - 3 * b - 1)
        - b * k * n + n - b * b * k * k + 3 * b * k - 2,
    ]


def f2(n: int, b: int, k: int, delta: int, s) -> Fraction:
    d = delta
    return (-b * (b + 1) * s * s + (b * b * k - b * d + b * k - b - 1) * s + b * n * n
            + (-2 * b * b * d + 2 * b * b * k - 3 * b) * n + (b ** 3 - b) * d * d
            + (-2 * b ** 3 * k + 3 * b * b + b * k - 1) * d + b ** 3 * k * k - 3 * b * b * k + 2 * b)


def _f2_at_right_end(n, b, k, d) -> Fraction:
    """f2((n+bk-2)/(b+1)) as stated, in terms of n."""
    return (Fraction(b * b * n * n, b + 1)
            + Fraction((-(2 * b ** 3 + 2 * b * b + b) * d + 2 * b ** 3 * k + b * b * k + b * k - 3 * b * b - 1) * n, b + 1)
            + (b ** 3 - b) * d * d
            + Fraction((-2 * b ** 4 * k - 2 * b ** 3 * k + b * k + 3 * b ** 3 + 3 * b * b + b - 1) * d, b + 1)
            + Fraction(b ** 4 * k * k + b ** 3 * k * k + b * b * k * k - 3 * b ** 3 * k - 2 * b * b * k - 3 * b * k
                       + 2 * b * b + 2, b + 1))


def _f2_final(b, k, d) -> Fraction:
    return Fraction((b ** 4 + 3 * b ** 3 - 4 * b) * d * d
                    + (2 * b ** 3 * k + 6 * b * b * k + 4 * b * k - b ** 3 - 2 * b * b - 2 * b - 4) * d
                    - b * b * k - b * k + 1, b + 1)


def verify_identity_4_5(n: int, b: int, k: int, delta: int, s: int,
                        xs: Sequence[int] = (0, 1, 2, 3)) -> bool:
    """phi_B2(x) - phi_B*(x) = (s - delta) f1(x), certified at >= 4 integers."""
    _basic(b, k, delta)
    xs = _samples(xs, 4)
    try:
        p2 = char_cubic("B2", n, b, k, delta, s).coeffs
        ps = char_cubic("Bstar", n, b, k, delta).coeffs
    except ParameterError as exc:
        raise PreconditionError(str(exc)) from exc
    f1 = f1_coeffs(n, b, k, delta, s)
    return all(poly.evaluate(p2, x) - poly.evaluate(ps, x) == (s - delta) * poly.evaluate(f1, x) for x in xs)


def verify_f1_chain(n: int, b: int, k: int, delta: int, s: int) -> bool:
    """f1 at n - b*delta + bk - 2 equals f2(s), and f2(s) stays positive.

    Also checks the intermediate steps: both symmetry axes sit left of the
    evaluation range, f2(s) >= f2((n+bk-2)/(b+1)) in its stated form, and
    the final bound after substituting n = (2b+3)delta - bk + 1 is positive.
    """
    _basic(b, k, delta)
    _require(s >= delta + 1, "needs s >= delta+1")
    _require(n >= (b + 1) * s - b * k + 2, "needs n >= (b+1)s - bk + 2")
    _require(n >= (2 * b + 3) * delta - b * k + 1, "needs n >= (2b+3)delta - bk + 1")
    x0 = n - b * delta + b * k - 2
    f1 = f1_coeffs(n, b, k, delta, s)
    value = poly.evaluate(f1, x0)
    if value != f2(n, b, k, delta, s):
        return False
    if not Fraction(b * s + b * delta - b * k - b + 1, 2 * b) < x0:
        return False
    right = Fraction(n + b * k - 2, b + 1)
    axis = Fraction(b * b * k - b * delta + b * k - b - 1, 2 * b * (b + 1))
    if not axis < delta + 1 <= s <= right:
        return False
    at_right = f2(n, b, k, delta, right)
    if at_right != _f2_at_right_end(n, b, k, delta):
        return False
    n0 = (2 * b + 3) * delta - b * k + 1
    if _f2_at_right_end(n0, b, k, delta) != _f2_final(b, k, delta):
        return False
    return value >= at_right and at_right >= _f2_final(b, k, delta) > 0 and value > 0


def verify_theta2_bound(n: int, b: int, k: int, delta: int, s: int, tol: float = 1e-9) -> bool:
    """Second eigenvalue of B2 is at most n-(b+1)s+bk-2 (and the delta+1 bound when s > delta)."""
    _basic(b, k, delta)
    try:
        q = char_cubic("B2", n, b, k, delta, s)
    except ParameterError as exc:
        raise PreconditionError(str(exc)) from exc
    theta2 = q.roots()[1]
    ok = theta2 <= n - (b + 1) * s + b * k - 2 + tol
    if s >= delta + 1:
        ok = ok and n - (b + 1) * s + b * k - 2 <= n - (b + 1) * (delta + 1) + b * k - 2
    return ok


def verify_theta_star_bound(n: int, b: int, k: int, delta: int, tol: float = 1e-9) -> bool:
    """theta* > n - b*delta + bk - 2, decided exactly (Sturm) and numerically."""
    _basic(b, k, delta)
    _star_admissible(n, b, k, delta)
    q = char_cubic("Bstar", n, b, k, delta)
    x0 = n - b * delta + b * k - 2
    chain = poly.sturm_chain(q.coeffs)
    exact = poly._sign_changes(chain, x0) - poly._sign_changes(chain, poly.cauchy_bound(q.coeffs)) >= 1 \
        and poly.evaluate(q.coeffs, x0) != 0
    numeric = q.largest_root() > x0 - tol
    return exact and numeric and x0 > n - (b + 1) * (delta + 1) + b * k - 2


# Spectral theorem, s <= delta - 1.

def g1_coeffs(n: int, b: int, k: int, delta: int, s: int, corrected: bool = False) -> list[int]:
    """g1(x) as stated; ``corrected=True`` drops 2 from the constant term.

    Only the corrected form satisfies phi_B3 - phi_B* = (delta - s) g1:
    the stated constant is 2 too large.
    """
    d = delta
    const = ((b * s * s - b * k * s - b * s - b * d + b * k + s) * n + b * b * s ** 4
             - (b * b * d + 2 * b * b * k + 2 * b * b - b) * s ** 3
             + (2 * b * b * k * d - 2 * b * d + b * b * k * k + 4 * b * b * k + b * b - b * k - 3 * b) * s * s
             - (b * b * k * k * d - b * b * d - 2 * b * k * d + 2 * b * b * k * k + 2 * b * b * k - 3 * b * k
                - 2 * b + d + 1) * s
             + b * b * d * d + b * d * d - 2 * b * b * k * d + 3 * b * d + b * b * k * k - 2 * b * k + 2)
    if corrected:
        const -= 2
    return [
        b * s - b * k - b,
        n - b * d * s + b * s + b * k * d + b * d - b * k - b - d - 1,
        const,
    ]


def verify_identity_4_8(n: int, b: int, k: int, delta: int, s: int,
                        xs: Sequence[int] = (0, 1, 2, 3), corrected: bool = False) -> bool:
    """phi_B3(x) - phi_B*(x) = (delta - s) g1(x) at >= 4 integers.

    With the stated g1 this fails whenever s != delta (the residual is
    2(s - delta)); pass ``corrected=True`` for the repaired constant.
    """
    _basic(b, k, delta)
    _require(k + 1 <= s <= delta, "needs k+1 <= s <= delta")
    xs = _samples(xs, 4)
    try:
        p3 = char_cubic("B3", n, b, k, delta, s).coeffs
        ps = char_cubic("Bstar", n, b, k, delta).coeffs
    except ParameterError as exc:
        raise PreconditionError(str(exc)) from exc
    g1 = g1_coeffs(n, b, k, delta, s, corrected)
    return all(poly.evaluate(p3, x) - poly.evaluate(ps, x) == (delta - s) * poly.evaluate(g1, x) for x in xs)


def _case3_preconditions(n, b, k, delta, s):
    _basic(b, k, delta)
    _require(k + 1 <= s <= delta - 1, "needs k+2 <= s+1 <= delta")
    _require(n >= b * delta * delta - b * k, "needs n >= b*delta^2 - bk")
    _require(n >= (b * s - b * k + 2) * (delta + 1 - s) + s, "needs n >= (bs-bk+2)(delta+1-s)+s")


def _phi_b3_prime_stated(n, b, k, d, s):
    return (n * n + (-2 * b * s * s + 2 * b * d * s + 2 * b * k * s + 2 * b * s - s - 2 * b * k * d - 4 * b * d + d
                     + 2 * b * k - 3) * n
            + (2 * b * b * d - 2 * b * b * k + b * d + 3 * b) * s * s
            + (-2 * b * b * d * d - b * d * d - 2 * b * b * d - b * k * d - 4 * b * d + d + 2 * b * b * k * k
               + 2 * b * b * k - 3 * b * k - 3 * b + 1) * s
            + 2 * b * b * k * d * d + 3 * b * b * d * d + b * k * d * d - d * d - 2 * b * b * k * k * d
            - 4 * b * b * k * d + 4 * b * k * d + 6 * b * d - 2 * d + b * b * k * k - 3 * b * k + 2)


def verify_phiB3_derivative_chain(n: int, b: int, k: int, delta: int, s: int,
                                  steps: int = 8) -> bool:
    """phi_B3' > 0 from x0 = n - b*delta + bk - 2 on, so phi_B3 increases there."""
    _case3_preconditions(n, b, k, delta, s)
    p3 = _coeffs_B3(n, b, k, s, delta)
    dp = poly.derivative(p3)
    x0 = n - b * delta + b * k - 2
    if not Fraction(-p3[1], 3) < x0:
        return False
    at_x0 = poly.evaluate(dp, x0)
    if at_x0 != _phi_b3_prime_stated(n, b, k, delta, s) or at_x0 <= 0:
        return False
    pts = [x0 + Fraction(i, 2) for i in range(steps + 1)] + [x0 + 10 * n]
    vals = [poly.evaluate(p3, x) for x in pts]
    return all(u < v for u, v in zip(vals, vals[1:]))


def verify_g1_chain(n: int, b: int, k: int, delta: int, s: int, corrected: bool = True) -> bool:
    """g1 is increasing from x0 = n - b*delta + bk - 2 on and positive at x0.

    Together with theta* > x0 this gives phi_B3(theta*) > 0.
    """
    _case3_preconditions(n, b, k, delta, s)
    g1 = g1_coeffs(n, b, k, delta, s, corrected)
    x0 = n - b * delta + b * k - 2
    lead, lin, _ = g1
    if lead == 0:
        increasing = lin > 0
    else:
        increasing = lead > 0 and Fraction(-lin, 2 * lead) < x0
    return increasing and poly.evaluate(g1, x0) > 0


def verify_case2_cubics(n: int, b: int, k: int, delta: int) -> bool:
    """At s = delta the B2 and B3 cubics both collapse to the B* cubic."""
    _basic(b, k, delta)
    _star_admissible(n, b, k, delta)
    ps = _coeffs_B2(n, b, k, delta)
    return _coeffs_B3(n, b, k, delta, delta) == ps


# Parameter grids.

def _odd(values):
    return [v for v in values if v % 2 == 1]


def grid_case3(bs=(1, 3, 5), ks=(1, 2, 3), extra_delta: int = 6, n_span: int = 12) -> Iterator[tuple]:
    """(n, b, k, delta, s) with k+1 <= s <= delta-1 and G3, G* both defined."""
    for b, k in product(bs, ks):
        for delta in range(k + 2, k + 2 + extra_delta):
            for s in range(k + 1, delta):
                n_lo = max((b + 1) * delta - b * k + 2, (b * s - b * k + 1) * (delta + 1 - s) + s + 1)
                for n in range(n_lo, n_lo + n_span):
                    yield n, b, k, delta, s


def grid_case1(bs=(1, 3, 5), ks=(1, 2, 3), extra_delta: int = 4, extra_s: int = 4, n_span: int = 10) -> Iterator[tuple]:
    """(n, b, k, delta, s) with s >= delta+1 and G2, G* defined."""
    for b, k in product(bs, ks):
        for delta in range(k + 1, k + 1 + extra_delta):
            for s in range(delta + 1, delta + 1 + extra_s):
                n_lo = (b + 1) * s - b * k + 2
                for n in range(n_lo, n_lo + n_span):
                    yield n, b, k, delta, s


def grid_any_s(bs=(1, 3, 5), ks=(1, 2, 3), extra_delta: int = 4, n_span: int = 8) -> Iterator[tuple]:
    """(n, b, k, delta, s) with s from k+1 to delta+3 where G2 and G* exist."""
    for b, k in product(bs, ks):
        for delta in range(k + 1, k + 1 + extra_delta):
            for s in range(k + 1, delta + 4):
                n_lo = max((b + 1) * s - b * k + 2, (b + 1) * delta - b * k + 2)
                for n in range(n_lo, n_lo + n_span):
                    yield n, b, k, delta, s


def grid_delta(bs=(1, 3, 5), ks=(1, 2, 3), extra_delta: int = 4, n_max: int = 40) -> Iterator[tuple]:
    """(n, b, k, delta) with delta in k+1..k+extra_delta and G* defined, n <= n_max."""
    for b, k in product(bs, ks):
        for delta in range(k + 1, k + 1 + extra_delta):
            for n in range((b + 1) * delta - b * k + 2, n_max + 1):
                yield n, b, k, delta


def grid_case3_spectral(bs=(1, 3, 5), ks=(1, 2, 3), extra_delta: int = 6, n_span: int = 6) -> Iterator[tuple]:
    """Like :func:`grid_case3` but with n starting at the spectral order threshold."""
    for b, k in product(bs, ks):
        for delta in range(k + 2, k + 2 + extra_delta):
            for s in range(k + 1, delta):
                n_lo = max(b * delta * delta - b * k, (2 * b + 3) * delta - b * k + 1,
                           (b * s - b * k + 2) * (delta + 1 - s) + s,
                           (b + 1) * delta - b * k + 2)
                for n in range(n_lo, n_lo + n_span):
                    yield n, b, k, delta, s


def grid_case1_spectral(bs=(1, 3, 5), ks=(1, 2, 3), extra_delta: int = 4, extra_s: int = 4,
                        n_span: int = 10) -> Iterator[tuple]:
    """Like :func:`grid_case1` with n at least (2b+3)delta - bk + 1."""
    for b, k in product(bs, ks):
        for delta in range(k + 1, k + 1 + extra_delta):
            for s in range(delta + 1, delta + 1 + extra_s):
                n_lo = max((b + 1) * s - b * k + 2, (2 * b + 3) * delta - b * k + 1)
                for n in range(n_lo, n_lo + n_span):
                    yield n, b, k, delta, s
