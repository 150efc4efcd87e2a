from fractions import Fraction

import numpy as np
import pytest

from _util import family_grid, random_connected, random_graph, random_lemma_tuple, rng
from kcritical import poly
from kcritical.errors import GraphInputError, ParameterError
from kcritical.families import ExtremalParams, build_G_star
from kcritical.graph import build_graph, complete, empty
from kcritical.spectral import (
    Partition,
    adjacency_spectrum,
    char_cubic,
    compare_rho_lemma26,
    family_quotient,
    interlacing_check,
    power_iteration_radius,
    quotient_matrix,
    spectral_radius,
)


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestRadius:
    def test_examples(self):
        assert spectral_radius(complete(5)) == pytest.approx(4, abs=1e-10)
        assert spectral_radius(cycle(4)) == pytest.approx(2, abs=1e-10)
        g = build_G_star(ExtremalParams(13, 1, 1, 2))
        root = poly.largest_real_root([1, -9, -14, 32], 1e-12)
        assert abs(spectral_radius(g) - root) <= 1e-8
        assert 10.07 < root < 10.08

    def test_empty_graph_rejected(self):
        with pytest.raises(ParameterError):
            spectral_radius(empty(0))

    def test_complete_graphs(self):
        for m in range(1, 41):
            assert abs(spectral_radius(complete(m)) - (m - 1)) <= 1e-10

    def test_power_iteration_agrees(self):
        gen = rng(20)
        for _ in range(50):
            g = random_connected(gen, int(gen.integers(2, 15)))
            assert abs(power_iteration_radius(g) - spectral_radius(g)) <= 1e-8

    def test_relabel_invariance(self):
        gen = rng(21)
        g = random_graph(gen, 12)
        ref = adjacency_spectrum(g)
        for _ in range(100):
            perm = [int(x) for x in gen.permutation(12)]
            assert np.allclose(adjacency_spectrum(g.relabel(perm)), ref, atol=1e-9)


class TestQuotient:
    def test_star_quotient(self):
        g = build_G_star(ExtremalParams(13, 1, 1, 2))
        q = quotient_matrix(g, Partition(((0, 1), tuple(range(2, 11)), (11, 12))))
        assert q.matrix == ((1, 9, 2), (2, 8, 0), (2, 0, 0)) and q.equitable
        assert q.coeffs == [1, -9, -14, 32]

    def test_one_block(self):
        q = quotient_matrix(complete(6), Partition((tuple(range(6)),)))
        assert q.matrix == ((5,),) and q.equitable

    def test_path_not_equitable(self):
        p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        q = quotient_matrix(p4, Partition(((0,), (1, 2, 3))))
        assert not q.equitable
        assert q.matrix == ((0, 1), (Fraction(1, 3), Fraction(4, 3)))

    def test_bad_partition(self):
        with pytest.raises(GraphInputError):
            quotient_matrix(complete(3), Partition(((0, 1),)))
        with pytest.raises(GraphInputError):
            quotient_matrix(complete(3), Partition(((0, 1), (1, 2))))

    def test_json_keys(self):
        d = char_cubic("Bstar", 13, 1, 1, 2).to_json()
        assert {"family", "params", "matrix", "coeffs", "theta1", "theta2", "theta3"} <= set(d)


class TestCubics:
    def test_spot_value(self):
        q = char_cubic("Bstar", 13, 1, 1, 2)
        assert q.coeffs == [1, -9, -14, 32]
        assert poly.charpoly([[1, 9, 2], [2, 8, 0], [2, 0, 0]]) == [1, -9, -14, 32]

    def test_b2_at_delta_is_bstar(self):
        for n, b, k, d in [(13, 1, 1, 2), (25, 3, 1, 3), (40, 5, 2, 4)]:
            assert char_cubic("B2", n, b, k, s=d).coeffs == char_cubic("Bstar", n, b, k, d).coeffs

    def test_inadmissible(self):
        with pytest.raises(ParameterError):
            char_cubic("Bstar", 4, 1, 1, 2)
        with pytest.raises(ParameterError):
            char_cubic("B3", 13, 1, 1, 3, 4)
        with pytest.raises(ParameterError):
            char_cubic("B4", 13, 1, 1, 3, 2)

    def test_closed_form_equals_computed_on_grid(self):
        for fam, n, b, k, d, s in family_grid():
            closed = char_cubic(fam, n, b, k, d, s)
            _, computed = family_quotient(fam, n, b, k, d, s)
            assert computed.equitable
            assert computed.matrix == closed.matrix
            assert computed.coeffs == closed.coeffs

    def test_largest_root_matches_radius_on_grid(self):
        for fam, n, b, k, d, s in family_grid(n_max=30):
            g, q = family_quotient(fam, n, b, k, d, s)
            assert abs(q.largest_root() - spectral_radius(g)) <= 1e-8


class TestPoly:
    def test_triple_root(self):
        assert poly.largest_real_root([1, -3, 3, -1], 1e-12) == pytest.approx(1, abs=1e-12)
        assert poly.real_roots([1, -3, 3, -1]) == [pytest.approx(1)]

    def test_random_cubics_match_numpy(self):
        gen = rng(30)
        for _ in range(300):
            coeffs = [1] + [int(x) for x in gen.integers(-50, 51, size=3)]
            ref = np.roots(coeffs)
            real = sorted({round(r.real, 6) for r in ref if abs(r.imag) < 1e-9}, reverse=True)
            ours = poly.real_roots(coeffs, 1e-12)
            if len(ours) == len(real):
                assert np.allclose(ours, real, atol=1e-5)
            # a double root may show as a tiny complex pair in numpy
            assert abs(poly.largest_real_root(coeffs) - max(r.real for r in ref if abs(r.imag) < 1e-4)) < 1e-4

    def test_charpoly_matches_numpy(self):
        gen = rng(31)
        for _ in range(100):
            r = int(gen.integers(1, 6))
            m = gen.integers(-4, 5, size=(r, r))
            assert np.allclose(poly.charpoly(m.tolist()), np.poly(m), atol=1e-6)

    def test_format(self):
        assert poly.format_poly([1, -9, -14, 32]) == "x^3 - 9x^2 - 14x + 32"


class TestInterlacing:
    def test_triangle(self):
        assert interlacing_check(complete(3).adjacency_matrix(), [0, 1])

    def test_random_matrices(self):
        gen = rng(40)
        for _ in range(200):
            size = int(gen.integers(1, 10))
            m = gen.integers(-5, 6, size=(size, size))
            m = m + m.T
            keep = sorted(gen.choice(size, size=int(gen.integers(1, size + 1)), replace=False).tolist())
            assert interlacing_check(m, keep)

    def test_rejects_asymmetric(self):
        with pytest.raises(ParameterError):
            interlacing_check(np.array([[0, 1], [0, 0]]), [0])


class TestRhoComparator:
    def test_example(self):
        lhs, rhs = compare_rho_lemma26(10, 2, 1, [4, 2, 2])
        assert lhs < rhs

    def test_extremal_rejected(self):
        with pytest.raises(ParameterError):
            compare_rho_lemma26(10, 2, 1, [6, 1, 1])

    def test_random_tuples(self):
        gen = rng(26)
        for _ in range(500):
            compare_rho_lemma26(*random_lemma_tuple(gen))


def test_subgraph_monotonicity():
    gen = rng(25)
    for _ in range(500):
        g = random_connected(gen, int(gen.integers(2, 13)))
        edges = g.edges()
        keep = [e for e in edges if gen.random() < 0.8]
        h = build_graph(g.n, keep)
        rg, rh = spectral_radius(g), spectral_radius(h)
        assert rh <= rg + 1e-9
        if len(keep) < len(edges):
            assert rh < rg - 1e-9


def test_phi_b3_increasing_beyond_anchor():
    gen = rng(27)
    pts = [p for p in family_grid(n_max=60) if p[0] == "B3"]
    checked = 0
    while checked < 1000:
        _, n, b, k, d, s = pts[int(gen.integers(len(pts)))]
        if n < b * d * d - b * k or n < (b * s - b * k + 2) * (d + 1 - s) + s:
            continue
        cubic = char_cubic("B3", n, b, k, d, s)
        x = Fraction(n - b * d + b * k - 2) + Fraction(int(gen.integers(0, 400)), 7)
        y = x + Fraction(int(gen.integers(1, 400)), 7)
        assert cubic(y) > cubic(x)
        checked += 1
