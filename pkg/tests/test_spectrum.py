import math
import random

import pytest

from sqenergy.errors import NonpositiveT, TooLarge
from sqenergy.graphs import Graph, cycle_graph, parse_edge_list, random_unicyclic
from sqenergy.spectrum import (
    eigenvalues_symmetric,
    square_energies,
    theta_eigen,
)

PAW = parse_edge_list("n 4\n0 1\n1 2\n2 0\n2 3")


def test_triangle_spectrum():
    s = eigenvalues_symmetric(cycle_graph(3))
    assert s.eigenvalues == pytest.approx((2.0, -1.0, -1.0), abs=1e-12)
    assert s.residual_bound <= 1e-14 * 3


def test_single_edge_spectrum():
    s = eigenvalues_symmetric(Graph(2, [(0, 1)]))
    assert s.eigenvalues == pytest.approx((1.0, -1.0), abs=1e-13)


def test_cycle_spectra_match_cosines():
    for k in range(3, 13):
        s = eigenvalues_symmetric(cycle_graph(k))
        expected = sorted((2 * math.cos(2 * math.pi * j / k) for j in range(k)),
                          reverse=True)
        for got, want in zip(s.eigenvalues, expected):
            assert abs(got - want) < 1e-10


def test_trace_identities_random():
    rng = random.Random(3)
    for trial in range(30):
        n = rng.randint(3, 40)
        g = random_unicyclic(n, rng.choice(range(3, n + 1)), trial)
        s = eigenvalues_symmetric(g)
        assert abs(sum(s.eigenvalues)) <= 1e-10 * n
        assert abs(sum(x * x for x in s.eigenvalues) - 2 * g.m) <= 1e-9 * n


def test_too_large():
    with pytest.raises(TooLarge):
        eigenvalues_symmetric(Graph(2001, []))
    with pytest.raises(TooLarge):
        eigenvalues_symmetric(Graph(0, []))


class TestSquareEnergies:
    def test_triangle(self):
        se = square_energies(eigenvalues_symmetric(cycle_graph(3)))
        assert se.s_plus == pytest.approx(4.0, abs=1e-12)
        assert se.s_minus == pytest.approx(2.0, abs=1e-12)
        assert se.delta == pytest.approx(2.0, abs=1e-12)

    def test_c4_zeros_dropped(self):
        se = square_energies(eigenvalues_symmetric(cycle_graph(4)))
        assert se.s_plus == pytest.approx(4.0, abs=1e-12)
        assert se.s_minus == pytest.approx(4.0, abs=1e-12)
        assert se.delta == pytest.approx(0.0, abs=1e-12)

    def test_c5_closed_form(self):
        se = square_energies(eigenvalues_symmetric(cycle_graph(5)))
        assert se.s_plus == pytest.approx(4.7639320225, abs=1e-9)
        assert se.s_minus == pytest.approx(5.2360679775, abs=1e-9)
        assert se.delta == pytest.approx(-2 * (1 / math.cos(math.pi / 5) - 1), abs=1e-12)

    def test_sum_is_twice_edges(self):
        rng = random.Random(9)
        for trial in range(20):
            n = rng.randint(3, 30)
            g = random_unicyclic(n, rng.choice(range(3, n + 1)), trial)
            se = square_energies(eigenvalues_symmetric(g))
            assert abs(se.s_plus + se.s_minus - 2 * n) <= 1e-8 * n


class TestThetaEigen:
    def test_triangle_at_one(self):
        s = eigenvalues_symmetric(cycle_graph(3))
        got = theta_eigen(s, 1.0)
        assert got == pytest.approx(math.atan(2) + 2 * math.atan(-1), abs=1e-14)
        assert got == pytest.approx(-math.atan(0.5), abs=1e-14)

    def test_vanishes_fast_at_large_t(self):
        # trace zero cancels the 1/t term, leaving O(t^-3)
        s = eigenvalues_symmetric(cycle_graph(3))
        assert abs(theta_eigen(s, 1e6)) < 1e-11

    def test_edgeless_graph(self):
        s = eigenvalues_symmetric(Graph(4, []))
        assert theta_eigen(s, 0.7) == 0.0

    def test_bounded_by_n_half_pi(self):
        s = eigenvalues_symmetric(PAW)
        for t in (1e-6, 0.1, 1.0, 100.0):
            assert abs(theta_eigen(s, t)) <= 4 * math.pi / 2

    def test_nonpositive_t(self):
        s = eigenvalues_symmetric(cycle_graph(3))
        with pytest.raises(NonpositiveT):
            theta_eigen(s, 0.0)
        with pytest.raises(NonpositiveT):
            theta_eigen(s, -1.0)

    def test_monotone_decreasing_for_nonnegative_spectrum(self):
        from sqenergy.spectrum import Spectrum
        s = Spectrum(eigenvalues=(2.0, 1.0, 0.0), residual_bound=0.0, n=3)
        ts = [0.25, 0.5, 1.0, 2.0, 8.0]
        vals = [theta_eigen(s, t) for t in ts]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_derivative_matches_eigenvalue_formula(self):
        s = eigenvalues_symmetric(PAW)
        for t in (0.5, 1.0, 3.0):
            h = 1e-5
            fd = (theta_eigen(s, t + h) - theta_eigen(s, t - h)) / (2 * h)
            exact = -sum(lam / (lam * lam + t * t) for lam in s.eigenvalues)
            assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))
