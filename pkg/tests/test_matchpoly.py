import random

import numpy as np
import pytest

from sqenergy.errors import TooLarge
from sqenergy.graphs import Graph, classify_unicyclic, cycle_graph, enumerate_unicyclic_labeled, parse_edge_list, random_unicyclic
from sqenergy.matchpoly import (
    IntPoly,
    MatchingCounts,
    _leverrier_bignum,
    brute_force_matching_counts,
    char_poly_leverrier,
    char_poly_unicyclic,
    matching_counts,
    matching_poly,
)

PAW = parse_edge_list("n 4\n0 1\n1 2\n2 0\n2 3")


def random_graph(n, m, rng):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    return Graph(n, pairs[:m])


class TestMatchingCounts:
    def test_triangle(self):
        assert matching_counts(cycle_graph(3)).counts == (1, 3)

    def test_paw(self):
        assert matching_counts(PAW).counts == (1, 4, 1)

    def test_empty_graph(self):
        mc = matching_counts(Graph(0, []))
        assert mc.counts == (1,) and mc.v == 0

    def test_star_has_no_two_matching(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert matching_counts(star).counts == (1, 3)

    def test_m0_and_m1(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_graph(8, rng.randint(0, 12), rng)
            c = matching_counts(g).counts
            assert c[0] == 1
            assert (c[1] if len(c) > 1 else 0) == g.m


class TestBruteForce:
    def test_examples(self):
        assert brute_force_matching_counts(cycle_graph(3)).counts == (1, 3)
        assert brute_force_matching_counts(cycle_graph(5)).counts == (1, 5, 5)
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert brute_force_matching_counts(star).counts == (1, 3)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            brute_force_matching_counts(cycle_graph(25))

    def test_agreement_on_mixed_corpus(self):
        rng = random.Random(7)
        for trial in range(40):
            n = rng.randint(2, 9)
            m = rng.randint(0, min(12, n * (n - 1) // 2))
            g = random_graph(n, m, rng)
            assert matching_counts(g) == brute_force_matching_counts(g)


class TestMatchingPoly:
    def test_single_edge(self):
        assert matching_poly(Graph(2, [(0, 1)])) == IntPoly([-1, 0, 1])

    def test_triangle(self):
        assert matching_poly(cycle_graph(3)) == IntPoly([0, -3, 0, 1])

    def test_paw(self):
        assert matching_poly(PAW) == IntPoly([1, 0, -4, 0, 1])

    def test_parity_and_alternating_signs(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_graph(7, rng.randint(0, 10), rng)
            mu = matching_poly(g)
            nz = [(i, c) for i, c in enumerate(mu.coeffs) if c]
            for i, c in nz:
                assert (g.n - i) % 2 == 0
                assert (c > 0) == ((g.n - i) // 2 % 2 == 0)

    def test_edge_deletion_recurrence(self):
        rng = random.Random(13)
        for _ in range(20):
            g = random_graph(7, rng.randint(1, 10), rng)
            u, v = g.edges[rng.randrange(g.m)]
            minus_e = Graph(g.n, [e for e in g.edges if e != (u, v)])
            kept = [w for w in range(g.n) if w not in (u, v)]
            relabel = {w: i for i, w in enumerate(kept)}
            minus_uv = Graph(g.n - 2, [(relabel[a], relabel[b]) for a, b in g.edges
                                       if a not in (u, v) and b not in (u, v)])
            lhs = matching_poly(g)
            # mu(G) = mu(G-e) - mu(G-u-v); G-u-v has degree n-2
            rhs = matching_poly(minus_e) - IntPoly(matching_poly(minus_uv).coeffs)
            assert lhs == rhs


class TestCharPoly:
    def test_triangle(self):
        d = classify_unicyclic(cycle_graph(3))
        expected = IntPoly([-2, -3, 0, 1])  # (x-2)(x+1)^2
        assert char_poly_unicyclic(d) == expected
        assert char_poly_leverrier(cycle_graph(3)) == expected

    def test_paw(self):
        d = classify_unicyclic(PAW)
        expected = IntPoly([1, -2, -4, 0, 1])
        assert char_poly_unicyclic(d) == expected
        assert char_poly_leverrier(PAW) == expected

    def test_c4(self):
        d = classify_unicyclic(cycle_graph(4))
        expected = IntPoly([0, 0, -4, 0, 1])  # roots {2, 0, 0, -2}
        assert char_poly_unicyclic(d) == expected
        assert char_poly_leverrier(cycle_graph(4)) == expected

    def test_leverrier_small(self):
        assert char_poly_leverrier(Graph(2, [(0, 1)])) == IntPoly([-1, 0, 1])
        assert char_poly_leverrier(Graph(1, [])) == IntPoly([0, 1])

    def test_leverrier_too_large(self):
        with pytest.raises(TooLarge):
            char_poly_leverrier(Graph(65, []))

    def test_leverrier_monic_and_degree(self):
        g = random_unicyclic(17, 5, 3)
        p = char_poly_leverrier(g)
        assert p.degree == 17 and p.coeffs[-1] == 1

    def test_bignum_path_matches_int64(self):
        g = random_unicyclic(30, 7, 9)
        A = np.zeros((30, 30), dtype=np.int64)
        for u, v in g.edges:
            A[u, v] = A[v, u] = 1
        via_bignum = _leverrier_bignum(A.astype(object), 30)
        assert IntPoly(list(reversed(via_bignum))) == char_poly_leverrier(g)

    def test_unicyclic_identity_exhaustive_n6(self):
        seen = set()
        for g in enumerate_unicyclic_labeled(6):
            if g in seen:
                continue
            seen.add(g)
            d = classify_unicyclic(g)
            assert char_poly_unicyclic(d) == char_poly_leverrier(g)


class TestMatchingCountsType:
    def test_rejects_overlong_vector(self):
        with pytest.raises(ValueError):
            MatchingCounts([1, 2, 1], v=3)

    def test_trims_trailing_zeros(self):
        assert MatchingCounts([1, 3, 0], v=4).counts == (1, 3)
