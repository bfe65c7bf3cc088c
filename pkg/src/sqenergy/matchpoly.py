"""Exact integer polynomials: matching counts, matching polynomials, and
characteristic polynomials (unicyclic identity + Faddeev-LeVerrier oracle).

All coefficient arithmetic is arbitrary-precision; nothing here rounds.
"""

from __future__ import annotations

import numpy as np

from .errors import TooLarge
from .graphs import Graph, UnicyclicDecomposition

LEVERRIER_MAX_N = 64
BRUTE_FORCE_MAX_EDGES = 24


class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(int(x) for x in c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, x in enumerate(other.coeffs):
            a[i] -= x
        return IntPoly(a)

    def scaled(self, factor: int) -> "IntPoly":
        return IntPoly([factor * x for x in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_decimal_strings(self):
        """Lowest power first, for the report JSON."""
        return [str(x) for x in self.coeffs]

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


class MatchingCounts:
    """Vector (m_0, m_1, ...) of matching counts of a host graph of order v."""

    __slots__ = ("counts", "v")

    def __init__(self, counts, v: int):
        c = [int(x) for x in counts]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if len(c) - 1 > v // 2:
            raise ValueError(f"m_j nonzero beyond j = floor(v/2) for v={v}")
        self.counts = tuple(c)
        self.v = v

    def __eq__(self, other):
        return (
            isinstance(other, MatchingCounts)
            and self.counts == other.counts
            and self.v == other.v
        )

    def __repr__(self):
        return f"MatchingCounts({list(self.counts)}, v={self.v})"


# --- small integer-vector helpers ---

def _vec_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _vec_conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


# --- matching counts ---

def _find_cycle_edge(adj):
    """Any edge lying on a cycle (a DFS back edge), or None for forests."""
    n = len(adj)
    state = [0] * n  # 0 unseen, 1 done
    parent = [-1] * n
    for root in range(n):
        if state[root]:
            continue
        stack = [root]
        state[root] = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not state[w]:
                    state[w] = 1
                    parent[w] = v
                    stack.append(w)
                elif w != parent[v]:
                    return (v, w)
    return None


def _forest_counts(adj):
    """Matching-count vector of a forest via the rooted subtree DP."""
    n = len(adj)
    seen = [False] * n
    total = [1]
    for root in range(n):
        if seen[root]:
            continue
        order = []
        parent = [-1] * n
        stack = [root]
        seen[root] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    stack.append(w)
        children = {v: [] for v in order}
        for v in order:
            if parent[v] >= 0:
                children[parent[v]].append(v)
        # unmatched[v] / matched[v]: matchings of the subtree with v free / covered
        unmatched = {}
        matched = {}
        for v in reversed(order):
            a, b = [1], [0]
            for c in children[v]:
                tc = _vec_add(unmatched[c], matched[c])
                na = _vec_conv(a, tc)
                nb = _vec_add(_vec_conv(b, tc), [0] + _vec_conv(a, unmatched[c]))
                a, b = na, nb
            unmatched[v] = a
            matched[v] = b
        total = _vec_conv(total, _vec_add(unmatched[root], matched[root]))
    return total


def _counts_rec(adj):
    e = _find_cycle_edge(adj)
    if e is None:
        return _forest_counts(adj)
    u, v = e
    # matchings avoiding e ...
    adj_minus_e = [set(s) for s in adj]
    adj_minus_e[u].discard(v)
    adj_minus_e[v].discard(u)
    without = _counts_rec(adj_minus_e)
    # ... plus matchings using e, i.e. matchings of G - u - v shifted by one
    adj_minus_uv = [set() if i in (u, v) else {w for w in s if w not in (u, v)}
                    for i, s in enumerate(adj)]
    using = _counts_rec(adj_minus_uv)
    return _vec_add(without, [0] + using)


def matching_counts(g: Graph) -> MatchingCounts:
    """Exact matching counts via cycle-edge deletion down to forest DPs."""
    adj = [set(ns) for ns in g.adj]
    return MatchingCounts(_counts_rec(adj), g.n)


def brute_force_matching_counts(g: Graph) -> MatchingCounts:
    """Scan all 2^|E| edge subsets and keep the pairwise-disjoint ones."""
    m = g.m
    if m > BRUTE_FORCE_MAX_EDGES:
        raise TooLarge(f"brute force capped at {BRUTE_FORCE_MAX_EDGES} edges, got {m}")
    if m == 0:
        return MatchingCounts([1], g.n)
    touched = sorted({v for e in g.edges for v in e})
    vid = {v: i for i, v in enumerate(touched)}
    em = np.array([(1 << vid[u]) | (1 << vid[v]) for u, v in g.edges], dtype=np.int64)
    size = 1 << m
    vmask = np.zeros(size, dtype=np.int64)
    ok = np.ones(size, dtype=bool)
    # build each subset from its lowest set bit; the remainder has only
    # higher bits, so fill in decreasing lowest-bit order
    for i in reversed(range(m)):
        r = np.arange(1 << (m - i - 1), dtype=np.int64)
        rest = r << (i + 1)
        cur = rest | (1 << i)
        ok[cur] = ok[rest] & ((vmask[rest] & em[i]) == 0)
        vmask[cur] = vmask[rest] | em[i]
    sizes = np.bitwise_count(np.arange(size, dtype=np.uint64)).astype(np.int64)
    hist = np.bincount(sizes[ok], minlength=1)
    return MatchingCounts([int(x) for x in hist], g.n)


# --- polynomials ---

def poly_from_matching_counts(mc: MatchingCounts) -> IntPoly:
    """mu(x) = sum_j (-1)^j m_j x^(v-2j)."""
    coeffs = [0] * (mc.v + 1)
    for j, mj in enumerate(mc.counts):
        coeffs[mc.v - 2 * j] = (-1) ** j * mj
    return IntPoly(coeffs)


def matching_poly(g: Graph) -> IntPoly:
    return poly_from_matching_counts(matching_counts(g))


def char_poly_unicyclic(d: UnicyclicDecomposition) -> IntPoly:
    """Characteristic polynomial as mu_G - 2 mu_F (F = G minus the cycle)."""
    return matching_poly(d.graph) - matching_poly(d.forest).scaled(2)


def _leverrier_int64(A):
    """Faddeev-LeVerrier in int64 with proven-magnitude guards.

    Returns the coefficient list [1, c_1, ..., c_n] or None if any step
    could exceed the int64 range (caller falls back to bignum).
    """
    n = A.shape[0]
    limit = 1 << 62
    cs = [1]
    M = A.copy()
    for j in range(1, n + 1):
        mx = int(np.max(np.abs(M))) if n else 0
        if n * mx >= limit:
            return None
        t = int(np.trace(M))
        if t % j:
            raise AssertionError("LeVerrier trace not divisible; solver bug")
        c = -t // j
        cs.append(c)
        if j == n:
            break
        M = M + c * np.eye(n, dtype=np.int64)
        if n * (mx + abs(c)) >= limit:
            return None
        M = A @ M
    return cs


def _leverrier_bignum(A_obj, n):
    cs = [1]
    M = A_obj.copy()
    for j in range(1, n + 1):
        t = int(np.trace(M))
        if t % j:
            raise AssertionError("LeVerrier trace not divisible; solver bug")
        c = -t // j
        cs.append(c)
        if j == n:
            break
        M = M + c * np.eye(n, dtype=object)
        M = A_obj @ M
    return cs


def char_poly_leverrier(g: Graph) -> IntPoly:
    """Exact det(xI - A) by the Faddeev-LeVerrier trace recurrence."""
    n = g.n
    if n > LEVERRIER_MAX_N:
        raise TooLarge(f"LeVerrier oracle capped at n={LEVERRIER_MAX_N}, got {n}")
    if n == 0:
        return IntPoly([1])
    A = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        A[u, v] = 1
        A[v, u] = 1
    cs = _leverrier_int64(A)
    if cs is None:
        cs = _leverrier_bignum(A.astype(object), n)
    # cs = [1, c_1, ..., c_n] highest power first
    return IntPoly(list(reversed(cs)))
