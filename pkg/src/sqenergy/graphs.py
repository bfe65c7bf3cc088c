"""Simple undirected graphs: parsing, unicyclic classification, generation.

Vertices are dense 0-based integers.  Graphs are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import (
    BadHeader,
    BadParameters,
    DuplicateEdge,
    LabelOutOfRange,
    MalformedLine,
    NotConnected,
    SelfLoop,
    TooLarge,
    TruncatedPayload,
    VertexOutOfRange,
    WrongEdgeCount,
)

ENUMERATION_MAX_N = 8


class Graph:
    """Simple undirected graph on vertices 0..n-1 with a canonical edge set."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise BadParameters(f"negative vertex count {n}")
        seen = set()
        canon = []
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < n):
                raise LabelOutOfRange(f"edge ({u},{v}) outside [0,{n})")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u},{v}) repeated")
            seen.add((u, v))
            canon.append((u, v))
        canon.sort()
        self.n = n
        self.edges = tuple(canon)
        adj = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(ns)) for ns in adj)

    @classmethod
    def _from_canonical(cls, n, sorted_edges):
        """Trusted constructor: edges already (u<v), sorted, distinct, in range."""
        g = cls.__new__(cls)
        g.n = n
        g.edges = tuple(sorted_edges)
        adj = [[] for _ in range(n)]
        for u, v in g.edges:
            adj[u].append(v)
            adj[v].append(u)
        g.adj = tuple(tuple(ns) for ns in adj)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The unique cycle C of a unicyclic graph plus the forest F = G - V(C)."""

    graph: Graph
    cycle_vertices: tuple  # cyclic order, starts at the min-label cycle vertex
    k: int
    residue: int  # k mod 4
    forest: Graph  # labels compacted to 0..n-k-1
    forest_labels: tuple  # forest label -> original label


# --- parsing ---

def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines (optional "n <count>" first line; '#' comments)."""
    declared_n = None
    raw_edges = []
    first = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tok = s.split()
        if first and tok[0] == "n":
            first = False
            if len(tok) != 2 or not tok[1].isdigit():
                raise MalformedLine(f"line {lineno}: bad vertex-count line {s!r}")
            declared_n = int(tok[1])
            continue
        first = False
        if len(tok) != 2:
            raise MalformedLine(f"line {lineno}: expected two tokens, got {s!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-numeric token in {s!r}") from None
        if u < 0 or v < 0:
            raise LabelOutOfRange(f"line {lineno}: negative label in {s!r}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at {u}")
        a, b = (u, v) if u < v else (v, u)
        if (a, b) in raw_edges:
            raise DuplicateEdge(f"line {lineno}: edge ({a},{b}) repeated")
        raw_edges.append((a, b))
    if declared_n is None:
        n = 1 + max((v for _, v in raw_edges), default=-1)
    else:
        n = declared_n
        for u, v in raw_edges:
            if v >= n:
                raise LabelOutOfRange(f"edge ({u},{v}) exceeds declared n={n}")
    return Graph(n, raw_edges)


def parse_graph6(text: str) -> Graph:
    """Decode one graph in graph6 format (6-bit groups, byte offset 63)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise BadHeader("empty graph6 input")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not (63 <= b <= 126):
            raise BadHeader(f"byte {b} outside graph6 range 63..126")
    vals = [b - 63 for b in data]
    # vertex count: short form, or 126-prefixed long forms
    if vals[0] < 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise BadHeader("truncated vertex-count header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos < need:
        raise TruncatedPayload(f"need {need} payload bytes, got {len(vals) - pos}")
    bits = []
    for v in vals[pos:pos + need]:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


# --- structure ---

def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def induced_delete(g: Graph, remove) -> tuple[Graph, tuple]:
    """Induced subgraph after deleting `remove`; returns (graph, kept labels)."""
    remove = set(remove)
    for v in remove:
        if not (0 <= v < g.n):
            raise VertexOutOfRange(f"vertex {v} outside [0,{g.n})")
    kept = [v for v in range(g.n) if v not in remove]
    relabel = {old: new for new, old in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u not in remove and v not in remove]
    return Graph._from_canonical(len(kept), sorted(edges)), tuple(kept)


def classify_unicyclic(g: Graph) -> UnicyclicDecomposition:
    """Locate the unique cycle by leaf pruning and split off the forest."""
    if not is_connected(g):
        raise NotConnected(f"graph with n={g.n} is not connected")
    if g.m != g.n:
        raise WrongEdgeCount(f"graph is not unicyclic: {g.m} edges on {g.n} vertices")
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    queue = [v for v in range(g.n) if deg[v] == 1]
    while queue:
        v = queue.pop()
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    cycle_set = [v for v in range(g.n) if alive[v]]
    k = len(cycle_set)
    # walk the cycle from the minimum label toward its smaller cycle neighbor
    start = cycle_set[0]
    nbrs = [w for w in g.adj[start] if alive[w]]
    order = [start, min(nbrs)]
    while len(order) < k:
        prev, cur = order[-2], order[-1]
        nxt = next(w for w in g.adj[cur] if alive[w] and w != prev)
        order.append(nxt)
    forest, kept = induced_delete(g, set(cycle_set))
    return UnicyclicDecomposition(
        graph=g,
        cycle_vertices=tuple(order),
        k=k,
        residue=k % 4,
        forest=forest,
        forest_labels=kept,
    )


# --- generation ---

def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise BadParameters(f"cycle length {k} < 3")
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return Graph(k, edges)


def random_unicyclic(n: int, k: int, seed: int) -> Graph:
    """Cycle on 0..k-1, then each v in k..n-1 hangs off a uniform earlier vertex."""
    if k < 3 or k > n:
        raise BadParameters(f"need 3 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    for v in range(k, n):
        edges.append((rng.randrange(v), v))
    return Graph(n, edges)


# --- labeled enumeration (exhaustive verification substrate) ---

def edge_bit_table(n: int):
    """Lexicographic pair list and pair -> bit-index map for n-vertex graphs."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    return pairs, index


def _tree_from_prufer(seq, n):
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        for leaf in range(n):
            if deg[leaf] == 1:
                break
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[leaf] = 0
        deg[x] -= 1
    u = deg.index(1)
    v = deg.index(1, u + 1)
    edges.append((u, v))
    return edges


def enumerate_unicyclic_masks(n: int) -> Iterator[int]:
    """Raw stream of labeled unicyclic graphs as edge bitmasks.

    Every spanning tree (one per Prüfer sequence) is completed by each
    non-tree edge, so a graph with cycle length k appears exactly k times.
    """
    if n > ENUMERATION_MAX_N:
        raise TooLarge(f"enumeration capped at n={ENUMERATION_MAX_N}, got {n}")
    if n < 3:
        raise BadParameters(f"no unicyclic graphs below n=3, got {n}")
    _, index = edge_bit_table(n)
    nbits = n * (n - 1) // 2
    full = (1 << nbits) - 1
    for seq in product(range(n), repeat=n - 2):
        tree = 0
        for e in _tree_from_prufer(seq, n):
            tree |= 1 << index[e]
        rest = full & ~tree
        while rest:
            low = rest & -rest
            yield tree | low
            rest ^= low


def graph_from_mask(n: int, mask: int, pairs=None) -> Graph:
    if pairs is None:
        pairs, _ = edge_bit_table(n)
    edges = []
    i = 0
    while mask:
        if mask & 1:
            edges.append(pairs[i])
        mask >>= 1
        i += 1
    return Graph._from_canonical(n, edges)


def enumerate_unicyclic_labeled(n: int) -> Iterator[Graph]:
    """Raw (duplicated) stream of all labeled unicyclic graphs on n vertices."""
    pairs, _ = edge_bit_table(n)
    for mask in enumerate_unicyclic_masks(n):
        yield graph_from_mask(n, mask, pairs)
