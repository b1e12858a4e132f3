"""Simple undirected graphs on the vertex set {0, ..., n-1}.

Graphs are immutable values.  Edges are stored as normalized pairs ``(u, v)``
with ``u < v``.  The "edge index" used for bitmasks throughout the package is
the column-major upper-triangle order of graph6:
``(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...``, i.e. pair ``(i, j)`` has
index ``j*(j-1)//2 + i``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

MAX_ENUMERATION_ORDER = 7
GRAPH6_MAX_ORDER = 62

FAMILIES = ("empty", "path", "cycle", "complete", "star")


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Graph6Error(ValueError):
    """Malformed graph6 line; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs of K_n in edge-index order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop edge {e!r}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e!r} has an endpoint outside 0..{self.n - 1}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order."""
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @cached_property
    def edge_mask(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << pair_index(u, v)
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled to 0..len-1 preserving vertex order."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), frozenset((pos[u], pos[v]) for u, v in self.edges
                                        if u in pos and v in pos))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n,
                     self.edges | frozenset((u + shift, v + shift) for u, v in other.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_list})"


@dataclass(frozen=True)
class EdgeOrdering:
    """A bijection ``eta`` from the edges of a graph onto 1..|E|."""

    eta: dict

    def __post_init__(self):
        labels = sorted(self.eta.values())
        if labels != list(range(1, len(labels) + 1)):
            raise GraphError("edge ordering must map the edges bijectively onto 1..|E|")

    def __hash__(self):
        return hash(tuple(sorted(self.eta.items())))

    @classmethod
    def identity(cls, g: Graph) -> EdgeOrdering:
        """Label edges 1..m in lexicographic order."""
        return cls({e: i + 1 for i, e in enumerate(g.edge_list)})

    @classmethod
    def random(cls, g: Graph, rng: random.Random) -> EdgeOrdering:
        edges = list(g.edge_list)
        rng.shuffle(edges)
        return cls({e: i + 1 for i, e in enumerate(edges)})

    def check_graph(self, g: Graph) -> None:
        if set(self.eta) != set(g.edges):
            raise GraphError("edge ordering does not cover exactly the edges of the graph")


def make_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    edges = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise GraphError(f"loop edge {tuple(pair)!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {tuple(pair)!r} has an endpoint outside 0..{n - 1}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def generate(family: str, n: int) -> Graph:
    """Named graph family with canonical labeling.

    ``star`` of order n is K_{1,n-1} centred at vertex 0.
    """
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < 1:
        raise GraphError(f"{family} graph needs n >= 1, got {n}")
    if family == "empty":
        return Graph(n)
    if family == "path":
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return make_graph(n, combinations(range(n), 2))
    return make_graph(n, [(0, i) for i in range(1, n)])


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    if pairs is None:
        pairs = all_pairs(n)
    return Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in edge-mask order."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"labeled enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        g = graph_from_mask(n, mask, pairs)
        if connected_only and not is_connected(g):
            continue
        yield g


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(g.components()) == 1


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    edge_count: int
    triangle_count: int
    is_connected: bool
    component_count: int
    is_tree: bool
    girth: int | None  # None for forests
    is_claw_free: bool


def triangle_count(g: Graph) -> int:
    adj = g.adjacency
    return sum(len(adj[u] & adj[v]) for u, v in g.edges) // 3


def girth(g: Graph) -> int | None:
    best = None
    adj = g.adjacency
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_claw_free(g: Graph) -> bool:
    adj = g.adjacency
    for v in range(g.n):
        for a, b, c in combinations(sorted(adj[v]), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return False
    return True


def structural_queries(g: Graph) -> GraphStats:
    comps = len(g.components())
    connected = comps == 1
    return GraphStats(
        max_degree=max(g.degrees, default=0),
        edge_count=g.m,
        triangle_count=triangle_count(g),
        is_connected=connected,
        component_count=comps,
        is_tree=connected and g.m == g.n - 1,
        girth=girth(g),
        is_claw_free=is_claw_free(g),
    )


def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def _require_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in g.edges:
        raise GraphError(f"edge {tuple(e)!r} is not in the graph")
    return key


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    key = _require_edge(g, e)
    return Graph(g.n, g.edges - {key})


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the endpoints of ``e``.

    The merged vertex keeps the smaller label and labels above the larger
    endpoint shift down by one.  Parallel edges collapse; the loop is dropped.
    """
    u, v = _require_edge(g, e)

    def relabel(w):
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = set()
    for a, b in g.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph(g.n - 1, frozenset(edges))


# graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Short-form graph6 line (no header, no trailing newline)."""
    if g.n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {g.n}", 0)
    nbits = g.n * (g.n - 1) // 2
    mask = g.edge_mask
    out = [chr(63 + g.n)]
    for start in range(0, nbits, 6):
        group = 0
        for b in range(start, start + 6):
            group <<= 1
            if b < nbits and mask >> b & 1:
                group |= 1
        out.append(chr(63 + group))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the graph6 range 63..126", i)
    n = ord(line[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"only the short form (n <= {GRAPH6_MAX_ORDER}) is supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit section: expected {nbytes} data bytes, got {len(body)}",
                          len(line))
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data after {nbytes} data bytes", 1 + nbytes)
    pairs = all_pairs(n)
    edges = []
    for k, ch in enumerate(body):
        group = ord(ch) - 63
        for j in range(6):
            b = 6 * k + j
            if group >> (5 - j) & 1:
                if b >= nbits:
                    raise Graph6Error("nonzero padding bits", 1 + k)
                edges.append(pairs[b])
    return Graph(n, frozenset(edges))


def read_graph6_file(path) -> list[Graph]:
    """Read a graph6 file; blank lines are skipped.

    Errors are re-raised with the 1-based line number prepended.
    """
    graphs = []
    with open(path, "r", encoding="ascii", errors="surrogateescape") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc
    return graphs
