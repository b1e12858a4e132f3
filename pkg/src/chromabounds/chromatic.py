"""Exact chromatic polynomials by four independent routes.

* deletion-contraction (the default engine, memoized),
* inclusion-exclusion over spanning edge subsets,
* Whitney's broken-cycle expansion under an edge ordering,
* brute-force counting of proper colorings at integer points.

The ``*_catalog`` functions run the subset-sum and brute-force oracles for
every labeled graph of a given order at once (indexed by edge mask) using
fast subset-sum transforms; they are the same computations, aggregated.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .graph import EdgeOrdering, Graph, all_pairs, pair_index
from .poly import IntPolynomial

MAX_ENGINE_ORDER = 14
MAX_SUBSET_EDGES = 24
ENUMERATION_BUDGET = 10 ** 8

_X = IntPolynomial.x()


class ResourceLimitError(RuntimeError):
    """Input exceeds one of the fixed computation caps."""


# deletion-contraction -----------------------------------------------------

def _components(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


@lru_cache(maxsize=1 << 18)
def _dc(n: int, edges: tuple) -> IntPolynomial:
    if not edges:
        return IntPolynomial.monomial(n)
    comps = _components(n, edges)
    if len(comps) > 1:
        result = IntPolynomial((1,))
        for comp in comps:
            pos = {v: i for i, v in enumerate(comp)}
            sub = tuple(sorted((pos[u], pos[v]) for u, v in edges if u in pos))
            result = result * _dc(len(comp), sub)
        return result
    u, v = edges[0]  # edges are kept sorted, so this is the lexicographic minimum
    deleted = edges[1:]
    contracted = set()
    for a, b in deleted:
        a = u if a == v else (a - 1 if a > v else a)
        b = u if b == v else (b - 1 if b > v else b)
        if a != b:
            contracted.add((a, b) if a < b else (b, a))
    return _dc(n, deleted) - _dc(n - 1, tuple(sorted(contracted)))


def chromatic_deletion_contraction(g: Graph) -> IntPolynomial:
    if g.n > MAX_ENGINE_ORDER:
        raise ResourceLimitError(f"deletion-contraction engine cap is n <= {MAX_ENGINE_ORDER}, got n={g.n}")
    return _dc(g.n, tuple(g.edge_list))


def chromatic_polynomial(g: Graph) -> IntPolynomial:
    """P(G, x) from the default engine."""
    return chromatic_deletion_contraction(g)


def clear_cache() -> None:
    _dc.cache_clear()


# inclusion-exclusion ---------------------------------------------------------

def _check_subset_cap(g: Graph):
    if g.m > MAX_SUBSET_EDGES:
        raise ResourceLimitError(f"subset oracles are capped at |E| <= {MAX_SUBSET_EDGES}, got {g.m}")


def chromatic_inclusion_exclusion(g: Graph) -> IntPolynomial:
    """Sum of (-1)^|S| x^kappa(S) over all spanning edge subsets S."""
    _check_subset_cap(g)
    edges = g.edge_list
    coeffs = [0] * (g.n + 1)

    def walk(i, labels, comps, sign):
        if i == len(edges):
            coeffs[comps] += sign
            return
        walk(i + 1, labels, comps, sign)
        u, v = edges[i]
        lu, lv = labels[u], labels[v]
        if lu == lv:
            walk(i + 1, labels, comps, -sign)
        else:
            lo, hi = min(lu, lv), max(lu, lv)
            merged = tuple(lo if x == hi else x for x in labels)
            walk(i + 1, merged, comps - 1, -sign)

    walk(0, tuple(range(g.n)), g.n, 1)
    return IntPolynomial(tuple(coeffs))


# broken cycles ----------------------------------------------------------------

def simple_cycles(g: Graph) -> list[frozenset]:
    """Every cycle of g as a frozenset of edges, each cycle reported once."""
    adj = g.adjacency
    cycles = []
    for start in range(g.n):
        # cycles whose least vertex is `start`, walked in one direction only
        stack = [(start, [start])]
        while stack:
            u, path = stack.pop()
            for w in adj[u]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    cyc = path + [start]
                    cycles.append(frozenset(
                        (min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:])))
                elif w > start and w not in path:
                    stack.append((w, path + [w]))
    return cycles


def broken_cycle_masks(g: Graph, eta: EdgeOrdering, cycles=None) -> list[int]:
    """Broken cycles as bitmasks over label positions (bit eta(e)-1)."""
    if cycles is None:
        cycles = simple_cycles(g)
    out = []
    for cyc in cycles:
        labels = [eta.eta[e] for e in cyc]
        low = min(labels)
        mask = 0
        for lab in labels:
            if lab != low:
                mask |= 1 << (lab - 1)
        out.append(mask)
    return out


def nbc_counts(m: int, broken: list[int]) -> list[int]:
    """Count edge subsets (over bits 0..m-1) containing none of the masks in
    ``broken``, by size.

    Subsets are grown by adding bits in decreasing order; a new bit is the
    lowest bit of the grown set, so only broken cycles whose lowest bit is the
    new one need testing.  Broken-cycle-free sets are closed under taking
    subsets, so pruning at the first violation misses nothing.
    """
    by_low = [[] for _ in range(m)]
    for b in broken:
        by_low[(b & -b).bit_length() - 1].append(b)
    counts = [0] * (m + 1)

    def grow(s, size, top):
        counts[size] += 1
        for e in range(top - 1, -1, -1):
            t = s | (1 << e)
            for b in by_low[e]:
                if b & t == b:
                    break
            else:
                grow(t, size + 1, e)

    grow(0, 0, m)
    return counts


def whitney_coefficients(g: Graph, eta: EdgeOrdering | None = None, cycles=None) -> list[int]:
    """``a[i]`` for i = 0..n: number of broken-cycle-free spanning subgraphs
    with n - i edges."""
    _check_subset_cap(g)
    if eta is None:
        eta = EdgeOrdering.identity(g)
    else:
        eta.check_graph(g)
    counts = nbc_counts(g.m, broken_cycle_masks(g, eta, cycles))
    a = [0] * (g.n + 1)
    for size, c in enumerate(counts):
        if c:
            a[g.n - size] = c
    return a


def chromatic_broken_cycle(g: Graph, eta: EdgeOrdering | None = None) -> IntPolynomial:
    a = whitney_coefficients(g, eta)
    return IntPolynomial(tuple((-1) ** (g.n - i) * a[i] for i in range(g.n + 1)))


def eta_independent(g: Graph, orderings: int, seed: int) -> bool:
    """True when ``orderings`` random edge orderings all give the same a-vector
    as the identity ordering."""
    rng = random.Random(seed)
    cycles = simple_cycles(g)
    ref = whitney_coefficients(g, None, cycles)
    return all(whitney_coefficients(g, EdgeOrdering.random(g, rng), cycles) == ref
               for _ in range(orderings))


# brute force ---------------------------------------------------------------------

@lru_cache(maxsize=64)
def _all_maps(n: int, q: int) -> np.ndarray:
    """All q**n maps V -> {0..q-1} as rows."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    grids = np.indices((q,) * n, dtype=np.int16).reshape(n, -1).T
    return np.ascontiguousarray(grids)


def _check_budget(q: int, n: int):
    if q ** n > ENUMERATION_BUDGET:
        raise ResourceLimitError(f"enumeration of {q}^{n} maps exceeds the budget of {ENUMERATION_BUDGET}")


def count_colorings_bruteforce(g: Graph, q: int) -> int:
    """Number of proper colorings V -> {1..q}, by checking every map."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    _check_budget(q, g.n)
    if q == 0:
        return 1 if g.n == 0 else 0
    if q ** g.n <= 4096:
        count = 0
        edges = g.edge_list
        for col in product(range(q), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                count += 1
        return count
    maps = _all_maps(g.n, q)
    ok = np.ones(len(maps), dtype=bool)
    for u, v in g.edge_list:
        ok &= maps[:, u] != maps[:, v]
    return int(ok.sum())


def chromatic_number(g: Graph) -> int:
    """Least positive integer q with P(G, q) != 0."""
    p = chromatic_polynomial(g)
    q = 1
    while p(q) == 0:
        q += 1
    return q


def mean_color_number_bruteforce(g: Graph) -> Fraction:
    """Average number of distinct colors over all proper n-colorings."""
    n = g.n
    if n == 0:
        raise ValueError("mean color number needs n >= 1")
    _check_budget(n, n)
    maps = _all_maps(n, n)
    ok = np.ones(len(maps), dtype=bool)
    for u, v in g.edge_list:
        ok &= maps[:, u] != maps[:, v]
    proper = np.sort(maps[ok], axis=1)
    used = 1 + (np.diff(proper, axis=1) != 0).sum(axis=1)
    return Fraction(int(used.sum()), int(len(proper)))


# catalog-level batched oracles -----------------------------------------------------

def _zeta_transform(arr: np.ndarray, nbits: int) -> np.ndarray:
    """In-place subset sums over the leading axis: out[M] = sum_{S subset M} arr[S]."""
    tail = arr.shape[1:]
    for b in range(nbits):
        view = arr.reshape((-1, 2, 1 << b) + tail)
        view[:, 1] += view[:, 0]
    return arr


def subset_component_counts(n: int) -> np.ndarray:
    """kappa(S) for every edge subset S of K_n, indexed by edge mask."""
    pairs = all_pairs(n)
    nbits = len(pairs)
    labels = np.zeros((1 << nbits, n), dtype=np.int8)
    labels[0] = np.arange(n)
    for b, (u, v) in enumerate(pairs):
        lo, hi = 1 << b, 1 << (b + 1)
        block = labels[:lo].copy()
        lu = block[:, u:u + 1]
        lv = block[:, v:v + 1]
        mn = np.minimum(lu, lv)
        hit = (block == lu) | (block == lv)
        block = np.where(hit, mn, block)
        labels[lo:hi] = block
    return (labels == np.arange(n, dtype=np.int8)).sum(axis=1)


def inclusion_exclusion_catalog(n: int, kappa: np.ndarray | None = None) -> np.ndarray:
    """Coefficients of P(G_M, x) for every labeled graph G_M on n vertices.

    Row M holds coefficients of x^0..x^n; M is the graph's edge mask.
    """
    nbits = n * (n - 1) // 2
    if nbits > MAX_SUBSET_EDGES:
        raise ResourceLimitError(f"catalog inclusion-exclusion capped at {MAX_SUBSET_EDGES} edge slots")
    if kappa is None:
        kappa = subset_component_counts(n)
    size = np.array([bin(s).count("1") for s in range(1 << nbits)], dtype=np.int64) \
        if nbits <= 16 else _popcounts(nbits)
    sign = 1 - 2 * (size & 1)
    arr = np.zeros((1 << nbits, n + 1), dtype=np.int64)
    arr[np.arange(1 << nbits), kappa] = sign
    return _zeta_transform(arr, nbits)


def _popcounts(nbits: int) -> np.ndarray:
    pc = np.zeros(1 << nbits, dtype=np.int64)
    for b in range(nbits):
        pc[1 << b:1 << (b + 1)] = pc[:1 << b] + 1
    return pc


def count_colorings_catalog(n: int, q: int) -> np.ndarray:
    """Number of proper q-colorings of every labeled graph on n vertices.

    Each of the q**n maps is classified by its set D of monochromatic vertex
    pairs; a map is proper for G_M exactly when D and M are disjoint.
    """
    _check_budget(q, n)
    nbits = n * (n - 1) // 2
    if q == 0:
        out = np.zeros(1 << nbits, dtype=np.int64)
        if n == 0:
            out[:] = 1
        return out
    maps = _all_maps(n, q)
    mono = np.zeros(len(maps), dtype=np.int64)
    for b, (u, v) in enumerate(all_pairs(n)):
        mono |= (maps[:, u] == maps[:, v]).astype(np.int64) << b
    hist = np.bincount(mono, minlength=1 << nbits).astype(np.int64)
    _zeta_transform(hist, nbits)
    full = (1 << nbits) - 1
    return hist[full ^ np.arange(1 << nbits)]


def kn_cycle_masks(n: int) -> list[int]:
    """Every cycle of K_n as an edge mask in edge-index order."""
    from .graph import generate

    if n < 3:
        return []
    kn = generate("complete", n)
    out = []
    for cyc in simple_cycles(kn):
        mask = 0
        for u, v in cyc:
            mask |= 1 << pair_index(u, v)
        out.append(mask)
    return out
