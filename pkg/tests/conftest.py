"""Shared brute-force oracles, written independently of the package code
paths they check."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import networkx as nx

from rindep.graphs import Graph


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(tuple(e) for e in g.edges)
    return out


def random_graph(rng: random.Random, n_min: int = 3, n_max: int = 7) -> Graph:
    n = rng.randint(n_min, n_max)
    verts = [str(i) for i in range(1, n + 1)]
    p = rng.choice((0.2, 0.35, 0.5, 0.7))
    edges = [e for e in itertools.combinations(verts, 2) if rng.random() < p]
    return Graph.from_edges(verts, edges)


def oracle_r_independent(g: Graph, subset: frozenset[str], r: int) -> bool:
    """Definition check through networkx components."""
    sub = to_networkx(g).subgraph(subset)
    return all(len(c) <= r for c in nx.connected_components(sub))


def oracle_ind_r_facets(g: Graph, r: int) -> set[frozenset[str]]:
    """All maximal r-independent sets by scanning the full power set."""
    independent = [
        frozenset(c)
        for k in range(len(g.vertices) + 1)
        for c in itertools.combinations(g.vertices, k)
        if oracle_r_independent(g, frozenset(c), r)
    ]
    pool = set(independent)
    return {
        s
        for s in pool
        if not any(v not in s and (s | {v}) in pool for v in g.vertices)
    }


def oracle_minimal_covers(vertices, edges) -> set[frozenset[str]]:
    """All minimal transversals by scanning the full power set twice."""
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        return set()
    covers = {
        frozenset(c)
        for k in range(len(vertices) + 1)
        for c in itertools.combinations(vertices, k)
        if all(frozenset(c) & e for e in edges)
    }
    return {c for c in covers if not any(d < c for d in covers)}


def oracle_shelling_order_ok(order: list[frozenset[str]]) -> bool:
    """Direct definition: each facet meets the union of its predecessors in
    a pure subcomplex one dimension down."""
    for t in range(1, len(order)):
        fk = order[t]
        meets = {fj & fk for fj in order[:t]}
        maximal = {m for m in meets if not any(m < other for other in meets)}
        if any(len(m) != len(fk) - 1 for m in maximal):
            return False
    return True


def oracle_is_shellable(facets: list[frozenset[str]]) -> bool:
    if len(facets) <= 1:
        return True
    return any(
        oracle_shelling_order_ok(list(perm)) for perm in itertools.permutations(facets)
    )


def oracle_rank_over_q(rows: list[list[int]]) -> int:
    """Dense Gaussian elimination with exact fractions."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    pivot_row = 0
    for col in range(cols):
        pivot = next((i for i in range(pivot_row, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = 1 / mat[pivot_row][col]
        mat[pivot_row] = [x * inv for x in mat[pivot_row]]
        for i in range(len(mat)):
            if i != pivot_row and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def prufer_decode(seq: tuple[int, ...], n: int) -> frozenset[frozenset[int]]:
    """Labeled tree on 0..n-1 from its length n-2 sequence."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = set()
    leaves = sorted(i for i in range(n) if degree[i] == 1)
    import heapq

    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.add(frozenset((leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.add(frozenset((u, v)))
    return frozenset(edges)


def ahu_canonical_key(edges: frozenset[frozenset[int]], n: int):
    """Canonical form of a free tree: AHU encoding rooted at the centers."""
    if n == 1:
        return ("()",)
    adj = {i: set() for i in range(n)}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    # peel leaves to find the center(s)
    degree = {v: len(ns) for v, ns in adj.items()}
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    alive = {v: True for v in range(n)}
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for w in adj[v]:
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def encode(v: int, parent: int | None) -> str:
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return tuple(sorted(encode(c, None) for c in centers))
