"""Finite simple graphs with labelled vertices, family generators, and the
small graph algorithms everything else builds on."""

from __future__ import annotations

import itertools
import json
import string
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

TREE_ENUMERATION_LIMIT = 10


class GraphParseError(ValueError):
    """An edge-list or JSON graph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``vertices`` fixes a stable label order.

    Labels are opaque strings.  Edges are 2-element frozensets, so loops and
    parallel edges cannot be represented.
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        labels = set(self.vertices)
        if len(labels) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {sorted(e)} is not a 2-element set")
            if not e <= labels:
                raise ValueError(f"edge {sorted(e)} uses unknown vertices")

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable) -> Graph:
        vs = tuple(str(v) for v in vertices)
        es = frozenset(frozenset((str(u), str(v))) for u, v in edges)
        return cls(vs, es)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(ns) for v, ns in nbrs.items()}

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def neighbors(self, v: str) -> frozenset[str]:
        return self.adjacency[v]

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        idx = self.index
        pairs = [tuple(sorted(e, key=idx.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (idx[p[0]], idx[p[1]]))


def _check_subset(g: Graph, s: Iterable[str]) -> frozenset[str]:
    sub = frozenset(s)
    unknown = sub - set(g.vertices)
    if unknown:
        raise ValueError(f"unknown vertex labels: {sorted(unknown)}")
    return sub


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """Subgraph on the vertex subset ``s`` with all edges inside it."""
    sub = _check_subset(g, s)
    verts = tuple(v for v in g.vertices if v in sub)
    return Graph(verts, frozenset(e for e in g.edges if e <= sub))


def connected_components(g: Graph) -> list[frozenset[str]]:
    """Partition of the vertex set into components, ordered by first vertex."""
    seen: set[str] = set()
    parts: list[frozenset[str]] = []
    adj = g.adjacency
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return len(g.vertices) <= 1 or len(connected_components(g)) == 1


def _component_sizes_capped(adj: dict[str, frozenset[str]], sub: frozenset[str], cap: int) -> bool:
    """True iff every component of the induced subgraph on ``sub`` has at
    most ``cap`` vertices."""
    seen: set[str] = set()
    for start in sub:
        if start in seen:
            continue
        size = 0
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            size += 1
            if size > cap:
                return False
            for w in adj[u]:
                if w in sub and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
    return True


def is_r_independent(g: Graph, s: Iterable[str], r: int) -> bool:
    """True iff every component of the induced subgraph on ``s`` has at most
    ``r`` vertices."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    sub = _check_subset(g, s)
    return _component_sizes_capped(g.adjacency, sub, r)


def distance(g: Graph, u: str, v: str) -> int | None:
    """Length of a shortest path between ``u`` and ``v``; None if unreachable."""
    _check_subset(g, (u, v))
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return None


def is_tree(g: Graph) -> bool:
    return len(g.vertices) >= 1 and len(g.edges) == len(g.vertices) - 1 and is_connected(g)


def is_chordal_graph(g: Graph) -> bool:
    """Chordality via repeated simplicial-vertex elimination."""
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    remaining = [v for v in g.vertices]
    while remaining:
        pick = None
        for v in remaining:
            ns = adj[v]
            if all(b in adj[a] for a, b in itertools.combinations(ns, 2)):
                pick = v
                break
        if pick is None:
            return False
        for u in adj[pick]:
            adj[u].discard(pick)
        del adj[pick]
        remaining.remove(pick)
    return True


def is_caterpillar(g: Graph) -> bool:
    """True iff ``g`` is a tree whose non-leaf vertices induce a path."""
    if not is_tree(g):
        return False
    internal = [v for v in g.vertices if g.degree(v) >= 2]
    if not internal:
        return True
    spine = induced_subgraph(g, internal)
    return is_connected(spine) and all(spine.degree(v) <= 2 for v in internal)


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class CaterpillarSpec:
    """Spine of length ``spine_length`` with ``leaf_counts[i]`` legs at spine
    vertex i+1."""

    spine_length: int
    leaf_counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaf_counts", tuple(self.leaf_counts))
        if self.spine_length < 1:
            raise ValueError("spine_length must be positive")
        if len(self.leaf_counts) != self.spine_length:
            raise ValueError("leaf_counts must have one entry per spine vertex")
        if any(m < 0 for m in self.leaf_counts):
            raise ValueError("leaf counts must be non-negative")

    @property
    def n_vertices(self) -> int:
        return self.spine_length + sum(self.leaf_counts)


def make_caterpillar(spec: CaterpillarSpec) -> Graph:
    """Caterpillar with spine ``a1..al`` and legs ``b{i}_{j}`` at ``a{i}``."""
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for i in range(1, spec.spine_length + 1):
        spine = f"a{i}"
        verts.append(spine)
        if i > 1:
            edges.append((f"a{i - 1}", spine))
        for j in range(1, spec.leaf_counts[i - 1] + 1):
            leaf = f"b{i}_{j}"
            verts.append(leaf)
            edges.append((spine, leaf))
    return Graph.from_edges(verts, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("need at least one vertex")
    verts = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(verts, zip(verts, verts[1:]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    verts = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(verts, zip(verts, verts[1:] + verts[:1]))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("need at least one vertex")
    verts = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(verts, itertools.combinations(verts, 2))


def star_graph(n_leaves: int) -> Graph:
    """Star with centre ``0`` and leaves ``1..n``."""
    if n_leaves < 0:
        raise ValueError("leaf count must be non-negative")
    leaves = [str(i) for i in range(1, n_leaves + 1)]
    return Graph.from_edges(["0"] + leaves, (("0", leaf) for leaf in leaves))


def demo_graph() -> Graph:
    """Five-vertex tree used as the running example (CLI generator ``fig1``)."""
    return Graph.from_edges(
        ["v1", "v2", "v3", "v4", "v5"],
        [("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v2", "v5")],
    )


def half_apex_clique(r: int) -> Graph:
    """Complete graph on ``v1..v2r`` plus apexes ``x1`` over the first half
    and ``x2`` over the second half."""
    if r < 2:
        raise ValueError("r must be at least 2")
    vs = [f"v{i}" for i in range(1, 2 * r + 1)]
    edges = list(itertools.combinations(vs, 2))
    edges += [("x1", f"v{i}") for i in range(1, r + 1)]
    edges += [("x2", f"v{i}") for i in range(r + 1, 2 * r + 1)]
    return Graph.from_edges(vs + ["x1", "x2"], edges)


def twin_bridge_paths(r: int, bridge_size: int = 2) -> Graph:
    """Two paths ``1..r`` and ``r+1..2r`` joined through a clique of
    ``bridge_size`` extra vertices, each adjacent to both path ends.

    ``bridge_size=2`` gives the 2r+2 vertex family with bridge ``{a, b}``;
    larger cliques generalize it.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if not 2 <= bridge_size <= 26:
        raise ValueError("bridge_size must be between 2 and 26")
    left = [str(i) for i in range(1, r + 1)]
    right = [str(i) for i in range(r + 1, 2 * r + 1)]
    bridge = list(string.ascii_lowercase[:bridge_size])
    edges = list(zip(left, left[1:])) + list(zip(right, right[1:]))
    edges += list(itertools.combinations(bridge, 2))
    edges += [(left[-1], c) for c in bridge]
    edges += [(right[0], c) for c in bridge]
    return Graph.from_edges(left + bridge + right, edges)


# ---------------------------------------------------------------------------
# free tree enumeration (centroid-canonical rooted trees)
#
# A rooted tree is a tuple of child trees, kept sorted in non-increasing
# (size, structure) order, which makes the nested tuple a canonical form.


@lru_cache(maxsize=None)
def _tree_size(t: tuple) -> int:
    return 1 + sum(_tree_size(c) for c in t)


@lru_cache(maxsize=None)
def _rooted_trees(n: int) -> tuple[tuple, ...]:
    if n == 1:
        return ((),)
    return tuple(_canonical_forests(n - 1, n - 1, None))


def _canonical_forests(total: int, size_cap: int, key_bound) -> Iterator[tuple]:
    """Forests with ``total`` vertices, trees in non-increasing key order,
    every tree of size <= size_cap and key <= key_bound."""
    if total == 0:
        yield ()
        return
    for s in range(min(total, size_cap), 0, -1):
        for t in _rooted_trees(s):
            key = (s, t)
            if key_bound is not None and key > key_bound:
                continue
            for rest in _canonical_forests(total - s, size_cap, key):
                yield (t,) + rest


def _attach(tree: tuple, parent: int, labels: list[int], edges: list[tuple[str, str]]) -> None:
    for child in tree:
        labels[0] += 1
        me = labels[0]
        edges.append((str(parent), str(me)))
        _attach(child, me, labels, edges)


def _forest_to_graph(n: int, roots: list[tuple], root_edge: bool) -> Graph:
    labels = [1]
    edges: list[tuple[str, str]] = []
    root_ids = []
    for t in roots:
        root_ids.append(labels[0])
        _attach(t, labels[0], labels, edges)
        labels[0] += 1
    if root_edge:
        edges.append((str(root_ids[0]), str(root_ids[1])))
    return Graph.from_edges([str(i) for i in range(1, n + 1)], edges)


def enumerate_trees(n: int, limit: int = TREE_ENUMERATION_LIMIT) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of trees on n vertices.

    Unicentroidal trees are rooted at the centroid (all child subtrees have
    fewer than n/2 vertices); bicentroidal trees are two half-trees joined by
    an edge.  Each class appears exactly once.
    """
    if not 1 <= n <= limit:
        raise ValueError(f"n must be between 1 and {limit}")
    if n == 1:
        yield Graph.from_edges(["1"], [])
        return
    max_child = (n - 1) // 2
    for forest in _canonical_forests(n - 1, max_child, None):
        yield _forest_to_graph(n, [forest], root_edge=False)
    if n % 2 == 0:
        halves = _rooted_trees(n // 2)
        for i, t1 in enumerate(halves):
            for t2 in halves[i:]:
                yield _forest_to_graph(n, [t1, t2], root_edge=True)


# ---------------------------------------------------------------------------
# I/O formats


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: one ``u v`` pair per line, ``#`` comments, isolated
    vertices declared as ``vertex u``."""
    verts: list[str] = []
    seen: set[str] = set()
    edges: set[frozenset[str]] = set()

    def declare(v: str) -> None:
        if v not in seen:
            seen.add(v)
            verts.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise GraphParseError("'vertex' lines take exactly one label", lineno)
            declare(tokens[1])
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = tokens
        if u == v:
            raise GraphParseError(f"loop edge {u!r} {v!r} not allowed", lineno)
        declare(u)
        declare(v)
        edges.add(frozenset((u, v)))
    return Graph(tuple(verts), frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_json_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges()]}


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphParseError("graph JSON needs 'vertices' and 'edges'")
    try:
        return Graph.from_edges(data["vertices"], data["edges"])
    except (ValueError, TypeError) as exc:
        raise GraphParseError(str(exc)) from exc
