"""Simple hypergraphs, the connected-subset hypergraph of a graph, minors,
simplicial vertices, exhaustive chordality checking, and vertex covers."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph

DEFAULT_MINOR_BUDGET = 2_000_000


class GuardExceeded(RuntimeError):
    """An enumeration would exceed the configured size guard."""


def reduce_to_minimal(sets: Iterable[frozenset[str]]) -> frozenset[frozenset[str]]:
    """Antichain of inclusion-minimal members of ``sets``."""
    by_size = sorted(set(sets), key=len)
    minimal: list[frozenset[str]] = []
    for s in by_size:
        if not any(m <= s for m in minimal):
            minimal.append(s)
    return frozenset(minimal)


def reduce_to_maximal(sets: Iterable[frozenset[str]]) -> frozenset[frozenset[str]]:
    """Antichain of inclusion-maximal members of ``sets``."""
    by_size = sorted(set(sets), key=len, reverse=True)
    maximal: list[frozenset[str]] = []
    for s in by_size:
        if not any(s <= m for m in maximal):
            maximal.append(s)
    return frozenset(maximal)


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph: the edge set is an antichain under inclusion."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        labels = set(self.vertices)
        if len(labels) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for e in self.edges:
            if not e <= labels:
                raise ValueError(f"edge {sorted(e)} uses unknown vertices")
        for a, b in itertools.combinations(self.edges, 2):
            if a < b or b < a:
                raise ValueError("edge set is not an antichain")

    @classmethod
    def reduced(cls, vertices: Iterable, edges: Iterable) -> Hypergraph:
        """Build the underlying simple hypergraph (keep minimal edges)."""
        vs = tuple(str(v) for v in vertices)
        es = reduce_to_minimal(frozenset(map(str, e)) for e in edges)
        return cls(vs, es)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": sorted([sorted(e) for e in self.edges], key=lambda e: (len(e), e)),
        }


def graph_as_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.vertices, g.edges)


def con_r(g: Graph, r: int) -> Hypergraph:
    """Hypergraph on V(g) whose edges are the (r+1)-subsets inducing a
    connected subgraph.  Uniform edge size makes it simple automatically."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    adj = g.adjacency
    edges = []
    for combo in itertools.combinations(g.vertices, r + 1):
        sub = frozenset(combo)
        if _connected_within(adj, sub):
            edges.append(sub)
    return Hypergraph(g.vertices, frozenset(edges))


def _connected_within(adj: dict[str, frozenset[str]], sub: frozenset[str]) -> bool:
    start = next(iter(sub))
    comp = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in sub and w not in comp:
                comp.add(w)
                queue.append(w)
    return len(comp) == len(sub)


def _check_vertex(h: Hypergraph, v: str) -> None:
    if v not in h.vertices:
        raise ValueError(f"unknown vertex {v!r}")


def delete_vertex(h: Hypergraph, v: str) -> Hypergraph:
    """Drop ``v`` and every edge containing it."""
    _check_vertex(h, v)
    verts = tuple(u for u in h.vertices if u != v)
    return Hypergraph.reduced(verts, (e for e in h.edges if v not in e))


def contract_vertex(h: Hypergraph, v: str) -> Hypergraph:
    """Drop ``v`` from the vertex set and from every edge, then reduce to the
    underlying simple hypergraph.  Contracting the last vertex of an edge
    leaves the empty edge, which is retained as the unique minimal edge."""
    _check_vertex(h, v)
    verts = tuple(u for u in h.vertices if u != v)
    return Hypergraph.reduced(verts, (e - {v} for e in h.edges))


def is_simplicial_vertex(h: Hypergraph, v: str, include_equal_pairs: bool = False) -> bool:
    """True iff every two edges through ``v`` contain a third edge inside
    their union minus ``v``.

    The default reads "any two edges" as distinct pairs, which makes the
    notion agree with graph chordality on graphs; ``include_equal_pairs``
    switches to the stricter reading that also tests each edge against
    itself.
    """
    _check_vertex(h, v)
    through = [e for e in h.edges if v in e]
    if include_equal_pairs:
        pairs = itertools.combinations_with_replacement(through, 2)
    else:
        pairs = itertools.combinations(through, 2)
    for e1, e2 in pairs:
        target = (e1 | e2) - {v}
        if not any(e3 <= target for e3 in h.edges):
            return False
    return True


def _has_simplicial_vertex(h: Hypergraph, include_equal_pairs: bool) -> bool:
    return any(is_simplicial_vertex(h, v, include_equal_pairs) for v in h.vertices)


def _canonical_key(h: Hypergraph) -> tuple:
    return (h.vertices, tuple(sorted(tuple(sorted(e)) for e in h.edges)))


@dataclass(frozen=True)
class ChordalityResult:
    """Outcome of the exhaustive minor search.

    ``chordal`` is None when the budget ran out before the search finished;
    a False verdict carries a witness minor with no simplicial vertex.
    """

    chordal: bool | None
    witness: Hypergraph | None
    minors_visited: int

    @property
    def budget_exceeded(self) -> bool:
        return self.chordal is None


def is_chordal_hypergraph(
    h: Hypergraph,
    budget: int = DEFAULT_MINOR_BUDGET,
    include_equal_pairs: bool = False,
) -> ChordalityResult:
    """Decide chordality by breadth-first search over all minors.

    Every minor is reachable by interleaving single-vertex deletions and
    contractions; minors are deduplicated by their (vertex list, edge list)
    key.  The budget counts distinct minors visited and exceeding it yields
    an explicit inconclusive result, never a silent answer.
    """
    queue: deque[Hypergraph] = deque([h])
    seen = {_canonical_key(h)}
    visited = 0
    while queue:
        minor = queue.popleft()
        visited += 1
        if visited > budget:
            return ChordalityResult(None, None, visited - 1)
        if minor.vertices and not _has_simplicial_vertex(minor, include_equal_pairs):
            return ChordalityResult(False, minor, visited)
        for v in minor.vertices:
            for child in (delete_vertex(minor, v), contract_vertex(minor, v)):
                key = _canonical_key(child)
                if key not in seen:
                    seen.add(key)
                    queue.append(child)
    return ChordalityResult(True, None, visited)


def minimal_vertex_covers(h: Hypergraph, guard: int = 20) -> frozenset[frozenset[str]]:
    """All inclusion-minimal sets meeting every edge.

    With no edges the empty set is the unique cover; an empty edge cannot be
    met, so the cover family is empty.
    """
    if len(h.vertices) > guard:
        raise GuardExceeded(f"cover enumeration over 2^{len(h.vertices)} vertices")
    if any(not e for e in h.edges):
        return frozenset()
    if not h.edges:
        return frozenset({frozenset()})
    edges = tuple(h.edges)
    covers: list[frozenset[str]] = []
    for size in range(0, len(h.vertices) + 1):
        for combo in itertools.combinations(h.vertices, size):
            cand = frozenset(combo)
            if any(c <= cand for c in covers):
                continue
            if all(cand & e for e in edges):
                covers.append(cand)
    return frozenset(covers)
