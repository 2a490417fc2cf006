"""Simplicial complexes in facet representation: higher independence
complexes, links, deletions, skeletons, face enumeration, and the
combinatorial Alexander dual.

Conventions: the void complex has no faces at all (empty facet family), the
empty complex has the single facet {} (its only face), and a simplex is any
complex with exactly one facet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graphs import Graph, _component_sizes_capped
from .hypergraphs import GuardExceeded, Hypergraph, reduce_to_maximal

FACE_ENUMERATION_GUARD = 20  # full face enumeration allowed up to 2^20 subsets


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex identified by its ground set and facet antichain.

    The ground set is part of the identity: vertices in no facet ("ghosts")
    are kept because Alexander duality and Stanley-Reisner ideals depend on
    the ambient vertex set.
    """

    ground_set: tuple[str, ...]
    facets: frozenset[frozenset[str]]

    def __post_init__(self):
        labels = set(self.ground_set)
        if len(labels) != len(self.ground_set):
            raise ValueError("duplicate ground-set labels")
        for f in self.facets:
            if not f <= labels:
                raise ValueError(f"facet {sorted(f)} uses unknown vertices")
        for a, b in itertools.combinations(self.facets, 2):
            if a <= b or b <= a:
                raise ValueError("facets do not form an antichain")

    @classmethod
    def from_faces(cls, ground_set: Iterable, faces: Iterable) -> SimplicialComplex:
        gs = tuple(str(v) for v in ground_set)
        maximal = reduce_to_maximal(frozenset(map(str, f)) for f in faces)
        return cls(gs, maximal)

    @classmethod
    def simplex(cls, vertices: Iterable) -> SimplicialComplex:
        vs = tuple(str(v) for v in vertices)
        return cls(vs, frozenset({frozenset(vs)}))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.ground_set)}

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset({frozenset()})

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def dimension(self) -> int | None:
        """Maximum face dimension; -1 for the empty complex, None for void."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        if self.is_void:
            return True
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def face_key(self, face: frozenset[str]) -> tuple[int, ...]:
        idx = self.index
        return tuple(sorted(idx[v] for v in face))

    def sorted_facets(self) -> list[frozenset[str]]:
        return sorted(self.facets, key=self.face_key)

    def has_face(self, face: Iterable[str]) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets)

    def faces(self) -> set[frozenset[str]]:
        """Every face, the empty set included (unless void)."""
        if len(self.ground_set) > FACE_ENUMERATION_GUARD:
            raise GuardExceeded(
                f"face enumeration over {len(self.ground_set)} vertices exceeds the guard"
            )
        out: set[frozenset[str]] = set()
        for facet in self.facets:
            members = tuple(facet)
            for k in range(len(members) + 1):
                out.update(map(frozenset, itertools.combinations(members, k)))
        return out

    def faces_by_dimension(self) -> dict[int, list[frozenset[str]]]:
        """Faces grouped by dimension (-1 upward), deterministically ordered."""
        grouped: dict[int, list[frozenset[str]]] = {}
        for face in self.faces():
            grouped.setdefault(len(face) - 1, []).append(face)
        return {d: sorted(fs, key=self.face_key) for d, fs in sorted(grouped.items())}

    def to_json_dict(self) -> dict:
        return {
            "ground_set": list(self.ground_set),
            "facets": [
                [v for v in self.ground_set if v in f] for f in self.sorted_facets()
            ],
        }


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "ground_set" not in data or "facets" not in data:
        raise ValueError("complex JSON needs 'ground_set' and 'facets'")
    gs = [str(v) for v in data["ground_set"]]
    return SimplicialComplex(
        tuple(gs), frozenset(frozenset(map(str, f)) for f in data["facets"])
    )


# ---------------------------------------------------------------------------
# higher independence complexes


def ind_r(g: Graph, r: int) -> SimplicialComplex:
    """Complex of all vertex subsets whose induced components have at most r
    vertices; facets are the maximal ones.

    All subsets are generated by growing independent sets vertex by vertex
    (the property is downward closed), within the enumeration guard.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if len(g.vertices) > FACE_ENUMERATION_GUARD:
        raise GuardExceeded("vertex set exceeds the enumeration guard")
    adj = g.adjacency
    verts = g.vertices
    n = len(verts)
    independent: set[frozenset[str]] = set()

    def grow(current: frozenset[str], start: int) -> None:
        independent.add(current)
        for i in range(start, n):
            nxt = current | {verts[i]}
            if _component_sizes_capped(adj, nxt, r):
                grow(nxt, i + 1)

    grow(frozenset(), 0)
    maximal = [
        s
        for s in independent
        if not any(v not in s and (s | {v}) in independent for v in verts)
    ]
    return SimplicialComplex(verts, frozenset(maximal))


def ind_hypergraph(h: Hypergraph) -> SimplicialComplex:
    """Independence complex of a hypergraph: faces contain no edge.

    An empty edge rules out every subset, so the result is void.
    """
    if any(not e for e in h.edges):
        return SimplicialComplex(h.vertices, frozenset())
    if len(h.vertices) > FACE_ENUMERATION_GUARD:
        raise GuardExceeded("vertex set exceeds the enumeration guard")
    verts = h.vertices
    n = len(verts)
    edges_by_vertex: dict[str, list[frozenset[str]]] = {v: [] for v in verts}
    for e in h.edges:
        for v in e:
            edges_by_vertex[v].append(e)
    independent: set[frozenset[str]] = set()

    def grow(current: frozenset[str], start: int) -> None:
        independent.add(current)
        for i in range(start, n):
            v = verts[i]
            nxt = current | {v}
            if not any(e <= nxt for e in edges_by_vertex[v]):
                grow(nxt, i + 1)

    grow(frozenset(), 0)
    maximal = [
        s
        for s in independent
        if not any(v not in s and (s | {v}) in independent for v in verts)
    ]
    return SimplicialComplex(verts, frozenset(maximal))


# ---------------------------------------------------------------------------
# subcomplex operations


def link(k: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Link of a face: maximal sets disjoint from it whose union with it is a
    face.  Ground set loses the face's vertices."""
    f = frozenset(map(str, face))
    if not k.has_face(f):
        raise ValueError(f"{sorted(f)} is not a face")
    ground = tuple(v for v in k.ground_set if v not in f)
    facets = reduce_to_maximal(g - f for g in k.facets if f <= g)
    return SimplicialComplex(ground, facets)


def delete(k: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Face deletion: maximal faces not containing ``face``.

    Deleting the empty face would leave the void complex, which is almost
    surely a caller bug, so it is rejected.  Deleting a single vertex drops
    it from the ground set (it is in no remaining face); larger faces keep
    their vertices since each is still a face on its own.
    """
    f = frozenset(map(str, face))
    if not f:
        raise ValueError("cannot delete the empty face")
    unknown = f - set(k.ground_set)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    contributions: set[frozenset[str]] = set()
    for g in k.facets:
        if f <= g:
            contributions.update(g - {x} for x in f)
        else:
            contributions.add(g)
    ground = k.ground_set if len(f) > 1 else tuple(v for v in k.ground_set if v not in f)
    return SimplicialComplex(ground, reduce_to_maximal(contributions))


def pure_skeleton(k: SimplicialComplex, m: int) -> SimplicialComplex:
    """Subcomplex generated by all faces of dimension exactly ``m``."""
    dim = k.dimension
    if dim is None or not 0 <= m <= dim:
        raise ValueError(f"m={m} out of range for a complex of dimension {dim}")
    faces = {
        frozenset(c) for f in k.facets if len(f) >= m + 1 for c in itertools.combinations(f, m + 1)
    }
    return SimplicialComplex(k.ground_set, frozenset(faces))


def minimal_nonfaces(k: SimplicialComplex) -> frozenset[frozenset[str]]:
    """Inclusion-minimal subsets of the ground set that are not faces.

    Built level by level: a candidate of size s+1 has all of its s-subsets
    among the faces, so the search never leaves the downward closure.
    """
    if len(k.ground_set) > FACE_ENUMERATION_GUARD:
        raise GuardExceeded("ground set exceeds the enumeration guard")
    verts = k.ground_set
    out: list[frozenset[str]] = []
    if k.is_void:
        return frozenset({frozenset()})
    level: set[frozenset[str]] = {frozenset()}
    size = 0
    while level:
        size += 1
        next_level: set[frozenset[str]] = set()
        candidates: set[frozenset[str]] = set()
        for face in level:
            top = max((k.index[v] for v in face), default=-1)
            for i in range(top + 1, len(verts)):
                candidates.add(face | {verts[i]})
        for cand in candidates:
            if any(cand - {v} not in level for v in cand):
                continue
            if k.has_face(cand):
                next_level.add(cand)
            else:
                out.append(cand)
        level = next_level
    return frozenset(out)


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    """Combinatorial Alexander dual: faces are complements of non-faces.

    Facets of the dual are complements of the minimal non-faces; the
    operation is an involution over a fixed ground set.
    """
    full = frozenset(k.ground_set)
    facets = frozenset(full - nf for nf in minimal_nonfaces(k))
    return SimplicialComplex(k.ground_set, facets)


def f_vector(k: SimplicialComplex) -> list[int]:
    """Face counts per dimension starting at f_{-1} = 1; empty for void."""
    if k.is_void:
        return []
    grouped = k.faces_by_dimension()
    top = max(grouped)
    return [len(grouped.get(d, ())) for d in range(-1, top + 1)]
