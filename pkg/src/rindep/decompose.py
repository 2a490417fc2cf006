"""Vertex decomposability with shedding-tree certificates, non-pure
shellability with shelling-order certificates, and independent certificate
verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import SimplicialComplex
from .hypergraphs import reduce_to_maximal

DEFAULT_VD_BUDGET = 500_000
DEFAULT_SHELL_BUDGET = 2_000_000


class _BudgetExhausted(Exception):
    pass


def _canon_facets(facets: Iterable[frozenset[str]]) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(tuple(sorted(f)) for f in facets))


def _link_facets(facets: frozenset[frozenset[str]], v: str) -> frozenset[frozenset[str]]:
    # facets containing v stay facets after removing it (antichain preserved)
    return frozenset(f - {v} for f in facets if v in f)


def _deletion_facets(facets: frozenset[frozenset[str]], v: str) -> frozenset[frozenset[str]]:
    parts: set[frozenset[str]] = set()
    for f in facets:
        parts.add(f - {v} if v in f else f)
    return reduce_to_maximal(parts)


@dataclass(frozen=True)
class SheddingNode:
    """One node of a shedding-tree certificate.

    Leaves are simplices (a single facet, the empty facet included); inner
    nodes name the shedding vertex and carry certificates for the link and
    the deletion at that vertex.
    """

    facets: tuple[tuple[str, ...], ...]
    vertex: str | None = None
    link: SheddingNode | None = None
    deletion: SheddingNode | None = None

    @property
    def is_leaf(self) -> bool:
        return self.vertex is None

    def to_json_dict(self) -> dict:
        out: dict = {"facets": [list(f) for f in self.facets]}
        if not self.is_leaf:
            out["vertex"] = self.vertex
            out["link"] = self.link.to_json_dict()
            out["del"] = self.deletion.to_json_dict()
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> SheddingNode:
        facets = tuple(sorted(tuple(sorted(map(str, f))) for f in data["facets"]))
        if "vertex" not in data:
            return cls(facets)
        return cls(
            facets,
            str(data["vertex"]),
            cls.from_json_dict(data["link"]),
            cls.from_json_dict(data["del"]),
        )


@dataclass(frozen=True)
class VDResult:
    """``decomposable`` is None when the search budget ran out."""

    decomposable: bool | None
    certificate: SheddingNode | None
    explored: int

    @property
    def budget_exceeded(self) -> bool:
        return self.decomposable is None


def is_shedding_vertex(k: SimplicialComplex, v: str) -> bool:
    """True iff every facet of the deletion at ``v`` is a facet of ``k``."""
    if v not in k.ground_set:
        raise ValueError(f"unknown vertex {v!r}")
    if not any(v in f for f in k.facets):
        raise ValueError(f"vertex {v!r} is in no face")
    return _deletion_facets(k.facets, v) <= k.facets


def is_vertex_decomposable(
    k: SimplicialComplex,
    budget: int = DEFAULT_VD_BUDGET,
    candidate_order: Sequence[str] | None = None,
) -> VDResult:
    """Exact recursive evaluation: a complex is vertex decomposable when it
    is a simplex, or some vertex sheds (deletion facets stay facets) with a
    decomposable link and deletion.

    Verdicts are memoized on the facet antichain; the budget counts memo
    entries.  ``candidate_order`` overrides the ground-set vertex order
    (the verdict itself is order independent).
    """
    if k.is_void:
        raise ValueError("void complex")
    order = tuple(candidate_order) if candidate_order is not None else k.ground_set
    memo: dict[frozenset[frozenset[str]], SheddingNode | None] = {}

    def solve(facets: frozenset[frozenset[str]]) -> SheddingNode | None:
        if facets in memo:
            return memo[facets]
        if len(memo) >= budget:
            raise _BudgetExhausted
        memo[facets] = None  # reserve the slot; overwritten on success
        if len(facets) == 1:
            node = SheddingNode(_canon_facets(facets))
            memo[facets] = node
            return node
        support = frozenset().union(*facets)
        for v in order:
            if v not in support:
                continue
            del_facets = _deletion_facets(facets, v)
            if not del_facets <= facets:
                continue
            link_cert = solve(_link_facets(facets, v))
            if link_cert is None:
                continue
            del_cert = solve(del_facets)
            if del_cert is None:
                continue
            node = SheddingNode(_canon_facets(facets), v, link_cert, del_cert)
            memo[facets] = node
            return node
        return None

    try:
        cert = solve(k.facets)
    except _BudgetExhausted:
        return VDResult(None, None, len(memo))
    return VDResult(cert is not None, cert, len(memo))


def verify_shedding_certificate(k: SimplicialComplex, cert: SheddingNode) -> bool:
    """Replay a shedding tree against ``k``, recomputing every local
    condition from the facets stored in the certificate."""
    if cert.facets != _canon_facets(k.facets):
        return False

    def check(node: SheddingNode) -> bool:
        facets = frozenset(frozenset(f) for f in node.facets)
        if len(facets) != len(node.facets):
            return False
        if node.is_leaf:
            return len(facets) == 1
        v = node.vertex
        if not any(v in f for f in facets):
            return False
        if node.link is None or node.deletion is None:
            return False
        del_facets = _deletion_facets(facets, v)
        if not del_facets <= facets:
            return False
        if node.link.facets != _canon_facets(_link_facets(facets, v)):
            return False
        if node.deletion.facets != _canon_facets(del_facets):
            return False
        return check(node.link) and check(node.deletion)

    return check(cert)


# ---------------------------------------------------------------------------
# shellability


@dataclass(frozen=True)
class ShellingResult:
    """``shellable`` is None when the search budget ran out."""

    shellable: bool | None
    order: tuple[frozenset[str], ...] | None
    explored: int

    @property
    def budget_exceeded(self) -> bool:
        return self.shellable is None


def is_shellable(k: SimplicialComplex, budget: int = DEFAULT_SHELL_BUDGET) -> ShellingResult:
    """Search for a shelling order of the facets.

    Depth-first over prefixes.  Whether a facet may come next depends only on
    the set of facets already placed, so dead prefix-sets are memoized; the
    budget counts distinct prefix-sets visited.  Admissibility uses the
    pairwise form: F may follow the placed set P when for every J in P some
    L in P has |F \\ L| = 1 and J cap F inside L cap F.

    The search only explores orders with weakly decreasing facet dimension.
    Every shellable complex admits such a shelling (any shelling can be
    rearranged into one), so restricting the space changes no verdict while
    making exhaustion feasible on complexes far from pure.
    """
    if k.is_void:
        raise ValueError("void complex has no facets to shell")
    facets = k.sorted_facets()
    n = len(facets)
    if n == 1:
        return ShellingResult(True, tuple(facets), 1)
    # witnesses[c][j]: bitmask of facets l with |F_c \ F_l| = 1 and
    # F_j cap F_c inside F_l cap F_c; F_c may follow a placed set P iff for
    # every j in P some witness l is in P as well
    near = [
        [l for l in range(n) if len(facets[c] - facets[l]) == 1] for c in range(n)
    ]
    witnesses = [[0] * n for _ in range(n)]
    for c in range(n):
        for j in range(n):
            mask = 0
            meet = facets[j] & facets[c]
            for l in near[c]:
                if meet <= facets[l]:
                    mask |= 1 << l
            witnesses[c][j] = mask

    dead: set[int] = set()
    visited = 0

    # weakly decreasing dimensions force each size class to be exhausted
    # before the next smaller one starts, so the candidates at every step
    # are the unplaced facets of the largest size still outstanding
    cand = sorted(range(n), key=lambda i: (-len(facets[i]), k.face_key(facets[i])))
    sizes = sorted({len(f) for f in facets}, reverse=True)
    by_size = {s: [c for c in cand if len(facets[c]) == s] for s in sizes}

    def extend(order: tuple[int, ...], used_mask: int, tier: int, left: int) -> tuple[int, ...] | None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise _BudgetExhausted
        if len(order) == n:
            return order
        if left == 0:
            tier += 1
            left = len(by_size[sizes[tier]])
        for c in by_size[sizes[tier]]:
            if used_mask >> c & 1:
                continue
            wit = witnesses[c]
            if any(not wit[j] & used_mask for j in order):
                continue
            nxt_mask = used_mask | 1 << c
            if nxt_mask in dead:
                continue
            out = extend(order + (c,), nxt_mask, tier, left - 1)
            if out is not None:
                return out
            dead.add(nxt_mask)
        return None

    try:
        found = extend((), 0, 0, len(by_size[sizes[0]]))
    except _BudgetExhausted:
        return ShellingResult(None, None, visited - 1)
    if found is None:
        return ShellingResult(False, None, visited)
    return ShellingResult(True, tuple(facets[i] for i in found), visited)


def verify_shelling_certificate(k: SimplicialComplex, order: Sequence[Iterable[str]]) -> bool:
    """Check a facet ordering directly against the definition: each facet
    must meet the union of its predecessors in a pure subcomplex of exactly
    one dimension lower.

    Independent of the search: this materializes the maximal intersections
    instead of using the pairwise reformulation.
    """
    seq = [frozenset(map(str, f)) for f in order]
    if frozenset(seq) != k.facets or len(seq) != len(k.facets):
        return False
    for t in range(1, len(seq)):
        fk = seq[t]
        if not fk:
            return False  # the empty facet can only come alone
        intersections = [fj & fk for fj in seq[:t]]
        maximal = reduce_to_maximal(intersections)
        if any(len(m) != len(fk) - 1 for m in maximal):
            return False
    return True


def verify_certificate(k: SimplicialComplex, cert) -> bool:
    """Dispatch on certificate shape: shedding trees are dicts/SheddingNode,
    shelling orders are facet sequences."""
    if isinstance(cert, SheddingNode):
        return verify_shedding_certificate(k, cert)
    if isinstance(cert, dict):
        if "order" in cert:
            return verify_shelling_certificate(k, cert["order"])
        try:
            node = SheddingNode.from_json_dict(cert)
        except (KeyError, TypeError, ValueError):
            return False
        return verify_shedding_certificate(k, node)
    if isinstance(cert, (list, tuple)):
        return verify_shelling_certificate(k, cert)
    return False
