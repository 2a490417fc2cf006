"""Square-free monomial ideals as support antichains: Stanley-Reisner ideals,
Alexander duals via minimal vertex covers, and the vertex-splittable
recursion with replayable certificates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex, ind_r, minimal_nonfaces
from .graphs import Graph
from .hypergraphs import Hypergraph, con_r, minimal_vertex_covers

DEFAULT_SPLIT_BUDGET = 500_000


class ZeroIdealError(ValueError):
    """The zero ideal was passed where a proper ideal is required."""


class UnitIdealError(ValueError):
    """The unit ideal was passed where a proper ideal is required."""


class CrossCheckError(RuntimeError):
    """Two independent computation paths disagreed; always a bug."""


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal: generators are supports, kept as an
    antichain under divisibility (= inclusion).  No generators is the zero
    ideal; the single generator {} (the monomial 1) is the unit ideal."""

    variables: tuple[str, ...]
    generators: frozenset[frozenset[str]]

    def __post_init__(self):
        names = set(self.variables)
        if len(names) != len(self.variables):
            raise ValueError("duplicate variable names")
        for g in self.generators:
            if not g <= names:
                raise ValueError(f"generator {sorted(g)} uses unknown variables")
        for a, b in itertools.combinations(self.generators, 2):
            if a <= b or b <= a:
                raise ValueError("generators do not form an antichain")

    @classmethod
    def from_supports(cls, variables: Iterable, supports: Iterable) -> MonomialIdeal:
        return cls(
            tuple(str(v) for v in variables),
            frozenset(frozenset(map(str, s)) for s in supports),
        )

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return frozenset() in self.generators

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    def var_key(self, s: frozenset[str]) -> tuple[int, ...]:
        idx = {v: i for i, v in enumerate(self.variables)}
        return tuple(sorted(idx[v] for v in s))

    def sorted_generators(self) -> list[frozenset[str]]:
        return sorted(self.generators, key=lambda s: (len(s), self.var_key(s)))

    def contains_monomial(self, support: Iterable[str]) -> bool:
        s = frozenset(map(str, support))
        return any(g <= s for g in self.generators)

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "generators": [
                [v for v in self.variables if v in g] for g in self.sorted_generators()
            ],
        }


def stanley_reisner(k: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the minimal non-faces of ``k``."""
    if k.is_void:
        raise ValueError("void complex has no Stanley-Reisner ideal")
    return MonomialIdeal(k.ground_set, minimal_nonfaces(k))


def hyperedge_ideal(h: Hypergraph) -> MonomialIdeal:
    """Ideal generated by the edges of a simple hypergraph."""
    return MonomialIdeal(h.vertices, h.edges)


def alexander_dual_ideal(i: MonomialIdeal) -> MonomialIdeal:
    """Dual ideal: generators are the minimal vertex covers of the generator
    hypergraph.  Zero and unit inputs are rejected outright rather than
    given a convention."""
    if i.is_zero:
        raise ZeroIdealError("the zero ideal has no Alexander dual here")
    if i.is_unit:
        raise UnitIdealError("the unit ideal has no Alexander dual here")
    covers = minimal_vertex_covers(Hypergraph(i.variables, i.generators))
    return MonomialIdeal(i.variables, covers)


def sr_dual(k: SimplicialComplex) -> MonomialIdeal:
    """Alexander dual of the Stanley-Reisner ideal of ``k``."""
    return alexander_dual_ideal(stanley_reisner(k))


def dual_of_ind(g: Graph, r: int) -> MonomialIdeal:
    """Dual of the Stanley-Reisner ideal of the r-independence complex.

    Computed twice: as the cover dual of the connected-subset hypergraph's
    edge ideal, and as the dual of the complex's minimal-non-face ideal.
    Any mismatch raises, since the two routes must agree facet for facet.

    When the graph has no connected (r+1)-subset the complex is the full
    simplex, its Stanley-Reisner ideal is zero, and the dual is rejected
    just like ``alexander_dual_ideal`` on the zero ideal.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    h = con_r(g, r)
    if not h.edges:
        raise ZeroIdealError(
            "every vertex subset is r-independent; the Stanley-Reisner ideal is zero"
        )
    via_covers = alexander_dual_ideal(hyperedge_ideal(h))
    via_complex = alexander_dual_ideal(stanley_reisner(ind_r(g, r)))
    if via_covers != via_complex:
        raise CrossCheckError(
            "cover dual and Stanley-Reisner dual disagree; this is a bug"
        )
    return via_covers


# ---------------------------------------------------------------------------
# vertex-splittable recursion


@dataclass(frozen=True)
class SplitNode:
    """One node of a splitting certificate.

    Leaves are the zero ideal, the unit ideal, or a principal ideal; inner
    nodes name the pivot variable and carry certificates for the quotient
    part (generators that contained the pivot, with it removed) and the
    remainder part (generators avoiding the pivot).
    """

    generators: tuple[tuple[str, ...], ...]
    pivot: str | None = None
    quotient: SplitNode | None = None
    remainder: SplitNode | None = None

    @property
    def is_leaf(self) -> bool:
        return self.pivot is None

    def to_json_dict(self) -> dict:
        out: dict = {"generators": [list(g) for g in self.generators]}
        if not self.is_leaf:
            out["pivot"] = self.pivot
            out["quotient"] = self.quotient.to_json_dict()
            out["remainder"] = self.remainder.to_json_dict()
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> SplitNode:
        gens = tuple(sorted(tuple(sorted(map(str, g))) for g in data["generators"]))
        if "pivot" not in data:
            return cls(gens)
        return cls(
            gens,
            str(data["pivot"]),
            cls.from_json_dict(data["quotient"]),
            cls.from_json_dict(data["remainder"]),
        )


@dataclass(frozen=True)
class SplitResult:
    """``splittable`` is None when the search budget ran out."""

    splittable: bool | None
    certificate: SplitNode | None
    explored: int

    @property
    def budget_exceeded(self) -> bool:
        return self.splittable is None


def _canon_gens(gens: Iterable[frozenset[str]]) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(tuple(sorted(g)) for g in gens))


def _split_parts(
    gens: frozenset[frozenset[str]], x: str
) -> tuple[frozenset[frozenset[str]], frozenset[frozenset[str]]] | None:
    """Quotient/remainder decomposition at pivot ``x``, or None when the
    pivot does not satisfy the splitting conditions.

    The quotients of the pivot-containing generators must be exactly the
    minimal generators of the candidate first part: equivalently, every
    pivot-free generator must contain some quotient (which also gives the
    required containment of the remainder in the quotient part)."""
    with_x = [g for g in gens if x in g]
    if not with_x:
        return None
    quotients = frozenset(g - {x} for g in with_x)
    remainder = frozenset(g for g in gens if x not in g)
    for f in remainder:
        if not any(q <= f for q in quotients):
            return None
    return quotients, remainder


def is_vertex_splittable(i: MonomialIdeal, budget: int = DEFAULT_SPLIT_BUDGET) -> SplitResult:
    """Recursive splitting search with memoization on the generator
    antichain.  Zero, unit, and principal ideals are the base cases; the
    budget counts memo entries."""
    memo: dict[frozenset[frozenset[str]], SplitNode | None] = {}

    def solve(gens: frozenset[frozenset[str]]) -> SplitNode | None:
        if gens in memo:
            return memo[gens]
        if len(memo) >= budget:
            raise _BudgetExhausted
        memo[gens] = None
        if len(gens) <= 1:
            node = SplitNode(_canon_gens(gens))
            memo[gens] = node
            return node
        support = sorted(frozenset().union(*gens))
        for x in support:
            parts = _split_parts(gens, x)
            if parts is None:
                continue
            quotients, remainder = parts
            q_cert = solve(quotients)
            if q_cert is None:
                continue
            r_cert = solve(remainder)
            if r_cert is None:
                continue
            node = SplitNode(_canon_gens(gens), x, q_cert, r_cert)
            memo[gens] = node
            return node
        return None

    try:
        cert = solve(i.generators)
    except _BudgetExhausted:
        return SplitResult(None, None, len(memo))
    return SplitResult(cert is not None, cert, len(memo))


def verify_split_certificate(i: MonomialIdeal, cert: SplitNode) -> bool:
    """Replay a splitting certificate, recomputing every pivot condition
    from the generators recorded at each node."""
    if cert.generators != _canon_gens(i.generators):
        return False

    def check(node: SplitNode) -> bool:
        gens = frozenset(frozenset(g) for g in node.generators)
        if len(gens) != len(node.generators):
            return False
        for a, b in itertools.combinations(gens, 2):
            if a <= b or b <= a:
                return False
        if node.is_leaf:
            return len(gens) <= 1
        if node.quotient is None or node.remainder is None:
            return False
        parts = _split_parts(gens, node.pivot)
        if parts is None:
            return False
        quotients, remainder = parts
        if node.quotient.generators != _canon_gens(quotients):
            return False
        if node.remainder.generators != _canon_gens(remainder):
            return False
        return check(node.quotient) and check(node.remainder)

    return check(cert)
