"""Reduced simplicial homology over the rationals or a prime field, the
Reisner criterion for Cohen-Macaulayness, and sequential Cohen-Macaulayness
via pure skeletons."""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, link, pure_skeleton


def parse_field(spec: str) -> int | None:
    """Normalize a field descriptor: ``q``/``Q`` is the rationals (None),
    ``gf:p`` or ``GF(p)`` is the prime field of order p."""
    s = spec.strip().lower()
    if s in ("q", "rational", "rationals"):
        return None
    if s.startswith("gf:"):
        p = int(s[3:])
    elif s.startswith("gf(") and s.endswith(")"):
        p = int(s[3:-1])
    else:
        raise ValueError(f"unknown field descriptor {spec!r}")
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return p


def field_name(p: int | None) -> str:
    return "Q" if p is None else f"GF({p})"


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers; ``reduced[i]`` is the rank in degree i-1, so
    the list starts with the degree -1 entry."""

    reduced: tuple[int, ...]
    field: str

    def betti(self, degree: int) -> int:
        i = degree + 1
        if 0 <= i < len(self.reduced):
            return self.reduced[i]
        return 0

    @property
    def trivial(self) -> bool:
        return all(b == 0 for b in self.reduced)


def _rank(columns: list[dict[int, int]], p: int | None) -> int:
    """Rank of a sparse integer matrix given as columns.

    Over the rationals the elimination is fraction-free (integer cross
    multiplication with gcd normalization); over GF(p) it reduces mod p.
    """
    from math import gcd

    pivots: list[tuple[int, dict[int, int]]] = []  # (pivot row, column)
    rank = 0
    for col in columns:
        col = dict(col)
        if p is not None:
            col = {r: v % p for r, v in col.items() if v % p}
        for prow, pcol in pivots:
            if prow not in col:
                continue
            if p is None:
                a = pcol[prow]
                b = col[prow]
                merged = {r: v * a for r, v in col.items()}
                for r, v in pcol.items():
                    merged[r] = merged.get(r, 0) - v * b
                col = {r: v for r, v in merged.items() if v}
                g = 0
                for v in col.values():
                    g = gcd(g, v)
                if g > 1:
                    col = {r: v // g for r, v in col.items()}
            else:
                factor = (col[prow] * pow(pcol[prow], p - 2, p)) % p
                merged = dict(col)
                for r, v in pcol.items():
                    merged[r] = (merged.get(r, 0) - factor * v) % p
                col = {r: v for r, v in merged.items() if v}
        if col:
            # prefer a +-1 pivot to keep integer growth down
            prow = None
            for r, v in col.items():
                if abs(v) == 1:
                    prow = r
                    break
            if prow is None:
                prow = min(col)
            pivots.append((prow, col))
            rank += 1
    return rank


def _boundary_columns(
    lower: list[frozenset[str]], upper: list[frozenset[str]], key
) -> list[dict[int, int]]:
    """Boundary matrix columns: for each upper face, alternating-sign
    incidences with its codimension-one subfaces."""
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for face in upper:
        ordered = sorted(face, key=key)
        col: dict[int, int] = {}
        for j, v in enumerate(ordered):
            sub = face - {v}
            col[index[sub]] = 1 if j % 2 == 0 else -1
        cols.append(col)
    return cols


def _composition_vanishes(
    upper: list[frozenset[str]], key
) -> bool:
    """Check that taking two successive boundaries of every face cancels."""
    for face in upper:
        acc: dict[frozenset[str], int] = {}
        ordered = sorted(face, key=key)
        for j, v in enumerate(ordered):
            sign_v = 1 if j % 2 == 0 else -1
            rest = [u for u in ordered if u != v]
            for i, u in enumerate(rest):
                sign_u = 1 if i % 2 == 0 else -1
                sub = face - {v, u}
                acc[sub] = acc.get(sub, 0) + sign_v * sign_u
        if any(acc.values()):
            return False
    return True


def reduced_homology(k: SimplicialComplex, field: int | None = None) -> BettiProfile:
    """Reduced Betti numbers of ``k``; ``field`` is None for the rationals or
    a prime p for GF(p).  Exact arithmetic throughout."""
    name = field_name(field)
    if k.is_void:
        return BettiProfile((), name)
    grouped = k.faces_by_dimension()
    top = max(grouped)
    key = lambda v: k.index[v]  # noqa: E731

    counts = {d: len(grouped.get(d, ())) for d in range(-1, top + 1)}
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        cols = _boundary_columns(grouped.get(d - 1, []), grouped.get(d, []), key)
        ranks[d] = _rank(cols, field)
        assert _composition_vanishes(grouped.get(d, []), key), "boundary of boundary is nonzero"
    ranks[top + 1] = 0

    betti = []
    for d in range(-1, top + 1):
        b = counts[d] - ranks.get(d, 0) - ranks[d + 1]
        betti.append(b)
    euler_faces = sum((-1) ** d * counts[d] for d in range(-1, top + 1))
    euler_betti = sum((-1) ** d * b for d, b in zip(range(-1, top + 1), betti))
    assert euler_faces == euler_betti, "Euler-Poincare identity failed"
    return BettiProfile(tuple(betti), name)


@dataclass(frozen=True)
class CMReport:
    """Cohen-Macaulayness verdict with a machine-checkable witness.

    A failed purity pre-check reports a smallest facet as witness with
    reason ``non-pure``; a Reisner failure reports the face whose link has
    unexpected homology together with the offending degree.
    """

    cohen_macaulay: bool
    field: str
    witness_face: frozenset[str] | None = None
    witness_degree: int | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"cohen_macaulay": self.cohen_macaulay, "field": self.field}
        if not self.cohen_macaulay:
            out["witness_face"] = sorted(self.witness_face)
            out["reason"] = self.reason
            if self.witness_degree is not None:
                out["witness_degree"] = self.witness_degree
        return out


def is_cohen_macaulay(k: SimplicialComplex, field: int | None = None) -> CMReport:
    """Reisner's criterion over a field: purity plus vanishing reduced
    homology of every face link below its dimension.

    Faces are scanned in (dimension, label) order, so a false verdict always
    carries the lexicographically first witness.
    """
    name = field_name(field)
    if k.is_void:
        raise ValueError("void complex")
    if not k.is_pure():
        smallest = min(k.facets, key=lambda f: (len(f), k.face_key(f)))
        return CMReport(False, name, smallest, None, "non-pure")
    grouped = k.faces_by_dimension()
    for d in sorted(grouped):
        for face in grouped[d]:
            lk = link(k, face)
            lk_dim = lk.dimension
            profile = reduced_homology(lk, field)
            for degree in range(-1, lk_dim):
                if profile.betti(degree) != 0:
                    return CMReport(False, name, face, degree, "link-homology")
    return CMReport(True, name)


@dataclass(frozen=True)
class SCMReport:
    """Per-skeleton Cohen-Macaulay verdicts for m = 1..dim."""

    sequentially_cohen_macaulay: bool
    field: str
    skeletons: tuple[tuple[int, CMReport], ...]

    def failing_dimensions(self) -> list[int]:
        return [m for m, rep in self.skeletons if not rep.cohen_macaulay]

    def to_json_dict(self) -> dict:
        return {
            "sequentially_cohen_macaulay": self.sequentially_cohen_macaulay,
            "field": self.field,
            "skeletons": [
                {"m": m, **rep.to_json_dict()} for m, rep in self.skeletons
            ],
        }


def is_scm(k: SimplicialComplex, field: int | None = None) -> SCMReport:
    """Sequential Cohen-Macaulayness: every pure m-skeleton, m = 1..dim, is
    Cohen-Macaulay.  (The 0-skeleton, a disjoint set of points, is always
    Cohen-Macaulay, so starting at m = 1 agrees with the convention that
    includes it.)"""
    name = field_name(field)
    if k.is_void:
        raise ValueError("void complex")
    dim = k.dimension
    entries: list[tuple[int, CMReport]] = []
    verdict = True
    for m in range(1, (dim or 0) + 1):
        rep = is_cohen_macaulay(pure_skeleton(k, m), field)
        entries.append((m, rep))
        if not rep.cohen_macaulay:
            verdict = False
    return SCMReport(verdict, name, tuple(entries))
