import itertools
import random

import pytest
from conftest import oracle_ind_r_facets, oracle_r_independent, random_graph

from rindep.complexes import (
    SimplicialComplex,
    alexander_dual,
    complex_from_json_dict,
    delete,
    f_vector,
    ind_hypergraph,
    ind_r,
    link,
    minimal_nonfaces,
    pure_skeleton,
)
from rindep.graphs import (
    complete_graph,
    demo_graph,
    half_apex_clique,
    induced_subgraph,
    is_connected,
    twin_bridge_paths,
)
from rindep.hypergraphs import Hypergraph, con_r


def facet_sets(k):
    return {frozenset(f) for f in k.facets}


def fs(*labels):
    return frozenset(labels)


class TestComplexType:
    def test_antichain_enforced(self):
        with pytest.raises(ValueError):
            SimplicialComplex(("a", "b"), frozenset({fs("a"), fs("a", "b")}))

    def test_conventions(self):
        void = SimplicialComplex(("a",), frozenset())
        empty = SimplicialComplex(("a",), frozenset({frozenset()}))
        point = SimplicialComplex(("a",), frozenset({fs("a")}))
        assert void.is_void and void.dimension is None
        assert empty.is_empty_complex and empty.is_simplex and empty.dimension == -1
        assert point.is_simplex and point.dimension == 0

    def test_json_round_trip(self):
        k = ind_r(demo_graph(), 2)
        assert complex_from_json_dict(k.to_json_dict()) == k


class TestIndR:
    def test_demo_r1(self):
        k = ind_r(demo_graph(), 1)
        assert facet_sets(k) == {fs("v2", "v3", "v4"), fs("v3", "v4", "v5"), fs("v1", "v5")}

    def test_demo_r2(self):
        k = ind_r(demo_graph(), 2)
        assert facet_sets(k) == {
            fs("v1", "v2"),
            fs("v1", "v3", "v5"),
            fs("v1", "v4", "v5"),
            fs("v2", "v3", "v4", "v5"),
        }

    def test_connected_graph_on_r_plus_one_vertices_gives_boundary(self):
        rng = random.Random(43)
        found = 0
        while found < 10:
            g = random_graph(rng, 3, 5)
            if not is_connected(g):
                continue
            r = len(g) - 1
            k = ind_r(g, r)
            full = frozenset(g.vertices)
            assert facet_sets(k) == {full - {v} for v in g.vertices}
            found += 1

    def test_faces_are_exactly_r_independent_sets(self):
        rng = random.Random(47)
        for _ in range(15):
            g = random_graph(rng, 3, 7)
            for r in (1, 2):
                k = ind_r(g, r)
                faces = k.faces()
                for size in range(len(g) + 1):
                    for combo in itertools.combinations(g.vertices, size):
                        s = frozenset(combo)
                        assert (s in faces) == oracle_r_independent(g, s, r)

    def test_facets_match_brute_force(self):
        rng = random.Random(53)
        for _ in range(10):
            g = random_graph(rng, 3, 7)
            for r in (1, 2, 3):
                assert facet_sets(ind_r(g, r)) == oracle_ind_r_facets(g, r)

    def test_nested_in_next_r(self):
        rng = random.Random(59)
        for _ in range(10):
            g = random_graph(rng, 3, 7)
            for r in (1, 2):
                lower = ind_r(g, r).faces()
                upper = ind_r(g, r + 1).faces()
                assert lower <= upper

    def test_complete_graph_skeleton(self):
        for n, r in ((4, 1), (5, 2), (6, 3)):
            k = ind_r(complete_graph(n), r)
            assert facet_sets(k) == {
                frozenset(c) for c in itertools.combinations(k.ground_set, r)
            }

    def test_never_void(self):
        k = ind_r(complete_graph(3), 1)
        assert not k.is_void


class TestIndHypergraph:
    def test_single_full_edge_gives_boundary(self):
        h = Hypergraph.reduced("abcd", [("a", "b", "c", "d")])
        k = ind_hypergraph(h)
        full = frozenset("abcd")
        assert facet_sets(k) == {full - {v} for v in "abcd"}

    def test_matches_ind_r_through_con(self):
        rng = random.Random(61)
        for _ in range(25):
            g = random_graph(rng, 3, 8)
            for r in (1, 2, 3):
                assert ind_hypergraph(con_r(g, r)) == ind_r(g, r)

    def test_empty_edge_gives_void(self):
        k = ind_hypergraph(Hypergraph.reduced("ab", [()]))
        assert k.is_void


class TestLinkAndDelete:
    def test_link_of_empty_face_is_identity(self):
        k = ind_r(demo_graph(), 2)
        assert link(k, ()) == k

    def test_link_in_bridge_complex_is_cone(self):
        k = ind_r(twin_bridge_paths(2), 2)
        lk = link(k, ["3"])
        assert all("1" in f for f in lk.facets)
        assert facet_sets(lk) == {fs("1", "2", "4"), fs("1", "a"), fs("1", "b")}

    def test_link_in_pure_skeleton(self):
        k = ind_r(half_apex_clique(2), 3)
        sk = pure_skeleton(k, 3)
        lk = link(sk, ["x1", "x2"])
        assert facet_sets(lk) == {fs("v1", "v2"), fs("v3", "v4")}

    def test_link_requires_a_face(self):
        k = ind_r(demo_graph(), 1)
        with pytest.raises(ValueError):
            link(k, ["v1", "v2"])  # an edge of the graph is a non-face here

    def test_delete_empty_face_rejected(self):
        with pytest.raises(ValueError):
            delete(ind_r(demo_graph(), 1), ())

    def test_delete_vertex_drops_ground(self):
        k = SimplicialComplex.from_faces("abc", [("a", "b")])
        out = delete(k, ["c"])  # ghost vertex: same facets, smaller ground set
        assert out.ground_set == ("a", "b")
        assert facet_sets(out) == {fs("a", "b")}

    def test_delete_matches_join_structure(self):
        g = twin_bridge_paths(2)
        k = ind_r(g, 2)
        out = delete(k, ["3"])
        sub = ind_r(induced_subgraph(g, ["1", "2", "a", "b"]), 2)
        expected = {f | fs("4") for f in sub.facets}
        assert facet_sets(out) == expected

    def test_delete_triangle_boundary_vertex(self):
        k = SimplicialComplex.from_faces("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        out = delete(k, ["a"])
        assert facet_sets(out) == {fs("b", "c")}

    def test_membership_against_definitions(self):
        rng = random.Random(67)
        for _ in range(12):
            g = random_graph(rng, 3, 6)
            k = ind_r(g, rng.choice((1, 2)))
            faces = sorted(k.faces(), key=k.face_key)
            face = rng.choice(faces)
            lk, dl = link(k, face), (delete(k, face) if face else None)
            all_faces = k.faces()
            lk_faces = lk.faces()
            for size in range(len(k.ground_set) + 1):
                for combo in itertools.combinations(k.ground_set, size):
                    s = frozenset(combo)
                    in_link = not (s & face) and (s | face) in all_faces
                    assert (s in lk_faces) == in_link
            if dl is not None:
                dl_faces = dl.faces()
                for s in all_faces:
                    assert (s in dl_faces) == (not face <= s)


class TestSkeletons:
    def test_top_skeleton_of_pure_complex_is_identity(self):
        k = SimplicialComplex.from_faces("abcd", [("a", "b", "c"), ("b", "c", "d")])
        assert pure_skeleton(k, 2) == k

    def test_half_apex_skeletons(self):
        k = ind_r(half_apex_clique(2), 3)
        sk3 = pure_skeleton(k, 3)
        assert facet_sets(sk3) == {fs("v1", "v2", "x1", "x2"), fs("v3", "v4", "x1", "x2")}
        sk2 = pure_skeleton(k, 2)
        assert len(sk2.facets) == 20
        assert all(len(f) == 3 for f in sk2.facets)

    def test_purity_and_range(self):
        k = ind_r(demo_graph(), 2)
        for m in range(k.dimension + 1):
            sk = pure_skeleton(k, m)
            assert sk.is_pure() and sk.dimension == m
        with pytest.raises(ValueError):
            pure_skeleton(k, k.dimension + 1)
        with pytest.raises(ValueError):
            pure_skeleton(k, -1)


class TestAlexanderDual:
    def test_boundary_of_simplex_dualizes_to_empty_complex(self):
        full = frozenset("abcd")
        bd = SimplicialComplex.from_faces("abcd", [full - {v} for v in "abcd"])
        assert alexander_dual(bd) == SimplicialComplex(bd.ground_set, frozenset({frozenset()}))

    def test_involution(self):
        rng = random.Random(71)
        for _ in range(20):
            g = random_graph(rng, 3, 7)
            k = ind_r(g, rng.choice((1, 2)))
            assert alexander_dual(alexander_dual(k)) == k

    def test_full_simplex_and_void_are_swapped(self):
        full = SimplicialComplex.simplex("abc")
        void = SimplicialComplex(("a", "b", "c"), frozenset())
        assert alexander_dual(full) == void
        assert alexander_dual(void) == full

    def test_dual_minimal_nonfaces_are_facet_complements(self):
        rng = random.Random(73)
        for _ in range(15):
            g = random_graph(rng, 3, 6)
            k = ind_r(g, rng.choice((1, 2)))
            full = frozenset(k.ground_set)
            dual = alexander_dual(k)
            assert minimal_nonfaces(dual) == frozenset(full - f for f in k.facets)


class TestFVector:
    def test_triangle_boundary(self):
        k = SimplicialComplex.from_faces("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        assert f_vector(k) == [1, 3, 3]

    def test_demo_r2_vertex_count(self):
        assert f_vector(ind_r(demo_graph(), 2))[1] == 5

    def test_void(self):
        assert f_vector(SimplicialComplex(("a",), frozenset())) == []

    def test_counts_match_enumeration(self):
        rng = random.Random(79)
        for _ in range(10):
            g = random_graph(rng, 3, 6)
            k = ind_r(g, rng.choice((1, 2)))
            fv = f_vector(k)
            grouped = k.faces_by_dimension()
            assert fv == [len(grouped[d]) for d in sorted(grouped)]
