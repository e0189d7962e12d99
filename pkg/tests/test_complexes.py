"""Core complex operations against naive recomputation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bistellar import (
    EmptyComplex,
    FaceNotPresent,
    InvalidVertexId,
    SimplicialComplex,
    VertexCollision,
    boundary_of_simplex,
    find_isomorphism,
    is_isomorphic,
    simplex_boundary,
)
from conftest import naive_euler, naive_f_vector, naive_link_faces


class TestFromFacets:
    def test_three_cycle(self):
        cx = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]])
        assert cx.f_vector().counts == (3, 3)

    def test_subset_pruned(self):
        cx = SimplicialComplex.from_facets([[1, 2, 3], [1, 2]])
        assert cx.facets == ((1, 2, 3),)

    def test_tetra_boundary(self):
        cx = SimplicialComplex.from_facets(
            [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
        assert cx.f_vector().counts == (4, 6, 4)

    def test_empty_input(self):
        with pytest.raises(EmptyComplex):
            SimplicialComplex.from_facets([])

    def test_zero_vertex(self):
        with pytest.raises(InvalidVertexId):
            SimplicialComplex.from_facets([[0, 1]])

    @given(st.lists(st.frozensets(st.integers(-6, 6).filter(bool),
                                  min_size=1, max_size=4),
                    min_size=1, max_size=8))
    def test_facets_always_antichain(self, sets):
        cx = SimplicialComplex.from_facets(sets)
        facets = [frozenset(f) for f in cx.facets]
        for a in facets:
            for b in facets:
                assert a == b or not a <= b
        # downward closure: every subset of a facet is a member
        for f in cx.facets:
            for v in f:
                assert tuple(x for x in f if x != v) in cx


class TestFVector:
    def test_tetra(self, tetra_boundary):
        fv = tetra_boundary.f_vector()
        assert fv.counts == (4, 6, 4)
        assert fv.euler_characteristic == 2

    def test_octahedron(self, octahedron):
        assert octahedron.f_vector().counts == (6, 12, 8)
        assert octahedron.f_vector().euler_characteristic == 2

    def test_sd_of_tetra_boundary(self, tetra_boundary):
        # oracle: naive face counts of the subdivision, Euler cross-check
        sd, _ = tetra_boundary.barycentric_subdivide()
        assert naive_f_vector(sd.facets) == (14, 36, 24)
        assert 14 - 36 + 24 == 2
        assert sd.f_vector().counts == (14, 36, 24)

    def test_matches_naive_on_corpus(self, octahedron, tetra_boundary):
        for cx in (octahedron.complex, tetra_boundary, simplex_boundary(4)):
            assert cx.f_vector().counts == naive_f_vector(cx.facets)


class TestLinkStar:
    def test_vertex_link_in_tetra_boundary(self, tetra_boundary):
        link = tetra_boundary.link((1,))
        assert link == SimplicialComplex.from_facets([[2, 3], [3, 4], [2, 4]])

    def test_vertex_link_in_octahedron(self, octahedron):
        link = octahedron.link((1,))
        # four non-antipodal vertices forming a cycle
        assert link.f_vector().counts == (4, 4)
        assert -1 not in link.vertices and 1 not in link.vertices

    def test_edge_link_two_points(self, tetra_boundary):
        link = tetra_boundary.link((1, 2))
        assert link.facets == ((3,), (4,))

    def test_facet_link_is_empty_complex(self, tetra_boundary):
        assert tetra_boundary.link((1, 2, 3)).facets == ((),)

    def test_missing_face(self, tetra_boundary):
        with pytest.raises(FaceNotPresent):
            tetra_boundary.link((1, 5))

    def test_star_is_join_of_face_and_link(self, octahedron, tetra_boundary):
        for cx in (octahedron.complex, tetra_boundary):
            for face in cx.faces():
                link = cx.link(face)
                cone = SimplicialComplex.from_facets([face]).join(link)
                assert cx.star(face) == cone

    def test_link_matches_naive(self, octahedron):
        cx = octahedron.complex
        for face in cx.faces():
            reported = set(cx.link(face).faces()) | {()}
            assert reported == naive_link_faces(cx.facets, face) | {()}


class TestJoin:
    def test_two_point_spheres(self):
        s0a = SimplicialComplex.from_facets([[1], [2]])
        s0b = SimplicialComplex.from_facets([[3], [4]])
        square = s0a.join(s0b)
        assert square.f_vector().counts == (4, 4)
        assert is_isomorphic(
            square, SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4], [1, 4]]))

    def test_cone_over_cycle(self, triangle_boundary):
        point = SimplicialComplex.from_facets([[9]])
        cone = point.join(triangle_boundary)
        assert cone.f_vector().counts == (4, 6, 3)

    def test_edge_join_edge_is_solid_tetrahedron(self):
        left = SimplicialComplex.from_facets([[1, 2]])
        right = SimplicialComplex.from_facets([[3, 4]])
        assert left.join(right).facets == ((1, 2, 3, 4),)

    def test_shared_vertex_rejected(self):
        left = SimplicialComplex.from_facets([[1, 2]])
        right = SimplicialComplex.from_facets([[2, 3]])
        with pytest.raises(VertexCollision):
            left.join(right)

    def test_dimension_adds(self, triangle_boundary, tetra_boundary):
        edge = SimplicialComplex.from_facets([[8, 9]])
        assert (edge.join(tetra_boundary).dimension
                == edge.dimension + tetra_boundary.dimension + 1)


class TestStellarSubdivision:
    def test_at_edge_of_tetra_boundary(self, tetra_boundary):
        result = tetra_boundary.stellar_subdivide((1, 2), 5)
        # oracle: the definition, assembled by hand from naive set ops
        kept = [f for f in tetra_boundary.facets if not {1, 2} <= set(f)]
        added = []
        for f in tetra_boundary.facets:
            if {1, 2} <= set(f):
                rest = [v for v in f if v not in (1, 2)]
                for drop in (1, 2):
                    keep = [v for v in (1, 2) if v != drop]
                    added.append(tuple(sorted(keep + rest + [5])))
        expected = SimplicialComplex.from_facets(kept + added)
        assert result == expected
        assert result.f_vector().counts == (5, 9, 6)
        assert result.euler_characteristic() == 2

    def test_at_facet_is_one_to_three(self, tetra_boundary):
        result = tetra_boundary.stellar_subdivide((1, 2, 3), 5)
        assert result.f_vector().counts == (5, 9, 6)

    def test_at_vertex_renames(self, triangle_boundary):
        result = triangle_boundary.stellar_subdivide((1,), 7)
        assert 1 not in result.vertices and 7 in result.vertices
        assert is_isomorphic(result, triangle_boundary)

    def test_fresh_id_collision(self, tetra_boundary):
        with pytest.raises(VertexCollision):
            tetra_boundary.stellar_subdivide((1, 2), 4)

    def test_preserves_euler(self, octahedron):
        cx = octahedron.complex
        for face in cx.faces():
            sub = cx.stellar_subdivide(face, 99)
            assert sub.euler_characteristic() == 2


class TestBarycentricSubdivision:
    def test_three_cycle_becomes_six_cycle(self, triangle_boundary):
        sd, face_map = triangle_boundary.barycentric_subdivide()
        assert sd.f_vector().counts == (6, 6)
        assert set(face_map[v] for v in sd.vertices if len(face_map[v]) == 2) \
            == set(triangle_boundary.faces(1))

    def test_octahedron_counts(self, octahedron):
        sd, _ = octahedron.complex.barycentric_subdivide()
        assert sd.f_vector().counts == (26, 72, 48)
        assert sd.euler_characteristic() == 2

    def test_facet_multiplication(self, tetra_boundary, octahedron):
        for cx in (tetra_boundary, octahedron.complex):
            sd, _ = cx.barycentric_subdivide()
            factor = 1
            for k in range(2, cx.dimension + 2):
                factor *= k
            assert len(sd.facets) == factor * len(cx.facets)

    def test_face_map_covers_all_faces(self, tetra_boundary):
        sd, face_map = tetra_boundary.barycentric_subdivide()
        assert sorted(face_map.values(), key=lambda t: (len(t), t)) \
            == tetra_boundary.faces()
        assert set(face_map) == set(sd.vertices)

    def test_euler_preserved(self, triangle_boundary, tetra_boundary, octahedron):
        for cx in (triangle_boundary, tetra_boundary, octahedron.complex):
            sd, _ = cx.barycentric_subdivide()
            assert naive_euler(sd.facets) == naive_euler(cx.facets)


class TestIsomorphism:
    def test_square_vs_join(self, square_complex):
        join = SimplicialComplex.from_facets([[1], [2]]).join(
            SimplicialComplex.from_facets([[3], [4]]))
        assert is_isomorphic(square_complex, join)

    def test_square_vs_triangle(self, square_complex, triangle_boundary):
        assert not is_isomorphic(square_complex, triangle_boundary)

    def test_tetra_vs_octahedron(self, tetra_boundary, octahedron):
        assert not is_isomorphic(tetra_boundary, octahedron.complex)

    def test_reflexive_and_symmetric(self, octahedron, tetra_boundary):
        for cx in (octahedron.complex, tetra_boundary):
            assert is_isomorphic(cx, cx)
        sd, _ = tetra_boundary.barycentric_subdivide()
        assert is_isomorphic(sd, sd)
        corpus = [octahedron.complex, tetra_boundary, sd, simplex_boundary(4)]
        for left in corpus:
            for right in corpus:
                assert is_isomorphic(left, right) == is_isomorphic(right, left)

    def test_bijection_maps_facets_onto_facets(self, octahedron):
        cx = octahedron.complex
        relabelled = SimplicialComplex.from_facets(
            [[v * 10 for v in f] for f in cx.facets])
        mapping = find_isomorphism(cx, relabelled)
        assert mapping is not None
        image = {tuple(sorted(mapping[v] for v in f)) for f in cx.facets}
        assert image == set(relabelled.facets)

    def test_detects_nonisomorphic_same_f(self):
        # same f-vector (6,12,8), different triangulations: octahedron has
        # no degree-3 vertex, the stacked sphere does
        stacked = simplex_boundary(3)
        stacked = stacked.stellar_subdivide((1, 2, 3), 5)
        stacked = stacked.stellar_subdivide((1, 2, 4), 6)
        from bistellar import cross_polytope
        octa = cross_polytope(3).complex
        assert stacked.f_vector() == octa.f_vector()
        assert not is_isomorphic(stacked, octa)


class TestBoundaryOfSimplex:
    def test_edge(self):
        assert boundary_of_simplex((1, 2)).facets == ((1,), (2,))

    def test_vertex(self):
        assert boundary_of_simplex((3,)).facets == ((),)

    def test_triangle(self):
        assert boundary_of_simplex((1, 2, 3)).f_vector().counts == (3, 3)


@given(st.sets(st.integers(-9, 9).filter(bool), min_size=1, max_size=5))
@settings(max_examples=60)
def test_membership_downward_closed(vertices):
    cx = SimplicialComplex.from_facets([vertices])
    for face in cx.faces():
        assert face in cx
        for v in face:
            assert tuple(x for x in face if x != v) in cx
