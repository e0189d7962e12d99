"""Centrally symmetric structure: validation, subdivision, quotients."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bistellar import (
    ActionNotFree,
    NotEquivariant,
    QuotientRequiresSubdivision,
    SimplicialComplex,
    antipode,
    cross_polytope,
    is_isomorphic,
    make_signed,
)
from conftest import naive_f_vector


class TestAntipode:
    def test_mixed_signs(self):
        assert antipode((1, -2, 3)) == (-3, -1, 2)

    def test_empty(self):
        assert antipode(()) == ()

    @given(st.sets(st.integers(-20, 20).filter(bool), max_size=8))
    def test_involution(self, face):
        face = tuple(sorted(face))
        assert antipode(antipode(face)) == face


class TestMakeSigned:
    def test_octahedron_valid(self, octahedron):
        again = make_signed(octahedron.complex)
        assert again.complex == octahedron.complex

    def test_antipodal_pair_in_facet(self):
        cx = SimplicialComplex.from_facets([[1, -1]])
        with pytest.raises(ActionNotFree):
            make_signed(cx)

    def test_missing_antipodal_facet(self):
        cx = SimplicialComplex.from_facets([[1, 2]])
        with pytest.raises(NotEquivariant):
            make_signed(cx)

    def test_every_face_has_antipode(self, octahedron, four_cycle):
        for signed in (octahedron, four_cycle):
            for face in signed.complex.faces():
                assert antipode(face) in signed.complex
                assert not set(face) & set(antipode(face))

    def test_link_commutes_with_antipode(self, octahedron):
        cx = octahedron.complex
        for face in cx.faces():
            mirrored = SimplicialComplex(
                tuple(sorted(antipode(f) for f in cx.link(face).facets)))
            assert mirrored == cx.link(antipode(face))


class TestEquivariantSubdivision:
    def test_four_cycle_to_eight_cycle(self, four_cycle):
        sd, face_map = four_cycle.equivariant_sd()
        assert sd.f_vector().counts == (8, 8)
        for v in sd.vertices:
            assert -v in set(sd.vertices)
            assert face_map[-v] == antipode(face_map[v])

    def test_octahedron_counts_and_validity(self, octahedron):
        sd, _ = octahedron.equivariant_sd()
        assert sd.f_vector().counts == (26, 72, 48)
        make_signed(sd.complex)  # must validate cleanly

    def test_twice_on_four_cycle(self, four_cycle):
        once, _ = four_cycle.equivariant_sd()
        twice, _ = once.equivariant_sd()
        assert twice.f_vector().counts == (16, 16)
        make_signed(twice.complex)

    def test_same_complex_as_plain_subdivision(self, octahedron):
        plain, _ = octahedron.complex.barycentric_subdivide()
        signed, _ = octahedron.equivariant_sd()
        assert is_isomorphic(plain, signed.complex)

    def test_marks_subdivided(self, octahedron):
        sd, _ = octahedron.equivariant_sd()
        assert sd.subdivided and not octahedron.subdivided


class TestQuotient:
    def test_requires_subdivision(self, octahedron):
        with pytest.raises(QuotientRequiresSubdivision):
            octahedron.quotient()

    def test_octahedron_gives_projective_plane(self, octahedron):
        sd, _ = octahedron.equivariant_sd()
        quotient, projection = sd.quotient()
        assert quotient.f_vector().counts == (13, 36, 24)
        assert quotient.euler_characteristic() == 1
        assert all(projection[v] == abs(v) for v in sd.vertices)

    def test_four_cycle_gives_circle(self, four_cycle):
        sd, _ = four_cycle.equivariant_sd()
        quotient, _ = sd.quotient()
        assert quotient.euler_characteristic() == 0
        assert is_isomorphic(quotient, four_cycle.complex)

    def test_dimension_three_gives_projective_space(self):
        sd, _ = cross_polytope(4).equivariant_sd()
        assert sd.f_vector().counts == (80, 464, 768, 384)
        quotient, _ = sd.quotient()
        assert quotient.f_vector().counts == (40, 232, 384, 192)
        assert quotient.euler_characteristic() == 0

    def test_halves_every_entry(self, octahedron, four_cycle):
        for signed in (four_cycle, octahedron, cross_polytope(4)):
            sd, _ = signed.equivariant_sd()
            quotient, _ = sd.quotient()
            halved = tuple(c // 2 for c in sd.f_vector().counts)
            assert quotient.f_vector().counts == halved
            assert naive_f_vector(quotient.facets) == halved

    def test_quotient_links_match_preimage_links(self, octahedron):
        sd, _ = octahedron.equivariant_sd()
        quotient, projection = sd.quotient()
        for v in sd.vertices:
            if v < 0:
                continue
            assert is_isomorphic(quotient.link((projection[v],)),
                                 sd.complex.link((v,)))
