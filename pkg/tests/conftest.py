"""Shared fixtures and naive oracles.

The oracle helpers recompute everything straight from the definitions
over raw facet tuples (powersets, set unions, exhaustive scans).  They
deliberately share no code with the package so that tests compare two
independent routes.
"""

from itertools import combinations

import pytest

from bistellar import SimplicialComplex, cross_polytope, simplex_boundary


# -- naive oracles over raw facet tuples ---------------------------------------


def naive_faces(facets):
    """Every nonempty face of the complex generated by ``facets``."""
    out = set()
    for facet in facets:
        for k in range(1, len(facet) + 1):
            out.update(combinations(sorted(facet), k))
    return out


def naive_f_vector(facets):
    faces = naive_faces(facets)
    top = max(len(f) for f in faces)
    counts = [0] * top
    for f in faces:
        counts[len(f) - 1] += 1
    return tuple(counts)


def naive_euler(facets):
    return sum((-1) ** (len(f) - 1) for f in naive_faces(facets))


def naive_link_faces(facets, face):
    """All faces B with B disjoint from ``face`` and B ∪ face a face."""
    faces = naive_faces(facets)
    fs = set(face)
    out = set()
    for b in faces | {()}:
        if fs & set(b):
            continue
        if tuple(sorted(fs | set(b))) in faces:
            out.add(b)
    return out


def naive_admissible_moves(facets):
    """All bistellar moves straight from the definition.

    For each face A, the link must equal the boundary of a simplex B
    that is not a face (a fresh vertex when A is a facet).  Returns
    (removed, inserted) pairs with 'fresh' standing in for the new id.
    """
    facets = [frozenset(f) for f in facets]
    n = max(len(f) for f in facets) - 1
    all_faces = naive_faces([tuple(sorted(f)) for f in facets])
    moves = []
    for face in sorted(all_faces, key=lambda t: (len(t), t)):
        r = len(face) - 1
        link = {tuple(sorted(f - set(face))) for f in facets if set(face) <= f}
        if r == n:
            if link == {()}:
                moves.append((face, "fresh"))
            continue
        strands = set()
        for piece in link:
            strands.update(piece)
        candidate = tuple(sorted(strands))
        if len(candidate) != n - r + 1:
            continue
        boundary = {tuple(sorted(set(candidate) - {w})) for w in candidate}
        if link == boundary and candidate not in all_faces:
            moves.append((face, candidate))
    return moves


def naive_alternating_sign(labels):
    """+1/-1/0 for a tuple of labels, by sorting and scanning."""
    values = sorted(labels, key=abs)
    for a, b in zip(values, values[1:]):
        if abs(a) == abs(b) or (a > 0) == (b > 0):
            return 0
    return 1 if values[0] > 0 else -1


def naive_alpha(facets, labelling):
    plus = minus = 0
    for f in facets:
        sign = naive_alternating_sign([labelling[v] for v in f])
        if sign > 0:
            plus += 1
        elif sign < 0:
            minus += 1
    return plus, minus


# -- fixtures -------------------------------------------------------------------


@pytest.fixture
def triangle_boundary():
    return simplex_boundary(2)


@pytest.fixture
def tetra_boundary():
    return simplex_boundary(3)


@pytest.fixture
def octahedron():
    return cross_polytope(3)


@pytest.fixture
def four_cycle():
    return cross_polytope(2)


@pytest.fixture
def square_complex():
    return SimplicialComplex.from_facets([[1, 2], [2, 3], [3, 4], [1, 4]])
