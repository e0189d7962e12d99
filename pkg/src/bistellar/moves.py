"""Bistellar moves, their symmetric pairs, and replayable flip logs.

A move swaps one side of a sphere bipyramid for the other: if the link
of a face ``A`` is exactly the boundary of a simplex ``B`` that is not
itself a face, the star of ``A`` (which equals ``A * boundary(B)``)
may be replaced by ``boundary(A) * B``.  On a centrally symmetric
complex the move and its antipodal image are applied together so the
result stays symmetric.
"""

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .complexes import (
    SimplicialComplex,
    boundary_of_simplex,
    complex_digest,
    normalize_face,
)
from .errors import (
    BistellarError,
    CorruptSequence,
    FaceNotPresent,
    InterferingAntipodalMove,
    MoveNotAdmissible,
    NoAdmissibleMove,
)
from .z2 import Z2Complex, antipode


@dataclass(frozen=True)
class BistellarMove:
    """A move descriptor: ``removed`` is the face whose star goes away,
    ``inserted`` the simplex that appears in its place.

    For the move to be admissible, ``removed`` must be present with
    link equal to the boundary of ``inserted``, and ``inserted`` must
    be absent.  When ``removed`` is a facet, ``inserted`` is a single
    fresh vertex.
    """

    removed: tuple
    inserted: tuple

    def __post_init__(self):
        object.__setattr__(self, "removed", normalize_face(self.removed))
        object.__setattr__(self, "inserted", normalize_face(self.inserted))

    def inverse(self):
        return BistellarMove(self.inserted, self.removed)

    def antipodal(self):
        return BistellarMove(antipode(self.removed), antipode(self.inserted))

    def fresh_ids(self, complex_):
        """Ids of ``inserted`` not present in ``complex_`` (the fresh vertices)."""
        present = set(complex_.vertices)
        return tuple(v for v in self.inserted if v not in present)

    def facet_delta(self):
        """Change in facet count when applied: |removed| - |inserted|."""
        return len(self.removed) - len(self.inserted)

    def f_delta(self, dimension):
        """Change of the whole f-vector on a pure complex of the given dimension.

        Added faces are exactly those containing ``inserted``; removed
        faces exactly those containing ``removed``; both counts are
        binomial.
        """
        a, b = len(self.removed), len(self.inserted)
        delta = []
        for k in range(dimension + 1):
            added = comb(a, k + 1 - b) if 0 <= k + 1 - b < a else 0
            gone = comb(b, k + 1 - a) if 0 <= k + 1 - a < b else 0
            delta.append(added - gone)
        return tuple(delta)

    def __repr__(self):
        return f"BistellarMove({list(self.removed)} -> {list(self.inserted)})"


def fresh_vertex(complex_):
    """Smallest positive id unused by the complex, with its negation also free."""
    used = {abs(v) for v in complex_.vertices}
    k = 1
    while k in used:
        k += 1
    return k


def _move_at(complex_, face, containing, dimension, fresh):
    """The admissible move removing ``face``, or None.

    ``containing`` lists the facets containing the face; admissibility
    requires exactly ``dimension + 2 - |face|`` of them with pairwise
    distinct complements whose union is a simplex absent from the
    complex.  Assumes the complex is pure.
    """
    need = dimension + 2 - len(face)
    if len(containing) != need:
        return None
    if need == 1:
        if len(face) != dimension + 1:
            return None
        return BistellarMove(face, (fresh,))
    fs = set(face)
    complements = [tuple(v for v in f if v not in fs) for f in containing]
    if any(len(c) != need - 1 for c in complements):
        return None
    if len(set(complements)) != need:
        return None
    candidate = set()
    for c in complements:
        candidate.update(c)
    if len(candidate) != need:
        return None
    inserted = tuple(sorted(candidate))
    if inserted in complex_:
        return None
    return BistellarMove(face, inserted)


def find_move(complex_, face):
    """The admissible move removing ``face``, or None.

    The complex must be pure.  When ``face`` is a facet the inserted
    vertex is chosen as the smallest unused positive id (with its
    negation also unused, so the same id works for symmetric pairs).
    """
    face = normalize_face(face)
    if face not in complex_:
        raise FaceNotPresent(f"face {face} is not in the complex")
    containing = [complex_.facets[i] for i in complex_.facets_containing(face)]
    return _move_at(complex_, face, containing, complex_.dimension,
                    fresh_vertex(complex_))


def enumerate_moves(complex_):
    """All admissible moves, sorted by (dimension of removed face, faces).

    The complex must be pure.  Facet moves all propose the same fresh
    vertex id; they are alternatives, not a batch.
    """
    n = complex_.dimension
    fresh = fresh_vertex(complex_)
    cofacets = {}
    for f in complex_.facets:
        for k in range(1, len(f) + 1):
            for c in combinations(f, k):
                cofacets.setdefault(c, []).append(f)
    out = []
    for face, containing in cofacets.items():
        move = _move_at(complex_, face, containing, n, fresh)
        if move is not None:
            out.append(move)
    out.sort(key=lambda m: (len(m.removed), m.removed, m.inserted))
    return out


def is_admissible(complex_, move):
    """Check a move against the complex without applying it."""
    A, B = move.removed, move.inserted
    if not A or not B or A not in complex_:
        return False
    if B in complex_:
        return False
    if len(A) + len(B) != complex_.dimension + 2:
        return False
    return complex_.link(A) == boundary_of_simplex(B)


def apply_move(complex_, move):
    """Apply a bistellar move and return ``(new complex, inverse move)``.

    The facet surgery is local: facets containing ``removed`` are
    deleted and replaced by one facet per vertex of ``removed``.  The
    result needs no antichain re-pruning (no retained facet can sit
    inside a new one, because the new facets all contain the previously
    absent simplex).
    """
    if not is_admissible(complex_, move):
        raise MoveNotAdmissible(f"{move} is not admissible here")
    A, B = move.removed, move.inserted
    doomed = set(complex_.facets_containing(A))
    out = [f for i, f in enumerate(complex_.facets) if i not in doomed]
    for drop in A:
        kept = tuple(v for v in A if v != drop)
        out.append(tuple(sorted(kept + B)))
    return SimplicialComplex(tuple(sorted(out))), move.inverse()


# -- symmetric pairs -----------------------------------------------------------


def apply_z2_move(z2complex, move):
    """Apply a move together with its antipodal image.

    When ``inserted`` is a fresh vertex, both ids of the ± pair must be
    free.  The antipodal half is re-checked after the first flip rather
    than assumed: a failure there raises
    :class:`InterferingAntipodalMove` (the one reachable case is an
    inserted edge of the form ``{v, -v}``, which also breaks freeness).
    """
    A, B = move.removed, move.inserted
    if len(B) == 1 and B[0] not in set(z2complex.vertices):
        if -B[0] in set(z2complex.vertices):
            raise MoveNotAdmissible(
                f"fresh vertex {B[0]} needs {-B[0]} free as well")
    first, _ = apply_move(z2complex.complex, move)
    try:
        second, _ = apply_move(first, move.antipodal())
    except MoveNotAdmissible as exc:
        raise InterferingAntipodalMove(
            f"antipodal half of {move} became inadmissible: {exc}") from exc
    result = Z2Complex.from_complex(second)
    return result, move.inverse()


def enumerate_z2_moves(z2complex):
    """All admissible symmetric move pairs, one representative each.

    A plain move extends to a symmetric pair iff its inserted simplex
    is disjoint from its own antipode; of the two descriptions of a
    pair, the lexicographically smaller is kept.
    """
    out = []
    for m in enumerate_moves(z2complex.complex):
        ins = set(m.inserted)
        if any(-v in ins for v in ins):
            continue
        anti = m.antipodal()
        if (m.removed, m.inserted) <= (anti.removed, anti.inserted):
            out.append(m)
    return out


def random_z2_walk(z2complex, steps, seed):
    """Walk the symmetric flip graph with uniformly chosen admissible moves.

    Fully reproducible: candidates come in deterministic enumeration
    order and the choice is driven by a private ``random.Random(seed)``.
    Returns the final complex and the replayable flip sequence.
    """
    rng = random.Random(seed)
    current = z2complex
    log = []
    for _ in range(int(steps)):
        candidates = enumerate_z2_moves(current)
        if not candidates:
            raise NoAdmissibleMove("no admissible symmetric move from here")
        move = candidates[rng.randrange(len(candidates))]
        current, _ = apply_z2_move(current, move)
        log.append(move)
    sequence = FlipSequence(
        moves=tuple(log),
        z2=True,
        source_digest=complex_digest(z2complex.complex),
        target_digest=complex_digest(current.complex),
    )
    return current, sequence


# -- flip logs ----------------------------------------------------------------


@dataclass(frozen=True)
class FlipSequence:
    """An ordered, replayable log of moves with source/target digests."""

    moves: tuple
    z2: bool
    source_digest: str
    target_digest: str

    def __len__(self):
        return len(self.moves)

    def inverted(self):
        """The sequence that undoes this one."""
        return FlipSequence(
            moves=tuple(m.inverse() for m in reversed(self.moves)),
            z2=self.z2,
            source_digest=self.target_digest,
            target_digest=self.source_digest,
        )


def replay(source, sequence):
    """Re-apply a recorded sequence, checking admissibility at every step.

    ``source`` must be a :class:`Z2Complex` for symmetric sequences and
    a plain complex otherwise.  Raises :class:`CorruptSequence` with the
    failing step index if any move does not apply.
    """
    current = source
    for i, move in enumerate(sequence.moves):
        try:
            if sequence.z2:
                current, _ = apply_z2_move(current, move)
            else:
                current, _ = apply_move(current, move)
        except BistellarError as exc:
            raise CorruptSequence(i, f"step {i}: {exc}") from exc
    return current
