"""Fan labellings: validation, alternating facet counts, witnesses, and
transport of a labelling across a symmetric bistellar move.

A Fan labelling assigns every vertex a nonzero label so that antipodal
vertices get opposite labels and no edge sums to zero.  A facet is
alternating when its labels have pairwise distinct absolute values and
strictly alternating signs once sorted by absolute value; it counts as
positive or negative according to the sign of its smallest-magnitude
label.

Labels are exact rationals internally.  The perturbation used when a
move inserts a complementary diagonal must provably avoid every other
absolute value in use, and rationals make that gap condition exact;
integer labels are recovered at the API boundary with
:meth:`FanLabelling.integerize`.
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .errors import (
    IncompleteLabelling,
    InvalidLabelling,
    InvalidVertexId,
    MoveNotAdmissible,
    NoWitness,
)
from .moves import is_admissible
from .z2 import Z2Complex


def _underlying(complex_or_z2):
    return complex_or_z2.complex if isinstance(complex_or_z2, Z2Complex) else complex_or_z2


class FanLabelling:
    """An immutable vertex -> nonzero rational label mapping."""

    def __init__(self, labels):
        clean = {}
        for v, value in labels.items():
            v = int(v)
            if v == 0:
                raise InvalidVertexId("vertex id 0 is reserved")
            value = Fraction(value)
            if value == 0:
                raise InvalidLabelling(f"label of vertex {v} is zero")
            clean[v] = value
        self._labels = clean

    @property
    def labels(self):
        return MappingProxyType(self._labels)

    def label(self, vertex):
        try:
            return self._labels[vertex]
        except KeyError:
            raise IncompleteLabelling(f"vertex {vertex} is unlabelled") from None

    __getitem__ = label

    def __contains__(self, vertex):
        return vertex in self._labels

    def domain(self):
        return frozenset(self._labels)

    def items(self):
        return sorted(self._labels.items())

    def restrict(self, vertices):
        keep = set(vertices)
        return FanLabelling({v: x for v, x in self._labels.items() if v in keep})

    def is_integral(self):
        return all(x.denominator == 1 for x in self._labels.values())

    def integerize(self):
        """Order-preserving remap of the distinct absolute values onto 1..m.

        Signs are untouched, so antipodality, complementary edges and
        the classification of every simplex are preserved.  Idempotent
        on labellings that already use 1..m.
        """
        magnitudes = sorted({abs(x) for x in self._labels.values()})
        rank = {mag: i + 1 for i, mag in enumerate(magnitudes)}
        return FanLabelling({
            v: rank[abs(x)] if x > 0 else -rank[abs(x)]
            for v, x in self._labels.items()
        })

    def __eq__(self, other):
        return isinstance(other, FanLabelling) and self._labels == other._labels

    def __repr__(self):
        shown = ", ".join(f"{v}:{x}" for v, x in list(self.items())[:6])
        more = "" if len(self._labels) <= 6 else ", ..."
        return f"FanLabelling({{{shown}{more}}})"


@dataclass(frozen=True)
class AlternatingCounts:
    """How many facets are positive/negative alternating under a labelling."""

    positive: int
    negative: int

    def as_tuple(self):
        return (self.positive, self.negative)


def validate_fan(complex_or_z2, labelling):
    """Check the two Fan conditions; return a list of violations (empty = ok).

    Violations are ``("antipodality", v)`` with ``v`` the positive id of
    a pair whose labels are not opposite, and
    ``("complementary-edge", (u, v))`` for each edge whose labels sum to
    zero.  A vertex missing from the labelling raises
    :class:`IncompleteLabelling` instead, since nothing can be checked
    without it.
    """
    cx = _underlying(complex_or_z2)
    for v in cx.vertices:
        if v not in labelling:
            raise IncompleteLabelling(f"vertex {v} is unlabelled")
    violations = []
    present = set(cx.vertices)
    for v in cx.vertices:
        if v > 0 and -v in present and labelling[v] != -labelling[-v]:
            violations.append(("antipodality", v))
    for edge in cx.faces(1):
        u, v = edge
        if labelling[u] + labelling[v] == 0:
            violations.append(("complementary-edge", edge))
    return violations


def alternating_sign(face, labelling):
    """+1, -1 or 0: the alternation class of one simplex.

    Sorted by absolute value, the labels must be pairwise distinct in
    magnitude and strictly alternate in sign; the result is the sign of
    the smallest-magnitude label, or 0 if the simplex does not
    alternate.  Ties in absolute value never alternate.
    """
    values = sorted((labelling[v] for v in face), key=abs)
    for left, right in zip(values, values[1:]):
        if abs(left) == abs(right) or (left > 0) == (right > 0):
            return 0
    return 1 if values[0] > 0 else -1


def alternating_counts(complex_or_z2, labelling):
    """Count positive and negative alternating facets."""
    cx = _underlying(complex_or_z2)
    positive = negative = 0
    for facet in cx.facets:
        sign = alternating_sign(facet, labelling)
        if sign > 0:
            positive += 1
        elif sign < 0:
            negative += 1
    return AlternatingCounts(positive, negative)


def tucker_witness(z2complex, labelling):
    """Find an edge whose labels sum to zero.

    On a centrally symmetric sphere labelled antipodally into
    ``±1..±n`` such an edge must exist; scanning is exhaustive in
    canonical edge order, so the answer is deterministic.  If no edge
    qualifies the input was invalid or is a counterexample, and
    :class:`NoWitness` says so loudly.
    """
    cx = _underlying(z2complex)
    for v in cx.vertices:
        if v not in labelling:
            raise IncompleteLabelling(f"vertex {v} is unlabelled")
    for edge in cx.faces(1):
        u, v = edge
        if labelling[u] + labelling[v] == 0:
            return edge
    raise NoWitness(
        "no complementary edge found; either the labelling does not satisfy "
        "the hypotheses or this complex is a counterexample worth reporting")


def relabel_move(z2complex, labelling, move):
    """Transport a Fan labelling across a symmetric bistellar move.

    The vertices shared by both complexes keep their labels, and only
    the inserted simplex needs care:

    * fresh vertex: the new pair gets ± the smallest positive label on
      the removed facet, taken from whichever of the two antipodal
      descriptions of the move has a positively labelled removed facet
      (the given one wins ties);
    * inserted edge whose endpoint labels sum to zero: the positively
      labelled endpoint pair is nudged up by half the gap to the next
      larger absolute value in use (or by 1/2 if it is the largest), so
      no other label lies in the perturbed interval;
    * anything else: labels are unchanged.

    The result is a valid Fan labelling of the moved complex, it has no
    complementary edge inside the replaced region, and the number of
    positive alternating facets changes by an even amount.
    """
    if not is_admissible(z2complex.complex, move):
        raise MoveNotAdmissible(f"{move} is not admissible here")
    inserted_set = set(move.inserted)
    if any(-v in inserted_set for v in inserted_set):
        raise MoveNotAdmissible(
            f"{move} inserts a self-antipodal simplex; no symmetric pair applies")
    bad = validate_fan(z2complex, labelling)
    if bad:
        raise InvalidLabelling(f"not a Fan labelling: {bad[:3]}")

    removed, inserted = move.removed, move.inserted
    vertices = set(z2complex.vertices)
    labels = {v: labelling[v] for v in vertices}

    if len(inserted) == 1 and inserted[0] not in vertices:
        new = inserted[0]
        positive_on_removed = [labels[v] for v in removed if labels[v] > 0]
        if positive_on_removed:
            value = min(positive_on_removed)
        else:
            # Use the antipodal description: the new pair's negative id
            # plays the fresh role there, so this id gets the negative label.
            value = max(labels[v] for v in removed)
        labels[new] = value
        labels[-new] = -value
    elif len(inserted) == 2:
        u, v = inserted
        if labels[u] + labels[v] == 0:
            if labels[u] < 0:
                u, v = v, u
            base = labels[u]
            larger = sorted(mag for mag in {abs(x) for x in labels.values()}
                            if mag > base)
            step = (larger[0] - base) / 2 if larger else Fraction(1, 2)
            labels[u] = base + step
            labels[-u] = -(base + step)

    if len(removed) == 1:
        del labels[removed[0]]
        del labels[-removed[0]]
    return FanLabelling(labels)
