"""Heuristic bistellar reduction and the parity certificate pipeline.

The search minimizes the reversed f-vector lexicographically (facet
count first) by steepest descent, accepts non-improving moves with a
geometrically cooling temperature, and restarts from the best state
seen once the temperature bottoms out.  Success means the final
complex is isomorphic to the declared canonical target and is
certified by replaying the recorded sequence; failure is reported as
inconclusive and never claims inequivalence, since recognizing spheres
is undecidable in high dimension.

A search run is a pure function of (input, budget, seed); parallel
chains just need distinct seeds, merged by keeping the first certified
success.
"""

import math
import random
from dataclasses import dataclass

from .complexes import complex_digest, find_isomorphism
from .errors import (
    BistellarError,
    CertificateUnavailable,
    InvalidLabelling,
    NotClosedPseudomanifold,
)
from .fan import alternating_counts, relabel_move, validate_fan
from .generators import cross_polytope, simplex_boundary
from .moves import (
    FlipSequence,
    apply_move,
    apply_z2_move,
    enumerate_moves,
    enumerate_z2_moves,
    replay,
)
from .z2 import Z2Complex, find_z2_isomorphism


def is_closed_pseudomanifold(complex_):
    """Pure, every codimension-one face in exactly two facets, and
    facet-ridge connected."""
    if not complex_.is_pure():
        return False
    n = complex_.dimension
    if n == 0:
        return len(complex_.facets) == 2
    ridge_at = {}
    for i, facet in enumerate(complex_.facets):
        for drop in facet:
            ridge = tuple(v for v in facet if v != drop)
            ridge_at.setdefault(ridge, []).append(i)
    if any(len(hits) != 2 for hits in ridge_at.values()):
        return False
    # strong connectivity across ridges
    adjacency = {i: set() for i in range(len(complex_.facets))}
    for a, b in ridge_at.values():
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for j in adjacency[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(complex_.facets)


@dataclass(frozen=True)
class ReductionReport:
    """Outcome of a reduction search.

    ``sequence`` leads from the input to the final complex on success,
    and to the best state reached otherwise.  Identical inputs, budget
    and seed always produce identical reports.
    """

    outcome: str  # "reduced" | "inconclusive"
    sequence: FlipSequence
    flips_tried: int
    flips_applied: int
    restarts: int
    best_f_vector: tuple
    budget: int
    seed: int

    @property
    def reduced(self):
        return self.outcome == "reduced"


def _search(start, z2, target, budget, seed, t_start, t_decay, t_floor):
    rng = random.Random(seed)
    if z2:
        list_moves, multiplier = enumerate_z2_moves, 2
        shell = lambda state: state.complex
        same = lambda state: find_z2_isomorphism(state, target) is not None
        step = lambda state, m: apply_z2_move(state, m)[0]
    else:
        list_moves, multiplier = enumerate_moves, 1
        shell = lambda state: state
        same = lambda state: find_isomorphism(state, target) is not None
        step = lambda state, m: apply_move(state, m)[0]

    target_f = list(target.f_vector().counts)
    state = start
    counts = list(shell(state).f_vector().counts)
    dimension = len(counts) - 1

    def matched(state, counts):
        return counts == target_f and same(state)

    def report(outcome, final, log, flips, applied, restarts, best_f):
        sequence = FlipSequence(
            moves=tuple(log), z2=z2,
            source_digest=complex_digest(shell(start)),
            target_digest=complex_digest(shell(final)))
        return ReductionReport(outcome, sequence, flips, applied, restarts,
                               tuple(best_f), budget, seed)

    log = []
    best_energy = tuple(reversed(counts))
    best = (state, [], list(counts))
    flips = applied = restarts = 0
    if matched(state, counts):
        return report("reduced", state, log, flips, applied, restarts, counts)

    temperature = t_start
    moves = None
    while flips < budget:
        if moves is None:
            moves = list_moves(state)
            if not moves:
                break
        flips += 1
        deltas = [m.facet_delta() for m in moves]
        dmin = min(deltas)
        if dmin < 0:
            pool = [m for m, d in zip(moves, deltas) if d == dmin]
            move, delta = pool[rng.randrange(len(pool))], dmin
            accepted = True
        else:
            i = rng.randrange(len(moves))
            move, delta = moves[i], deltas[i]
            accepted = delta <= 0 or rng.random() < math.exp(
                -delta * multiplier / temperature)
        if accepted:
            state = step(state, move)
            counts = [c + multiplier * d
                      for c, d in zip(counts, move.f_delta(dimension))]
            log.append(move)
            applied += 1
            moves = None
            energy = tuple(reversed(counts))
            if energy < best_energy:
                best_energy = energy
                best = (state, list(log), list(counts))
            if matched(state, counts):
                return report("reduced", state, log, flips, applied,
                              restarts, best[2])
        temperature *= t_decay
        if temperature < t_floor:
            temperature = t_start
            restarts += 1
            state, log, counts = best[0], list(best[1]), list(best[2])
            moves = None
    final, final_log = best[0], best[1]
    return report("inconclusive", final, final_log, flips, applied,
                  restarts, best[2])


def reduce_to_boundary_simplex(complex_, budget=100_000, seed=0,
                               t_start=2.0, t_decay=0.995, t_floor=0.05):
    """Try to flip a closed pseudomanifold down to a simplex boundary.

    Success certifies that the input is a combinatorial sphere; an
    inconclusive outcome says nothing (the search is a heuristic, not a
    decision procedure).
    """
    if not is_closed_pseudomanifold(complex_):
        raise NotClosedPseudomanifold(
            "reduction needs a pure, closed, strongly connected complex")
    target = simplex_boundary(complex_.dimension + 1)
    return _search(complex_, False, target, budget, seed,
                   t_start, t_decay, t_floor)


def z2_reduce_to_cross_polytope(z2complex, budget=100_000, seed=0,
                                t_start=2.0, t_decay=0.995, t_floor=0.05):
    """Like :func:`reduce_to_boundary_simplex`, but with symmetric move
    pairs only, aiming at the cross polytope boundary of the same
    dimension; success is checked by signed isomorphism."""
    if not is_closed_pseudomanifold(z2complex.complex):
        raise NotClosedPseudomanifold(
            "reduction needs a pure, closed, strongly connected complex")
    target = cross_polytope(z2complex.dimension + 1)
    return _search(z2complex, True, target, budget, seed,
                   t_start, t_decay, t_floor)


def replay_verify(source, sequence, target):
    """Certify a sequence: replay it move by move from ``source`` and
    check the result against ``target``.

    Returns True iff every move applies, the final digest matches the
    recorded one, and the final complex is isomorphic to ``target``
    (signed isomorphism for symmetric sequences).  Raises
    :class:`CorruptSequence` when a move fails to apply.
    """
    shell = (lambda s: s.complex) if sequence.z2 else (lambda s: s)
    if complex_digest(shell(source)) != sequence.source_digest:
        return False
    final = replay(source, sequence)
    if complex_digest(shell(final)) != sequence.target_digest:
        return False
    if sequence.z2:
        return find_z2_isomorphism(final, target) is not None
    return find_isomorphism(final, target) is not None


@dataclass(frozen=True)
class FanCertificate:
    """A verified parity certificate for one labelled symmetric sphere.

    ``parity_trace`` lists the number of positive alternating facets
    mod 2 for the input complex and after every move of ``sequence``;
    the trace is constant and ends (hence starts) at 1, which is the
    checked statement that the input count is odd.
    """

    source_digest: str
    sequence: FlipSequence
    initial_counts: tuple
    parity_trace: tuple
    final_labelling: "FanLabelling"
    final_counts: tuple

    @property
    def alpha_positive(self):
        return self.initial_counts[0]


def fan_certificate(z2complex, labelling, budget=100_000, seed=0, **search_options):
    """Reduce to the cross polytope while transporting the labelling,
    recording the positive alternating facet count mod 2 at every step.

    Raises :class:`InvalidLabelling` if the input labelling breaks a
    Fan condition, and :class:`CertificateUnavailable` if the search
    does not reach the cross polytope (the directly counted numbers
    ride along on the exception).  Any break in the parity trace or in
    stepwise validity would falsify the machinery and raises a plain
    :class:`BistellarError`.
    """
    bad = validate_fan(z2complex, labelling)
    if bad:
        raise InvalidLabelling(f"not a Fan labelling: {bad[:3]}")
    start_counts = alternating_counts(z2complex, labelling)
    report = z2_reduce_to_cross_polytope(z2complex, budget=budget, seed=seed,
                                         **search_options)
    if not report.reduced:
        raise CertificateUnavailable(
            f"reduction inconclusive within budget {budget}; "
            f"directly counted positives: {start_counts.positive}",
            counts=start_counts, report=report)

    parity = start_counts.positive % 2
    trace = [parity]
    current, labels = z2complex, labelling
    for index, move in enumerate(report.sequence.moves):
        labels = relabel_move(current, labels, move)
        current, _ = apply_z2_move(current, move)
        if validate_fan(current, labels):
            raise BistellarError(
                f"transported labelling invalid after step {index}")
        counts = alternating_counts(current, labels)
        trace.append(counts.positive % 2)
        if trace[-1] != parity:
            raise BistellarError(f"parity trace broke at step {index}")
    if trace[-1] != 1:
        raise BistellarError(
            "trace does not end at 1 on the cross polytope; "
            "this falsifies the parity argument")
    final_counts = alternating_counts(current, labels)
    return FanCertificate(
        source_digest=report.sequence.source_digest,
        sequence=report.sequence,
        initial_counts=start_counts.as_tuple(),
        parity_trace=tuple(trace),
        final_labelling=labels.integerize(),
        final_counts=final_counts.as_tuple(),
    )
