"""Command line driver and the on-disk document formats.

One JSON document format carries complexes, optionally marked as
centrally symmetric ("z2": true, antipode = id negation) and optionally
labelled.  Facets are sorted with ascending vertices and labels are
sorted by vertex id, so serialization is canonical: writing the same
object twice gives byte-identical files, which keeps certificates and
golden outputs diffable.

Exit codes: 0 success / verified, 2 validation or input failure (the
violations are listed on stdout), 3 inconclusive reduction.
"""

import argparse
import json
import sys

from .complexes import SimplicialComplex, complex_digest
from .errors import BistellarError, CertificateUnavailable
from .fan import FanLabelling, alternating_counts, tucker_witness, validate_fan
from .generators import cross_polytope, random_fan_labelling, simplex_boundary
from .moves import (
    BistellarMove,
    FlipSequence,
    apply_move,
    apply_z2_move,
    enumerate_moves,
    enumerate_z2_moves,
    random_z2_walk,
)
from .reduction import (
    fan_certificate,
    is_closed_pseudomanifold,
    reduce_to_boundary_simplex,
    replay_verify,
    z2_reduce_to_cross_polytope,
)
from .z2 import Z2Complex, make_signed

FORMAT_VERSION = 1


# -- document format ----------------------------------------------------------

def complex_document(complex_, z2=False, labelling=None):
    """The canonical JSON-ready form of a complex (plus optional labels)."""
    doc = {"format": FORMAT_VERSION, "facets": [list(f) for f in complex_.facets]}
    if z2:
        doc["z2"] = True
    if labelling is not None:
        if not labelling.is_integral():
            labelling = labelling.integerize()
        doc["labels"] = [[v, int(x)] for v, x in labelling.items()]
    return doc


def _render(value, depth):
    # Keys sorted, scalar lists inline, one record per line: canonical and
    # diff-friendly at the same time.
    pad = "  " * depth
    inner = "  " * (depth + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        lines = [f'{inner}{json.dumps(str(k))}: {_render(v, depth + 1)}'
                 for k, v in sorted(value.items())]
        return "{\n" + ",\n".join(lines) + f"\n{pad}}}"
    if isinstance(value, list):
        if all(isinstance(x, (int, str, bool)) or x is None for x in value):
            return json.dumps(value)
        lines = [f"{inner}{_render(x, depth + 1)}" for x in value]
        return "[\n" + ",\n".join(lines) + f"\n{pad}]"
    return json.dumps(value)


def dumps_canonical(doc):
    return _render(doc, 0) + "\n"


def parse_complex_document(text):
    """Parse a document into (complex, z2complex-or-None, labelling-or-None)."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "facets" not in doc:
        raise BistellarError("document must be an object with a 'facets' list")
    complex_ = SimplicialComplex.from_facets(doc["facets"])
    signed = make_signed(complex_) if doc.get("z2") else None
    labelling = None
    if "labels" in doc:
        labelling = FanLabelling({int(v): int(x) for v, x in doc["labels"]})
    return complex_, signed, labelling


def _move_record(move, z2):
    fresh = []
    if len(move.inserted) == 1:
        fresh = [move.inserted[0]]
        if z2:
            fresh.append(-move.inserted[0])
    return {"removed": list(move.removed), "inserted": list(move.inserted),
            "fresh": sorted(fresh)}


def sequence_document(sequence):
    return {
        "format": FORMAT_VERSION,
        "kind": "flip-sequence",
        "z2": sequence.z2,
        "source": sequence.source_digest,
        "target": sequence.target_digest,
        "moves": [_move_record(m, sequence.z2) for m in sequence.moves],
    }


def parse_sequence_document(text):
    doc = json.loads(text)
    moves = tuple(BistellarMove(tuple(m["removed"]), tuple(m["inserted"]))
                  for m in doc["moves"])
    return FlipSequence(moves=moves, z2=bool(doc["z2"]),
                        source_digest=doc["source"], target_digest=doc["target"])


def certificate_document(certificate):
    steps = []
    for move, parity in zip(certificate.sequence.moves,
                            certificate.parity_trace[1:]):
        record = _move_record(move, True)
        record["parity"] = parity
        steps.append(record)
    return {
        "format": FORMAT_VERSION,
        "kind": "certificate",
        "source": certificate.source_digest,
        "final": certificate.sequence.target_digest,
        "alpha_positive": certificate.initial_counts[0],
        "alpha_negative": certificate.initial_counts[1],
        "parity": certificate.parity_trace[0],
        "steps": steps,
        "final_labels": [[v, int(x)] for v, x in certificate.final_labelling.items()],
    }


# -- helpers -------------------------------------------------------------------

def _read(path):
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _emit(doc, path=None):
    text = dumps_canonical(doc)
    if path:
        _write(path, text)
    else:
        sys.stdout.write(text)


def _load(path):
    try:
        return parse_complex_document(_read(path))
    except json.JSONDecodeError as exc:
        raise BistellarError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc


def _parse_face(text):
    return tuple(int(part) for part in text.replace(",", " ").split())


def _need_z2(signed, path):
    if signed is None:
        raise BistellarError(f"{path} is not marked 'z2': true")
    return signed


def _need_labels(labelling, path):
    if labelling is None:
        raise BistellarError(f"{path} carries no 'labels'")
    return labelling


# -- subcommands -----------------------------------------------------------------

def cmd_info(args):
    complex_, signed, labelling = _load(args.file)
    fv = complex_.f_vector()
    print(f"dimension: {complex_.dimension}")
    print(f"f-vector: {fv.counts}")
    print(f"euler-characteristic: {fv.euler_characteristic}")
    print(f"pure: {complex_.is_pure()}")
    print(f"closed-pseudomanifold: {is_closed_pseudomanifold(complex_)}")
    print(f"digest: {complex_digest(complex_)}")
    if signed is not None:
        print(f"z2: valid free involution on "
              f"{len(signed.positive_vertices)} vertex pairs")
    if labelling is not None:
        violations = validate_fan(complex_, labelling)
        if violations:
            print(f"labels: {len(violations)} violations")
            for kind, where in violations:
                print(f"  {kind}: {where}")
            return 2
        counts = alternating_counts(complex_, labelling)
        print(f"labels: valid Fan labelling, alternating facets "
              f"+{counts.positive} / -{counts.negative}")
    return 0


def cmd_moves(args):
    complex_, signed, _ = _load(args.file)
    if args.z2:
        found = enumerate_z2_moves(_need_z2(signed, args.file))
    else:
        found = enumerate_moves(complex_)
    for move in found:
        print(f"removed={list(move.removed)} inserted={list(move.inserted)}")
    print(f"total: {len(found)}")
    return 0


def cmd_flip(args):
    complex_, signed, _ = _load(args.file)
    move = BistellarMove(_parse_face(args.removed), _parse_face(args.inserted))
    if signed is not None:
        result, _ = apply_z2_move(signed, move)
        _emit(complex_document(result.complex, z2=True), args.output)
    else:
        result, _ = apply_move(complex_, move)
        _emit(complex_document(result), args.output)
    return 0


def cmd_walk(args):
    _, signed, _ = _load(args.file)
    signed = _need_z2(signed, args.file)
    final, sequence = random_z2_walk(signed, args.steps, args.seed)
    _emit(complex_document(final.complex, z2=True), args.output)
    if args.log:
        _write(args.log, dumps_canonical(sequence_document(sequence)))
    return 0


def cmd_subdivide(args):
    complex_, signed, _ = _load(args.file)
    if args.stellar:
        face = _parse_face(args.stellar)
        fresh = args.fresh
        if fresh is None:
            used = {abs(v) for v in complex_.vertices}
            fresh = 1
            while fresh in used:
                fresh += 1
        result = complex_.stellar_subdivide(face, fresh)
        _emit(complex_document(result), args.output)
        face_map = {fresh: list(face)}
    elif signed is not None:
        result, mapping = signed.equivariant_sd()
        _emit(complex_document(result.complex, z2=True), args.output)
        face_map = {v: list(f) for v, f in mapping.items()}
    else:
        result, mapping = complex_.barycentric_subdivide()
        _emit(complex_document(result), args.output)
        face_map = {v: list(f) for v, f in mapping.items()}
    if args.map:
        doc = {"format": FORMAT_VERSION, "kind": "face-map",
               "map": [[v, face] for v, face in sorted(face_map.items())]}
        _write(args.map, dumps_canonical(doc))
    return 0


def cmd_quotient(args):
    _, signed, _ = _load(args.file)
    signed = _need_z2(signed, args.file)
    subdivided, _ = signed.equivariant_sd()
    quotient, _ = subdivided.quotient()
    _emit(complex_document(quotient), args.output)
    return 0


def cmd_fan_check(args):
    complex_, signed, labelling = _load(args.file)
    labelling = _need_labels(labelling, args.file)
    target = signed if signed is not None else complex_
    violations = validate_fan(target, labelling)
    if violations:
        for kind, where in violations:
            print(f"violation {kind}: {where}")
        return 2
    counts = alternating_counts(target, labelling)
    print("valid Fan labelling")
    print(f"alternating facets: +{counts.positive} / -{counts.negative}")
    return 0


def cmd_tucker(args):
    complex_, signed, labelling = _load(args.file)
    labelling = _need_labels(labelling, args.file)
    target = signed if signed is not None else complex_
    edge = tucker_witness(target, labelling)
    print(f"complementary edge: {list(edge)} "
          f"(labels {labelling[edge[0]]} and {labelling[edge[1]]})")
    return 0


def cmd_reduce(args):
    complex_, signed, _ = _load(args.file)
    if args.z2:
        signed = _need_z2(signed, args.file)
        report = z2_reduce_to_cross_polytope(signed, budget=args.budget,
                                             seed=args.seed)
        source = signed
        target = cross_polytope(signed.dimension + 1)
    else:
        report = reduce_to_boundary_simplex(complex_, budget=args.budget,
                                            seed=args.seed)
        source = complex_
        target = simplex_boundary(complex_.dimension + 1)
    print(f"outcome: {report.outcome}")
    print(f"flips tried: {report.flips_tried}, applied: {report.flips_applied}, "
          f"restarts: {report.restarts}")
    print(f"best f-vector: {report.best_f_vector}")
    print(f"sequence length: {len(report.sequence)}")
    if args.log:
        _write(args.log, dumps_canonical(sequence_document(report.sequence)))
    if report.reduced:
        verified = replay_verify(source, report.sequence, target)
        print(f"replay verified: {verified}")
        return 0 if verified else 2
    return 3


def cmd_certify(args):
    complex_, signed, labelling = _load(args.file)
    signed = _need_z2(signed, args.file)
    if args.labels == "file":
        labelling = _need_labels(labelling, args.file)
    elif args.labels == "canon":
        labelling = FanLabelling({v: v for v in signed.vertices})
    else:
        bound = args.label_bound or signed.dimension + 2
        labelling = random_fan_labelling(signed, bound, args.label_seed)
    try:
        certificate = fan_certificate(signed, labelling, budget=args.budget,
                                      seed=args.seed)
    except CertificateUnavailable as exc:
        print(f"inconclusive: {exc}")
        print(f"alpha-positive (direct count): {exc.counts.positive}")
        return 3
    plus, minus = certificate.initial_counts
    print(f"alpha-positive: {plus}")
    print(f"alpha-negative: {minus}")
    print(f"parity trace: constant {certificate.parity_trace[0]} over "
          f"{len(certificate.parity_trace)} states")
    print(f"sequence length: {len(certificate.sequence)}")
    print(f"verified: alpha-positive is odd: {plus % 2 == 1}")
    if args.out:
        _write(args.out, dumps_canonical(certificate_document(certificate)))
    return 0


# -- argument parsing ---------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="bistellar",
        description="Bistellar flips on centrally symmetric triangulations, "
                    "with Fan labelling parity certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("file", help="input complex document (JSON)")
        return p

    add("info", cmd_info, "f-vector, Euler characteristic and validators")

    p = add("moves", cmd_moves, "list admissible moves")
    p.add_argument("--z2", action="store_true",
                   help="list symmetric move pairs instead of plain moves")

    p = add("flip", cmd_flip, "apply one move (the symmetric pair on z2 files)")
    p.add_argument("--removed", required=True, help="face to remove, e.g. '1,2,3'")
    p.add_argument("--inserted", required=True, help="simplex to insert, e.g. '7'")
    p.add_argument("-o", "--output", help="write result here instead of stdout")

    p = add("walk", cmd_walk, "seeded random walk through symmetric moves")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", help="write result here instead of stdout")
    p.add_argument("--log", help="write the flip sequence here")

    p = add("subdivide", cmd_subdivide, "barycentric or stellar subdivision")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--barycentric", action="store_true",
                       help="barycentric subdivision (equivariant on z2 files)")
    group.add_argument("--stellar", metavar="FACE",
                       help="stellar subdivision at this face, e.g. '1,2'")
    p.add_argument("--fresh", type=int, help="id for the new vertex (default: auto)")
    p.add_argument("-o", "--output", help="write result here instead of stdout")
    p.add_argument("--map", help="write the new-vertex-to-face map here")

    p = add("quotient", cmd_quotient,
            "equivariant subdivision followed by the antipodal quotient")
    p.add_argument("-o", "--output", help="write result here instead of stdout")

    add("fan-check", cmd_fan_check, "validate labels and count alternating facets")
    add("tucker", cmd_tucker, "find a complementary edge")

    p = add("reduce", cmd_reduce, "heuristic reduction to the canonical sphere")
    p.add_argument("--z2", action="store_true",
                   help="symmetric reduction to the cross polytope")
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--log", help="write the flip sequence here")

    p = add("certify", cmd_certify,
            "reduce, transport the labelling, and emit the parity trace")
    p.add_argument("--labels", choices=("file", "canon", "random"), default="file",
                   help="label source: the file, the identity labelling, "
                        "or a random Fan labelling")
    p.add_argument("--label-bound", type=int,
                   help="bound for random labels (default: dimension + 2)")
    p.add_argument("--label-seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="write the certificate document here")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CertificateUnavailable as exc:
        print(f"inconclusive: {exc}")
        return 3
    except BistellarError as exc:
        print(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
