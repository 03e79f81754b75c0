"""Command line front end.

Exit codes: 0 success, 1 file or parse error, 2 input matrix not unitary,
3 unsupported ring, gate set or ancilla request, 4 verification failure.
"""
from __future__ import annotations

import argparse
import sys

from .circuit import evaluate, parse as parse_circuit, serialize
from .errors import ParseError, RingSynthError, UnsupportedError, VerificationError
from .gatesets import FOR_TAG, GATESETS, get_gateset
from .linalg import (GeneratorWord, RingMatrix, classify_matrix, embed, format_matrix, format_word,
                     matrix_tags, parse_matrix, parse_word)
from .lowering import lower_word
from .randomgen import random_unitary, resolve_seed
from .rings import RingTag, format_scalar
from .synth import SynthRequest, synthesize

EXIT_OK, EXIT_PARSE, EXIT_NOT_UNITARY, EXIT_UNSUPPORTED, EXIT_VERIFY = 0, 1, 2, 3, 4


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (path, e.strerror)) from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as e:
        raise ParseError("cannot write %s: %s" % (path, e.strerror)) from None


def _policy(flag):
    return "ancilla_free" if flag == "none" else "allow_one"


def cmd_classify(args):
    M = parse_matrix(_read(args.matrix))
    tag = classify_matrix(M)
    if tag == RingTag.Domega:
        print("%s  unsupported for synthesis" % tag.value)
        return EXIT_OK
    gs = FOR_TAG[tag]
    print("%s  gateset=%s" % (tag.value, gs.label))
    if args.verbose:
        tags = matrix_tags(M)
        others = [g.label for g in GATESETS.values() if g.ring in tags and g is not gs]
        if others:
            print("also over: %s" % " ".join(others))
    return EXIT_OK


def cmd_synth(args):
    M = parse_matrix(_read(args.matrix))
    res = synthesize(SynthRequest(M, args.gateset, _policy(args.ancilla)))
    # The file holds the inverse of the reduction word, so that the product
    # of its generators is the input matrix and `lower` yields a circuit for it.
    text = "# product equals the input matrix\n" + format_word(res.word.inverse())
    info = sys.stdout if args.out else sys.stderr
    print("gateset %s  length %d%s" % (res.gateset.tag, len(res.word.ops),
                                       "  ancilla-free" if res.ancilla_free else ""), file=info)
    for col, seq in sorted(res.lde_sequences().items()):
        print("column %d lde %s" % (col, " -> ".join(str(q) for q in seq)), file=info)
    _write(args.out, text)
    return EXIT_OK


def smallest_gateset_for(word: GeneratorWord):
    """First gate set (in the fixed order) whose ring contains every generator."""
    order = ["INT", "SUPINT", "REAL", "IMAG", "GAUSS", "SUPGAUSS"]
    tags = [matrix_tags(embed(op, word.dim)) for op in word.ops]
    for name in order:
        gs = GATESETS[name]
        if all(gs.ring in t for t in tags):
            return gs
    raise RingSynthError("no gate set covers this word")


def cmd_lower(args):
    word = parse_word(_read(args.word))
    gs = smallest_gateset_for(word) if args.gateset == "auto" else get_gateset(args.gateset)
    mode = "none" if args.ancilla == "none" else "one_clean"
    try:
        c = lower_word(word, gs, mode)
    except UnsupportedError as e:
        if mode != "none":
            raise
        raise UnsupportedError("%s; words from 'synth --ancilla none' on 4 or more qubits "
                               "lower without one" % e) from None
    print("gateset %s  gates %d  ancillas %d" % (gs.tag, len(c), c.n_ancilla), file=sys.stderr)
    _write(args.out, serialize(c))
    return EXIT_OK


def first_difference(A: RingMatrix, B: RingMatrix):
    if A.shape != B.shape:
        return "shape %r != %r" % (A.shape, B.shape)
    for r, (ra, rb) in enumerate(zip(A.rows, B.rows)):
        for c, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return "entry (%d,%d): circuit %s, matrix %s" % (r + 1, c + 1, format_scalar(x),
                                                                 format_scalar(y))
    return None


def cmd_verify(args):
    c = parse_circuit(_read(args.circuit))
    M = parse_matrix(_read(args.matrix))
    ev = evaluate(c, strict=False)
    if not ev.ok:
        raise VerificationError(ev.message)
    diff = first_difference(ev.matrix, M)
    if diff:
        raise VerificationError("mismatch at " + diff)
    print("pass")
    return EXIT_OK


def cmd_random(args):
    gs = get_gateset(args.gateset)
    M = random_unitary(gs, args.n, args.len, resolve_seed(args.seed))
    _write(args.out, format_matrix(M))
    return EXIT_OK


def cmd_selftest(args):
    from .identities import run_identities
    from .oracles import run_oracles
    failed = 0
    for name, ok, detail in run_oracles():
        failed += not ok
        print("%s  %s%s" % ("pass" if ok else "FAIL", name, ("  (%s)" % detail) if detail else ""))
    for name, n, ok in run_identities():
        failed += not ok
        print("%s  %s  [n=%d]" % ("pass" if ok else "FAIL", name, n))
    print("%d failure(s)" % failed)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="ringsynth",
                                description="Exact synthesis over restricted Clifford+T gate sets.")
    sub = p.add_subparsers(dest="command", required=True)
    names = ["auto"] + list(GATESETS)

    s = sub.add_parser("classify", help="report the smallest ring and its gate set")
    s.add_argument("matrix")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("synth", help="synthesize a generator word")
    s.add_argument("matrix")
    s.add_argument("--gateset", default="auto", type=str.upper, choices=[n.upper() for n in names])
    s.add_argument("--ancilla", default="one", choices=["one", "none"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("lower", help="lower a generator word to a circuit")
    s.add_argument("word")
    s.add_argument("--gateset", default="auto", type=str.upper, choices=[n.upper() for n in names])
    s.add_argument("--ancilla", default="one", choices=["one", "none"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_lower)

    s = sub.add_parser("verify", help="check a circuit against a matrix exactly")
    s.add_argument("circuit")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("random", help="matrix of a seeded random circuit")
    s.add_argument("--gateset", required=True, type=str.upper, choices=list(GATESETS))
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--len", type=int, default=20)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("selftest", help="run the residue oracles and the identity catalogue")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "gateset", None) == "AUTO":
        args.gateset = "auto"
    try:
        return args.func(args)
    except RingSynthError as e:
        print("error: %s" % e, file=sys.stderr)
        return e.exit_code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
