"""Command line entry point.

Exit codes: 0 verdict true or pass, 1 verdict false, 2 input error, 3 bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .. import classifiers, colimits, equivalences
from ..constructions import (SEED_NAMES, SHAPE_NAMES, companion_2cat, embed,
                             hom_2category, product, coproduct, seed, shape,
                             strict_hom, transpose, underlying, vop)
from ..core import DoubleCategory, DoubleFunctor, check_axioms, check_functor
from ..errors import BoundExceeded, DblCatError, ValidationError
from ..lifting import (CATALOG, SET_NAMES, generating_set, is_naive_fibrant,
                       lifts_against_all)
from .corpus import PROFILES, load_corpus, write_corpus
from .documents import load_file, read_document, serialize_document

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

CHECKS = {
    "trivial-fibration": equivalences.is_trivial_fibration,
    "gregarious-fibration": equivalences.is_gregarious_fibration,
    "gregarious-equivalence": equivalences.is_gregarious_equivalence,
    "biequivalence": equivalences.is_biequivalence,
    "equifibration": equivalences.is_equifibration,
    "four-tuple": equivalences.four_tuple_witness,
}


class _Out:
    def __init__(self, fmt):
        self.fmt = fmt

    def report(self, data: dict, text: str = None):
        if self.fmt == "json":
            print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False, default=list))
        else:
            print(text if text is not None else _text(data))


def _text(data, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in data.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_text(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def _category(path) -> DoubleCategory:
    value = load_file(path)
    if not isinstance(value, DoubleCategory):
        raise DblCatError(f"{path} does not hold a double category")
    return value


def _functor(path) -> DoubleFunctor:
    value = load_file(path)
    if not isinstance(value, DoubleFunctor):
        raise DblCatError(f"{path} does not hold a double functor")
    return value


def _source(arg) -> DoubleCategory:
    """A file path, or ``shape:NAME`` / ``seed:NAME`` for built-ins."""
    if arg.startswith("shape:"):
        return shape(arg[6:])
    if arg.startswith("seed:"):
        return seed(arg[5:])
    return _category(arg)


# -- verbs ----------------------------------------------------------------


def cmd_validate(args, out):
    doc = read_document(args.file)
    try:
        value = load_file(args.file)
    except ValidationError as exc:
        problems = exc.violations
    else:
        problems = check_functor(value) if isinstance(value, DoubleFunctor) else (
            check_axioms(value) if isinstance(value, DoubleCategory) else [])
    out.report({"kind": doc.kind, "valid": not problems,
                "violations": [[p.law, list(p.witness)] for p in problems]})
    return EXIT_TRUE if not problems else EXIT_FALSE


def cmd_classify(args, out):
    D = _source(args.file)
    table = classifiers.classify(D, args.bound)
    data = {k: {"fibrant": r.fibrant, "shape": r.shape, "witness": r.witness}
            for k, r in table.items()}
    text = "\n".join(f"{k:13} {'yes' if r.fibrant else 'no '}"
                     + ("" if r.fibrant else f"  {r.shape} {list(r.witness)}")
                     for k, r in table.items())
    out.report(data, text)
    return EXIT_TRUE


def _check_report(r) -> dict:
    data = {"verdict": r.verdict,
            "failures": [[f.tag, list(f.witness)] for f in r.failures]}
    if r.details:
        data["components"] = {k: _check_report(v) for k, v in r.details.items()}
    return data


def cmd_check(args, out):
    F = _functor(args.file)
    r = CHECKS[args.property](F)
    data = _check_report(r)
    text = f"{args.property}: {'true' if r.verdict else 'false'}"
    if r.failures:
        text += f"  ({r.first.tag} {list(r.first.witness)})"
    out.report(data, text)
    return EXIT_TRUE if r.verdict else EXIT_FALSE


def cmd_lift(args, out):
    F = _functor(args.file)
    found = lifts_against_all(F, generating_set(args.set), args.bound)
    data = {"set": args.set, "holds": found is None,
            "shape": found and found[0],
            "counterexample": found and [list(x) for x in found[1]]}
    out.report(data)
    return EXIT_TRUE if found is None else EXIT_FALSE


def cmd_fibrant(args, out):
    D = _source(args.file)
    r = is_naive_fibrant(D, args.set, args.bound)
    out.report({"set": args.set, "fibrant": r.fibrant, "shape": r.shape,
                "witness": r.witness and list(r.witness)})
    return EXIT_TRUE if r.fibrant else EXIT_FALSE


def _construct(kind, rest):
    if kind == "shape":
        return shape(rest[0])
    if kind == "seed":
        return seed(rest[0])
    if kind in ("H", "V", "Sq", "SqVop", "Hsim", "Vsim"):
        return embed(kind, _source(rest[0]))
    if kind == "transpose":
        return transpose(_source(rest[0]))
    if kind == "vop":
        return vop(_source(rest[0]))
    if kind == "product":
        return product(_source(rest[0]), _source(rest[1]))[0]
    if kind == "coproduct":
        return coproduct(_source(rest[0]), _source(rest[1]))[0]
    if kind == "underlying":
        return underlying(rest[0], _source(rest[1]))
    if kind == "companion-2cat":
        return companion_2cat(_source(rest[0]))
    if kind == "hom":
        return strict_hom(_source(rest[0]), _source(rest[1]))
    if kind == "hom-2cat":
        return hom_2category(_source(rest[0]), _source(rest[1]))
    raise DblCatError(f"unknown construction {kind!r}")


def cmd_construct(args, out):
    print(serialize_document(_construct(args.kind, args.args)), end="")
    return EXIT_TRUE


def cmd_pushout(args, out):
    D = _source(args.file)
    if args.cell == "attach-object":
        value = colimits.attach_object(D)[0]
    elif args.cell == "identify":
        value = colimits.identify_parallel_squares(D, args.squares[0], args.squares[1])[0]
    elif args.cell == "square":
        value = colimits.attach_square_presentation(D, args.boundary)
    elif args.cell in ("h-edge", "v-edge"):
        model, value = colimits.free_edge_extension(D, args.cell[0], args.src, args.tgt, args.k)
        if args.truncation:
            value = model.as_double_category()
    else:
        raise DblCatError(f"unknown cell {args.cell!r}")
    print(serialize_document(value), end="")
    return EXIT_TRUE


def cmd_quotient(args, out):
    D = _source(args.file)
    c = colimits.congruence_closure(D, [tuple(p) for p in args.pair])
    print(serialize_document(colimits.quotient(D, c)[0]), end="")
    return EXIT_TRUE


def cmd_audit(args, out):
    corpus = [e.value for e in load_corpus(args.corpus)
              if isinstance(e.value, (DoubleCategory, DoubleFunctor))]
    r = classifiers.audit_recipe(args.set, corpus, args.bound)
    out.report({"header": r.header, "set": args.set, "pass": r.passed,
                "checked": len(r.checked), "skipped": len(r.skipped),
                "counterexamples": [[i, s, [list(x) for x in c]] for i, s, c in r.counterexamples]})
    return EXIT_TRUE if r.passed else EXIT_FALSE


def cmd_corpus(args, out):
    paths = write_corpus(args.profile, args.out)
    out.report({"profile": args.profile, "documents": len(paths), "out": str(args.out)})
    return EXIT_TRUE


def cmd_shapes(args, out):
    data = {"shapes": list(SHAPE_NAMES), "seeds": list(SEED_NAMES),
            "cells": sorted(n for n in CATALOG if not n.endswith("^t")),
            "sets": list(SET_NAMES)}
    text = "\n".join(f"{k}: {' '.join(v)}" for k, v in data.items())
    out.report(data, text)
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    def global_flags(default):
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--bound", type=int, default=default(None),
                       help="maximum number of instances enumerated per cell")
        g.add_argument("--format", choices=("json", "text"), default=default("text"))
        return g

    # flags may come before or after the verb; the verb's copy must not reset them
    p = argparse.ArgumentParser(prog="dblcat", parents=[global_flags(lambda d: d)],
                                description="Finite double categories: checks, fibrancy and pushouts.")
    sub = p.add_subparsers(dest="verb", required=True)
    late = global_flags(lambda d: argparse.SUPPRESS)

    def verb(name, fn, help):
        s = sub.add_parser(name, parents=[late], help=help)
        s.set_defaults(fn=fn)
        return s

    verb("validate", cmd_validate, "check a document against the axioms").add_argument("file")
    verb("classify", cmd_classify, "fibrancy in every model structure").add_argument("file")
    s = verb("check", cmd_check, "decide a class of double functors")
    s.add_argument("file")
    s.add_argument("--property", required=True, choices=sorted(CHECKS))
    s = verb("lift", cmd_lift, "right lifting property against a generating set")
    s.add_argument("file")
    s.add_argument("--set", required=True, choices=SET_NAMES)
    s = verb("fibrant", cmd_fibrant, "naive fibrancy against a generating set")
    s.add_argument("file")
    s.add_argument("--set", required=True, choices=SET_NAMES)
    s = verb("construct", cmd_construct, "build a double category and print its document")
    s.add_argument("kind")
    s.add_argument("args", nargs="*")
    s = verb("pushout", cmd_pushout, "pushout along a generating cell")
    s.add_argument("cell", choices=("attach-object", "identify", "square", "h-edge", "v-edge"))
    s.add_argument("file")
    s.add_argument("--squares", nargs=2, metavar=("A", "B"))
    s.add_argument("--boundary", nargs=4, metavar=("TOP", "BOTTOM", "LEFT", "RIGHT"))
    s.add_argument("--src")
    s.add_argument("--tgt")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--truncation", action="store_true",
                   help="print the truncated model instead of the presentation")
    s = verb("quotient", cmd_quotient, "quotient by the congruence generated by pairs")
    s.add_argument("file")
    s.add_argument("--pair", nargs=2, action="append", required=True, metavar=("A", "B"),
                   help="two parallel squares to identify; repeatable")
    s = verb("audit-recipe", cmd_audit, "search a corpus for counterexamples to the recipe")
    s.add_argument("--set", required=True, choices=SET_NAMES)
    s.add_argument("--corpus", required=True)
    s = verb("corpus", cmd_corpus, "write the corpus")
    s.add_argument("action", choices=("build",))
    s.add_argument("--profile", choices=PROFILES, default="small")
    s.add_argument("--out", required=True, type=Path)
    s = verb("shapes", cmd_shapes, "list shapes, seeds, cells and generating sets")
    s.add_argument("action", choices=("list",))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    out = _Out(args.format)
    try:
        return args.fn(args, out)
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (DblCatError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
