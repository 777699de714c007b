"""Command-line front end.

Exit codes: 0 success, 1 semantic violation (or a failed check), 2 unreadable
or malformed input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .dot import structure_dot
from .errors import NearlatError, ParseError
from .extension import free_extension, irreducibles
from .nearlattice import Nearlattice, find_isomorphism
from .properties import REGISTRY, Subject, run_checks
from .representation import (
    DNStructure,
    check_representation,
    corpus_counts,
    enumerate_dn,
    max_size_bound,
    n_of,
    s_of,
)
from .serialize import dn_to_doc, dumps, nearlattice_to_doc, read_structure
from .structure import classify, is_semi_boolean

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class InternalError(Exception):
    pass


def _as_nearlattice(obj: Nearlattice | DNStructure) -> tuple[Nearlattice, DNStructure | None]:
    if isinstance(obj, DNStructure):
        return n_of(obj), obj
    return obj, None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def analysis_report(A: Nearlattice) -> dict:
    c = classify(A)
    names = A.names
    return {
        "size": A.size,
        "top": A.label(A.top),
        "dual_atoms": names(c.dual_atoms),
        "boolean": names(c.boolean_elements),
        "complemented": names(c.complemented_elements),
        "dense": names(c.dense_elements),
        "irreducibles": names(irreducibles(A)),
        "semi_boolean": is_semi_boolean(A),
        "pi": {A.label(a): A.label(c.pi_table[a]) for a in range(A.size)},
        "extension_size": free_extension(A).lattice.size,
        "representation_ok": check_representation(A),
    }


def render_text(report: dict) -> str:
    def setstr(xs):
        return "{" + ",".join(xs) + "}"

    lines = [
        f"size: {report['size']}",
        f"top: {report['top']}",
        f"dual atoms: {setstr(report['dual_atoms'])}",
        f"boolean: {setstr(report['boolean'])}",
        f"complemented: {setstr(report['complemented'])}",
        f"dense: {setstr(report['dense'])}",
        f"irreducibles: {setstr(report['irreducibles'])}",
        f"semi-boolean: {'yes' if report['semi_boolean'] else 'no'}",
        "pi: " + " ".join(f"{k}->{v}" for k, v in report["pi"].items()),
        f"extension size: {report['extension_size']}",
        f"representation: {'ok' if report['representation_ok'] else 'FAILED'}",
    ]
    return "\n".join(lines) + "\n"


def cmd_validate(args) -> int:
    obj = read_structure(args.path)
    kind = "dn-structure" if isinstance(obj, DNStructure) else "nearlattice"
    print(f"valid {kind}" if args.verbose else "valid")
    return EXIT_OK


def cmd_analyze(args) -> int:
    A, _ = _as_nearlattice(read_structure(args.path))
    report = analysis_report(A)
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = render_text(report)
    _emit(text, args.out)
    return EXIT_OK


def cmd_represent(args) -> int:
    A, _ = _as_nearlattice(read_structure(args.path))
    D = s_of(A)
    if find_isomorphism(A, n_of(D)) is None:
        raise InternalError("reconstruction is not isomorphic to the input")
    _emit(dumps(dn_to_doc(D)), args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    obj = read_structure(args.path)
    if not isinstance(obj, DNStructure):
        raise ParseError(detail="construct expects a DN file")
    _emit(dumps(nearlattice_to_doc(n_of(obj))), args.out)
    return EXIT_OK


def cmd_extend(args) -> int:
    A, _ = _as_nearlattice(read_structure(args.path))
    _emit(dumps(nearlattice_to_doc(free_extension(A).lattice)), args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    corpus = enumerate_dn(args.max_size)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    for i, D in enumerate(corpus):
        A = n_of(D)
        stem = f"{i:05d}"
        (out / f"dn_{stem}.json").write_text(dumps(dn_to_doc(D)))
        (out / f"nl_{stem}.json").write_text(dumps(nearlattice_to_doc(A)))
        entries.append({"id": stem, "poset_size": D.poset.size, "size": A.size})
    counts = corpus_counts(args.max_size)
    index = {
        "max_size": args.max_size,
        "counts": {str(n): {"raw": raw, "distinct": d} for n, (raw, d) in counts.items()},
        "structures": entries,
    }
    (out / "index.json").write_text(json.dumps(index, sort_keys=True, indent=2) + "\n")
    print(f"wrote {len(corpus)} structures to {out}")
    return EXIT_OK


def _subjects(args) -> list[Subject]:
    if args.corpus is not None:
        return [Subject(n_of(D), f"dn{i:05d}", D) for i, D in enumerate(enumerate_dn(args.corpus))]
    obj = read_structure(args.path)
    A, D = _as_nearlattice(obj)
    return [Subject(A, Path(args.path).name, D)]


def cmd_check(args) -> int:
    start = time.perf_counter()
    subjects = _subjects(args)
    names = None
    if args.property:
        unknown = [p for p in args.property if p not in REGISTRY]
        if unknown:
            raise ParseError(detail=f"unknown property {unknown[0]!r}")
        names = args.property
    failures = 0
    for s in subjects:
        for o in run_checks(s, names):
            if not o.passed:
                failures += 1
                print(f"FAIL {o.structure} {o.property} witness={o.witness!r}")
            elif args.verbose:
                print(f"ok   {o.structure} {o.property}")
    count = len(names) if names else len(REGISTRY)
    print(f"checked {len(subjects)} structures, {count} properties, {failures} failures")
    if args.verbose:
        print(f"elapsed {time.perf_counter() - start:.2f}s")
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def cmd_export_dot(args) -> int:
    A, _ = _as_nearlattice(read_structure(args.path))
    _emit(structure_dot(A, args.what), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nearlat", description="Finite distributive nearlattices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a nearlattice or DN file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="report element classes and derived data")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("represent", help="emit the DN-structure of a nearlattice")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("construct", help="emit the nearlattice of a DN-structure")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("extend", help="emit the free distributive lattice extension")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("generate", help="write every DN-structure up to a poset size")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="run the invariant suite")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", type=int, metavar="N")
    src.add_argument("path", nargs="?")
    p.add_argument("--property", action="append", help="restrict to this property (repeatable)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export-dot", help="Graphviz diagram")
    p.add_argument("path")
    p.add_argument("--what", choices=["hasse", "extension", "irr"], default="hasse")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_size", 0) is None:
        args.max_size = max_size_bound()
    try:
        return args.func(args)
    except ParseError as exc:
        print(exc.describe(), file=sys.stderr)
        return EXIT_PARSE
    except NearlatError as exc:
        labels = getattr(exc, "labels", None)
        print(exc.describe(labels), file=sys.stderr)
        return EXIT_VIOLATION
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
