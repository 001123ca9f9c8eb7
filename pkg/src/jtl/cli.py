"""``jtl`` command line.

Exit codes: 0 success / all pass, 1 a fail record, 2 invalid input,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import BudgetExceeded, JTLError
from .io import dump_json, load_document, load_module, module_from_doc, resolve_ring, ring_from_doc

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


def _write(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _ring_arg(spec: str):
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        return ring_from_doc(load_document(path))
    return resolve_ring(spec)


def cmd_validate(args) -> int:
    doc = load_document(args.file)
    if doc["kind"] == "ring":
        R = ring_from_doc(doc)
        _write(dump_json({"valid": True, "kind": "ring", "name": R.name, "size": R.size}))
    else:
        M = load_module(args.file)
        _write(dump_json({"valid": True, "kind": "module", "name": M.name,
                          "ring": M.ring.name, "size": M.size}))
    return EXIT_OK


def ring_info(R) -> dict:
    from .ring import element_classes, jacobson_radical, left_ideals, maximal_left_ideals, classify_ring

    ec = element_classes(R)
    return {
        "name": R.name, "size": R.size, "one": R.one,
        "jacobson_radical": list(jacobson_radical(R).members),
        "units": list(ec.units.members),
        "idempotents": list(ec.idempotents.members),
        "nilpotents": list(ec.nilpotents.members),
        "left_ideals": [list(I.members) for I in left_ideals(R)],
        "maximal_left_ideals": [list(I.members) for I in maximal_left_ideals(R)],
        "profile": classify_ring(R).as_dict(),
    }


def module_info(M) -> dict:
    from .classify import module_profile
    from .module import classify_module_basic, minimal_generators, radical

    return {
        "name": M.name, "ring": M.ring.name, "size": M.size,
        "generators": list(minimal_generators(M)),
        "radical": list(radical(M).members),
        "basic": classify_module_basic(M),
        "profile": module_profile(M).as_dict(),
    }


def cmd_info(args) -> int:
    if args.what == "ring":
        _write(dump_json(ring_info(_ring_arg(args.target))))
    else:
        _write(dump_json(module_info(load_module(args.target))))
    return EXIT_OK


def cmd_compute(args) -> int:
    from .module import radical, regular_module
    from .reject import jrej, nilrej, rej

    M = load_module(args.module)
    if args.op == "rad":
        _write(dump_json({"kind": "rad", "module": M.name, "members": list(radical(M).members)}))
        return EXIT_OK
    if args.op == "nilrej":
        res = nilrej(M)
        out = res.to_dict()
        out["is_submodule"] = res.is_submodule
        _write(dump_json(out))
        return EXIT_OK
    if args.cls:
        U = tuple(module_from_doc(M.ring, load_document(p)) for p in args.cls)
    else:
        U = (regular_module(M.ring),)
    res = (rej if args.op == "rej" else jrej)(M, U)
    _write(dump_json(res.to_dict()))
    return EXIT_OK


def _catalog(args):
    from .harness.catalog import Caps, catalog_builtin, catalog_from_dir

    caps = Caps(args.max_ring_size, args.max_module_size)
    if args.catalog == "builtin":
        return catalog_builtin(caps)
    if not Path(args.catalog).is_dir():
        raise JTLError(f"catalog {args.catalog!r} is neither 'builtin' nor a directory")
    return catalog_from_dir(args.catalog, caps)


def cmd_check(args) -> int:
    from .harness.report import emit_report, exit_code
    from .harness.runner import run_suite, suite_ids

    try:
        suite_ids(args.suite)
    except KeyError as exc:
        raise JTLError(str(exc.args[0])) from exc
    reports = run_suite(args.suite, _catalog(args), jobs=args.jobs)
    data = emit_report(reports, args.format, timings=args.timings)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return exit_code(reports)


def cmd_search(args) -> int:
    from .harness.search import search

    result = search(args.expression, _catalog(args))
    _write(dump_json(result.to_dict()))
    if not result.matches:
        print(f"no catalog instance satisfies {args.expression!r}", file=sys.stderr)
    return EXIT_OK


def _catalog_options(p):
    p.add_argument("--catalog", default="builtin", help="'builtin' or a directory of JSON files")
    p.add_argument("--max-ring-size", type=int, default=16)
    p.add_argument("--max-module-size", type=int, default=64)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jtl", description="Rejects, JRejects and "
                                     "J-torsionless modules over finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a ring or module JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="profile of a ring (builtin name or file) or a module file")
    p.add_argument("what", choices=("ring", "module"))
    p.add_argument("target")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("compute", help="rej, jrej, nilrej or radical of a module")
    p.add_argument("op", choices=("rej", "jrej", "nilrej", "rad"))
    p.add_argument("--module", required=True)
    p.add_argument("--class", dest="cls", action="append", default=[],
                   help="module file in the class (repeatable; default: the regular module)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="run theorem suites over a catalog")
    p.add_argument("--suite", default="all")
    _catalog_options(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("jsonl", "summary"), default="jsonl")
    p.add_argument("--timings", action="store_true", help="include elapsed ms (not reproducible)")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="catalog instances satisfying a flag expression")
    p.add_argument("expression")
    _catalog_options(p)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except JTLError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
