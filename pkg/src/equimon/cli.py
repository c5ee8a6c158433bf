"""Command-line surface: validate, enumerate, count, green, collapsings, verify.

Exit codes: 0 success, 1 check failure, 2 input error, 3 cap exceeded.
All emissions are byte-identical across repeated runs on the same input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import schemas
from .collapsings import all_collapsings, witness_as_dict
from .endos import TooMany, count_endos, enumerate_endos
from .green import MonoidTable, UnsupportedFormat, emit_eggbox, green_structure
from .gsets import ActionError, orbits
from .verify import CorpusSpec, MonoidTooLarge, run_corpus

DEFAULT_CAP = 10**6


class ValidationError(ValueError):
    pass


def _load_gset(path: str):
    data = schemas.load_json(path)
    try:
        return schemas.gset_from_schema(data)
    except ActionError:
        raise
    except schemas.ParseError:
        raise
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _write(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_validate(args) -> int:
    gset = _load_gset(args.input)
    n_orbits = len(orbits(gset))
    _write(
        f"valid; |G|={gset.group.order}, |X|={gset.n_points}, orbits={n_orbits}",
        args.output,
    )
    return 0


def cmd_count(args) -> int:
    gset = _load_gset(args.input)
    _write(str(count_endos(gset)), args.output)
    return 0


def cmd_enumerate(args) -> int:
    gset = _load_gset(args.input)
    maps = enumerate_endos(gset, cap=args.cap)
    lines = [schemas.format_word(gset, f.word) for f in maps]
    _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_green(args) -> int:
    gset = _load_gset(args.input)
    monoid = MonoidTable.build(gset, cap=args.cap)
    structure = green_structure(monoid)
    _write(emit_eggbox(structure, args.format), args.output)
    return 0


def cmd_collapsings(args) -> int:
    gset = _load_gset(args.input)
    monoid = MonoidTable.build(gset, cap=args.cap)
    census = all_collapsings(monoid)
    payload = [witness_as_dict(monoid, i, w) for i, w in census]
    _write(json.dumps(payload, indent=2, sort_keys=True), args.output)
    return 0


def cmd_verify(args) -> int:
    data = schemas.load_json(args.corpus)
    try:
        spec = CorpusSpec.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise schemas.ParseError(f"bad corpus spec: {exc}") from exc
    if args.checks == "all":
        which = None
    else:
        which = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    results = run_corpus(spec, which=which)
    payload = [dict(gset=i, **r.as_dict()) for i, r in results]
    report_text = json.dumps(payload, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report_text)
    else:
        _write(report_text, args.output)
    failures = [r for _, r in results if r.status == "fail"]
    summary = f"{len(results)} reports, {len(failures)} failures"
    sys.stderr.write(summary + "\n")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equimon",
        description="Equivariant transformation monoids: enumeration, Green's "
                    "relations, eggbox diagrams and elementary collapsings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_cap=True):
        p.add_argument("input", help="G-set JSON file")
        p.add_argument("--output", default=None, help="write to a file instead of stdout")
        if with_cap:
            p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                           help="maximum monoid size to materialize")

    p = sub.add_parser("validate", help="validate a G-set file")
    add_common(p, with_cap=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("count", help="closed-form size of the monoid")
    add_common(p, with_cap=False)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list every equivariant map")
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("green", help="emit the eggbox structure")
    add_common(p)
    p.add_argument("--format", choices=("ascii", "dot", "json"), default="ascii")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("collapsings", help="census of elementary collapsings")
    add_common(p)
    p.set_defaults(func=cmd_collapsings)

    p = sub.add_parser("verify", help="run the property harness over a corpus")
    p.add_argument("--corpus", required=True, help="corpus spec JSON file")
    p.add_argument("--checks", default="all", help="'all' or a comma-separated list like P1,P7")
    p.add_argument("--report", default=None, help="write the JSON report to a file")
    p.add_argument("--output", default=None)
    p.add_argument("--seed", type=int, default=None, help="override the corpus seed")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is not None and args.command == "verify":
        data = schemas.load_json(args.corpus)
        data["seed"] = args.seed

        import tempfile, os

        with tempfile.NamedTemporaryFile(
            "w", suffix=".json", delete=False, encoding="utf-8"
        ) as fh:
            json.dump(data, fh)
            args.corpus = fh.name
    try:
        return args.func(args)
    except (schemas.ParseError, ValidationError, ActionError, ValueError) as exc:
        if isinstance(exc, (TooMany, MonoidTooLarge)):
            sys.stderr.write(f"error: {exc}\n")
            return 3
        if isinstance(exc, UnsupportedFormat):
            sys.stderr.write(f"error: {exc}\n")
            return 2
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
