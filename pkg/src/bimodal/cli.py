"""Command-line entry point.

Exit status: 0 on success or a bimodal verdict, 1 on a not-bimodal verdict
(or a failed golden replay), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .bimodal_check import difference_profile, is_bimodal_by_definition, is_bimodal_by_structure
from .classify import ClassificationReport, classify
from .collection import SetCollection, format_element, format_set
from .enumerate_oracle import EnumerationResult, enumerate_bimodal
from .errors import BimodalError, ClassificationRefusedError
from .golden import GOLDEN, replay

EXIT_OK, EXIT_NOT_BIMODAL, EXIT_INPUT = 0, 1, 2


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def render_report(R: ClassificationReport) -> str:
    C = R.collection
    G = C.ambient
    el = lambda x: format_element(G, x)  # noqa: E731
    lines = [
        f"group: {G}",
        f"sets: {C.m}",
        f"case: {R.case} (r = {R.r})",
        f"non-full first: {' '.join(map(str, R.reorder))}",
        "set  size  |H_i|  full  H_i",
    ]
    for i, p in enumerate(R.per_set):
        lines.append(f"{i:>3}  {p.size:>4}  {p.group.order:>5}  {'yes' if p.full else 'no':>4}  {p.group}")
    if R.kernel is not None:
        lines.append(f"kernel: {format_set(G, R.kernel)} (coset of {R.kernel_group})")
    lines.append(f"sum group: order {R.sum_group.order} {R.sum_group}")
    lines.append(f"canonical shift: {el(R.canonical_shift)} ({R.valid_shifts} valid shifts)")
    if R.interior_sets:
        lines.append(f"interior sets: {' '.join(map(str, R.interior_sets))}")
    for rep, idx in R.coset_tiling:
        lines.append(f"coset {el(rep)} + H tiled by sets {' '.join(map(str, idx))}")
    return "\n".join(lines)


def render_census(res: EnumerationResult) -> str:
    S = res.scope
    lines = [
        f"group: {S.group}",
        f"candidates: {res.candidates}",
        f"bimodal: {res.count} (dedupe={S.dedupe})",
        "case   count",
    ]
    lines += [f"{c:<6} {n}" for c, n in res.by_case.items()]
    lines.append("m  r  count")
    lines += [f"{m:<2} {r:<2} {n}" for m, r, n in res.census_rows()]
    return "\n".join(lines)


def cmd_verify(args) -> int:
    C = io.parse_collection(io.load(args.file))
    verdicts = [is_bimodal_by_definition(C), is_bimodal_by_structure(C)]
    if args.json:
        _out(io.dumps({"verdicts": [io.verdict_doc(C.ambient, v) for v in verdicts]}))
    else:
        for v in verdicts:
            _out(v.describe(C.ambient))
    return EXIT_OK if all(verdicts) else EXIT_NOT_BIMODAL


def cmd_profile(args) -> int:
    C = io.parse_collection(io.load(args.file))
    P = difference_profile(C)
    if args.json:
        _out(io.dumps(io.profile_doc(P)))
    else:
        G = C.ambient
        deltas = G.nonzero_elements()
        _out("delta  " + " ".join(f"N_{i}" for i in range(C.m)))
        for d in deltas:
            _out(f"{format_element(G, d):<6} " + " ".join(f"{P.count(i, d):>3}" for i in range(C.m)))
        _out("k_i    " + " ".join(f"{k:>3}" for k in P.set_sizes))
    return EXIT_OK


def cmd_classify(args) -> int:
    C = io.parse_collection(io.load(args.file))
    try:
        R = classify(C)
    except ClassificationRefusedError as e:
        _out(e.verdict.describe(C.ambient))
        return EXIT_NOT_BIMODAL
    _out(io.dumps(io.report_doc(R)) if args.json else render_report(R))
    return EXIT_OK


def cmd_construct(args) -> int:
    C = io.build(args.kind, io.load(args.specfile))
    _out(str(C) if args.text else io.emit_collection(C))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    scope = io.parse_scope(io.load(args.scopefile), budget=args.budget, dedupe=args.dedupe)
    materialize = args.materialize or args.stream is not None
    res = enumerate_bimodal(scope, workers=args.workers, materialize=materialize)
    if args.stream is not None:
        with open(args.stream, "w") as fh:
            for C in res.collections:
                fh.write(io.emit_collection(C))
        if not args.materialize:
            res.collections = None
    _out(io.dumps(io.census_doc(res)) if args.json else render_census(res))
    return EXIT_OK


def cmd_examples(args) -> int:
    names = [args.name] if args.name else list(GOLDEN)
    status = EXIT_OK
    results = {}
    for name in names:
        if name not in GOLDEN:
            raise BimodalError(f"unknown example {name!r}; choose from {', '.join(GOLDEN)}")
        ex = GOLDEN[name]
        problems = replay(ex)
        results[name] = problems
        if problems:
            status = EXIT_NOT_BIMODAL
        if not args.json:
            _out(f"{name}: {'ok' if not problems else 'FAILED'}  {ex.description}")
            _out(f"  {ex.collection}")
            for p in problems:
                _out(f"  mismatch: {p}")
            if ex.expected["bimodal"]:
                _out(f"  bimodal; case {ex.expected['case']}, r = {ex.expected['r']}")
            for i, row in ex.expected_profile.items():
                G = ex.collection.ambient
                cells = ", ".join(f"N_{i}({format_element(G, d)})={n}" for d, n in sorted(row.items()))
                _out(f"  {cells}")
    if args.json:
        _out(io.dumps({n: {"ok": not p, "mismatches": p} for n, p in results.items()}))
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bimodal", description="Check, classify, construct and enumerate bimodal collections of subsets of finite abelian groups.")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON documents")
    fmt.add_argument("--text", action="store_true", help="emit human-readable text (default)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="run both bimodality deciders on a collection file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("profile", help="print the N_i(delta) table")
    s.add_argument("file")
    s.set_defaults(func=cmd_profile)

    s = sub.add_parser("classify", help="structural classification of a bimodal collection")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("construct", help="build a collection from a spec file")
    s.add_argument("kind", choices=sorted(io.CONSTRUCT_SCHEMAS))
    s.add_argument("specfile")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", help="exhaustive census of bimodal collections")
    s.add_argument("scopefile")
    s.add_argument("--budget", type=int, help="refuse scopes with more candidates than this")
    s.add_argument("--dedupe", choices=["none", "shift"])
    s.add_argument("--materialize", action="store_true", help="include every collection in the output")
    s.add_argument("--stream", metavar="FILE", help="write survivors to FILE, one JSON document per line")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("examples", help="replay the built-in worked examples")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BimodalError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
