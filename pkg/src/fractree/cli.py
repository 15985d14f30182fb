"""Command-line surface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 resource cap exceeded.  All data outputs are deterministic: repeated
runs on the same inputs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct, clustering, sequences, spanning, verify
from .errors import BadParameterError, DomainViolationError, FractreeError, SizeCapError
from .exact import factored_expand
from .graph import blocks, degree_histogram, to_dot, to_edgelist_text, to_json_dict
from .params import Family, FractalParams

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fractree",
        description="Construct self-similar cycle/wheel graphs and verify their invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, with_stage=True):
        p.add_argument("family_pos", nargs="?", metavar="FAMILY", help="cycle or wheel")
        p.add_argument("n_pos", nargs="?", type=int, metavar="N")
        p.add_argument("m_pos", nargs="?", type=int, metavar="M")
        if with_stage:
            p.add_argument("i_pos", nargs="?", type=int, metavar="I")
        p.add_argument("--family", choices=["cycle", "wheel"])
        p.add_argument("-n", "--n", type=int, dest="n")
        p.add_argument("-m", "--m", type=int, dest="m")
        if with_stage:
            p.add_argument("-i", "--stage", type=int, dest="i")

    gen = sub.add_parser("generate", help="build a graph and write it out")
    add_params(gen)
    gen.add_argument("--format", choices=["edgelist", "json", "dot"], default="edgelist")
    gen.add_argument("--out", help="output path (default: stdout)")

    cnt = sub.add_parser("count", help="count spanning trees")
    add_params(cnt)
    cnt.add_argument(
        "--method", choices=["formula", "matrix-tree", "blocks", "all"], default="formula"
    )
    cnt.add_argument("--json", action="store_true", dest="as_json")
    cnt.add_argument("--out", help="output path (default: stdout)")

    inv = sub.add_parser("invariants", help="print direct and closed-form invariants")
    inv.add_argument(
        "which", choices=["entropy", "clustering", "sizes", "census", "degrees"]
    )
    add_params(inv)
    inv.add_argument("--iters", type=int, default=60, help="entropy iterations")
    inv.add_argument("--upto", type=int, default=10, help="sizes: highest index")
    inv.add_argument("--out", help="output path (default: stdout)")

    surf = sub.add_parser("surface", help="entropy surface as CSV over (n, m) ranges")
    surf.add_argument("family_pos", nargs="?", metavar="FAMILY")
    surf.add_argument("n_range_pos", nargs="?", metavar="NRANGE", help="e.g. 3..6")
    surf.add_argument("m_range_pos", nargs="?", metavar="MRANGE", help="e.g. 2..4")
    surf.add_argument("--family", choices=["cycle", "wheel"])
    surf.add_argument("--n-range")
    surf.add_argument("--m-range")
    surf.add_argument("--out", help="output path (default: stdout)")

    ver = sub.add_parser("verify", help="run the cross-check suite")
    ver.add_argument("--quick", action="store_true", help="trim the heavy oracle grid")
    ver.add_argument("--json", dest="json_path", help="also write the JSON report here")

    return parser


def _resolve_params(args, need_stage: bool, default_stage=None) -> FractalParams:
    family = args.family or args.family_pos
    n = args.n if args.n is not None else args.n_pos
    m = args.m if args.m is not None else args.m_pos
    i = getattr(args, "i", None)
    if i is None:
        i = getattr(args, "i_pos", None)
    if family is None or n is None or m is None:
        raise _UsageError("family, n and m are required (positional or --family/--n/--m)")
    if i is None:
        if need_stage and default_stage is None:
            raise _UsageError("stage is required (positional or -i/--stage)")
        i = default_stage if default_stage is not None else 0
    try:
        family = Family(family)
    except ValueError:
        raise _UsageError(f"unknown family {family!r}") from None
    return FractalParams(family, n, m, i)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _count_json(count) -> dict:
    value = factored_expand(count)
    return {
        "factored": count.to_json(),
        "decimal": str(value),
        "digits": len(str(value)),
    }


def _cmd_generate(args) -> int:
    params = _resolve_params(args, need_stage=True, default_stage=0)
    g = construct.build(params)
    if args.format == "edgelist":
        text = to_edgelist_text(g)
    elif args.format == "json":
        text = json.dumps(to_json_dict(g), indent=2) + "\n"
    else:
        text = to_dot(g)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_count(args) -> int:
    params = _resolve_params(args, need_stage=True, default_stage=0)
    results = {}
    if args.method in ("formula", "all"):
        results["formula"] = spanning.tau_closed(params)
    if args.method in ("matrix-tree", "blocks", "all"):
        g = construct.build(params)
        if args.method in ("matrix-tree", "all"):
            results["matrix-tree"] = spanning.tau_oracle(g)
        if args.method in ("blocks", "all"):
            results["blocks"] = spanning.tau_blocks(g)

    lines = []
    values = {}
    payload = {}
    for method, result in results.items():
        if method == "formula":
            values[method] = factored_expand(result)
            payload[method] = _count_json(result)
            lines.append(
                f"formula: {result} = {values[method]} ({len(str(values[method]))} digits)"
            )
        else:
            values[method] = result
            payload[method] = {"decimal": str(result), "digits": len(str(result))}
            lines.append(f"{method}: {result} ({len(str(result))} digits)")
    if args.method == "all":
        agree = len(set(values.values())) == 1
        payload["agree"] = agree
        lines.append("agreement: all methods agree" if agree else "agreement: DISAGREEMENT")
        if not agree:
            _emit(
                (json.dumps(payload, indent=2) + "\n") if args.as_json else "\n".join(lines) + "\n",
                args.out,
            )
            return EXIT_MISMATCH
    _emit(
        (json.dumps(payload, indent=2) + "\n") if args.as_json else "\n".join(lines) + "\n",
        args.out,
    )
    return EXIT_OK


def _fmt10(x) -> str:
    return f"{x:.10g}"


def _cmd_invariants(args) -> int:
    lines = []
    if args.which == "entropy":
        params = _resolve_params(args, need_stage=False)
        off = sequences.entropy_limit(params, args.iters, sequences.EntropyConvention.OFFSET_STAGE)
        same = sequences.entropy_limit(params, args.iters, sequences.EntropyConvention.SAME_STAGE)
        lines.append(f"offset-stage: {_fmt10(off.value)} (delta {off.delta:.3e})")
        lines.append(f"same-stage: {_fmt10(same.value)} (delta {same.delta:.3e})")
        try:
            lines.append(f"closed-form: {_fmt10(sequences.entropy_closed(params))}")
        except DomainViolationError as exc:
            lines.append(f"closed-form: not applicable ({exc})")
    elif args.which == "clustering":
        params = _resolve_params(args, need_stage=True)
        report = clustering.average_clustering(construct.build(params))
        closed = clustering.clustering_closed(params)
        payload = report.to_json(closed_form=closed)
        published = verify.PUBLISHED_CLUSTERING.get(
            (params.family, params.n, params.m, params.i)
        )
        if published is not None:
            payload["published"] = str(published)
            payload["published_match"] = published == report.average
        lines.append(json.dumps(payload, indent=2))
    elif args.which == "sizes":
        params = _resolve_params(args, need_stage=True, default_stage=0)
        seq = sequences.size_sequences(params, max(args.upto, params.i + 1))
        lines.append(f"u: {', '.join(map(str, seq.u))}")
        lines.append(f"e: {', '.join(map(str, seq.e))}")
        lines.append(
            f"stage-{params.i} graph: {seq.u[params.i + 1]} vertices, "
            f"{seq.e[params.i + 1]} edges"
        )
    elif args.which == "census":
        params = _resolve_params(args, need_stage=True)
        census = construct.copy_census(params)
        for t in sorted(census.stage_counts, reverse=True):
            lines.append(f"stage-{t} copies: {census.stage_counts[t]}")
        lines.append(f"central: {census.central}")
        predicted = construct.predicted_block_multiset(params)
        lines.append(
            "predicted blocks: "
            + "; ".join(f"{k}x{v}" for k, v in sorted(predicted.items()))
        )
        g = construct.build(params)
        actual = {}
        for b in blocks(g):
            actual[b.signature] = actual.get(b.signature, 0) + 1
        lines.append(
            "structural blocks: "
            + "; ".join(f"{k}x{v}" for k, v in sorted(actual.items()))
        )
        lines.append(f"match: {actual == predicted}")
    else:  # degrees
        params = _resolve_params(args, need_stage=True)
        predicted = clustering.degree_census_predicted(params)
        actual = degree_histogram(construct.build(params))
        lines.append(
            "predicted: " + "; ".join(f"{d}:{c}" for d, c in sorted(predicted.items()))
        )
        lines.append(
            "built: " + "; ".join(f"{d}:{c}" for d, c in sorted(actual.items()))
        )
        lines.append(f"match: {actual == predicted}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _parse_range(text, lo, hi, what) -> range:
    try:
        if ".." in text:
            a, b = text.split("..")
            first, last = int(a), int(b)
        else:
            first = last = int(text)
    except (ValueError, AttributeError):
        raise _UsageError(f"bad {what} range {text!r}, expected e.g. 3..6") from None
    if first > last or first < lo or last > hi:
        raise _UsageError(f"{what} range must lie within [{lo},{hi}] and be ascending")
    return range(first, last + 1)


def _cmd_surface(args) -> int:
    family = args.family or args.family_pos
    n_text = args.n_range or args.n_range_pos
    m_text = args.m_range or args.m_range_pos
    if family is None or n_text is None or m_text is None:
        raise _UsageError("surface needs FAMILY, NRANGE and MRANGE")
    try:
        family = Family(family)
    except ValueError:
        raise _UsageError(f"unknown family {family!r}") from None
    n_range = _parse_range(n_text, 3, 64, "n")
    m_range = _parse_range(m_text, 2, 64, "m")
    rows = sequences.entropy_surface_rows(family, n_range, m_range)
    out = ["family,n,m,sigma_offset,sigma_same,sigma_closed"]
    for n, m, offset, same, closed in rows:
        closed_text = _fmt10(closed) if closed is not None else ""
        out.append(f"{family.value},{n},{m},{_fmt10(offset)},{_fmt10(same)},{closed_text}")
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify.verify_suite("quick" if args.quick else "full")
    sys.stdout.write(report.to_table_text())
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(report.to_json_text())
    return report.exit_code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return 0 if not exc.code else EXIT_USAGE
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "invariants":
            return _cmd_invariants(args)
        if args.command == "surface":
            return _cmd_surface(args)
        return _cmd_verify(args)
    except (_UsageError, BadParameterError, DomainViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FractreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
