"""Command-line interface.

Exit codes: 0 success (no violations), 1 violations found, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .domination import domination_number
from .enumeration import TreeStream, levels_to_parents
from .errors import ZagrebDomError
from .families import FAMILIES, build_members
from .harness import RunConfig, compute, extremal_table, render_report, verify
from .tree import canonical_relabel, format_edge_list, read_edge_list


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zagreb-dom",
        description="Multiplicative Zagreb indices and domination numbers of trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices and gamma of an edge-list file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gamma", help="domination number and a minimum dominating set")
    p.add_argument("file")

    p = sub.add_parser("construct", help="build an extremal family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("gamma", type=int)
    p.add_argument("--all", action="store_true", help="emit every non-isomorphic member")

    p = sub.add_parser("enumerate", help="list all trees of order n as parent arrays")
    p.add_argument("n", type=int)
    p.add_argument("--gamma", type=int)

    p = sub.add_parser("verify", help="check the bounds on every tree in a range of orders")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--gamma", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out")
    p.add_argument("--thm43-exponent", choices=("printed", "consistent", "both"), default="both")

    p = sub.add_parser("extremal", help="per-gamma table of extremal values for one order")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _run(args: argparse.Namespace) -> int:
    out = sys.stdout
    if args.command == "compute":
        record = compute(args.file)
        if args.json:
            out.write(json.dumps(record) + "\n")
        else:
            for key, value in record.items():
                out.write(f"{key}: {value}\n")
        return 0
    if args.command == "gamma":
        result = domination_number(read_edge_list(args.file))
        out.write(f"gamma: {result.gamma}\n")
        out.write("witness: " + " ".join(map(str, result.witness.members)) + "\n")
        return 0
    if args.command == "construct":
        members = build_members(args.family, args.n, args.gamma)
        if not members:
            sys.stderr.write(f"{args.family}({args.n}, {args.gamma}) has no members\n")
            return 1
        chosen = members if args.all else members[:1]
        out.write("\n".join(format_edge_list(canonical_relabel(t)) for t in chosen))
        return 0
    if args.command == "enumerate":
        for levels in TreeStream(args.n, args.gamma).levels():
            out.write(f"{args.n}:" + ",".join(map(str, levels_to_parents(levels))) + "\n")
        return 0
    if args.command == "verify":
        cfg = RunConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            gamma=args.gamma,
            jobs=args.jobs,
            fmt=args.format,
            out=args.out,
            thm43_exponent=args.thm43_exponent,
        )
        report = verify(cfg)
        if args.out is None:
            out.write(render_report(report, args.format))
        summary = report["summary"]
        sys.stderr.write(
            f"{summary['trees']} trees in {summary['cells']} cells, "
            f"{summary['violations']} violations\n"
        )
        return 0 if summary["violations"] == 0 else 1
    if args.command == "extremal":
        out.write(extremal_table(args.n, args.format))
        return 0
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (ZagrebDomError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
