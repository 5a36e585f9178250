"""Command-line front end.

Subcommands: eval (closed-form bounds), witness (emit a grouped witness
coloring), verify (check a coloring file against two patterns), oracle
(exact search), table (parameter sweeps as text/TSV/json-lines).

Patterns on the command line use a small grammar: K<m> for cliques,
K1,<n> for stars, path<k> and cycle<k> for small generic patterns.

All data output is deterministic and goes to stdout; diagnostics go to
stderr.  Exit codes: 0 success / witness valid, 1 witness invalid,
2 bad arguments or unparseable input, 3 search budget exhausted,
4 oracle found no forcing t up to the probed bound.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from . import constructions, formulas, oracle
from .errors import MultiramseyError, DomainError
from .graphcore import PatternGraph, format_coloring, parse_coloring

_STAR_RE = re.compile(r"^K1,(\d+)$")
_CLIQUE_RE = re.compile(r"^K(\d+)$")
_PATH_RE = re.compile(r"^path(\d+)$")
_CYCLE_RE = re.compile(r"^cycle(\d+)$")
_RANGE_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")

_TABLE_COLUMNS = ("lower", "upper", "exact", "oracle", "provenance")


def parse_pattern(token: str) -> PatternGraph:
    """Parse K<m>, K1,<n>, path<k> or cycle<k>."""
    match = _STAR_RE.match(token)
    if match:
        return PatternGraph.star(int(match.group(1)))
    match = _CLIQUE_RE.match(token)
    if match:
        return PatternGraph.clique(int(match.group(1)))
    match = _PATH_RE.match(token)
    if match:
        return PatternGraph.path(int(match.group(1)))
    match = _CYCLE_RE.match(token)
    if match:
        return PatternGraph.cycle(int(match.group(1)))
    raise DomainError(
        f"cannot parse pattern {token!r} (expected K<m>, K1,<n>, path<k> or cycle<k>)"
    )


def parse_range(text: str) -> range:
    match = _RANGE_RE.match(text)
    if not match:
        raise DomainError(f"invalid range {text!r} (expected N or A..B)")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise DomainError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _tags(provenance: tuple[str, ...]) -> str:
    return "; ".join(provenance)


def cmd_eval(args: argparse.Namespace) -> int:
    chi_mode = args.chi is not None or args.order is not None
    maxdeg_mode = args.max_deg is not None
    star_mode = args.n is not None
    if sum((chi_mode, maxdeg_mode, star_mode)) != 1:
        raise DomainError(
            "choose one mode: --m/--n (star), --chi/--order (chromatic), "
            "or --m/--max-deg (max degree)"
        )
    if chi_mode:
        if args.chi is None or args.order is None:
            raise DomainError("chromatic mode needs both --chi and --order")
        if args.m is not None:
            raise DomainError("--m does not apply to chromatic mode")
        value = formulas.chromatic_lower_bound(args.j, args.chi, args.order)
        print(f"lower {value} [{formulas.THM_2_1}]")
        return 0
    if maxdeg_mode:
        if args.m is None:
            raise DomainError("max-degree mode needs --m")
        value = formulas.maxdeg_lower_bound(args.j, args.m, args.max_deg)
        print(f"lower {value} [{formulas.THM_2_2}]")
        return 0
    if args.m is None:
        raise DomainError("star mode needs --m")
    result = formulas.exact_star(args.j, args.m, args.n)
    if result.exact is not None:
        print(f"exact {result.exact} [{_tags(result.provenance)}]")
    else:
        print(f"lower {result.lower} upper {result.upper} [{_tags(result.provenance)}]")
    return 0


_CHECK_RED_RE = re.compile(r"^redK(\d+)$")
_CHECK_STAR_RE = re.compile(r"^starK(\d+)$")


def cmd_witness(args: argparse.Namespace) -> int:
    if args.kind == "partition":
        if args.chi is None:
            raise DomainError("witness --kind partition needs --chi")
        if args.m is not None:
            raise DomainError("--m does not apply to --kind partition")
        coloring = constructions.partition_witness(args.j, args.t, args.chi)
    else:
        if args.m is None:
            raise DomainError("witness --kind turan needs --m")
        if args.chi is not None:
            raise DomainError("--chi does not apply to --kind turan")
        coloring = constructions.turan_witness(args.j, args.t, args.m)
    sys.stdout.write(format_coloring(coloring))
    if args.check is None:
        return 0
    red_token, star_token = args.check
    red_match = _CHECK_RED_RE.match(red_token)
    star_match = _CHECK_STAR_RE.match(star_token)
    if not red_match or not star_match:
        raise DomainError(
            f"--check expects 'redK<m> starK<n>', got {red_token!r} {star_token!r}"
        )
    red_pattern = PatternGraph.clique(int(red_match.group(1)))
    blue_pattern = PatternGraph.star(int(star_match.group(1)))
    report = constructions.verify_witness(coloring, red_pattern, blue_pattern)
    verdict = "valid" if report.valid else "invalid"
    print(
        f"witness {verdict}: min red degree {report.min_red_degree}, "
        f"max blue degree {report.max_blue_degree}",
        file=sys.stderr,
    )
    return 0 if report.valid else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="ascii") as handle:
            text = handle.read()
    coloring = parse_coloring(text)
    red_pattern = parse_pattern(args.red)
    blue_pattern = parse_pattern(args.blue)
    report = constructions.verify_witness(coloring, red_pattern, blue_pattern)
    for label, token, found, copy in (
        ("red", args.red, report.red_found, report.red_copy),
        ("blue", args.blue, report.blue_found, report.blue_copy),
    ):
        if found:
            print(f"{label} {token}: found at {' '.join(map(str, copy))}")
        else:
            print(f"{label} {token}: absent")
    print(f"min red degree {report.min_red_degree}")
    print(f"max blue degree {report.max_blue_degree}")
    print("VALID" if report.valid else "INVALID")
    return 0 if report.valid else 1


def _budget_from(args: argparse.Namespace) -> oracle.SearchBudget:
    return oracle.SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


_EXIT_BY_STATUS = {
    oracle.STATUS_EXACT: 0,
    oracle.STATUS_EXHAUSTED: 3,
    oracle.STATUS_NOT_FOUND: 4,
}


def _finish_oracle(args: argparse.Namespace, outcome: oracle.OracleOutcome) -> int:
    if outcome.status == oracle.STATUS_EXACT:
        print(f"exact {outcome.value}")
    else:
        print(outcome.status)
    print(f"nodes {outcome.nodes_explored}")
    if args.emit_certificate is not None:
        if outcome.certificate is not None:
            with open(args.emit_certificate, "w", encoding="ascii") as handle:
                handle.write(format_coloring(outcome.certificate))
        else:
            print("no certificate available", file=sys.stderr)
    return _EXIT_BY_STATUS[outcome.status]


def cmd_oracle_f(args: argparse.Namespace) -> int:
    outcome = oracle.f_exact_search(args.t, args.j, args.m, _budget_from(args))
    return _finish_oracle(args, outcome)


def cmd_oracle_star(args: argparse.Namespace) -> int:
    outcome = oracle.star_ramsey_exact(
        args.j,
        args.m,
        args.n,
        args.tmax,
        _budget_from(args),
        want_certificate=args.emit_certificate is not None,
    )
    return _finish_oracle(args, outcome)


def cmd_oracle_generic(args: argparse.Namespace) -> int:
    outcome = oracle.generic_ramsey_oracle(
        parse_pattern(args.red),
        parse_pattern(args.blue),
        args.j,
        args.tmax,
        _budget_from(args),
    )
    return _finish_oracle(args, outcome)


@dataclass(frozen=True)
class TableRequest:
    """A validated sweep: (j, m, n) ranges, selected columns, output format."""

    j_range: range
    m_range: range
    n_range: range
    columns: tuple[str, ...]
    format: str
    max_nodes: int | None = None
    max_seconds: float | None = None
    tmax: int | None = None

    def __post_init__(self):
        for r in (self.j_range, self.m_range, self.n_range):
            if len(r) == 0:
                raise DomainError("ranges must be nonempty")
        if not self.columns:
            raise DomainError("no columns selected")
        if "oracle" in self.columns and self.max_nodes is None:
            raise DomainError("the oracle column needs an explicit --max-nodes budget")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "TableRequest":
        requested = [c.strip() for c in args.columns.split(",") if c.strip()]
        for c in requested:
            if c not in _TABLE_COLUMNS:
                raise DomainError(
                    f"unknown column {c!r} (choose from {', '.join(_TABLE_COLUMNS)})"
                )
        return cls(
            j_range=parse_range(args.j),
            m_range=parse_range(args.m),
            n_range=parse_range(args.n),
            columns=tuple(c for c in _TABLE_COLUMNS if c in requested),
            format=args.format,
            max_nodes=args.max_nodes,
            max_seconds=args.max_seconds,
            tmax=args.tmax,
        )


def _table_rows(req: TableRequest):
    want_oracle = "oracle" in req.columns
    for j in req.j_range:
        for m in req.m_range:
            if m < 2 or j < m:
                continue
            for n in req.n_range:
                if n < 2:
                    continue
                result = formulas.exact_star(j, m, n)
                row: dict[str, object] = {"j": j, "m": m, "n": n}
                row["lower"] = result.lower
                row["upper"] = result.upper
                row["exact"] = result.exact
                row["provenance"] = _tags(result.provenance)
                if want_oracle:
                    row["oracle"] = _oracle_cell(req, j, m, n, result)
                yield row


def _oracle_cell(req: TableRequest, j: int, m: int, n: int, result) -> object:
    if m < 3:
        return None
    t_max = req.tmax if req.tmax is not None else result.upper
    budget = oracle.SearchBudget(max_nodes=req.max_nodes, max_seconds=req.max_seconds)
    outcome = oracle.star_ramsey_exact(j, m, n, t_max, budget)
    if outcome.status == oracle.STATUS_EXACT:
        return outcome.value
    return outcome.status


def _cell_text(value: object) -> str:
    if value is None:
        return ""
    return str(value)


def cmd_table(args: argparse.Namespace) -> int:
    req = TableRequest.from_args(args)
    header = ["j", "m", "n"] + list(req.columns)
    rows = list(_table_rows(req))
    if req.format == "tsv":
        print("\t".join(header))
        for row in rows:
            print("\t".join(_cell_text(row[c]) for c in header))
    elif req.format == "json-lines":
        for row in rows:
            print(json.dumps({c: row[c] for c in header}))
    else:
        cells = [header] + [[_cell_text(row[c]) for c in header] for row in rows]
        widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
        for line in cells:
            print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiramsey",
        description=(
            "Size multipartite Ramsey numbers m_j(H, G): closed-form "
            "bounds, witness colorings, and exact search oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate closed-form bounds")
    p_eval.add_argument("--j", type=int, required=True, help="number of parts")
    p_eval.add_argument("--m", type=int, help="red clique order")
    p_eval.add_argument("--n", type=int, help="blue star arm count (star mode)")
    p_eval.add_argument("--chi", type=int, help="chromatic number of H (chromatic mode)")
    p_eval.add_argument("--order", type=int, help="order of connected G (chromatic mode)")
    p_eval.add_argument(
        "--max-deg", type=int, dest="max_deg", help="max degree of G (max-degree mode)"
    )
    p_eval.set_defaults(func=cmd_eval)

    p_wit = sub.add_parser("witness", help="emit a grouped witness coloring")
    p_wit.add_argument("--kind", choices=["partition", "turan"], required=True)
    p_wit.add_argument("--j", type=int, required=True)
    p_wit.add_argument("--t", type=int, required=True)
    p_wit.add_argument("--chi", type=int, help="group count + 1 (partition kind)")
    p_wit.add_argument("--m", type=int, help="group count + 1 (turan kind)")
    p_wit.add_argument(
        "--check",
        nargs=2,
        metavar=("redK<m>", "starK<n>"),
        help="verify the witness against a red clique and a blue star; "
        "exit 0 when valid, 1 when not",
    )
    p_wit.set_defaults(func=cmd_witness)

    p_ver = sub.add_parser("verify", help="check a coloring file against two patterns")
    p_ver.add_argument("file", help="coloring file path, or - for stdin")
    p_ver.add_argument("--red", required=True, help="pattern forbidden in red")
    p_ver.add_argument("--blue", required=True, help="pattern forbidden in blue")
    p_ver.set_defaults(func=cmd_verify)

    p_orc = sub.add_parser("oracle", help="exact search oracles")
    orc_sub = p_orc.add_subparsers(dest="mode", required=True)

    def add_budget_flags(p):
        p.add_argument("--max-nodes", type=int, required=True, dest="max_nodes",
                       help="search node cap")
        p.add_argument("--max-seconds", type=float, dest="max_seconds",
                       help="optional wall-clock cap")
        p.add_argument("--emit-certificate", dest="emit_certificate", metavar="PATH",
                       help="write the good coloring certificate here when one exists")
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for compatibility; the search always runs "
                       "single-threaded, so results and node counts do not "
                       "depend on this value")

    p_f = orc_sub.add_parser("f", help="clique-free extremal min degree")
    p_f.add_argument("--t", type=int, required=True)
    p_f.add_argument("--j", type=int, required=True)
    p_f.add_argument("--m", type=int, required=True)
    add_budget_flags(p_f)
    p_f.set_defaults(func=cmd_oracle_f)

    p_star = orc_sub.add_parser("star", help="m_j(K_m, K_{1,n}) by degree threshold")
    p_star.add_argument("--j", type=int, required=True)
    p_star.add_argument("--m", type=int, required=True)
    p_star.add_argument("--n", type=int, required=True)
    p_star.add_argument("--tmax", type=int, required=True)
    add_budget_flags(p_star)
    p_star.set_defaults(func=cmd_oracle_star)

    p_gen = orc_sub.add_parser("generic", help="m_j(H, G) by exhaustive coloring search")
    p_gen.add_argument("--red", required=True, help="red pattern H")
    p_gen.add_argument("--blue", required=True, help="blue pattern G")
    p_gen.add_argument("--j", type=int, required=True)
    p_gen.add_argument("--tmax", type=int, required=True)
    add_budget_flags(p_gen)
    p_gen.set_defaults(func=cmd_oracle_generic)

    p_tab = sub.add_parser("table", help="sweep (j, m, n) and print a table")
    p_tab.add_argument("--j", required=True, help="range, e.g. 3..6 or 4")
    p_tab.add_argument("--m", required=True, help="range")
    p_tab.add_argument("--n", required=True, help="range")
    p_tab.add_argument("--format", choices=["text", "tsv", "json-lines"],
                       default="text")
    p_tab.add_argument("--columns", default="lower,upper,exact,provenance",
                       help="comma-separated subset of "
                       "lower,upper,exact,oracle,provenance")
    p_tab.add_argument("--max-nodes", type=int, dest="max_nodes",
                       help="per-row node cap (required by the oracle column)")
    p_tab.add_argument("--max-seconds", type=float, dest="max_seconds")
    p_tab.add_argument("--tmax", type=int,
                       help="oracle probe bound (default: the upper bound)")
    p_tab.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MultiramseyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
