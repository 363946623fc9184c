"""``betti`` command: Betti tables of R/I_r(G) by closed form, by Hochster's formula, or both.

Exit codes: 0 success or match, 1 usage error, 2 computation refused, 3 mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import formulas as F
from .errors import ComputationRefused
from .graphspec import EdgeListError, FamilySpec, FileSpec, GraphSpec, JoinSpec, SpecError, parse_spec
from .hochster import DEFAULT_CAP, betti_hochster, default_threads
from .homology import QQ, FieldSpec
from .table import BettiTable, projective_dimension, regularity, render_table, table_diff, trivial_table

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_MISMATCH = 0, 1, 2, 3


def family_closed_form(spec: FamilySpec, r: int) -> BettiTable | None:
    """Closed-form table for a named family, or None if no formula covers (spec, r)."""
    a = spec.args
    if spec.name == "complete":
        return F.betti_complete(a[0], r)
    if spec.name == "empty":
        return F.betti_multipartite([a[0]], r) if a[0] else trivial_table(0, r)
    if spec.name == "multipartite":
        return F.betti_multipartite(list(a), r)
    if spec.name == "star":
        return F.betti_star(a[0], r)
    if spec.name == "cycle" and r <= a[0] - 1:
        return F.betti_cycle(a[0], r)
    if spec.name == "wheel" and r <= a[0] - 2:
        return F.betti_wheel(a[0], r)
    return None


def closed_form(spec: GraphSpec, r: int, field: FieldSpec = QQ, *, oracle_leaves: bool = True,
                threads: int = 1, force: bool = False) -> BettiTable | None:
    """Formula-side table: family formulas, composed through joins.

    A join operand without a formula of its own is filled in by the oracle
    when ``oracle_leaves`` is set, so any join gets a composed table.
    """
    if isinstance(spec, FamilySpec):
        return family_closed_form(spec, r)
    if isinstance(spec, FileSpec):
        return None
    parts = []
    for side in (spec.left, spec.right):
        t = closed_form(side, r, field, oracle_leaves=oracle_leaves, threads=threads, force=force)
        if t is None:
            if not oracle_leaves:
                return None
            t = betti_hochster(side.build(), r, field, force=force, threads=threads)
        parts.append(t)
    t1, t2 = parts
    return F.betti_join(t1, t1.ambient_n, t2, t2.ambient_n, r)


@dataclass
class CrosscheckReport:
    spec: str
    r: int
    oracle: BettiTable
    formula: BettiTable | None
    diffs: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.formula is None:
            return "ORACLE_ONLY"
        return "MISMATCH" if self.diffs else "MATCH"

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if self.status == "MISMATCH" else EXIT_OK

    def lines(self) -> list[str]:
        head = f"{self.spec} r={self.r}:"
        if self.status == "ORACLE_ONLY":
            return [f"{head} oracle only (no closed form)"]
        if self.status == "MATCH":
            nonzero = len(self.oracle.entries) - 1
            return [f"{head} MATCH ({nonzero} entries beyond beta_0,0)"]
        out = [f"{head} MISMATCH ({len(self.diffs)} differing entries)"]
        for (i, j), o, f in self.diffs:
            out.append(f"  beta_{i},{j}: oracle={o} formula={f}")
        return out


def run_crosscheck(spec: GraphSpec | str, r: int, field: FieldSpec = QQ, *, threads: int = 1,
                   force: bool = False, cap: int = DEFAULT_CAP) -> CrosscheckReport:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    oracle = betti_hochster(spec.build(), r, field, cap=cap, force=force, threads=threads)
    formula = closed_form(spec, r, field, threads=threads, force=force)
    diffs = table_diff(oracle, formula) if formula is not None else []
    return CrosscheckReport(str(spec), r, oracle, formula, diffs)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="betti", description="Graded Betti tables of R/I_r(G) for the connectedness hypergraph ideal.")
    p.add_argument("--graph", required=True, help="graph spec, e.g. complete:6, multipartite:6,6, join(cycle:5,complete:1), file:PATH")
    p.add_argument("--r", type=int, required=True, help="connectedness parameter r >= 1")
    p.add_argument("--method", choices=("formula", "hochster", "both"), default="hochster")
    p.add_argument("--field", default="q", help="q (rationals) or fp:P")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the table here instead of stdout")
    p.add_argument("--force", action="store_true", help=f"lift the {DEFAULT_CAP}-vertex oracle cap")
    p.add_argument("--threads", type=int, default=None, help="oracle worker processes (default: available CPUs)")
    return p


def _emit(table: BettiTable, args) -> None:
    text = render_table(table, args.format)
    if args.format == "text":
        text += f"regularity {regularity(table)}, projective dimension {projective_dimension(table)}\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        spec = parse_spec(args.graph)
        field = FieldSpec.parse(args.field)
        if args.r < 1:
            raise ValueError("--r must be >= 1")
        threads = args.threads if args.threads is not None else default_threads()
        if threads < 1:
            raise ValueError("--threads must be >= 1")
    except (SpecError, EdgeListError, ValueError, OSError) as e:
        print(f"betti: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.method == "formula":
            table = closed_form(spec, args.r, field, threads=threads, force=args.force)
            if table is None:
                print(f"betti: error: no closed form for {spec} at r={args.r}; use --method hochster",
                      file=sys.stderr)
                return EXIT_USAGE
            _emit(table, args)
            return EXIT_OK
        if args.method == "hochster":
            _emit(betti_hochster(spec.build(), args.r, field, force=args.force, threads=threads), args)
            return EXIT_OK
        report = run_crosscheck(spec, args.r, field, threads=threads, force=args.force)
    except ComputationRefused as e:
        print(f"betti: refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (EdgeListError, ValueError, OSError) as e:
        print(f"betti: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(report.oracle, args)
    for line in report.lines():
        print(line, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
