"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .equations import MERSENNE61, equation_set
from .partition import StableQ
from .table import JTable, TableEntry, full_table, table_entry, table_to_tsv
from .verify import completeness_sweep, verify_cell

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _render_entry_pretty(q: StableQ, e: TableEntry) -> str:
    ch = e.u_chains
    middle = "-" if ch.middle is None else str(ch.middle)
    return "\n".join(
        [
            f"Q = {q.partition}, (k, l) = ({e.k}, {e.l})",
            f"partition: {e.partition}",
            f"case:      {e.case_path.value}",
            f"types:     {','.join(sorted(e.types)) or '-'}",
            f"burge:     {e.burge}",
            f"coranks:   {','.join(map(str, e.coranks.values))}",
            f"u-chains:  top={ch.top} middle={middle} bottom={ch.bottom}",
        ]
    )


def _render_table_pretty(table) -> str:
    q = table.q
    cells = [[str(e.partition) for e in row] for row in table.entries]
    width = max(len(c) for row in cells for c in row)
    header = "k\\l " + " ".join(f"{l:>{width}}" for l in range(1, q.u - q.r + 1))
    lines = [f"Q = {q.partition}", header]
    for k, row in enumerate(cells, start=1):
        lines.append(f"{k:>3} " + " ".join(f"{c:>{width}}" for c in row))
    return "\n".join(lines)


def cmd_table(q: StableQ, fmt: str) -> str:
    table = full_table(q)
    if fmt == "json":
        return json.dumps(table.to_json())
    if fmt == "tsv":
        return table_to_tsv(table).rstrip("\n")
    return _render_table_pretty(table)


def cmd_entry(q: StableQ, k: int, l: int, fmt: str) -> str:
    e = table_entry(q, k, l)
    if fmt == "json":
        return json.dumps({"u": q.u, "r": q.r, **e.to_json()})
    if fmt == "tsv":
        return table_to_tsv(JTable(q, ((e,),))).rstrip("\n")
    return _render_entry_pretty(q, e)


def cmd_equations(q: StableQ, k: int, l: int) -> str:
    return "\n".join(str(g) for g in equation_set(q, k, l))


def cmd_verify(q: StableQ, trials: int, seed: int, prime: int, samples: int, out=None) -> int:
    """Print a per-cell report and return the number of failures."""
    out = out or sys.stdout
    failures = 0
    table = full_table(q)
    for k, l in q.indices():
        rep = verify_cell(q, k, l, trials=trials, seed=seed, p=prime)
        status = "ok" if rep.ok else "FAIL"
        print(f"cell ({k},{l}) {rep.partition}: {status}", file=out)
        for msg in rep.failures:
            print(f"  {msg}", file=out)
        failures += len(rep.failures)
    sweep = completeness_sweep(q, samples=samples, seed=seed, p=prime, table=table)
    hit = sum(sweep.hits.values())
    print(
        f"sweep: {samples} random points, {hit} with a table type, "
        f"{len(sweep.hits)} of {len(table.cells())} cells hit, {len(sweep.violations)} violations",
        file=out,
    )
    for i, k, l in sweep.violations:
        print(f"  sample {i}: type of cell ({k},{l}) but its equations do not vanish", file=out)
    failures += len(sweep.violations)
    print(f"failures: {failures}", file=out)
    return failures


def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordantable",
        description="Jordan types whose generic commuting nilpotent type is Q = (u, u-r).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def qargs(p, cell=False):
        p.add_argument("u", type=int)
        p.add_argument("r", type=int)
        if cell:
            p.add_argument("k", type=int)
            p.add_argument("l", type=int)

    fmt = dict(choices=("pretty", "json", "tsv"), default="pretty")

    p = sub.add_parser("table", help="the full (r-1) x (u-r) table")
    qargs(p)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("entry", help="one table cell in detail")
    qargs(p, cell=True)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("equations", help="generators of the cell's locus, one per line")
    qargs(p, cell=True)

    p = sub.add_parser("verify", help="check every cell against the matrix oracles")
    qargs(p)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=MERSENNE61)
    p.add_argument("--samples", type=int, default=1000, help="random points in the completeness sweep")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        q = StableQ(args.u, args.r)
        if args.command in ("entry", "equations"):
            q.check_index(args.k, args.l)
        if args.command == "verify":
            if args.trials < 1 or args.samples < 0 or args.seed < 0:
                raise ValueError("trials must be positive; samples and seed non-negative")
            if not (1 << 31 <= args.prime < 1 << 63) or (args.prime != MERSENNE61 and not _is_prime(args.prime)):
                raise ValueError(f"--prime must be a prime in [2^31, 2^63), got {args.prime}")
    except ValueError as exc:
        parser.error(str(exc))

    if args.command == "table":
        print(cmd_table(q, args.format))
    elif args.command == "entry":
        print(cmd_entry(q, args.k, args.l, args.format))
    elif args.command == "equations":
        text = cmd_equations(q, args.k, args.l)
        if text:
            print(text)
    else:
        return EXIT_FAIL if cmd_verify(q, args.trials, args.seed, args.prime, args.samples) else EXIT_OK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
