"""Command line front end.

    nearvec check-pair Q M
    nearvec table Q M [--format ascii|csv|json]
    nearvec triple Q M
    nearvec count N [K]
    nearvec gen Q M [FILE] [--vector "(1, x)" ...] [--format json|text]
    nearvec span Q M [FILE] [--vector ...] [--format json|text]
    nearvec oracle-verify Q M [FILE] [--vector ...] [--what gen|span|both]

Exit status: 0 success, 1 oracle mismatch, 2 bad input.  The oracle cap
can be raised with the ``ORACLE_CAP`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import oracle
from .dickson import (
    cayley_table,
    dickson_build,
    dickson_pair_failures,
    find_nd_triple,
    table_ascii,
    table_csv,
    table_json,
)
from .errors import NearvecError
from .gen import ege
from .span import span_of, subspace_count
from .vectors import NfMatrix, NfVector

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


@dataclass
class JobSpec:
    command: str
    pair: tuple[int, int] | None = None
    path: str | None = None
    vectors: list[str] = field(default_factory=list)
    fmt: str = "json"
    extra: dict = field(default_factory=dict)


def _oracle_caps() -> tuple[int, int]:
    raw = os.environ.get("ORACLE_CAP")
    if raw is None:
        return oracle.DEFAULT_CAP, oracle.SPAN_CAP
    cap = int(raw)
    return cap, cap


def _load_matrix(job: JobSpec, ctx) -> NfMatrix:
    rows: list[NfVector] = []
    if job.path:
        with open(job.path) as fh:
            rows += NfMatrix.parse(ctx, fh.read()).rows
    rows += [NfVector.parse(ctx, v) for v in job.vectors]
    if not rows:
        raise ValueError("no input vectors: give a matrix file or --vector")
    return NfMatrix.from_rows(ctx, rows)


def _render_gen(basis, cert, fmt: str) -> str:
    if fmt == "text":
        lines = [f"rank {basis.rank}" + (" (field mode)" if basis.field_mode else "")]
        lines += [u.render() for u in basis.rows]
        return "\n".join(lines)
    out = basis.to_json()
    out["certificate"] = cert.to_json(basis.ctx)
    return json.dumps(out, indent=2)


def _render_span(res, fmt: str) -> str:
    if fmt == "text":
        if res.field_mode:
            lines = [f"dimension {res.dimension} (field mode)"]
            lines += [u.render() for u in res.basis.rows]
        else:
            lines = [f"dimension {res.dimension}",
                     "mask " + " ".join(str(i) for i in sorted(res.mask.included))]
        return "\n".join(lines)
    return json.dumps(res.to_json(), indent=2)


def _verify(job: JobSpec, ctx, M: NfMatrix) -> tuple[int, str]:
    cap, span_cap = _oracle_caps()
    rows = [tuple(v) for v in M.rows]
    what = job.extra.get("what", "both")
    report, status = [], EXIT_OK
    checks = []
    if what in ("gen", "both"):
        basis, _ = ege(M)
        checks.append(("gen", oracle.enumerate_basis(basis, cap=cap),
                       oracle.gen_bruteforce(ctx, rows, M.n, cap=cap)))
    if what in ("span", "both"):
        res = span_of(M)
        engine = (oracle.enumerate_basis(res.basis, cap=cap) if res.field_mode
                  else oracle.enumerate_basis(res.mask, ctx, cap=cap))
        checks.append(("span", engine, oracle.span_bruteforce(ctx, rows, M.n, cap=span_cap)))
    for name, engine, truth in checks:
        if engine == truth:
            report.append(f"{name}: MATCH ({len(truth)} vectors)")
            continue
        status = EXIT_MISMATCH
        only_e = sorted(set(engine.keys.tolist()) - set(truth.keys.tolist()))
        only_o = sorted(set(truth.keys.tolist()) - set(engine.keys.tolist()))
        report.append(f"{name}: MISMATCH (engine {len(engine)}, oracle {len(truth)})")
        for label, keys in (("engine only", only_e), ("oracle only", only_o)):
            for row in oracle.decode(ctx, M.n, keys[:20]).tolist():
                report.append(f"  {label}: {NfVector(ctx, row).render()}")
    return status, "\n".join(report)


def run(job: JobSpec) -> tuple[int, str]:
    """Execute one job; returns ``(exit status, output text)``."""
    if job.command == "count":
        n, k = job.extra["n"], job.extra.get("k")
        return EXIT_OK, str(subspace_count(n, k))
    q, m = job.pair
    if job.command == "check-pair":
        reasons = dickson_pair_failures(q, m)
        if reasons:
            return EXIT_OK, "false: " + "; ".join(reasons)
        return EXIT_OK, "true"
    ctx = dickson_build(q, m)
    if job.command == "table":
        tab = cayley_table(ctx)
        render = {"ascii": table_ascii, "csv": table_csv, "json": table_json}[job.fmt]
        return EXIT_OK, render(ctx, tab).rstrip("\n")
    if job.command == "triple":
        t = find_nd_triple(ctx)
        return EXIT_OK, json.dumps({
            "pair": [q, m],
            "alpha": ctx.render(t.alpha), "beta": ctx.render(t.beta), "lambda": ctx.render(t.lam),
        })
    M = _load_matrix(job, ctx)
    if job.command == "gen":
        basis, cert = ege(M)
        return EXIT_OK, _render_gen(basis, cert, job.fmt)
    if job.command == "span":
        return EXIT_OK, _render_span(span_of(M), job.fmt)
    if job.command == "oracle-verify":
        return _verify(job, ctx, M)
    raise ValueError(f"unknown command {job.command!r}")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nearvec", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def with_pair(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("q", type=int)
        sp.add_argument("m", type=int)
        return sp

    with_pair("check-pair", "test the Dickson pair conditions")
    sp = with_pair("table", "print the multiplication table of DN(q, m)")
    sp.add_argument("--format", dest="fmt", choices=["ascii", "csv", "json"], default="ascii")
    with_pair("triple", "print the canonical right-distributivity failure")
    sp = sub.add_parser("count", help="number of subspaces of R^n (of dimension k)")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int, nargs="?")
    for name, help in (("gen", "smallest R-subgroup of the input vectors"),
                       ("span", "smallest subspace of the input vectors"),
                       ("oracle-verify", "compare the engines against brute force")):
        sp = with_pair(name, help)
        sp.add_argument("path", nargs="?", help="matrix file, one vector literal per line")
        sp.add_argument("--vector", dest="vectors", action="append", default=[],
                        help='inline vector such as "(1, x)"; repeatable')
        if name == "oracle-verify":
            sp.add_argument("--what", choices=["gen", "span", "both"], default="both")
        else:
            sp.add_argument("--format", dest="fmt", choices=["json", "text"], default="json")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    extra = {}
    if args.command == "count":
        extra = {"n": args.n, "k": args.k}
    if args.command == "oracle-verify":
        extra = {"what": args.what}
    job = JobSpec(
        command=args.command,
        pair=(args.q, args.m) if hasattr(args, "q") else None,
        path=getattr(args, "path", None),
        vectors=getattr(args, "vectors", []),
        fmt=getattr(args, "fmt", "json"),
        extra=extra,
    )
    try:
        status, text = run(job)
    except NearvecError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error[input]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
