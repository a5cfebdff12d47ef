"""Command-line interface.

Subcommands: cover, msearch, sg, osg, tables, diagram, pp, verify, serve.
Every query command takes --format text|json.  Exit codes: 0 success,
1 negative domain answer (e.g. not a stride generator), 2 bad input,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import formulas, search
from .core import Basis, cover3
from .jsonio import analysis_json
from .stride import classify, sg_series, underlying_sg
from .svg import render_diagram
from .threads import diagram as make_diagram

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2
EXIT_MISMATCH = 3


@dataclass
class OutputEnvelope:
    format: str
    payload: object  # str for text, JSON-ready dict/list otherwise

    def emit(self, out=sys.stdout):
        if self.format == "json":
            json.dump(self.payload, out, indent=2)
            out.write("\n")
        else:
            out.write(str(self.payload).rstrip("\n") + "\n")


def _basis(args) -> Basis:
    return Basis(a2=args.a2, a3=args.a3)


def _sg_summary(sg) -> str:
    marks = ", ".join(
        f"{b.y}{'*' if b.fundamental else ''}"
        f" ({'canonical' if b.order is None else f'order {b.order}'})"
        for b in sg.breaks
    )
    kind = "canonical" if sg.canonical else "non-canonical"
    return f"SG({sg.n},{sg.p}) {kind}, breaks: {marks}"


def cmd_cover(args) -> int:
    basis = _basis(args)
    cr = cover3(basis, args.s)
    if args.format == "json":
        payload = analysis_json(basis, max(args.s - max(cr.k, 0), 1), s=args.s)
        OutputEnvelope("json", payload).emit()
        return EXIT_OK
    line = f"X={cr.X} k={cr.k} Y={cr.Y}"
    if not cr.trivial:
        sg, _ = underlying_sg(basis, args.s)
        line += f" SG({sg.n},{sg.p})"
    OutputEnvelope("text", line).emit()
    return EXIT_OK


def cmd_msearch(args) -> int:
    m, bases, report = search.brute_m3(args.s, jobs=args.jobs, allow_large=args.allow_large)
    if args.format == "json":
        payload = {
            "s": args.s,
            "M": m,
            "bases": [{"a2": b.a2, "a3": b.a3} for b in bases],
            "examined": report.examined,
            "pruned": report.pruned,
            "elapsed": round(report.elapsed, 3),
        }
        OutputEnvelope("json", payload).emit()
    else:
        sets = " ".join(str(b) for b in bases)
        OutputEnvelope("text", f"M(3,{args.s}) = {m} at {sets}").emit()
    return EXIT_OK


def cmd_sg(args) -> int:
    basis = _basis(args)
    if args.series:
        series = sg_series(basis)
        if args.format == "json":
            OutputEnvelope("json", [analysis_json(basis, sg.n) for sg in series]).emit()
        else:
            OutputEnvelope("text", "\n".join(f"{basis} = {_sg_summary(sg)}" for sg in series)).emit()
        return EXIT_OK
    if args.n is None:
        print("error: provide -n or --series", file=sys.stderr)
        return EXIT_BAD_INPUT
    sg = classify(basis, args.n)
    if args.format == "json":
        OutputEnvelope("json", analysis_json(basis, args.n)).emit()
        return EXIT_OK if sg is not None else EXIT_NEGATIVE
    if sg is None:
        OutputEnvelope("text", f"{basis} is not a stride generator at n={args.n}").emit()
        return EXIT_NEGATIVE
    OutputEnvelope("text", f"{basis} = {_sg_summary(sg)}").emit()
    return EXIT_OK


def cmd_osg(args) -> int:
    if args.sg1:
        row = formulas.sg1_1(args.n)
        rows = [] if row is None else [row]
        label = "SG1"
    elif args.p == 0:
        rows, label = formulas.osg0(args.n), "OSG"
    else:
        rows, label = [formulas.osg1(args.n)], "OSG"
    if args.format == "json":
        OutputEnvelope(
            "json", [{"n": r.n, "a2": r.a2, "a3": r.a3, "y": r.y} for r in rows]
        ).emit()
        return EXIT_OK if rows else EXIT_NEGATIVE
    if not rows:
        OutputEnvelope("text", f"no {label}({args.n},{args.p}) exists").emit()
        return EXIT_NEGATIVE
    OutputEnvelope(
        "text",
        "\n".join(
            f"{label}({r.n},{args.p}) = {{1,{r.a2},{r.a3}}} first break {r.y}" for r in rows
        ),
    ).emit()
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.scan:
        k_range = None
        if args.k_lo is not None or args.k_hi is not None:
            k_range = (args.k_lo or 0, args.k_hi if args.k_hi is not None else args.s - 1)
        rows, top = search.scan_osg1_cover(args.s, k_range)
        if args.format == "json":
            payload = {
                "rows": [vars(r) for r in rows],
                "best": vars(top),
            }
            OutputEnvelope("json", payload).emit()
        else:
            lines = [
                f"k={r.k} n={r.n} {{1,{r.a2},{r.a3}}} Y={r.Y} (k+1)a3={r.complete} X={r.X}"
                + (" <- optimum" if r == top else "")
                for r in rows
            ]
            OutputEnvelope("text", "\n".join(lines)).emit()
        return EXIT_OK
    if args.maximal:
        a2, a3, x = formulas.maximal_set(args.s)
        if args.format == "json":
            OutputEnvelope("json", {"s": args.s, "a2": a2, "a3": a3, "X_opt": x}).emit()
        else:
            OutputEnvelope("text", f"s={args.s}: {{1,{a2},{a3}}} X_opt={x}").emit()
        return EXIT_OK
    row = formulas.mopt(args.s)
    if args.format == "json":
        OutputEnvelope("json", vars(row)).emit()
    else:
        OutputEnvelope(
            "text",
            f"s={row.s}: k_opt={row.k_opt} n_opt={row.n_opt} X_opt={row.x_opt}",
        ).emit()
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def cmd_diagram(args) -> int:
    basis = _basis(args)
    x_range = _parse_range(args.range) if args.range else (0, 2 * basis.a3)
    dia = make_diagram(basis, args.n, args.p, x_range)
    if args.svg:
        content = render_diagram(dia, scale=args.scale)
        try:
            if args.svg == "-":
                sys.stdout.write(content)
            else:
                with open(args.svg, "w") as fh:
                    fh.write(content)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
        return EXIT_OK
    if args.format == "json":
        OutputEnvelope("json", analysis_json(basis, args.n, x_range=x_range)).emit()
        return EXIT_OK
    lines = [f"{basis} n={args.n} p={args.p} range {x_range[0]}..{x_range[1]}"]
    for t in dia.threads:
        lines.append(f"T{t.i}({t.c2}): {t.start}..{t.end} len {t.length}")
    if dia.marks:
        lines.append("marks: " + " ".join(str(x) for x in dia.marks))
    OutputEnvelope("text", "\n".join(lines)).emit()
    return EXIT_OK


def cmd_pp(args) -> int:
    if args.range:
        lo, hi = _parse_range(args.range)
        values = {s: formulas.pp_bound(s) for s in range(lo, hi + 1)}
    elif args.s is not None:
        values = {args.s: formulas.pp_bound(args.s)}
    else:
        print("error: provide -s or --range", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.format == "json":
        OutputEnvelope(
            "json",
            {
                "values": [{"s": s, "pp": v} for s, v in values.items()],
                "limit": float(formulas.PP_LIMIT),
            },
        ).emit()
    else:
        lines = [f"pp({s}) = {v:.8f}" for s, v in values.items()]
        OutputEnvelope("text", "\n".join(lines)).emit()
    return EXIT_OK


def cmd_verify(args) -> int:
    report = search.verify_tables(args.tables, s_max=args.s_max, n_max=args.n_max, jobs=args.jobs)
    if args.format == "json":
        payload = {
            "selectors": args.tables,
            "passed": report.passed,
            "rows": [vars(r) for r in report.rows],
            "elapsed": round(report.elapsed, 3),
        }
        OutputEnvelope("json", payload).emit()
    else:
        lines = []
        for r in report.rows:
            status = "ok  " if r.ok else "FAIL"
            lines.append(f"[{status}] {r.table} {r.label}: expected {r.expected}, got {r.got}")
        n_ok = sum(r.ok for r in report.rows)
        lines.append(f"{n_ok}/{len(report.rows)} rows pass in {report.elapsed:.1f}s")
        OutputEnvelope("text", "\n".join(lines)).emit()
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_serve(args) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psp3", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("cover", help="exact cover C({1,a2,a3},3,s)")
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--a3", type=int, required=True)
    p.add_argument("-s", "--s", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("msearch", help="exhaustive M(3,s) with all maximal bases")
    p.add_argument("-s", "--s", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_msearch)

    p = sub.add_parser("sg", help="stride generator classification")
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--a3", type=int, required=True)
    p.add_argument("-n", type=int)
    p.add_argument("--series", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_sg)

    p = sub.add_parser("osg", help="closed-form optimal generators")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, choices=[0, 1], default=1)
    p.add_argument("--sg1", action="store_true", help="the one-shorter order-1 row")
    add_format(p)
    p.set_defaults(func=cmd_osg)

    p = sub.add_parser("tables", help="cover optima tables and the k-scan")
    p.add_argument("-s", "--s", type=int, required=True)
    p.add_argument("--maximal", action="store_true", help="maximal set row")
    p.add_argument("--scan", action="store_true", help="scan osg1(s-k) over k")
    p.add_argument("--k-lo", type=int)
    p.add_argument("--k-hi", type=int)
    add_format(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("diagram", help="thread diagram (text, json or svg)")
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--a3", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--range", help="LO:HI values to include")
    p.add_argument("--svg", help="write SVG to this path ('-' for stdout)")
    p.add_argument("--scale", type=int, default=6)
    add_format(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("pp", help="order bound pp(s)")
    p.add_argument("-s", "--s", type=int)
    p.add_argument("--range", help="LO:HI budgets")
    add_format(p)
    p.set_defaults(func=cmd_pp)

    p = sub.add_parser("verify", help="recompute and diff reference tables")
    p.add_argument(
        "tables",
        nargs="+",
        choices=["t700", "t103", "t105", "t501", "t502", "t503", "t101", "t102", "t300", "pp"],
    )
    p.add_argument("--s-max", type=int, default=30)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the local analysis service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=7311)
    p.set_defaults(func=cmd_serve)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
