"""Command-line entry point: ``largecycles <command> ...`` or ``python -m largecycles``.

Exit codes: 0 completed, 1 error, 2 counterexample found, 3 refuted sharpness cell.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence, TextIO

from .cycles import longest_cycle, remainder_params
from .families import ClosedFormMismatch, FamilySpec, build_family, exact_params, predict_params
from .graph import CapacityError, Graph
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .harness import HuntJob, hunt, sharpness_sweep, valid_lambdas
from .params import graph_params
from .registry import MODES, RegistryError, Verdict, analyze, evaluate, lookup
from .sharpness import Status

EXIT_OK, EXIT_ERROR, EXIT_COUNTEREXAMPLE, EXIT_REFUTED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # argparse would exit with 2, which here means "counterexample found"
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_graphs(path: str, stdin: TextIO) -> Iterator[tuple[int, Graph]]:
    fh = stdin if path == "-" else open(path, encoding="ascii")
    try:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line == ">>graph6<<":
                continue
            try:
                yield lineno, graph6_decode(line)
            except Graph6Error as e:
                raise Graph6Error(f"line {lineno}: {e}", e.offset) from None
    finally:
        if fh is not stdin:
            fh.close()


def _json_num(x):
    return "inf" if x == float("inf") else x


def cmd_params(args, out: TextIO, stdin: TextIO) -> int:
    for _, g in _read_graphs(args.file, stdin):
        p = graph_params(g)
        cyc = longest_cycle(g)
        c_bar, p_bar = remainder_params(g, cyc.vertices)
        row = {"graph6": graph6_encode(g), "n": p.n, "delta": p.delta, "kappa": p.kappa,
               "alpha": p.alpha, "sigma": [_json_num(s) for s in p.sigma], "c": cyc.order,
               "c_bar": c_bar, "p_bar": p_bar}
        out.write(json.dumps(row) + "\n")
    return EXIT_OK


def cmd_family(args, out: TextIO, stdin: TextIO) -> int:
    spec = FamilySpec(args.m, args.t)
    if args.emit:
        out.write(graph6_encode(build_family(spec)) + "\n")
        return EXIT_OK
    pred, exact = predict_params(spec), exact_params(spec)
    out.write(f"{spec.label()}\n{'field':<8}{'predicted':>10}{'computed':>10}\n")
    ok = True
    for name in ("n", "delta", "kappa", "c", "c_bar", "p_bar"):
        a, b = getattr(pred, name), getattr(exact, name)
        ok &= a == b
        out.write(f"{name:<8}{a:>10}{b:>10}{'' if a == b else '  MISMATCH'}\n")
    if not ok:
        raise ClosedFormMismatch(f"{spec.label()}: closed forms disagree with the solvers")
    return EXIT_OK


def cmd_check(args, out: TextIO, stdin: TextIO) -> int:
    s = lookup(args.stmt)
    fixed = None if args.lam == "all" else int(args.lam)
    found = False
    for _, g in _read_graphs(args.file, stdin):
        a = analyze(g, args.limit)
        lams = valid_lambdas(a.params.delta, None) if fixed is None else [fixed]
        for lam in lams:
            r = evaluate(a, s, lam, args.mode)
            found |= r.verdict is Verdict.COUNTEREXAMPLE
            out.write(json.dumps(r.to_json()) + "\n")
    return EXIT_COUNTEREXAMPLE if found else EXIT_OK


def cmd_sharpness(args, out: TextIO, stdin: TextIO) -> int:
    props = None if args.prop == "all" else [int(args.prop)]
    if props and not 1 <= props[0] <= 18:
        raise ValueError("--prop must be 1..18 or all")
    report = sharpness_sweep(args.delta_max, props)
    out.write(report.table() + "\n")
    counts = report.counts
    out.write(" ".join(f"{s.value}={counts[s.value]}" for s in Status) + "\n")
    return EXIT_REFUTED if report.refuted else EXIT_OK


def cmd_hunt(args, out: TextIO, stdin: TextIO) -> int:
    job = HuntJob(statements=tuple(args.stmt.split(",")), n_max=args.n_max, n_min=args.n_min,
                  lam=args.lam, mode=args.mode, source=args.source, jobs=args.jobs,
                  out=args.out, limit=args.limit)
    summary = hunt(job)
    out.write(summary.table() + "\n")
    out.write(f"records written: {len(summary.records)} -> {args.out}\n")
    return EXIT_COUNTEREXAMPLE if summary.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="largecycles", description="Large-cycle statement checker and counterexample hunter.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("params", help="graph parameters for graph6 lines")
    q.add_argument("file", help="graph6 file, or - for stdin")
    q.set_defaults(run=cmd_params)

    q = sub.add_parser("family", help="(t+1)K_m + K_t: predicted vs computed parameters")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--emit", action="store_true", help="print the graph6 string instead")
    q.set_defaults(run=cmd_family)

    q = sub.add_parser("check", help="evaluate one statement on graph6 lines")
    q.add_argument("--stmt", required=True)
    q.add_argument("--lambda", dest="lam", required=True, help="integer or 'all'")
    q.add_argument("--mode", choices=MODES, default="forall")
    q.add_argument("--limit", type=int, default=10_000, help="longest-cycle sets per graph")
    q.add_argument("file", help="graph6 file, or - for stdin")
    q.set_defaults(run=cmd_check)

    q = sub.add_parser("sharpness", help="verify sharpness propositions on witness families")
    q.add_argument("--prop", required=True, help="1..18 or all")
    q.add_argument("--delta-max", type=int, required=True)
    q.set_defaults(run=cmd_sharpness)

    q = sub.add_parser("hunt", help="search a graph space for counterexamples")
    q.add_argument("--stmt", required=True, help="ids, comma separated; also theorems, conjectures, all")
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--n-min", type=int, default=1)
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--source", help="graph6 file instead of the built-in enumerator")
    q.add_argument("--lambda", dest="lam", type=int, help="fixed lambda (default: all valid)")
    q.add_argument("--mode", choices=MODES, default="forall")
    q.add_argument("--limit", type=int, default=10_000, help="longest-cycle sets per graph")
    q.add_argument("--out", required=True)
    q.set_defaults(run=cmd_hunt)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.run(args, out, stdin or sys.stdin)
    except (ValueError, KeyError, OSError, CapacityError, RegistryError, ClosedFormMismatch) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
