"""Command-line front end: ``peisert report | table1 | verify | export``.

Exit codes: 0 when every check passes, 1 on a verification mismatch, 2 on a
usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import graph as gr
from .ring import ValidationError, is_prime
from .verify import SUITES, TABLE1, format_check, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _validate(p: int, alpha: int) -> None:
    if not is_prime(p) or p % 8 != 1:
        raise ValidationError(f"p must be a prime ≡ 1 (mod 8), got {p}")
    if alpha < 1:
        raise ValidationError(f"alpha must be a positive integer, got {alpha}")


class _Timer:
    def __init__(self):
        self.ms: dict[str, int] = {}

    def run(self, key, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        self.ms[key] = round(1000 * (time.perf_counter() - t0))
        return out


def build_report(p: int, alpha: int = 1, skip_brute_k4: bool = False,
                 workers: int = 1) -> tuple[dict, bool]:
    """The report document and whether all of its internal equalities hold."""
    _validate(p, alpha)
    timer = _Timer()
    graph = timer.run("build", gr.build_graph, p, alpha)
    inputs = timer.run("character_sums", gr.k4_inputs, p, alpha)
    k3f = gr.k3_formula(p, alpha)
    k3b = timer.run("k3_brute", gr.k3_brute, graph)
    k4f = timer.run("k4_formula", gr.k4_closed_form, p, alpha, inputs["rho"],
                    inputs["xi"], inputs["m3"], inputs["m5"])
    k4b = None if skip_brute_k4 else timer.run("k4_brute", gr.k4_brute, graph,
                                               workers=workers)
    q = graph.n
    doc = {
        "q": q,
        "p": p,
        "alpha": alpha,
        "generator": graph.group.g,
        "rho": inputs["rho"].to_json(),
        "xi": inputs["xi"].to_json(),
        "m3": inputs["m3"].to_json(),
        "m5": inputs["m5"].to_json(),
        "k3": {"formula": k3f, "brute": k3b},
        "k4": {"formula": k4f, "brute": k4b},
        "timings_ms": timer.ms,
    }
    ok = k3f == k3b and (k4b is None or k4b == k4f)
    if q in TABLE1:
        row = TABLE1[q]
        ok = ok and inputs["rho"] == row["rho"] and inputs["xi"] == row["rho"] \
            and inputs["m3"] == row["m3"] and inputs["m5"] == row["m5"] \
            and k4f == row["k4"]
    return doc, ok


def table1_rows() -> list[tuple[int, list[tuple[str, object, bool]]]]:
    """Recompute every reference cell: (q, [(label, value, matches), ...])."""
    rows = []
    for q, row in TABLE1.items():
        p, alpha = row["p"], row["alpha"]
        v = gr.k4_inputs(p, alpha)
        k4 = gr.k4_closed_form(p, alpha, v["rho"], v["xi"], v["m3"], v["m5"])
        cells = [
            ("rho=xi", v["rho"], v["rho"] == row["rho"] and v["xi"] == row["rho"]),
            ("M3", v["m3"], v["m3"] == row["m3"]),
            ("M5", v["m5"], v["m5"] == row["m5"]),
            ("k4", k4, k4 == row["k4"]),
        ]
        rows.append((q, cells))
    return rows


def cmd_report(args) -> int:
    doc, ok = build_report(args.p, args.alpha, args.skip_brute_k4, args.workers)
    print(json.dumps(doc, indent=2))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_table1(args) -> int:
    ok = True
    for q, cells in table1_rows():
        parts = []
        for label, value, match in cells:
            parts.append(f"{label}={value} {'PASS' if match else 'FAIL'}")
            ok = ok and match
        print(f"q={q:<4d} " + "  ".join(parts))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    _validate(args.p, args.alpha)
    checks = run_suite(args.suite, args.p, args.alpha)
    for c in checks:
        print(format_check(c))
    failed = sum(not c.passed for c in checks)
    flagged = sum(c.flagged for c in checks)
    print(f"SUMMARY suite={args.suite} checks={len(checks)} failed={failed} "
          f"flagged={flagged}")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def cmd_export(args) -> int:
    _validate(args.p, args.alpha)
    g = gr.build_graph(args.p, args.alpha, doubled=args.double)
    data = gr.export_edgelist(g, args.format)
    if args.out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"wrote {gr.edge_count(g)} edges on {g.n} vertices to {args.out}",
              file=sys.stderr)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peisert",
        description="Clique counts and character sums for Peisert-like graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def modulus(sp, alpha_default=1):
        sp.add_argument("--p", type=int, required=True, help="prime p ≡ 1 (mod 8)")
        sp.add_argument("--alpha", type=int, default=alpha_default,
                        help="exponent of p (default 1)")

    sp = sub.add_parser("report", help="JSON report for G*(p^alpha)")
    modulus(sp)
    sp.add_argument("--skip-brute-k4", action="store_true",
                    help="skip the 4-clique census")
    sp.add_argument("--workers", type=int, default=1,
                    help="processes for the 4-clique census")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("table1", help="recompute the reference table of q, rho, M3, M5, k4")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("verify", help="run a named invariant suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    modulus(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write the edge list of G*(n)")
    modulus(sp)
    sp.add_argument("--double", action="store_true", help="use n = 2 p^alpha")
    sp.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    sp.add_argument("--out", default=None, help="output path (default: stdout)")
    sp.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"peisert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
