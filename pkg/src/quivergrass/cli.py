"""Command-line interface: parsing grammars, JSON/DOT reports.

Grammar: quivers are "A<n>:<flags>" with one F/B flag per edge (the colon
and flags may be omitted for n = 1); representations are comma-separated
interval terms "[a,b]" or "[a,b]x<k>"; dimension vectors are comma-separated
integers.  All outputs are deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .degen import bongartz_data, degeneration_poset
from .grass import PoincarePoly, betti_oracle, betti_recursion
from .quiver import InternalCheckError, Interval, RepClass, TypeAQuiver
from .specialize import (
    check_degeneration,
    default_jobs,
    pbw_rep,
    verify_theorem,
)


class UsageError(ValueError):
    """Malformed command-line input; message carries the offending position."""


def parse_quiver(text: str) -> TypeAQuiver:
    match = re.fullmatch(r"A(\d+)(?::([FB]*))?", text)
    if match is None:
        for pos, ch in enumerate(text):
            if pos == 0 and ch != "A":
                raise UsageError(f"quiver string must start with 'A' (position {pos})")
            if pos >= 1 and not (ch.isdigit() or ch == ":" or ch in "FB"):
                raise UsageError(f"unexpected character {ch!r} in quiver string (position {pos})")
        raise UsageError(f"malformed quiver string {text!r}")
    n = int(match.group(1))
    flags = match.group(2) or ""
    if n < 1:
        raise UsageError("quiver needs at least one vertex")
    if len(flags) != n - 1:
        raise UsageError(
            f"A{n} needs {n - 1} orientation flags, got {len(flags)} (position {text.find(':') + 1})"
        )
    return TypeAQuiver(n, flags)


_TERM = re.compile(r"\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*(?:x\s*(\d+)\s*)?")


def parse_rep(text: str, q: TypeAQuiver) -> RepClass:
    if not text.strip():
        return RepClass.empty()
    pairs = []
    pos = 0
    while True:
        match = _TERM.match(text, pos)
        if match is None:
            raise UsageError(f"expected interval term at position {pos} of {text!r}")
        a, b = int(match.group(1)), int(match.group(2))
        k = int(match.group(3)) if match.group(3) else 1
        if k <= 0:
            raise UsageError(f"multiplicity must be positive at position {pos}")
        if not 1 <= a <= b <= q.n:
            raise UsageError(f"interval [{a},{b}] out of range for {q.label()} at position {pos}")
        pairs.append((Interval(a, b), k))
        pos = match.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise UsageError(f"expected ',' at position {pos} of {text!r}")
        pos += 1
    return RepClass.from_pairs(pairs)


def parse_vec(text: str, n: int) -> tuple[int, ...]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != n:
        raise UsageError(f"expected {n} comma-separated entries, got {len(parts)}")
    try:
        vec = tuple(int(part) for part in parts)
    except ValueError as exc:
        raise UsageError(f"non-integer entry in vector {text!r}") from exc
    if any(x < 0 for x in vec):
        raise UsageError("vector entries must be non-negative")
    return vec


def _poly_json(p: PoincarePoly) -> dict:
    return {"coefficients": list(p.coeffs), "pretty": p.pretty()}


def _emit(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _dot_of_poset(q: TypeAQuiver, poset) -> str:
    lines = ["digraph degeneration_poset {", "  rankdir=BT;"]
    for node in poset.nodes:
        label = node.text() or "0"
        lines.append(f'  "{label}";')
    for m, n in poset.covers:
        bd = bongartz_data(q, m, n)
        lines.append(
            f'  "{m.text() or "0"}" -> "{n.text() or "0"}" [label="({bd.x1},{bd.s1})"];'
        )
    lines.append("}")
    return "\n".join(lines)


def cmd_poset(args) -> int:
    q = parse_quiver(args.quiver)
    d = parse_vec(args.dim, q.n)
    poset = degeneration_poset(q, d)
    dot = _dot_of_poset(q, poset)
    payload = {
        "quiver": q.label(),
        "dim": list(d),
        "nodes": [m.text() for m in poset.nodes],
        "covers": [[m.text(), n.text()] for m, n in poset.covers],
        "dot": dot,
    }
    _emit(payload, args.json)
    if args.dot:
        if args.dot == "-":
            print(dot)
        else:
            with open(args.dot, "w", encoding="utf-8") as handle:
                handle.write(dot + "\n")
    return 0


def cmd_betti(args) -> int:
    q = parse_quiver(args.quiver)
    m = parse_rep(args.rep, q)
    e = parse_vec(args.sub, q.n)
    payload = {"quiver": q.label(), "rep": m.text(), "sub": list(e), "method": args.method}
    status = 0
    if args.method in ("recursion", "both"):
        payload["recursion"] = _poly_json(betti_recursion(q, m, e))
    if args.method in ("count", "both"):
        payload["count"] = _poly_json(betti_oracle(q, m, e))
    if args.method == "both":
        if payload["recursion"] == payload["count"]:
            payload["match"] = True
        else:
            payload["match"] = False
            status = 1
    key = "recursion" if args.method != "count" else "count"
    payload["coefficients"] = payload[key]["coefficients"]
    payload["pretty"] = payload[key]["pretty"]
    _emit(payload, args.json)
    return status


def cmd_strata(args) -> int:
    q = parse_quiver(args.quiver)
    m = parse_rep(args.m, q)
    n = parse_rep(args.n, q)
    e = parse_vec(args.sub, q.n)
    report = check_degeneration(q, m, n, e)
    if len(report.chain) != 1:
        raise UsageError(f"({m}, {n}) is not a cover; chain has {len(report.chain)} links")
    check = report.chain[0]
    payload = {
        "quiver": q.label(),
        "m": m.text(),
        "n": n.text(),
        "sub": list(e),
        "p_m": _poly_json(check.p_m),
        "p_n": _poly_json(check.p_n),
        "kernel": _poly_json(check.kernel),
        "monotone": check.monotone,
        "identity_ok": check.identity_ok,
        "records": [
            {
                "f": list(rec.f),
                "g": list(rec.g),
                "i": rec.i,
                "shift": rec.shift,
                "base": _poly_json(rec.base_poly),
            }
            for rec in check.strata
        ],
    }
    _emit(payload, args.json)
    return 0 if check.monotone and check.identity_ok else 1


def cmd_verify(args) -> int:
    q = parse_quiver(args.quiver)
    d = parse_vec(args.dim, q.n)
    summary = verify_theorem(q, d, jobs=args.jobs)
    payload = {
        "quiver": q.label(),
        "dim": list(d),
        "sub": None,
        "covers": [[m.text(), n.text()] for m, n, _, _ in _unique_covers(summary)],
        "checks": [
            {
                "kind": "cover",
                "m": m.text(),
                "n": n.text(),
                "e": list(e),
                "kernel": _poly_json(kernel),
            }
            for m, n, e, kernel in summary.kernels
        ],
        "failures": list(summary.failures),
        "counts": {
            "nodes": summary.nodes,
            "covers": summary.covers,
            "cover_checks": summary.cover_checks,
            "bound_checks": summary.bound_checks,
        },
        "elapsed": round(summary.elapsed, 6),
        "nonzero_kernels": [
            {"m": m.text(), "n": n.text(), "e": list(e), "kernel": _poly_json(kernel)}
            for m, n, e, kernel in summary.kernels
            if kernel
        ],
    }
    _emit(payload, args.json)
    return 0 if not summary.failures else 1


def _unique_covers(summary):
    seen = set()
    out = []
    for m, n, e, kernel in summary.kernels:
        if (m, n) not in seen:
            seen.add((m, n))
            out.append((m, n, e, kernel))
    return out


def cmd_pbw(args) -> int:
    i_tuple = tuple(int(part) for part in args.i.split(",")) if args.i else ()
    rep, d, e = pbw_rep(args.n, i_tuple)
    q = TypeAQuiver(args.n, "F" * (args.n - 1))
    flag_class = RepClass.from_pairs([(Interval(1, args.n), args.n + 1)])
    report = check_degeneration(q, flag_class, rep, e)
    payload = {
        "n": args.n,
        "i": list(i_tuple),
        "rep": rep.text(),
        "dim": list(d),
        "sub": list(e),
        "flag_rep": flag_class.text(),
        "chain": [[c.m.text(), c.n.text()] for c in report.chain],
        "p_flag": _poly_json(report.p_m),
        "p_rep": _poly_json(report.p_n),
        "kernel": _poly_json(report.kernel),
        "monotone": report.monotone,
        "identity_ok": report.identity_ok,
    }
    _emit(payload, args.json)
    return 0 if report.monotone and report.identity_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivergrass",
        description="Degeneration posets and quiver-Grassmannian Betti numbers for type A quivers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", help="degeneration poset with Hasse diagram")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim", required=True)
    p.add_argument("--dot", help="write DOT here ('-' for stdout)")
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("betti", help="Betti numbers of a quiver Grassmannian")
    p.add_argument("--quiver", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--method", choices=["recursion", "count", "both"], default="both")
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("strata", help="stratum table of a minimal degeneration")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("verify", help="sweep all covers and subdimensions")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim", required=True)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pbw", help="degenerate flag variety checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", required=True, help="comma-separated strictly increasing tuple")
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_pbw)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": {"type": "usage", "message": str(exc)}}), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(json.dumps({"error": {"type": "value", "message": str(exc)}}), file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(json.dumps({"error": {"type": "internal-check", "message": str(exc)}}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
