"""Command-line front end: single queries and grid sweeps.

Exit codes: 0 ok/match, 2 mismatch, 3 inconclusive (search cap hit),
64 usage error.  Records are emitted as a human table, newline-delimited
JSON, or CSV; all numbers are exact (halves print as ``1/2``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .errors import MinsingError
from .report import timed_record
from .root_systems import E_RANKS, TYPE_LABELS

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64

ENV_MAX_DEPTH = "MINSING_DMAX"

CSV_COLUMNS = ["type", "rank", "p", "q", "D_p", "conformal_weight",
               "weight_index", "lambda_eps", "nu_alpha", "provenance", "outcome"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="minsing", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--type", required=True,
                        help="root-system type(s): A, D, E6, E7, E8 (comma-separated for sweep)")
        sp.add_argument("--rank", help="rank or LO:HI range; ignored for E types")
        sp.add_argument("--p", required=True, help="numerator p >= 2, or LO:HI range for sweep")
        sp.add_argument("--q", type=int, default=1, help="denominator q >= 1 (default 1)")
        sp.add_argument("--mode", choices=("oracle", "closed", "verify"), default="verify")
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        sp.add_argument("--dmax", type=int, default=None,
                        help=f"search depth cap (default: built-in; env {ENV_MAX_DEPTH} overrides)")
        sp.add_argument("--out", default=None, help="write records to FILE instead of stdout")

    q = sub.add_parser("query", help="one (type, rank, p, q) point")
    common(q)
    s = sub.add_parser("sweep", help="grid of points; summary on stderr")
    common(s)
    s.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    return parser


def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad {what} {text!r}: expected N or LO:HI")
    if lo > hi:
        raise UsageError(f"empty {what} range {text!r}")
    return lo, hi


def _resolve_max_depth(flag_value: int | None) -> int | None:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_MAX_DEPTH)
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{ENV_MAX_DEPTH}={env!r} is not an integer")


def _grid_points(args) -> list[tuple[str, int | None, int, int]]:
    labels = [t.strip() for t in args.type.split(",") if t.strip()]
    for label in labels:
        if label not in TYPE_LABELS:
            raise UsageError(f"unknown type {label!r}; choose from {', '.join(TYPE_LABELS)}")
    p_lo, p_hi = _parse_range(args.p, "p")
    if p_lo < 2:
        raise UsageError("p must be >= 2")
    if args.q < 1:
        raise UsageError("q must be >= 1")
    ranks: tuple[int, int] | None = None
    if args.rank is not None:
        ranks = _parse_range(args.rank, "rank")
    points = []
    minimum_rank = {"A": 1, "D": 4}
    for label in labels:
        if label in E_RANKS:
            label_ranks = [E_RANKS[label]]
        elif ranks is None:
            raise UsageError(f"type {label} needs --rank")
        else:
            label_ranks = list(range(ranks[0], ranks[1] + 1))
            if label_ranks[0] < minimum_rank[label]:
                raise UsageError(f"type {label} needs rank >= {minimum_rank[label]}")
        for rank in label_ranks:
            for p in range(p_lo, p_hi + 1):
                if gcd(p, args.q) != 1:
                    if args.command == "query":
                        raise UsageError(f"p={p} and q={args.q} are not coprime")
                    continue  # sweeps silently skip non-coprime grid points
                points.append((label, rank, p, args.q))
    if not points:
        raise UsageError("empty grid")
    return points


def _compute_point(job: tuple[str, int | None, int, int, str, int | None]) -> dict:
    label, rank, p, q, mode, max_depth = job
    return timed_record(label, rank, p, q, mode, max_depth)


def _format_table(records: list[dict]) -> str:
    lines = []
    for r in records:
        head = (f"{r['type']:>3} rank={r['rank']} p={r['p']} q={r['q']}"
                f" outcome={r['outcome']}")
        if "D_p" in r:
            head += (f" D_p={r['D_p']} conformal={r['conformal_weight']}"
                     f" kappa={r['kappa']} [{r['provenance']}]")
        lines.append(head)
        for i, w in enumerate(r.get("weights", [])):
            lam = "(" + ",".join(w["lambda_eps"]) + ")"
            nu = "(" + ",".join(w["nu_alpha"]) + ")"
            lines.append(f"      weight[{i}] lambda={lam} nu_alpha={nu}")
        for note in r.get("notes", []):
            lines.append(f"      note: {note}")
    return "\n".join(lines) + "\n"


def _format_json(records: list[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def _format_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        base = [r["type"], r["rank"], r["p"], r["q"],
                r.get("D_p", ""), r.get("conformal_weight", "")]
        weights = r.get("weights", [])
        if not weights:
            writer.writerow(base + ["", "", "", r.get("provenance", ""), r["outcome"]])
        for i, w in enumerate(weights):
            writer.writerow(base + [i, " ".join(w["lambda_eps"]), " ".join(w["nu_alpha"]),
                                    r["provenance"], r["outcome"]])
    return buf.getvalue()


_FORMATTERS = {"table": _format_table, "json": _format_json, "csv": _format_csv}


def _emit(records: list[dict], fmt: str, out_path: str | None) -> None:
    text = _FORMATTERS[fmt](records)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_code(records: list[dict]) -> int:
    outcomes = {r["outcome"] for r in records}
    if "mismatch" in outcomes or "error" in outcomes:
        return EXIT_MISMATCH
    if "inconclusive" in outcomes:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        max_depth = _resolve_max_depth(args.dmax)
        points = _grid_points(args)
        if args.command == "query" and len(points) != 1:
            raise UsageError("query takes a single point; use sweep for ranges")
        jobs = [(label, rank, p, q, args.mode, max_depth)
                for label, rank, p, q in points]
        workers = getattr(args, "jobs", 1)
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                records = list(pool.map(_compute_point, jobs))
        else:
            records = [_compute_point(job) for job in jobs]
        _emit(records, args.format, args.out)
        if args.command == "sweep":
            counts = {"match": 0, "mismatch": 0, "inconclusive": 0, "ok": 0}
            for r in records:
                counts[r["outcome"]] = counts.get(r["outcome"], 0) + 1
            summary = (f"sweep: {len(records)} points, {counts['match']} match, "
                       f"{counts['mismatch']} mismatch, {counts['inconclusive']} inconclusive, "
                       f"{counts['ok']} ok")
            if counts.get("error"):
                summary += f", {counts['error']} error"
            print(summary, file=sys.stderr)
        return _exit_code(records)
    except UsageError as exc:
        print(f"minsing: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinsingError as exc:
        print(f"minsing: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
