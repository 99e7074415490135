"""Final answers: basis conversions, report assembly and the cross-check harness.

A report fixes (type, rank, p, q) and lists the minimal-depth dominant
weights both in ambient coordinates and as simple-root coefficients.  The
cross-check runs the brute-force layer search against the closed form and
returns a structured outcome; a mismatch is a result, not an exception.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__ as _version
from .closed_form import closed_minimum
from .errors import AssemblyError, DomainError, MinsingError, SearchExhaustedError
from .layers import LevelParam, default_max_depth, first_nonzero_layer
from .root_systems import RootSystem, Weight, build_root_system
from .weyl import FormalSum, reduce_auto, Reduced


def simple_root_coefficients(rs: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    """Exact coefficients of w over the simple roots; DomainError off the span."""
    pairings = [w.pair_exact(s) for s in rs.simple_roots]
    coeffs = [sum(a * b for a, b in zip(row, pairings)) for row in rs.gram_inverse]
    rebuilt = [Fraction(0)] * rs.dim
    for c, s in zip(coeffs, rs.simple_roots):
        for i, x in enumerate(s.twice):
            rebuilt[i] += c * Fraction(x, 2)
    if tuple(rebuilt) != w.as_fractions():
        raise DomainError(f"{w} is not in the simple-root span of {rs.type_label}")
    return tuple(coeffs)


def type_a_prefix_coefficients(w: Weight) -> tuple[Fraction, ...]:
    """Type A shortcut: the i-th coefficient is the i-th prefix sum of the
    coordinates.  Must agree with the exact solve; tested both ways."""
    coords = w.as_fractions()
    if sum(coords) != 0:
        raise DomainError("type A weights must have coordinate sum zero")
    out = []
    acc = Fraction(0)
    for c in coords[:-1]:
        acc += c
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class ReportWeight:
    lambda_eps: Weight
    nu_alpha: tuple[Fraction, ...]
    multiplicity: int = 1


@dataclass(frozen=True)
class SingularReport:
    type_label: str
    rank: int
    p: int
    q: int
    dual_coxeter: int
    kappa: Fraction
    depth: int
    conformal_weight: int
    weights: tuple[ReportWeight, ...]
    provenance: str
    notes: tuple[str, ...] = ()


def assemble(rs: RootSystem, p: int, q: int, depth: int, weights: FormalSum,
             provenance: str, notes: tuple[str, ...] = ()) -> SingularReport:
    """Build a report; the weights must be nonempty with positive coefficients.

    There is one singular vector per listed weight whatever the layer
    coefficient, so every report entry carries multiplicity 1.
    """
    level = LevelParam(p, q)
    if not weights:
        raise AssemblyError("no weights to report")
    entries = []
    for w, c in weights.items_sorted():
        if c < 1:
            raise AssemblyError(f"weight {w} has nonpositive coefficient {c}")
        value = reduce_auto(rs, w)
        if value != Reduced(w, 1):
            raise AssemblyError(f"reported weight {w} is not dominant")
        entries.append(ReportWeight(w, simple_root_coefficients(rs, w)))
    return SingularReport(
        type_label=rs.type_label,
        rank=rs.rank,
        p=p,
        q=q,
        dual_coxeter=rs.dual_coxeter,
        kappa=level.kappa(rs.dual_coxeter),
        depth=depth,
        conformal_weight=depth * q,
        weights=tuple(entries),
        provenance=provenance,
        notes=notes,
    )


@dataclass(frozen=True)
class VerificationOutcome:
    """Result of running the layer search against the closed form."""

    status: str  # "match" | "mismatch" | "inconclusive"
    type_label: str
    rank: int
    p: int
    depth_closed: int
    depth_oracle: int | None
    closed_weights: tuple[Weight, ...]
    oracle_weights: tuple[tuple[Weight, int], ...]
    diff: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()


def cross_check(rs: RootSystem, p: int, max_depth: int | None = None) -> VerificationOutcome:
    """Run both routes and compare depths and weight sets exactly."""
    answer = closed_minimum(rs, p)
    cap = default_max_depth(rs, p) if max_depth is None else max_depth
    try:
        depth_oracle, layer = first_nonzero_layer(rs, p, cap)
    except SearchExhaustedError:
        return VerificationOutcome(
            status="inconclusive", type_label=rs.type_label, rank=rs.rank, p=p,
            depth_closed=answer.depth, depth_oracle=None,
            closed_weights=answer.weights, oracle_weights=(),
            diff=(f"search exhausted at depth {cap}",), notes=answer.notes)
    oracle_items = tuple(layer.items_sorted())
    diff = []
    if depth_oracle != answer.depth:
        diff.append(f"depth: oracle {depth_oracle}, closed form {answer.depth}")
    oracle_set = {w for w, _ in oracle_items}
    closed_set = set(answer.weights)
    for w in sorted(oracle_set - closed_set, key=lambda x: x.twice):
        diff.append(f"only in oracle: {w}")
    for w in sorted(closed_set - oracle_set, key=lambda x: x.twice):
        diff.append(f"only in closed form: {w}")
    # the layer coefficient can exceed 1 when two factor pairs reach the same
    # dominant weight (e.g. D_n with n even at p=2); there is still a single
    # singular vector per weight, so this is informational, not a mismatch
    notes = answer.notes
    for w, c in oracle_items:
        if c != 1:
            notes = notes + (f"layer coefficient {c} at {w}",)
    return VerificationOutcome(
        status="match" if not diff else "mismatch",
        type_label=rs.type_label, rank=rs.rank, p=p,
        depth_closed=answer.depth, depth_oracle=depth_oracle,
        closed_weights=answer.weights, oracle_weights=oracle_items,
        diff=tuple(diff), notes=notes)


def report_for(type_label: str, rank: int | None, p: int, q: int, mode: str,
               max_depth: int | None = None) -> tuple[SingularReport, str]:
    """Compute one report in the given mode; returns (report, status).

    Status is "ok" for the single-route modes, and the cross-check status
    for mode "verify".  Raises SearchExhaustedError when an oracle search
    runs out of depth.
    """
    rs = build_root_system(type_label, rank)
    if mode == "oracle":
        cap = default_max_depth(rs, p) if max_depth is None else max_depth
        depth, layer = first_nonzero_layer(rs, p, cap)
        return assemble(rs, p, q, depth, layer, "oracle"), "ok"
    if mode == "closed":
        answer = closed_minimum(rs, p)
        layer = FormalSum({w: 1 for w in answer.weights})
        return assemble(rs, p, q, answer.depth, layer, "closed_form", answer.notes), "ok"
    if mode == "verify":
        outcome = cross_check(rs, p, max_depth)
        if outcome.status == "inconclusive":
            raise SearchExhaustedError(
                max_depth if max_depth is not None else default_max_depth(rs, p))
        layer = FormalSum(dict(outcome.oracle_weights))
        notes = outcome.notes + outcome.diff
        report = assemble(rs, p, q, outcome.depth_oracle, layer, "cross_checked", notes)
        return report, outcome.status
    raise DomainError(f"unknown mode {mode!r}")


def report_to_record(report: SingularReport, status: str = "ok",
                     elapsed_ms: float | None = None) -> dict:
    """Flat JSON-ready form of a report.  Exact values only; halves are
    rendered as strings like ``1/2``."""
    record = {
        "tool": "minsing",
        "version": _version,
        "type": report.type_label,
        "rank": report.rank,
        "p": report.p,
        "q": report.q,
        "dual_coxeter": report.dual_coxeter,
        "kappa": str(report.kappa),
        "D_p": report.depth,
        "conformal_weight": report.conformal_weight,
        "weights": [
            {
                "lambda_eps": list(w.lambda_eps.as_strings()),
                "nu_alpha": [str(c) for c in w.nu_alpha],
                "multiplicity": w.multiplicity,
            }
            for w in report.weights
        ],
        "provenance": report.provenance,
        "outcome": status,
        "notes": list(report.notes),
    }
    if elapsed_ms is not None:
        record["elapsed_ms"] = round(elapsed_ms, 3)
    return record


def report_from_record(record: dict) -> SingularReport:
    """Rebuild a report from its JSON form; inverse of report_to_record."""
    weights = tuple(
        ReportWeight(
            Weight.from_fractions(Fraction(tok) for tok in w["lambda_eps"]),
            tuple(Fraction(tok) for tok in w["nu_alpha"]),
            w["multiplicity"],
        )
        for w in record["weights"]
    )
    return SingularReport(
        type_label=record["type"],
        rank=record["rank"],
        p=record["p"],
        q=record["q"],
        dual_coxeter=record["dual_coxeter"],
        kappa=Fraction(record["kappa"]),
        depth=record["D_p"],
        conformal_weight=record["conformal_weight"],
        weights=weights,
        provenance=record["provenance"],
        notes=tuple(record["notes"]),
    )


def timed_record(type_label: str, rank: int | None, p: int, q: int, mode: str,
                 max_depth: int | None = None) -> dict:
    """One record with timing; failures become structured outcome records
    (an exhausted search is "inconclusive", anything else "error"), so a
    sweep never aborts on a single grid point."""
    start = time.perf_counter()

    def stub(outcome: str, message: str) -> dict:
        return {
            "tool": "minsing", "version": _version, "type": type_label,
            "rank": rank, "p": p, "q": q, "outcome": outcome,
            "notes": [message],
            "elapsed_ms": round(1000 * (time.perf_counter() - start), 3),
        }

    try:
        report, status = report_for(type_label, rank, p, q, mode, max_depth)
    except SearchExhaustedError as exc:
        return stub("inconclusive", str(exc))
    except MinsingError as exc:
        return stub("error", str(exc))
    elapsed = 1000 * (time.perf_counter() - start)
    return report_to_record(report, status, elapsed)
