"""Reduction of weights to dominant representatives under the shifted Weyl action.

``reduce_shifted`` walks a weight to the dominant chamber with simple
reflections, tracking the sign of the group element used.  If the shifted
weight lands on a chamber wall, the alternating orbit sum cancels and the
value is None.  Sort-based shortcuts exist for types A and D and must agree
exactly with the descent.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError
from .root_systems import RootSystem, Weight


class Reduced(NamedTuple):
    """A nonzero reduced value: the dominant representative and a sign."""

    dominant: Weight
    sign: int


def descent_with_steps(rs: RootSystem, w: Weight) -> tuple[Reduced | None, int]:
    """Reduce by simple reflections; also return the number of reflections used.

    Starting from w + rho, reflect in the lowest-index simple root with a
    negative pairing until none is left, flipping the sign each time.  A zero
    pairing at termination means the orbit sum vanishes.
    """
    rs.validate_weight(w)
    simples = [s.twice for s in rs.simple_roots]
    cartan = rs.cartan
    rank = rs.rank
    mu = [a + b for a, b in zip(w.twice, rs.rho.twice)]
    pairings = [sum(x * y for x, y in zip(mu, s)) // 4 for s in simples]
    sign = 1
    steps = 0
    while True:
        idx = -1
        for k in range(rank):
            if pairings[k] < 0:
                idx = k
                break
        if idx < 0:
            if any(v == 0 for v in pairings):
                return None, steps
            dom = Weight(tuple(a - b for a, b in zip(mu, rs.rho.twice)))
            return Reduced(dom, sign), steps
        t = pairings[idx]
        s = simples[idx]
        for j in range(len(mu)):
            mu[j] -= t * s[j]
        row = cartan[idx]
        for k in range(rank):
            pairings[k] -= t * row[k]
        sign = -sign
        steps += 1


def reduce_shifted(rs: RootSystem, w: Weight) -> Reduced | None:
    """Dominant representative of w under the shifted action, with sign, or None."""
    return descent_with_steps(rs, w)[0]


def _inversions_desc(values: list[int]) -> int:
    n = len(values)
    inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] < values[j]:
                inv += 1
    return inv


def reduce_sorted_type_a(rs: RootSystem, w: Weight) -> Reduced | None:
    """Type A shortcut: sort the shifted tuple; duplicates mean cancellation."""
    if rs.type_label != "A":
        raise DomainError(f"type A reduction applied to {rs.type_label}")
    rs.validate_weight(w)
    shifted = [a + b for a, b in zip(w.twice, rs.rho.twice)]
    if len(set(shifted)) < len(shifted):
        return None
    sign = -1 if _inversions_desc(shifted) % 2 else 1
    dom = Weight(tuple(a - b for a, b in zip(sorted(shifted, reverse=True), rs.rho.twice)))
    return Reduced(dom, sign)


def reduce_sorted_type_d(rs: RootSystem, w: Weight) -> Reduced | None:
    """Type D shortcut: sort absolute values; the sign-flip parity lands on the
    last coordinate, so the sign is the sorting parity alone."""
    if rs.type_label != "D":
        raise DomainError(f"type D reduction applied to {rs.type_label}")
    rs.validate_weight(w)
    shifted = [a + b for a, b in zip(w.twice, rs.rho.twice)]
    magnitudes = [abs(v) for v in shifted]
    if len(set(magnitudes)) < len(magnitudes):
        return None
    sign = -1 if _inversions_desc(magnitudes) % 2 else 1
    ordered = sorted(magnitudes, reverse=True)
    if sum(1 for v in shifted if v < 0) % 2:
        ordered[-1] = -ordered[-1]
    dom = Weight(tuple(a - b for a, b in zip(ordered, rs.rho.twice)))
    return Reduced(dom, sign)


def reduce_auto(rs: RootSystem, w: Weight) -> Reduced | None:
    """Per-type dispatch: sort shortcuts for A and D, descent for E."""
    if rs.type_label == "A":
        return reduce_sorted_type_a(rs, w)
    if rs.type_label == "D":
        return reduce_sorted_type_d(rs, w)
    return reduce_shifted(rs, w)


class FormalSum:
    """Integer combination of dominant weights, keyed by weight.

    Zero coefficients are never stored, so equality is plain dict equality.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: dict[Weight, int] | None = None):
        self.coefficients = {w: c for w, c in (coefficients or {}).items() if c != 0}

    @classmethod
    def single(cls, w: Weight, coefficient: int = 1) -> "FormalSum":
        return cls({w: coefficient})

    def add(self, value: Reduced | None, multiplier: int = 1) -> "FormalSum":
        """Accumulate a reduced value; None contributes nothing."""
        if value is None or multiplier == 0:
            return self
        key = value.dominant
        c = self.coefficients.get(key, 0) + multiplier * value.sign
        if c == 0:
            self.coefficients.pop(key, None)
        else:
            self.coefficients[key] = c
        return self

    def merge(self, other: "FormalSum", multiplier: int = 1) -> "FormalSum":
        for w, c in other.coefficients.items():
            self.add(Reduced(w, 1), multiplier * c)
        return self

    def negated(self) -> "FormalSum":
        return FormalSum({w: -c for w, c in self.coefficients.items()})

    def items_sorted(self) -> list[tuple[Weight, int]]:
        """Entries ordered lexicographically descending on coordinates."""
        return sorted(self.coefficients.items(), key=lambda kv: kv[0].twice, reverse=True)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        raise TypeError("FormalSum is mutable and unhashable")

    def __repr__(self) -> str:
        if not self.coefficients:
            return "FormalSum(0)"
        parts = [f"{c:+d}*{w!r}" for w, c in self.items_sorted()]
        return "FormalSum(" + " ".join(parts) + ")"
