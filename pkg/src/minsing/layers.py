"""Layer sums over factor pairs and the brute-force search for the first
nonzero layer.

The depth-D layer for numerator p collects, over every factorization
a*b = p*D with p | b, the reduced values of -a*alpha for roots alpha of
height a - b.  The denominator q never enters: none of these functions
takes q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, InternalConsistencyError, SearchExhaustedError
from .root_systems import RootSystem
from .weyl import FormalSum, reduce_auto

PairSet = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class LevelParam:
    """The level data (p, q) with p >= 2, q >= 1 and gcd(p, q) = 1."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.p < 2:
            raise DomainError(f"p must be >= 2, got {self.p}")
        if self.q < 1:
            raise DomainError(f"q must be >= 1, got {self.q}")
        if gcd(self.p, self.q) != 1:
            raise DomainError(f"p={self.p} and q={self.q} are not coprime")

    def kappa(self, dual_coxeter: int) -> Fraction:
        return Fraction(self.p, self.q) - dual_coxeter


def _divisors(n: int) -> list[int]:
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


def factor_pairs(p: int, depth: int) -> PairSet:
    """All pairs (a, b) with a*b = p*depth and p | b."""
    if p < 2 or depth < 1:
        raise DomainError(f"need p >= 2 and depth >= 1, got p={p}, depth={depth}")
    return frozenset((depth // k, p * k) for k in _divisors(depth))


def antisymmetric_part(pairs: PairSet) -> PairSet:
    """Drop every pair whose transpose is also present."""
    return frozenset((a, b) for a, b in pairs if (b, a) not in pairs)


def pair_layer(rs: RootSystem, a: int, b: int) -> FormalSum:
    """Contribution of one factor pair: reduce -a*alpha over roots of height a-b."""
    if a < 1 or b < 1:
        raise DomainError(f"need a, b >= 1, got ({a}, {b})")
    acc = FormalSum()
    for alpha in rs.roots_of_height(a - b):
        acc.add(reduce_auto(rs, alpha.scaled(-a)))
    return acc


def layer_sum(rs: RootSystem, p: int, depth: int, *, reduced: bool = True) -> FormalSum:
    """The depth-D layer; with reduced=True the symmetric pairs are skipped
    up front (they cancel exactly, which the tests verify both ways)."""
    pairs = factor_pairs(p, depth)
    if reduced:
        pairs = antisymmetric_part(pairs)
    acc = FormalSum()
    for a, b in sorted(pairs):
        acc.merge(pair_layer(rs, a, b))
    return acc


def default_max_depth(rs: RootSystem, p: int) -> int:
    """Search cap: exact in the high range, a generous fixed margin below it."""
    if p >= rs.dual_coxeter:
        return p - rs.dual_coxeter + 1
    return 4 * rs.dual_coxeter + 8


def first_nonzero_layer(rs: RootSystem, p: int,
                        max_depth: int | None = None) -> tuple[int, FormalSum]:
    """Smallest depth with a nonzero layer, together with that layer.

    At the minimum every coefficient must be strictly positive; a violation
    is an internal error, never a result.  If no depth up to the cap works,
    SearchExhaustedError is raised so callers can report an inconclusive
    search instead of a wrong answer.
    """
    if p < 2:
        raise DomainError(f"p must be >= 2, got {p}")
    cap = default_max_depth(rs, p) if max_depth is None else max_depth
    if cap < 1:
        raise DomainError(f"max_depth must be >= 1, got {cap}")
    for depth in range(1, cap + 1):
        layer = layer_sum(rs, p, depth)
        if layer:
            bad = [(w, c) for w, c in layer.items_sorted() if c <= 0]
            if bad:
                raise InternalConsistencyError(
                    f"nonpositive coefficient at the first nonzero layer: {bad}")
            return depth, layer
    raise SearchExhaustedError(cap)
