"""Exact realizations of the simply-laced root systems A, D, E6, E7, E8.

Every system is realized inside an ambient orthonormal basis (dimension n for
A_{n-1} and D_n, dimension 8 for the E types) with all coordinates half-integral.
Vectors are stored as *doubled* integers so the whole package runs on exact
integer arithmetic: a coordinate c is stored as the integer 2c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import ConfigurationError, DomainError, InternalConsistencyError

TYPE_LABELS = ("A", "D", "E6", "E7", "E8")
E_RANKS = {"E6": 6, "E7": 7, "E8": 8}


@dataclass(frozen=True)
class Weight:
    """A vector in the ambient orthonormal basis, stored as doubled integers.

    ``twice[i]`` is twice the i-th coordinate, so half-integral entries stay
    exact.  Weights are immutable and hashable; they are the keys of every
    formal sum downstream.
    """

    twice: tuple[int, ...]

    @staticmethod
    def of(*coords: int) -> "Weight":
        """Build a weight from integer coordinates."""
        return Weight(tuple(2 * c for c in coords))

    @staticmethod
    def from_fractions(coords) -> "Weight":
        doubled = []
        for c in coords:
            d = 2 * Fraction(c)
            if d.denominator != 1:
                raise DomainError(f"coordinate {c} is not half-integral")
            doubled.append(int(d))
        return Weight(tuple(doubled))

    @staticmethod
    def zero(dim: int) -> "Weight":
        return Weight((0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.twice)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.twice, other.twice, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.twice, other.twice, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.twice))

    def scaled(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.twice))

    def pair4(self, other: "Weight") -> int:
        """Four times the inner product; always an exact integer."""
        return sum(a * b for a, b in zip(self.twice, other.twice, strict=True))

    def pair(self, other: "Weight") -> int:
        """Exact integer inner product; raises if the value is not integral."""
        raw = self.pair4(other)
        if raw % 4:
            raise DomainError(f"inner product of {self} and {other} is not an integer")
        return raw // 4

    def pair_exact(self, other: "Weight") -> Fraction:
        return Fraction(self.pair4(other), 4)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.twice)

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, 2) for a in self.twice)

    def as_strings(self) -> tuple[str, ...]:
        """Coordinates as exact strings, halves rendered like ``1/2``."""
        return tuple(str(Fraction(a, 2)) for a in self.twice)

    def __repr__(self) -> str:
        return "(" + ",".join(self.as_strings()) + ")"


class RootSystem:
    """One realized simply-laced root system; immutable after construction.

    Attributes
    ----------
    type_label : one of ``A``, ``D``, ``E6``, ``E7``, ``E8``
    rank : number of simple roots
    dim : ambient dimension
    roots, positive_roots, simple_roots : tuples of Weight, lexicographic order
    rho : half-sum of the positive roots
    highest_root : the unique root of maximal height
    dual_coxeter : dual Coxeter number
    cartan : pairing matrix (alpha_i | alpha_j) of the simple roots
    """

    def __init__(self, type_label: str, rank: int, dim: int,
                 simple_roots: tuple[Weight, ...], roots: tuple[Weight, ...],
                 complement_basis: tuple[Weight, ...]):
        self.type_label = type_label
        self.rank = rank
        self.dim = dim
        self.simple_roots = simple_roots
        self.roots = tuple(sorted(roots, key=lambda w: w.twice))
        self.complement_basis = complement_basis

        self.cartan = tuple(tuple(a.pair(b) for b in simple_roots) for a in simple_roots)
        self.gram_inverse = _invert_fraction_matrix(
            [[Fraction(x) for x in row] for row in self.cartan])

        coeffs = {}
        heights = {}
        positives = []
        for alpha in self.roots:
            c = self._solve_simple_coefficients(alpha)
            coeffs[alpha] = c
            heights[alpha] = sum(c)
            if all(x >= 0 for x in c):
                positives.append(alpha)
        self.positive_roots = tuple(positives)
        self._heights = heights
        self._root_coefficients = coeffs

        by_height: dict[int, list[Weight]] = {}
        for alpha, h in heights.items():
            by_height.setdefault(h, []).append(alpha)
        self._by_height = {h: tuple(v) for h, v in by_height.items()}

        twice_rho = [0] * dim
        for alpha in positives:
            for i, a in enumerate(alpha.twice):
                twice_rho[i] += a
        if any(x % 2 for x in twice_rho):
            raise InternalConsistencyError("half-sum of positive roots is not half-integral")
        self.rho = Weight(tuple(x // 2 for x in twice_rho))

        top = max(heights.values())
        tops = [a for a, h in heights.items() if h == top]
        if len(tops) != 1:
            raise InternalConsistencyError("highest root is not unique")
        self.highest_root = tops[0]
        self.dual_coxeter = top + 1

        self._check_invariants()

    # -- construction helpers -------------------------------------------------

    def _solve_simple_coefficients(self, alpha: Weight) -> tuple[int, ...]:
        pairings = [Fraction(alpha.pair(s)) for s in self.simple_roots]
        c = _mat_vec(self.gram_inverse, pairings)
        if any(x.denominator != 1 for x in c):
            raise InternalConsistencyError(f"root {alpha} has non-integral coefficients")
        out = [int(x) for x in c]
        rebuilt = Weight.zero(self.dim)
        for k, s in zip(out, self.simple_roots):
            rebuilt = rebuilt + s.scaled(k)
        if rebuilt != alpha:
            raise InternalConsistencyError(f"root {alpha} is outside the simple-root span")
        return tuple(out)

    def _check_invariants(self) -> None:
        expected = {
            "A": self.dim * (self.dim - 1),
            "D": 2 * self.dim * (self.dim - 1),
            "E6": 72,
            "E7": 126,
            "E8": 240,
        }[self.type_label]
        if len(self.roots) != expected:
            raise InternalConsistencyError(
                f"{self.type_label}: {len(self.roots)} roots, expected {expected}")
        if any(alpha.pair(alpha) != 2 for alpha in self.roots):
            raise InternalConsistencyError("a root has squared norm != 2")
        if any(self._heights[alpha] != self.rho.pair(alpha) for alpha in self.roots):
            raise InternalConsistencyError("height disagrees with the rho pairing")
        if 2 * len(self.positive_roots) != len(self.roots):
            raise InternalConsistencyError("positive roots are not half of all roots")
        known = {"A": self.dim, "D": 2 * self.dim - 2, "E6": 12, "E7": 18, "E8": 30}
        if self.dual_coxeter != known[self.type_label]:
            raise InternalConsistencyError(
                f"dual Coxeter number {self.dual_coxeter}, expected {known[self.type_label]}")

    # -- queries ---------------------------------------------------------------

    def is_root(self, w: Weight) -> bool:
        return w in self._heights

    def height(self, alpha: Weight) -> int:
        if alpha not in self._heights:
            raise DomainError(f"{alpha} is not a root of {self.type_label} rank {self.rank}")
        return self._heights[alpha]

    def roots_of_height(self, h: int) -> tuple[Weight, ...]:
        """All roots of the given height, lexicographic order; empty if none."""
        return self._by_height.get(h, ())

    def simple_coefficients(self, alpha: Weight) -> tuple[int, ...]:
        if alpha not in self._root_coefficients:
            raise DomainError(f"{alpha} is not a root of {self.type_label} rank {self.rank}")
        return self._root_coefficients[alpha]

    def validate_weight(self, w: Weight) -> None:
        """Check that w is a weight this system can act on; DomainError if not."""
        if w.dim != self.dim:
            raise DomainError(f"weight has dimension {w.dim}, ambient is {self.dim}")
        if self.type_label == "A" and sum(w.twice) != 0:
            raise DomainError("type A weights must have coordinate sum zero")
        for v in self.complement_basis:
            if w.pair4(v) != 0:
                raise DomainError(
                    f"weight {w} is outside the {self.type_label} span within R^8")
        for s in self.simple_roots:
            if w.pair4(s) % 4:
                raise DomainError(f"weight {w} pairs non-integrally with a simple root")

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label}, rank={self.rank})"


def height(rs: RootSystem, alpha: Weight) -> int:
    return rs.height(alpha)


def roots_of_height(rs: RootSystem, h: int) -> tuple[Weight, ...]:
    return rs.roots_of_height(h)


# -- explicit coordinate realizations ------------------------------------------


def _type_a_system(rank: int) -> RootSystem:
    n = rank + 1
    roots = [Weight.of(*_unit(n, i, 1, j, -1)) for i in range(n) for j in range(n) if i != j]
    simple = tuple(Weight.of(*_unit(n, i, 1, i + 1, -1)) for i in range(n - 1))
    return RootSystem("A", rank, n, simple, tuple(roots), ())


def _type_d_system(n: int) -> RootSystem:
    roots = []
    for i, j in combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(Weight.of(*_unit(n, i, si, j, sj)))
    simple = [Weight.of(*_unit(n, i, 1, i + 1, -1)) for i in range(n - 1)]
    simple.append(Weight.of(*_unit(n, n - 2, 1, n - 1, 1)))
    return RootSystem("D", n, n, tuple(simple), tuple(roots), ())


def _e8_roots() -> list[Weight]:
    roots = []
    for i, j in combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(Weight.of(*_unit(8, i, si, j, sj)))
    for mask in range(256):
        signs = [1 if mask & (1 << k) else -1 for k in range(8)]
        if signs.count(-1) % 2 == 0:
            roots.append(Weight(tuple(signs)))
    return roots


def _e_simple_roots(count: int) -> tuple[Weight, ...]:
    simple = [
        Weight((1, -1, -1, -1, -1, -1, -1, 1)),   # half-integral branch root
        Weight.of(1, 1, 0, 0, 0, 0, 0, 0),
        Weight.of(-1, 1, 0, 0, 0, 0, 0, 0),
        Weight.of(0, -1, 1, 0, 0, 0, 0, 0),
        Weight.of(0, 0, -1, 1, 0, 0, 0, 0),
        Weight.of(0, 0, 0, -1, 1, 0, 0, 0),
        Weight.of(0, 0, 0, 0, -1, 1, 0, 0),
        Weight.of(0, 0, 0, 0, 0, -1, 1, 0),
    ]
    return tuple(simple[:count])


def _type_e_system(label: str) -> RootSystem:
    rank = E_RANKS[label]
    simple = _e_simple_roots(rank)
    complement = _orthogonal_complement(simple, 8)
    ambient = _e8_roots()
    roots = tuple(a for a in ambient if all(a.pair4(v) == 0 for v in complement))
    return RootSystem(label, rank, 8, simple, roots, complement)


def _unit(n: int, i: int, vi: int, j: int, vj: int) -> list[int]:
    v = [0] * n
    v[i] = vi
    v[j] = vj
    return v


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Build (and cache) the root system for a type label and rank.

    ``A`` takes rank >= 1 (ambient dimension rank + 1), ``D`` takes rank >= 4,
    and the E labels fix their own rank, which may be omitted.
    """
    if type_label not in TYPE_LABELS:
        raise ConfigurationError(f"unsupported type {type_label!r}")
    if type_label == "A":
        if rank is None or rank < 1:
            raise ConfigurationError("type A needs rank >= 1")
        return _type_a_system(rank)
    if type_label == "D":
        if rank is None or rank < 4:
            raise ConfigurationError("type D needs rank >= 4")
        return _type_d_system(rank)
    fixed = E_RANKS[type_label]
    if rank is not None and rank != fixed:
        raise ConfigurationError(f"type {type_label} has rank {fixed}, got {rank}")
    return _type_e_system(type_label)


# -- exact linear algebra on Fractions ------------------------------------------


def _invert_fraction_matrix(m: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InternalConsistencyError("singular pairing matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _mat_vec(m: tuple[tuple[Fraction, ...], ...], v: list[Fraction]) -> list[Fraction]:
    return [sum(a * b for a, b in zip(row, v)) for row in m]


def _orthogonal_complement(vectors: tuple[Weight, ...], dim: int) -> tuple[Weight, ...]:
    """Integer basis of the subspace orthogonal to all given vectors."""
    rows = [[Fraction(x) for x in w.twice] for w in vectors]
    # row-reduce, then read the nullspace off the free columns
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        pivot = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    basis = []
    free = [c for c in range(dim) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * dim
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        scale = 1
        for x in vec:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        basis.append(Weight(tuple(int(2 * x * scale) for x in vec)))
    return tuple(basis)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
