"""Shared helpers: independent brute-force oracles and weight generators.

The oracles here enumerate Weyl groups outright (permutations, and even sign
flips for type D) so that the package's reduction code can be checked against
the definition instead of against itself.
"""

from __future__ import annotations

import itertools
import random

import pytest

from minsing import Weight, build_root_system


def perm_parity(perm) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def weyl_elements_type_a(n: int):
    """All of S_n as (index tuple, determinant)."""
    return [(perm, perm_parity(perm)) for perm in itertools.permutations(range(n))]


def weyl_elements_type_d(n: int):
    """All signed permutations with an even number of sign flips."""
    out = []
    for perm in itertools.permutations(range(n)):
        det_perm = perm_parity(perm)
        for mask in range(1 << n):
            if bin(mask).count("1") % 2:
                continue
            signs = tuple(-1 if mask & (1 << k) else 1 for k in range(n))
            out.append((perm, signs, det_perm))
    return out


def alternating_orbit_sum(rs, lam: Weight) -> dict[tuple[int, ...], int]:
    """The full signed orbit of lam + rho, keyed by doubled coordinates.

    Keys whose signed contributions cancel are dropped, so an empty dict
    means the whole sum vanishes.
    """
    mu = tuple(a + b for a, b in zip(lam.twice, rs.rho.twice))
    total: dict[tuple[int, ...], int] = {}
    if rs.type_label == "A":
        for perm, det in weyl_elements_type_a(rs.dim):
            key = tuple(mu[i] for i in perm)
            total[key] = total.get(key, 0) + det
    elif rs.type_label == "D":
        for perm, signs, det in weyl_elements_type_d(rs.dim):
            key = tuple(s * mu[i] for s, i in zip(signs, perm))
            total[key] = total.get(key, 0) + det
    else:
        raise ValueError("full enumeration only for types A and D")
    return {k: v for k, v in total.items() if v}


def transporters_to(rs, lam: Weight, target_mu: tuple[int, ...]):
    """All Weyl elements sending lam + rho to the given doubled tuple."""
    mu = tuple(a + b for a, b in zip(lam.twice, rs.rho.twice))
    found = []
    if rs.type_label == "A":
        for perm, det in weyl_elements_type_a(rs.dim):
            if tuple(mu[i] for i in perm) == target_mu:
                found.append(det)
    else:
        for perm, signs, det in weyl_elements_type_d(rs.dim):
            if tuple(s * mu[i] for s, i in zip(signs, perm)) == target_mu:
                found.append(det)
    return found


def random_weight_type_a(rng: random.Random, n: int, span: int) -> Weight:
    """Random element of the root lattice of sl_n (sum-zero integer tuple)."""
    coeffs = [rng.randint(-span, span) for _ in range(n - 1)]
    eps = [coeffs[0]]
    for i in range(1, n - 1):
        eps.append(coeffs[i] - coeffs[i - 1])
    eps.append(-coeffs[-1])
    return Weight.of(*eps)


def random_weight_type_d(rng: random.Random, n: int, span: int) -> Weight:
    """Random integer or all-half weight of so_{2n}."""
    if rng.random() < 0.25:
        return Weight(tuple(2 * rng.randint(-span, span) + 1 for _ in range(n)))
    return Weight.of(*(rng.randint(-span, span) for _ in range(n)))


@pytest.fixture(scope="session")
def systems():
    """The root systems the suite keeps coming back to."""
    return {
        ("A", 1): build_root_system("A", 1),
        ("A", 2): build_root_system("A", 2),
        ("A", 4): build_root_system("A", 4),
        ("A", 7): build_root_system("A", 7),
        ("D", 4): build_root_system("D", 4),
        ("D", 7): build_root_system("D", 7),
        ("E6", 6): build_root_system("E6"),
        ("E7", 7): build_root_system("E7"),
        ("E8", 8): build_root_system("E8"),
    }
