"""Reduction to dominant representatives: descent, sort shortcuts, formal sums."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minsing import (
    DomainError,
    FormalSum,
    Reduced,
    Weight,
    build_root_system,
    descent_with_steps,
    reduce_auto,
    reduce_shifted,
    reduce_sorted_type_a,
    reduce_sorted_type_d,
)

from conftest import (
    alternating_orbit_sum,
    random_weight_type_a,
    random_weight_type_d,
    transporters_to,
)


def test_zero_weight_is_already_dominant(systems):
    for rs in systems.values():
        assert reduce_shifted(rs, Weight.zero(rs.dim)) == Reduced(Weight.zero(rs.dim), 1)


def test_shifted_tuple_collision_vanishes(systems):
    # lam + rho = (2,-1,-1) has two equal entries, so the sum cancels
    a2 = systems[("A", 2)]
    lam = Weight.of(1, -1, 0)
    assert reduce_shifted(a2, lam) is None
    assert reduce_sorted_type_a(a2, lam) is None


def test_type_d_known_reduction(systems):
    d7 = systems[("D", 7)]
    lam = Weight.of(0, 0, -11, 0, -11, 0, 0)
    expected = Reduced(Weight.of(3, 2, 2, 2, 1, 0, 0), 1)
    assert reduce_shifted(d7, lam) == expected
    assert reduce_sorted_type_d(d7, lam) == expected


def test_sort_shortcut_examples(systems):
    # shifted tuple (0,3,2,1) sorts with an odd permutation
    a3 = build_root_system("A", 3)
    lam = Weight.of(-3, 1, 1, 1)
    assert reduce_sorted_type_a(a3, lam) == Reduced(Weight.zero(4), -1)
    assert reduce_shifted(a3, lam) == Reduced(Weight.zero(4), -1)
    # shifted tuple (3,2,1,-1) has |1| = |-1|
    d4 = systems[("D", 4)]
    lam = Weight.of(0, 0, 0, -1)
    assert reduce_sorted_type_d(d4, lam) is None
    assert reduce_shifted(d4, lam) is None


def test_sort_shortcut_rejects_wrong_type(systems):
    with pytest.raises(DomainError):
        reduce_sorted_type_a(systems[("D", 4)], Weight.zero(4))
    with pytest.raises(DomainError):
        reduce_sorted_type_d(systems[("A", 2)], Weight.zero(3))


def test_descent_terminates_within_positive_root_count(systems):
    rng = random.Random(7)
    for key, rs in systems.items():
        bound = len(rs.positive_roots)
        for _ in range(100):
            if rs.type_label == "A":
                lam = random_weight_type_a(rng, rs.dim, 3 * rs.dual_coxeter)
            elif rs.type_label == "D":
                lam = random_weight_type_d(rng, rs.dim, 3 * rs.dual_coxeter)
            else:
                alpha = rng.choice(rs.roots)
                lam = alpha.scaled(rng.randint(-2 * rs.dual_coxeter, 2 * rs.dual_coxeter))
            _, steps = descent_with_steps(rs, lam)
            assert steps <= bound, (key, lam)


def test_idempotent_on_dominant_output(systems):
    rng = random.Random(11)
    for rs in systems.values():
        for _ in range(50):
            alpha = rng.choice(rs.roots)
            value = reduce_shifted(rs, alpha.scaled(rng.randint(-20, 20)))
            if value is not None:
                assert reduce_shifted(rs, value.dominant) == Reduced(value.dominant, 1)
                # the shifted representative is strictly inside the chamber
                shifted = value.dominant + rs.rho
                assert all(shifted.pair(s) > 0 for s in rs.simple_roots)


def test_descent_matches_reflection_closure_at_e6(systems):
    # independent of the descent: close the shifted orbit under all six
    # simple reflections, tracking sign parity, and read off the dominant
    # element (51840 group elements, so only a handful of weights)
    rs = systems[("E6", 6)]
    rng = random.Random(99)
    simples = [s.twice for s in rs.simple_roots]

    def closure_reduce(lam):
        start = tuple(a + b for a, b in zip(lam.twice, rs.rho.twice))
        seen = {start: 1}
        frontier = [start]
        while frontier:
            new = []
            for v in frontier:
                sv = seen[v]
                for s in simples:
                    t = sum(x * y for x, y in zip(v, s)) // 4
                    w = tuple(x - t * y for x, y in zip(v, s))
                    if w == v:
                        return None
                    if w not in seen:
                        seen[w] = -sv
                        new.append(w)
            frontier = new
        for v, sign in seen.items():
            if all(sum(x * y for x, y in zip(v, s)) > 0 for s in simples):
                return Reduced(Weight(tuple(a - b for a, b in zip(v, rs.rho.twice))), sign)
        return None

    for _ in range(6):
        lam = Weight.zero(8)
        for _ in range(3):
            lam = lam + rng.choice(rs.roots).scaled(rng.randint(-9, 9))
        assert reduce_shifted(rs, lam) == closure_reduce(lam)


def test_reflection_relation_all_types(systems):
    # reducing -a*alpha and (a - height(alpha))*alpha gives opposite signs
    for rs in systems.values():
        for alpha in rs.roots:
            h = rs.height(alpha)
            for a in range(1, 2 * rs.dual_coxeter + 1, 3):
                lhs = reduce_shifted(rs, alpha.scaled(-a))
                rhs = reduce_shifted(rs, alpha.scaled(a - h))
                if lhs is None:
                    assert rhs is None
                else:
                    assert rhs == Reduced(lhs.dominant, -lhs.sign)


def _assert_matches_orbit(rs, lam):
    total = alternating_orbit_sum(rs, lam)
    value = reduce_shifted(rs, lam)
    if value is None:
        assert total == {}
    else:
        key = tuple(a + b for a, b in zip(value.dominant.twice, rs.rho.twice))
        assert total.get(key) == value.sign
        assert transporters_to(rs, lam, key) == [value.sign]  # unique transporter


def test_full_orbit_validation_small_ranks(systems):
    rng = random.Random(23)
    for key, count in [(("A", 2), 200), (("D", 4), 150)]:
        rs = systems[key]
        for _ in range(count):
            if rs.type_label == "A":
                lam = random_weight_type_a(rng, rs.dim, 4)
            else:
                lam = random_weight_type_d(rng, rs.dim, 4)
            _assert_matches_orbit(rs, lam)
    a3 = build_root_system("A", 3)
    for _ in range(150):
        _assert_matches_orbit(a3, random_weight_type_a(rng, 4, 4))


@given(st.lists(st.integers(min_value=-12, max_value=12), min_size=2, max_size=5))
@settings(max_examples=300, deadline=None)
def test_sort_equals_descent_type_a(coeffs):
    rank = len(coeffs)
    rs = build_root_system("A", rank)
    eps = [coeffs[0]]
    for i in range(1, rank):
        eps.append(coeffs[i] - coeffs[i - 1])
    eps.append(-coeffs[-1])
    lam = Weight.of(*eps)
    assert reduce_sorted_type_a(rs, lam) == reduce_shifted(rs, lam)


@given(st.lists(st.integers(min_value=-12, max_value=12), min_size=4, max_size=6),
       st.booleans())
@settings(max_examples=300, deadline=None)
def test_sort_equals_descent_type_d(coords, halves):
    rs = build_root_system("D", len(coords))
    lam = Weight(tuple(2 * c + 1 for c in coords)) if halves else Weight.of(*coords)
    assert reduce_sorted_type_d(rs, lam) == reduce_shifted(rs, lam)


def test_reduce_auto_dispatch(systems):
    lam = Weight.of(2, -1, -1)
    assert reduce_auto(systems[("A", 2)], lam) == reduce_sorted_type_a(systems[("A", 2)], lam)
    lam = Weight.of(5, 1, -2, 0)
    assert reduce_auto(systems[("D", 4)], lam) == reduce_sorted_type_d(systems[("D", 4)], lam)
    e6 = systems[("E6", 6)]
    theta = e6.highest_root
    assert reduce_auto(e6, theta) == reduce_shifted(e6, theta)


def test_formal_sum_accumulation():
    lam = Weight.of(1, 0, -1)
    mu = Weight.of(2, -1, -1)
    acc = FormalSum()
    acc.add(Reduced(lam, 1))
    assert acc.coefficients == {lam: 1}
    acc.add(Reduced(lam, -1))
    assert not acc and acc.coefficients == {}
    acc = FormalSum({lam: 2})
    acc.add(Reduced(mu, 1), -3)
    assert acc.coefficients == {lam: 2, mu: -3}
    acc.add(None, 5)
    assert acc.coefficients == {lam: 2, mu: -3}
    assert acc == FormalSum({mu: -3, lam: 2})
    assert acc.negated() == FormalSum({lam: -2, mu: 3})
    # output order is lexicographic descending on coordinates
    assert [w for w, _ in acc.items_sorted()] == [mu, lam]
