"""Factor-pair layers, antisymmetry, and the first-nonzero-layer search."""

import inspect

import pytest

from minsing import (
    DomainError,
    FormalSum,
    LevelParam,
    SearchExhaustedError,
    Weight,
    antisymmetric_part,
    build_root_system,
    default_max_depth,
    factor_pairs,
    first_nonzero_layer,
    layer_sum,
    pair_layer,
    reduce_auto,
)


def test_level_param_validation():
    from fractions import Fraction
    level = LevelParam(5, 3)
    assert level.kappa(12) == Fraction(-31, 3)
    assert str(level.kappa(12)) == "-31/3"
    with pytest.raises(DomainError):
        LevelParam(1, 1)
    with pytest.raises(DomainError):
        LevelParam(4, 2)
    with pytest.raises(DomainError):
        LevelParam(3, 0)


def test_factor_pairs_examples():
    assert factor_pairs(3, 2) == {(2, 3), (1, 6)}
    assert factor_pairs(2, 1) == {(1, 2)}
    assert factor_pairs(5, 4) == {(4, 5), (2, 10), (1, 20)}
    for a, b in factor_pairs(7, 12):
        assert a * b == 84 and b % 7 == 0


def test_antisymmetric_part_examples():
    assert antisymmetric_part(frozenset({(2, 3), (3, 2), (1, 6)})) == {(1, 6)}
    assert antisymmetric_part(factor_pairs(3, 2)) == {(2, 3), (1, 6)}
    assert antisymmetric_part(frozenset({(2, 3), (3, 2)})) == frozenset()
    # the reduced pair set is exactly the pairs with numerator not divisible by p
    for p, depth in [(2, 12), (3, 9), (5, 20)]:
        reduced = antisymmetric_part(factor_pairs(p, depth))
        assert reduced == {(a, b) for a, b in factor_pairs(p, depth) if a % p}


def test_pair_layer_examples(systems):
    d7 = systems[("D", 7)]
    assert pair_layer(d7, 11, 5) == FormalSum({Weight.of(3, 2, 2, 2, 1, 0, 0): 1})
    a7 = systems[("A", 7)]
    assert pair_layer(a7, 2, 9) == FormalSum({Weight.of(2, 0, 0, 0, 0, 0, 0, -2): 1})
    for rs in (d7, a7):
        assert not pair_layer(rs, 3, 3)  # no roots of height zero


def test_layer_sum_examples(systems):
    a7 = systems[("A", 7)]
    assert layer_sum(a7, 3, 6) == FormalSum({Weight.of(2, 0, 0, 0, 0, 0, 0, -2): 1})
    d12 = build_root_system("D", 12)
    expected = FormalSum({Weight.of(*([4, 4] + [0] * 10)): 1})
    assert layer_sum(d12, 5, 20) == expected
    a1 = systems[("A", 1)]
    assert not layer_sum(a1, 5, 1)


def test_layer_sum_reduced_flag_equivalence(systems):
    for rs in systems.values():
        h = rs.dual_coxeter
        for p in (2, 3, 5, h, h + 1):
            for depth in range(1, 11):
                assert layer_sum(rs, p, depth, reduced=True) == \
                    layer_sum(rs, p, depth, reduced=False), (rs.type_label, p, depth)


def test_pair_layer_antisymmetry_small(systems):
    for key in [("A", 1), ("D", 4)]:
        rs = systems[key]
        top = 2 * rs.dual_coxeter
        for a in range(1, top + 1):
            for b in range(1, top + 1):
                assert pair_layer(rs, a, b) == pair_layer(rs, b, a).negated()


def test_first_nonzero_layer_examples(systems):
    e6 = systems[("E6", 6)]
    depth, layer = first_nonzero_layer(e6, 3)
    assert depth == 4
    assert layer == FormalSum({e6.highest_root: 1})

    a7 = systems[("A", 7)]
    depth, layer = first_nonzero_layer(a7, 3)
    assert depth == 6
    assert layer == FormalSum({Weight.of(2, 0, 0, 0, 0, 0, 0, -2): 1})

    for rs in systems.values():
        p = rs.dual_coxeter + 1
        depth, layer = first_nonzero_layer(rs, p)
        assert depth == 2
        assert layer == FormalSum({rs.highest_root.scaled(2): 1})


def test_first_nonzero_layer_positive_coefficients(systems):
    for rs in systems.values():
        for p in range(2, 2 * rs.dual_coxeter):
            _, layer = first_nonzero_layer(rs, p)
            assert all(c >= 1 for c in layer.coefficients.values())


def test_search_exhaustion_is_reported(systems):
    with pytest.raises(SearchExhaustedError) as err:
        first_nonzero_layer(systems[("E8", 8)], 3, max_depth=5)
    assert err.value.max_depth == 5


def test_default_max_depth(systems):
    e8 = systems[("E8", 8)]
    assert default_max_depth(e8, 30) == 1
    assert default_max_depth(e8, 33) == 4
    assert default_max_depth(e8, 3) == 4 * 30 + 8


def test_type_a_nonvanishing_criterion():
    # layers vanish exactly outside {0 < |a-b| < n, a+b > n}
    for n in range(2, 9):
        rs = build_root_system("A", n - 1)
        for a in range(1, 3 * n + 1):
            for b in range(1, 3 * n + 1):
                expected = 0 < abs(a - b) < n and a + b > n
                assert bool(pair_layer(rs, a, b)) == expected, (n, a, b)


def test_type_a_distinct_dominant_weights():
    # distinct (a, alpha) with alpha negative never share a dominant weight
    for n in (4, 6, 8):
        rs = build_root_system("A", n - 1)
        seen = {}
        for a in range(1, 3 * n + 1):
            for alpha in rs.roots:
                if rs.height(alpha) >= 0:
                    continue
                value = reduce_auto(rs, alpha.scaled(-a))
                if value is None:
                    continue
                key = value.dominant
                assert key not in seen, (n, seen[key], (a, alpha))
                seen[key] = (a, alpha)


def test_layer_api_takes_no_denominator():
    # the denominator q must not appear anywhere in the layer computations
    for fn in (factor_pairs, antisymmetric_part, pair_layer, layer_sum,
               first_nonzero_layer, default_max_depth):
        assert "q" not in inspect.signature(fn).parameters
