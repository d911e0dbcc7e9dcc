"""Tests for the exact shadow-integration oracle."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from reinhardt.domains import NormValue, model_spec, normalize_spec
from reinhardt.norms import is_norm_finite, monomial_norm_model
from reinhardt.shadow import monomial_norm_oracle, shadow_integral_exact

HARTOGS = normalize_spec((1, -1))


def test_hartogs_worked_examples():
    # area of {t1 < t2} in the unit square
    assert shadow_integral_exact((1, 1), HARTOGS) == Fraction(1, 2)
    # integral of t2^-1 over the same triangle
    assert shadow_integral_exact((1, 0), HARTOGS) == Fraction(1)
    # beta_1 = 0 diverges at the t1 -> 0 end
    assert shadow_integral_exact((0, 1), HARTOGS) is None
    assert shadow_integral_exact((0, 0), HARTOGS) is None


def test_fat_triangle_closed_form():
    # on H(1,-k): ||z^alpha||^2 = pi^2 / ((alpha_1+1) (alpha_2 + k(alpha_1+1) + 1))
    for k in (1, 2, 3, 4):
        spec = normalize_spec((1, -k))
        for a1 in range(-1, 3):
            for a2 in range(-2 * k, 3):
                b1 = a1 + 1
                tail = a2 + k * b1 + 1
                oracle = monomial_norm_oracle((a1, a2), spec)
                if b1 > 0 and tail > 0:
                    assert oracle == NormValue.of(Fraction(1, b1 * tail), 2)
                else:
                    assert oracle == NormValue.infinite()


def test_oracle_matches_model_formula_spot_checks():
    for n, s, alpha in [
        (2, 1, (0, 0)),
        (2, 1, (3, -2)),
        (3, 2, (0, 0, 0)),
        (3, 2, (0, 0, -1)),
        (3, 1, (1, -1, 0)),
        (4, 2, (0, 1, -1, 0)),
    ]:
        spec = model_spec(n, s)
        assert monomial_norm_oracle(alpha, spec) == monomial_norm_model(alpha, n, s)


def test_oracle_signature_two_values():
    # H(1,2,-3) at alpha = 0: integral over t1 t2^2 < t3^3 of 1
    spec = normalize_spec((1, 2, -3))
    value = shadow_integral_exact((1, 1, 1), spec)
    # inner t3 from (t1 t2^2)^(1/3) to 1, then the two positive axes:
    # 1 - (1/(4/3)) * (1/(5/3)) = 1 - 9/20 = 11/20
    assert value == Fraction(11, 20)
    assert monomial_norm_oracle((0, 0, 0), spec) == NormValue.of(Fraction(11, 20), 3)


def test_divergence_survives_extra_t2_powers():
    # beta_1 = 0 diverges no matter how tame the t2 factor is
    assert shadow_integral_exact((0, 2), HARTOGS) is None
    assert shadow_integral_exact((0, 3), HARTOGS) is None


def test_negative_beta_on_the_negative_block():
    # beta = (2, -1): alpha = (1, -2); finite iff beta_1 + beta_2 > 0
    assert shadow_integral_exact((2, -1), HARTOGS) == Fraction(1, 2)
    assert shadow_integral_exact((1, -1), HARTOGS) is None  # beta_1 + beta_2 = 0


def test_nesting_order_is_irrelevant():
    rng = random.Random(2718)
    specs = [normalize_spec(raw) for raw in [(1, -2, -3), (2, -1, -1), (1, 2, -3, -4), (1, -1, -2, -2)]]
    cases = 0
    while cases < 30:
        spec = rng.choice(specs)
        n, s = spec.n, spec.s
        beta = tuple(rng.randint(-2, 4) for _ in range(n))
        orders = [tuple(range(s, n)), tuple(reversed(range(s, n)))]
        values = [shadow_integral_exact(beta, spec, order) for order in orders]
        assert values[0] == values[1]
        cases += 1


def test_neg_order_validation():
    with pytest.raises(ValueError):
        shadow_integral_exact((1, 1, 1), normalize_spec((1, -2, -3)), neg_order=(0, 1))
    with pytest.raises(ValueError):
        shadow_integral_exact((1, 1), HARTOGS, neg_order=(1, 1))
    with pytest.raises(ValueError):
        shadow_integral_exact((1, 1, 1), HARTOGS)


def test_oracle_finiteness_matches_predicate_on_a_model():
    spec = model_spec(3, 1)
    for a1 in range(-2, 2):
        for a2 in range(-2, 2):
            for a3 in range(-2, 2):
                alpha = (a1, a2, a3)
                assert monomial_norm_oracle(alpha, spec).finite == is_norm_finite(alpha, 3, 1)
