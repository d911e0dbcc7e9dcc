"""Tests for Laurent expansion, series oracles, and the decay diagnostic."""

from __future__ import annotations

from fractions import Fraction

import pytest

from reinhardt.domains import model_spec, normalize_spec
from reinhardt.exact import LaurentChunk, OutsideWindow, SparsePoly
from reinhardt.kernels import RationalKernel, kernel_model_sig1, kernel_signature_one
from reinhardt.norms import build_RS
from reinhardt.series import (
    apply_annihilating_operator,
    expand_closed_form,
    rationality_diagnostic,
    series_coefficients_model,
    series_coefficients_oracle,
    slice_coefficients,
)

HARTOGS = normalize_spec((1, -1))


def test_hartogs_expansion_values():
    chunk = expand_closed_form(kernel_model_sig1(2), [(0, 4), (-4, 4)])
    # coefficient = beta_1 (beta_1 + beta_2) with beta = alpha + 1
    assert chunk.coefficient((0, 0)) == 2
    assert chunk.coefficient((0, -1)) == 1
    assert chunk.coefficient((1, 0)) == 6
    assert chunk.coefficient((4, 4)) == 50
    assert chunk.coefficient((0, -2)) == 0  # infinite norm: absent from the series
    assert chunk.coefficient((2, -4)) == 0
    assert chunk.pi_power == 2
    with pytest.raises(OutsideWindow):
        chunk.coefficient((5, 0))


def test_expansion_matches_model_series():
    box = [(-3, 3), (-3, 3)]
    assert expand_closed_form(kernel_model_sig1(2), box) == series_coefficients_model(2, 1, box)
    box3 = [(-2, 2)] * 3
    assert expand_closed_form(kernel_model_sig1(3), box3) == series_coefficients_model(3, 1, box3)


def test_expansion_matches_shadow_oracle_for_fat_triangle():
    spec = normalize_spec((1, -2))
    box = [(0, 4), (-4, 4)]
    assert expand_closed_form(kernel_signature_one(spec), box) == series_coefficients_oracle(spec, box)


def test_expansion_guards():
    kernel = kernel_model_sig1(2)
    with pytest.raises(ValueError):
        expand_closed_form(kernel, [(0, 4)])
    cubed_units = RationalKernel(
        spec=HARTOGS, scalar=Fraction(1), pi_power=2,
        numerator=SparsePoly.monomial(2, (0, 1)), main_k1=1, main_kb=(1,),
        unit_factors=((1, 3),),
    )
    with pytest.raises(ValueError):
        expand_closed_form(cubed_units, [(0, 2), (0, 2)])


def test_model_series_signature_two():
    chunk = series_coefficients_model(3, 2, [(0, 0), (0, 0), (-1, 0)])
    assert chunk.coefficient((0, 0, 0)) == Fraction(4, 3)
    assert chunk.coefficient((0, 0, -1)) == Fraction(1, 2)  # norm 2 pi^3


def test_oracle_series_any_signature():
    spec = normalize_spec((2, 3, -4))
    chunk = series_coefficients_oracle(spec, [(0, 0), (0, 0), (0, 0)])
    assert chunk.coefficient((0, 0, 0)) == Fraction(21, 13)


def test_series_skips_infinite_norms():
    chunk = series_coefficients_model(2, 1, [(-2, 0), (-2, 0)])
    assert chunk.coefficient((-1, 0)) == 0
    assert chunk.coefficient((-2, 0)) == 0
    assert chunk.coefficient((0, 0)) == 2


# -- slice coefficients and the decay diagnostic -----------------------------------


def test_slice_coefficients_values():
    assert slice_coefficients(3, 4) == [Fraction(1, 3), Fraction(1, 4), Fraction(1, 5), Fraction(1, 6)]
    assert slice_coefficients(4, 2) == [Fraction(1, 7), Fraction(2, 26)]
    with pytest.raises(ValueError):
        slice_coefficients(2, 10)
    with pytest.raises(ValueError):
        slice_coefficients(3, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_slice_coefficients_split_off_the_norm_ratio(n):
    # S/R at beta = (1,...,1,j) equals j plus the j-th slice coefficient:
    # the polydisc part and the tail split exactly
    pair = build_RS(n, n - 1)
    tail = slice_coefficients(n, 30)
    for j in range(1, 31):
        beta = (1,) * (n - 1) + (j,)
        ratio = Fraction(pair.S.evaluate(beta), pair.R.evaluate(beta))
        assert ratio - j == tail[j - 1]


def test_diagnostic_classifies_slice_families():
    for n in (3, 4, 5):
        assert rationality_diagnostic(slice_coefficients(n, 200)) == "polynomial_decay"


def test_diagnostic_classifies_geometric_decay():
    assert rationality_diagnostic([Fraction(1, 2) ** j for j in range(1, 200)]) == "exponential_decay"
    assert rationality_diagnostic([Fraction(4, 5) ** j * j for j in range(1, 200)]) == "exponential_decay"


def test_diagnostic_inconclusive_cases():
    assert rationality_diagnostic([1, 2, 3]) == "inconclusive"  # too short
    assert rationality_diagnostic([1.0, 2.0] * 50) == "inconclusive"  # oscillating ratios
    values = [1.0] * 40 + [0.0] + [1.0] * 40
    assert rationality_diagnostic(values) == "inconclusive"  # nonpositive tail entry


# -- annihilating operator ----------------------------------------------------------


def test_annihilator_flattens_hartogs_series():
    box = [(-3, 3), (-3, 3)]
    series = series_coefficients_model(2, 1, box)
    flat = apply_annihilating_operator(2, 1, series)
    S = build_RS(2, 1).S
    assert flat.box == ((-2, 4), (-2, 4))
    for gamma in flat.box_points():
        beta = gamma  # after the shift, gamma plays the role of beta
        expected = S.evaluate(beta) if beta[0] > 0 and beta[0] + beta[1] > 0 else 0
        assert flat.coefficient(gamma) == expected


def test_annihilator_keeps_window_metadata():
    chunk = LaurentChunk(2, [(0, 1), (0, 1)], {(0, 0): Fraction(1)}, pi_power=2, truncated=True)
    out = apply_annihilating_operator(2, 1, chunk)
    assert out.pi_power == 2
    assert out.truncated
    assert out.box == ((1, 2), (1, 2))
    # R = 1 for s = 1, so values just shift
    assert out.coefficient((1, 1)) == 1


def test_annihilator_guards():
    with pytest.raises(ValueError):
        apply_annihilating_operator(3, 1, LaurentChunk(2, [(0, 1), (0, 1)]))
