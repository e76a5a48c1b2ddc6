"""Genus-bound bookkeeping and the refined fiber-integral comparisons."""

from fractions import Fraction

import pytest

from arithdt.castelnuovo import (
    CastelnuovoInput,
    castelnuovo_bound,
    fiber_dimension,
    gv_arithmetic_direct,
    gv_closed_form,
    gv_compare,
    gv_virtual_class_motivic,
)
from arithdt.errors import ArithdtError, NonIntegralCoefficientError
from arithdt.fields import QQ
from arithdt.gw import GwAlphaElement, GwElement
from arithdt.motivic import L, MOT_ONE, MotivicClass, chi_complex, projective_space_class

ALPHA = GwAlphaElement.alpha(QQ)
H = GwElement.hyperbolic(QQ)


def test_bound_values():
    assert castelnuovo_bound(5) == 6
    assert castelnuovo_bound(10) == 16
    assert castelnuovo_bound(1) == Fraction(8, 5)  # non-integral away from d = 5m
    with pytest.raises(ArithdtError):
        castelnuovo_bound(0)


def test_fiber_dimensions():
    assert [fiber_dimension(m) for m in range(1, 9)] == [3, 9, 19, 34, 54, 79, 109, 144]
    with pytest.raises(ArithdtError):
        fiber_dimension(0)


def test_castelnuovo_input_derivation():
    ci = CastelnuovoInput.of(2)
    assert (ci.d, ci.genus, ci.holomorphic_euler, ci.fiber_dim) == (10, 16, -15, 9)
    ci = CastelnuovoInput.of(1)
    assert (ci.d, ci.genus, ci.fiber_dim) == (5, 6, 3)


def test_motivic_class_m1():
    expected = (
        MotivicClass.u_power(7)
        * projective_space_class(3)
        * projective_space_class(4)
    )
    assert gv_virtual_class_motivic(1) == expected


def test_quotient_form_identity():
    for m in range(1, 9):
        n = fiber_dimension(m)
        lhs = gv_virtual_class_motivic(m) * (L - MOT_ONE) ** 2
        rhs = (
            MotivicClass.u_power(n + 4)
            * (MotivicClass.lefschetz(n + 1) - 1)
            * (MotivicClass.lefschetz(5) - 1)
        )
        assert lhs == rhs


def test_rank_is_five_n_plus_one():
    for m in range(1, 9):
        n = fiber_dimension(m)
        assert gv_arithmetic_direct(m).rank() == 5 * (n + 1)
        assert abs(chi_complex(gv_virtual_class_motivic(m))) == 5 * (n + 1)


def test_palindromic_coefficients():
    for m in (1, 2, 3):
        coeffs = [c for _, c in gv_virtual_class_motivic(m).u_terms]
        assert coeffs == coeffs[::-1]


def test_direct_values():
    assert gv_arithmetic_direct(1) == ALPHA * GwAlphaElement.from_even(H * 10)
    assert gv_arithmetic_direct(2) == ALPHA * GwAlphaElement.from_even(H * 25)
    m4 = gv_arithmetic_direct(4)
    assert m4 == GwAlphaElement.from_even(GwElement.one(QQ) * 87 + GwElement.unit(QQ, -1) * 88)


def test_alpha_parity_of_direct_value():
    for m in range(1, 12):
        n = fiber_dimension(m)
        value = gv_arithmetic_direct(m)
        if (n + 4) % 2:
            assert value.even.is_zero()
            assert not value.odd.is_zero()
        else:
            assert value.odd.is_zero()
            assert not value.even.is_zero()


def test_fiber_dimension_parity():
    for m in range(1, 41):
        n = fiber_dimension(m)
        if m == 1:
            assert n % 2 == 1  # the exceptional case
        elif m % 4 in (2, 3):
            assert n % 2 == 1
        else:
            assert n % 2 == 0


def test_closed_form_branches():
    assert gv_closed_form(4) == ALPHA * GwAlphaElement.from_even(
        GwElement.one(QQ) * 88 + GwElement.unit(QQ, -1) * 87
    )
    assert gv_closed_form(2) == GwAlphaElement.from_even(H * 25)
    with pytest.raises(NonIntegralCoefficientError):
        gv_closed_form(1)


def test_compare_reports():
    for m in range(1, 9):
        report = gv_compare(m)
        assert report.ranks_agree
        assert report.rank_direct == 5 * (fiber_dimension(m) + 1)

    m1 = gv_compare(1)
    assert m1.closed_error is not None
    assert m1.direct == ALPHA * GwAlphaElement.from_even(H * 10)
    assert "non" in m1.closed_error or "21/2" in m1.closed_error

    m2 = gv_compare(2)
    assert m2.alpha_factor_match
    assert m2.gw_equal_verdict is False
    assert m2.signatures_agree is True  # both sides have signature 0
    assert "alpha" in m2.description

    m4 = gv_compare(4)
    assert m4.alpha_factor_match
    assert m4.gw_equal_verdict is False
    assert m4.signatures_agree is False  # -1 versus i
