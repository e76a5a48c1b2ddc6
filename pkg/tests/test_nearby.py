"""Nearby classes and virtual classes from stratification data."""

import pytest

from arithdt.dt import z_motivic
from arithdt.errors import InputDataError
from arithdt.fields import QQ
from arithdt.gw import GaussianInteger, GwElement
from arithdt.motivic import L, MOT_ONE, MotivicClass, chi_a1, chi_complex, chi_real
from arithdt.nearby import (
    SncData,
    StratumRecord,
    local_nearby_class,
    nearby_class,
    virtual_class_critical_locus,
    virtual_class_torus,
)

LINES = L - MOT_ONE  # class of a line minus a point


def hyperbola_global():
    return SncData(
        [
            StratumRecord.of([1], LINES),
            StratumRecord.of([2], LINES),
            StratumRecord.of([1, 2], MOT_ONE),
        ],
        2,
        central_fiber_class=2 * L - 1,
    )


def hyperbola_local():
    return SncData(
        [
            StratumRecord.of([1], MotivicClass.zero()),
            StratumRecord.of([2], MotivicClass.zero()),
            StratumRecord.of([1, 2], MOT_ONE),
        ],
        2,
    )


def test_nearby_class_hyperbola():
    assert nearby_class(hyperbola_global()) == L - 1


def test_nearby_class_trivial_cases():
    assert nearby_class(SncData([], 2)) == MotivicClass.zero()
    c = 3 * L - MOT_ONE
    single = SncData([StratumRecord.of([1], c)], 4)
    assert nearby_class(single) == c


def test_local_nearby_class_hyperbola():
    s0 = local_nearby_class(hyperbola_local())
    assert s0 == 1 - L
    assert chi_complex(s0) == 0
    assert chi_real(s0) == GaussianInteger(2, 0)
    image = chi_a1(s0, QQ)
    assert image.odd.is_zero()
    assert image.even.gw_equal(GwElement.one(QQ) - GwElement.unit(QQ, -1))


def test_local_nearby_class_point_off_fiber():
    # all fiber classes empty away from the zero fiber
    data = SncData(
        [StratumRecord.of([1], MotivicClass.zero()), StratumRecord.of([2], MotivicClass.zero())],
        2,
    )
    assert local_nearby_class(data) == MotivicClass.zero()


def test_nearby_class_additive_in_strata():
    base = hyperbola_global()
    split = SncData(
        [
            StratumRecord.of([1], L),
            StratumRecord.of([1], -MOT_ONE),
            StratumRecord.of([2], LINES),
            StratumRecord.of([1, 2], MOT_ONE),
        ],
        2,
        central_fiber_class=base.central_fiber_class,
    )
    assert nearby_class(split) == nearby_class(base)


def test_virtual_class_of_critical_locus():
    # the zero function: S_f = 0, X_0 = X, so the class is L^(-dim/2)[X]
    for dim, cls in ((3, MotivicClass.lefschetz(3)), (2, 5 * L), (1, L + 1)):
        virt = virtual_class_critical_locus(MotivicClass.zero(), cls, dim)
        assert virt == MotivicClass.u_power(-dim) * cls
    # S_f = [X_0] gives zero
    assert virtual_class_critical_locus(LINES, LINES, 4) == MotivicClass.zero()
    # the hyperbola: S_f = L - 1, [X_0] = 2L - 1, dim 2
    assert virtual_class_critical_locus(L - 1, 2 * L - 1, 2) == MOT_ONE


def test_virtual_class_torus():
    x = 7 * L - 2
    assert virtual_class_torus(x, x, 6) == MotivicClass.zero()
    assert virtual_class_torus(
        MotivicClass.zero(), -MotivicClass.u_power(4), 4
    ) == MOT_ONE
    # the first Hilbert scheme of affine 3-space: X_0 = A^3, X_1 empty
    hilb1 = virtual_class_torus(MotivicClass.lefschetz(3), MotivicClass.zero(), 3)
    assert hilb1 == MotivicClass.u_power(3)
    assert hilb1 == z_motivic(2).coeffs[1]


def test_monodromy_orders():
    record = StratumRecord.of([1, 2, 3], MOT_ONE, {1: 4, 2: 6, 3: 10})
    assert record.monodromy_order == 2
    assert StratumRecord.of([5], MOT_ONE, {5: 3}).monodromy_order == 3


def test_stratum_validation():
    with pytest.raises(InputDataError):
        StratumRecord.of([], MOT_ONE)
    with pytest.raises(InputDataError):
        StratumRecord.of([1], MOT_ONE, {2: 1})
    with pytest.raises(InputDataError):
        StratumRecord.of([1], MOT_ONE, {1: 0})
    with pytest.raises(InputDataError):
        SncData([], 0)


def test_json_round_trip():
    data = hyperbola_global()
    back = SncData.from_json_dict(data.to_json_dict())
    assert back == data
    assert nearby_class(back) == nearby_class(data)
    with pytest.raises(InputDataError):
        SncData.from_json_dict({"strata": []})
