"""Motivic weight ring: Laurent arithmetic, cell classes, specializations."""

import random
from math import comb

import pytest

from arithdt.errors import ArithdtError, GeneratorProductError, InexactDivisionError
from arithdt.fields import QQ
from arithdt.gw import GaussianInteger, GwAlphaElement, GwElement
from arithdt.motivic import (
    DEFAULT_GENERATORS,
    GeneratorSpec,
    L,
    L_HALF,
    L_INV,
    MOT_ONE,
    MotivicClass,
    _exact_divide_tate,
    chi_a1,
    chi_complex,
    chi_real,
    grassmannian_class,
    projective_space_class,
    quadratic_point_generator,
)


def test_laurent_arithmetic():
    assert L * L_INV == MOT_ONE
    assert (L + 1) * (L - 1) == MotivicClass.lefschetz(2) - 1
    p1 = projective_space_class(1)
    assert p1 * p1 == MotivicClass.lefschetz(2) + 2 * L + 1
    assert L_HALF * L_HALF == L


def test_projective_space_classes():
    assert projective_space_class(0) == MOT_ONE
    assert projective_space_class(1) == 1 + L
    assert projective_space_class(4) == MotivicClass([(2 * i, 1) for i in range(5)])
    with pytest.raises(ArithdtError):
        projective_space_class(-1)


def test_grassmannian_classes():
    assert grassmannian_class(2, 1) == projective_space_class(1)
    assert grassmannian_class(4, 0) == MOT_ONE
    assert grassmannian_class(4, 2) == MotivicClass(
        [(0, 1), (2, 1), (4, 2), (6, 1), (8, 1)]
    )
    with pytest.raises(ArithdtError):
        grassmannian_class(2, 3)


def test_grassmannian_duality_and_rank():
    for n in range(9):
        for k in range(n + 1):
            assert grassmannian_class(n, k) == grassmannian_class(n, n - k)
            assert chi_complex(grassmannian_class(n, k)) == comb(n, k)


def test_exact_division_guard():
    with pytest.raises(InexactDivisionError):
        _exact_divide_tate(L + 1, L - 1)
    assert _exact_divide_tate(L * L - 1, L - 1) == L + 1


def test_chi_complex_golden():
    assert chi_complex(L) == 1
    for n in range(6):
        assert chi_complex(projective_space_class(n)) == n + 1
    assert chi_complex(MotivicClass.u_power(3)) == -1


def test_chi_real_golden():
    assert chi_real(L) == GaussianInteger(-1, 0)
    assert chi_real(MOT_ONE) == GaussianInteger(1, 0)
    assert chi_real(L_HALF) == GaussianInteger(0, 1)


def test_chi_a1_golden():
    assert chi_a1(L) == GwAlphaElement.from_even(GwElement.unit(QQ, -1))
    assert chi_a1(projective_space_class(1)).even.gw_equal(GwElement.hyperbolic(QQ))
    p4 = chi_a1(projective_space_class(4))
    assert p4 == GwAlphaElement.from_even(
        GwElement.one(QQ) * 3 + GwElement.unit(QQ, -1) * 2
    )


def _random_class(rng) -> MotivicClass:
    return MotivicClass([(rng.randint(-4, 4), rng.randint(-3, 3)) for _ in range(3)])


def test_specializations_are_ring_morphisms():
    rng = random.Random(5)
    for _ in range(80):
        a, b = _random_class(rng), _random_class(rng)
        assert chi_complex(a + b) == chi_complex(a) + chi_complex(b)
        assert chi_complex(a * b) == chi_complex(a) * chi_complex(b)
        assert chi_real(a + b) == chi_real(a) + chi_real(b)
        assert chi_real(a * b) == chi_real(a) * chi_real(b)
        assert chi_a1(a + b) == chi_a1(a) + chi_a1(b)
        assert chi_a1(a * b) == chi_a1(a) * chi_a1(b)


def test_numeric_commutes_with_chi_a1():
    rng = random.Random(9)
    for _ in range(80):
        a = _random_class(rng)
        image = chi_a1(a)
        assert image.numeric_complex() == chi_complex(a)
        assert image.numeric_real() == chi_real(a)


def test_spec_c_generator():
    spec = DEFAULT_GENERATORS["SpecC"]
    assert spec.chi_complex == 2
    assert spec.chi_real == GaussianInteger(0, 0)
    assert spec.chi_a1.even.gw_equal(GwElement.hyperbolic(QQ))
    # the conic without real points at infinity: [X] = L + 1 - [SpecC]
    circle = L + 1 - MotivicClass.generator("SpecC")
    assert chi_complex(circle) == 0
    assert chi_real(circle) == GaussianInteger(0, 0)
    assert chi_a1(circle).even.gw_equal(GwElement.zero(QQ))


def test_generator_spec_consistency_enforced():
    with pytest.raises(ArithdtError):
        GeneratorSpec("bad", 3, GaussianInteger(0, 0),
                      GwAlphaElement.from_even(GwElement.hyperbolic(QQ)))


def test_quadratic_point_generators():
    gen = quadratic_point_generator(-1)
    assert gen.chi_a1.even.gw_equal(GwElement.hyperbolic(QQ))
    assert gen.chi_real == GaussianInteger(0, 0)
    real_split = quadratic_point_generator(2)
    assert real_split.chi_real == GaussianInteger(2, 0)
    with pytest.raises(ArithdtError):
        quadratic_point_generator(4)


def test_generator_products_rejected():
    c = MotivicClass.generator("SpecC")
    with pytest.raises(GeneratorProductError):
        c * c
    with pytest.raises(GeneratorProductError):
        c * MotivicClass.generator("other")
    # Tate times generator is fine and distributes
    assert (L * c) + c == (L + 1) * c


def test_unknown_generator_raises_on_specialization():
    ghost = MotivicClass.generator("ghost")
    with pytest.raises(ArithdtError):
        chi_complex(ghost)


def test_rendering():
    assert MotivicClass.zero().render() == "0"
    assert (2 * L - 1 + MotivicClass.u_power(-1, 3)).render() == "2*L - 1 + 3*L^{-1/2}"
    assert MotivicClass.u_power(3).render() == "L^{3/2}"
    assert (L + 1 - MotivicClass.generator("SpecC")).render() == "L + 1 - [SpecC]"


def test_json_round_trip():
    cls = 2 * L - 1 + MotivicClass.u_power(-3, 4) + MotivicClass.generator("SpecC", 2) * L
    assert MotivicClass.from_json_dict(cls.to_json_dict()) == cls
