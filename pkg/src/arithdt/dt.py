"""Degree-zero DT partition functions of affine 3-space and their refinements.

The motivic series is the double product

    Z(t) = prod_{m>=1} prod_{k=0}^{m-1} (1 - L^{k+2-m/2} t^m)^{-1},

taken as the definition over any characteristic-zero field (the classes it
is built from do not depend on the field).  Its image under the A^1-Euler
characteristic factors into a quadratic-form-valued product; rank recovers
the MacMahon plane-partition series M(-t) and signature the symmetric
MacMahon series M^sym(-it).

Truncation lemma: the m-th factor of each infinite product is 1 + O(t^m),
so a series of order N only needs the finitely many factors with m <= N;
the truncated result is exact.

On the moduli side, the Hilbert scheme of points of A^3 is the critical
locus of (A, B, C, v) -> Tr([A, B] C) on a space of matrix triples; the
gradient identity that drives that description is implemented and tested
here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArithdtError
from .fields import BaseField, QQ
from .gw import GwAlphaElement, GwElement, alpha_power
from .motivic import MotivicClass, chi_a1
from .series import (
    GAUSSIAN_RING,
    INT_RING,
    MOTIVIC_RING,
    TruncatedSeries,
    gw_alpha_ring,
)


def z_motivic(order: int) -> TruncatedSeries:
    """Motivic partition function, coefficients in Z[L^{1/2}, L^{-1/2}]."""
    if order < 1:
        raise ArithdtError("order must be positive")
    result = TruncatedSeries.one(MOTIVIC_RING, order)
    for m in range(1, order + 1):
        for k in range(m):
            factor = TruncatedSeries.from_terms(
                MOTIVIC_RING,
                order,
                {0: MotivicClass.one(), m: -MotivicClass.u_power(2 * k + 4 - m)},
            )
            result = result * factor.inverse()
    return result


def z_arithmetic(order: int, field: BaseField = QQ) -> TruncatedSeries:
    """Quadratic-form refinement, coefficients in GW(k)(alpha).

    Built directly from the factored product: for each m the m paired signs
    combine into (1 - (alpha t)^m H + <-1> (alpha t)^{2m})^{-floor(m/2)},
    and odd m leave one unpaired factor (1 - (<-1>alpha t)^m)^{-1}.  The
    <-1> on the unpaired factor is forced by the morphism (L^{-m/2} maps to
    alpha^{-m} = <-1>^m alpha^m) and by the real specialization, which
    expands in powers of -it.
    """
    if order < 1:
        raise ArithdtError("order must be positive")
    ring = gw_alpha_ring(field)
    one = GwAlphaElement.one(field)
    minus_one = GwElement.unit(field, -1)
    hyper = GwAlphaElement.from_even(GwElement.hyperbolic(field))
    result = TruncatedSeries.one(ring, order)
    for n in range(1, (order + 1) // 2 + 1):
        m = 2 * n - 1
        if m > order:
            break
        coeff = alpha_power(field, m) * minus_one
        factor = TruncatedSeries.from_terms(ring, order, {0: one, m: -coeff})
        result = result * factor.inverse()
    for n in range(2, order + 1):
        exponent = n // 2
        if exponent == 0:
            continue
        a_n = alpha_power(field, n)
        a_2n = alpha_power(field, 2 * n)
        terms = {0: one, n: -(a_n * hyper)}
        if 2 * n <= order:
            terms[2 * n] = minus_one * a_2n
        factor = TruncatedSeries.from_terms(ring, order, terms)
        result = result * factor ** (-exponent)
    return result


def macmahon(order: int) -> TruncatedSeries:
    """M(q) = prod (1 - q^n)^{-n}: the plane-partition counting series."""
    if order < 1:
        raise ArithdtError("order must be positive")
    result = TruncatedSeries.one(INT_RING, order)
    for n in range(1, order + 1):
        factor = TruncatedSeries.from_terms(INT_RING, order, {0: 1, n: -1})
        result = result * factor ** (-n)
    return result


def macmahon_symmetric(order: int) -> TruncatedSeries:
    """M^sym(q) = prod (1 - q^{2n-1})^{-1} (1 - q^{2n})^{-floor(n/2)}."""
    if order < 1:
        raise ArithdtError("order must be positive")
    result = TruncatedSeries.one(INT_RING, order)
    n = 1
    while 2 * n - 1 <= order:
        factor = TruncatedSeries.from_terms(INT_RING, order, {0: 1, 2 * n - 1: -1})
        result = result * factor.inverse()
        n += 1
    n = 1
    while 2 * n <= order:
        if n // 2:
            factor = TruncatedSeries.from_terms(INT_RING, order, {0: 1, 2 * n: -1})
            result = result * factor ** (-(n // 2))
        n += 1
    return result


@dataclass(frozen=True)
class PartitionFunctionResult:
    """The motivic series with its arithmetic, complex and real images."""

    motivic: TruncatedSeries
    arithmetic: TruncatedSeries
    complex: TruncatedSeries
    real: TruncatedSeries


def partition_function(order: int, field: BaseField = QQ) -> PartitionFunctionResult:
    motivic = z_motivic(order)
    arithmetic = motivic.map_coeffs(lambda c: chi_a1(c, field), gw_alpha_ring(field))
    complex_series = arithmetic.map_coeffs(lambda q: q.numeric_complex(), INT_RING)
    real_series = arithmetic.map_coeffs(lambda q: q.numeric_real(), GAUSSIAN_RING)
    return PartitionFunctionResult(motivic, arithmetic, complex_series, real_series)


# -- the trace potential on matrix triples -------------------------------------


def _as_matrix(rows, n: int) -> tuple:
    rows = [tuple(Fraction(x) for x in row) for row in rows]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ArithdtError("matrices must be square and of equal size")
    return tuple(rows)


@dataclass(frozen=True)
class MatrixTriple:
    """(A, B, C, v): three n x n rational matrices and a cyclic vector."""

    a: tuple
    b: tuple
    c: tuple
    v: tuple

    @classmethod
    def of(cls, a, b, c, v=None) -> "MatrixTriple":
        n = len(a)
        if v is None:
            v = [0] * n
        v = tuple(Fraction(x) for x in v)
        if len(v) != n:
            raise ArithdtError("vector length must match matrix size")
        return cls(_as_matrix(a, n), _as_matrix(b, n), _as_matrix(c, n), v)

    @property
    def size(self) -> int:
        return len(self.a)


def _matmul(x, y) -> tuple:
    n = len(x)
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _matsub(x, y) -> tuple:
    return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def _transpose(x) -> tuple:
    return tuple(tuple(row) for row in zip(*x))


def _trace(x) -> Fraction:
    return sum((x[i][i] for i in range(len(x))), Fraction(0))


def commutator(x, y) -> tuple:
    return _matsub(_matmul(x, y), _matmul(y, x))


def trace_potential(t: MatrixTriple) -> Fraction:
    """Tr([A, B] C)."""
    return _trace(_matmul(commutator(t.a, t.b), t.c))


def trace_potential_gradient(t: MatrixTriple) -> tuple:
    """Gradient in all 3n^2 matrix entries: ([B,C]^T, [C,A]^T, [A,B]^T).

    d/dX of Tr(XY) is Y^T entrywise, and the cyclic identities
    Tr([A,B]C) = Tr([B,C]A) = Tr([C,A]B) give all three blocks.
    """
    return (
        _transpose(commutator(t.b, t.c)),
        _transpose(commutator(t.c, t.a)),
        _transpose(commutator(t.a, t.b)),
    )


def gradient_vanishes(t: MatrixTriple) -> bool:
    zero = tuple(tuple(Fraction(0) for _ in range(t.size)) for _ in range(t.size))
    return all(g == zero for g in trace_potential_gradient(t))
