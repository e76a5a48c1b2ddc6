"""Truncated formal power series in one variable over a caller-supplied ring.

Coefficients live in any commutative ring whose elements support +, -, *
and ==; the ring itself is described by a small adapter carrying its zero
and one.  A series of order N stores coefficients of t^0 .. t^N and every
operation truncates eagerly at that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArithdtError, NonUnitError, SeriesMismatchError
from .fields import BaseField, QQ
from .gw import GAUSSIAN_ONE, GAUSSIAN_ZERO, GwAlphaElement, GwElement
from .motivic import MOT_ONE, MOT_ZERO


@dataclass(frozen=True)
class CoefficientRing:
    """Adapter naming a coefficient ring and carrying its constants."""

    name: str
    zero: object
    one: object


INT_RING = CoefficientRing("Z", 0, 1)
FRACTION_RING = CoefficientRing("Q", Fraction(0), Fraction(1))
GAUSSIAN_RING = CoefficientRing("Z[i]", GAUSSIAN_ZERO, GAUSSIAN_ONE)
MOTIVIC_RING = CoefficientRing("motivic", MOT_ZERO, MOT_ONE)


def gw_ring(field: BaseField = QQ) -> CoefficientRing:
    return CoefficientRing(f"GW({field})", GwElement.zero(field), GwElement.one(field))


def gw_alpha_ring(field: BaseField = QQ) -> CoefficientRing:
    return CoefficientRing(
        f"GW({field})(a)", GwAlphaElement.zero(field), GwAlphaElement.one(field)
    )


class TruncatedSeries:
    """Power series in t modulo t^{order+1}, coefficients in a fixed ring."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: CoefficientRing, order: int, coeffs):
        if order < 1:
            raise ArithdtError("series order must be a positive integer")
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ArithdtError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.order = order
        self.coeffs = tuple(coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return cls(ring, order, [ring.zero] * (order + 1))

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return cls(ring, order, [ring.one] + [ring.zero] * order)

    @classmethod
    def from_terms(cls, ring: CoefficientRing, order: int, terms: dict) -> "TruncatedSeries":
        coeffs = [ring.zero] * (order + 1)
        for deg, c in terms.items():
            if deg < 0:
                raise ArithdtError("power series have no negative degrees")
            if deg <= order:
                coeffs[deg] = coeffs[deg] + c if coeffs[deg] != ring.zero else c
        return cls(ring, order, coeffs)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise SeriesMismatchError(f"orders differ: {self.order} vs {other.order}")
        if self.ring != other.ring:
            raise SeriesMismatchError(f"rings differ: {self.ring.name} vs {other.ring.name}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(
            self.ring, self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(
            self.ring, self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, self.order, [-a for a in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        zero = self.ring.zero
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b == zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.ring, self.order, out)

    def inverse(self) -> "TruncatedSeries":
        """Two-sided inverse up to the truncation order.

        Requires constant term equal to the ring identity, which covers
        every use in this package.
        """
        if self.coeffs[0] != self.ring.one:
            raise NonUnitError("series inverse requires constant term equal to one")
        zero = self.ring.zero
        out = [self.ring.one] + [zero] * self.order
        for n in range(1, self.order + 1):
            acc = zero
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a == zero:
                    continue
                acc = acc + a * out[n - k]
            out[n] = -acc
        return TruncatedSeries(self.ring, self.order, out)

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse() ** (-e)
        out = TruncatedSeries.one(self.ring, self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def map_coeffs(self, fn, ring: CoefficientRing) -> "TruncatedSeries":
        """Apply a ring morphism termwise, landing in the given ring."""
        return TruncatedSeries(ring, self.order, [fn(c) for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.order, self.coeffs))

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries[{self.ring.name}; order {self.order}]({inner})"

    def to_json_dict(self, encode=None) -> dict:
        if encode is None:
            encode = _default_encode
        return {
            "ring": self.ring.name,
            "order": self.order,
            "coeffs": [encode(c) for c in self.coeffs],
        }


def _default_encode(c):
    if hasattr(c, "to_json_dict"):
        return c.to_json_dict()
    if isinstance(c, Fraction):
        return str(c)
    return c
