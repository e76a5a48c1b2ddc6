"""Motivic nearby classes and virtual classes of critical loci.

The user supplies the combinatorial shadow of a simple-normal-crossing
resolution of the zero fiber: for each nonempty index set I of exceptional
components, the class of the (Galois-covered) open stratum and the
component multiplicities.  The nearby class is the alternating sum

    S = sum over I of (1 - L)^(|I| - 1) * [stratum_I]

and the virtual class of a critical locus is -L^(-dim/2) (S - [X_0]).
Coverings are not constructed here; their classes are input.  Monodromy
orders m_I = gcd of the multiplicities are recorded but not acted on: all
classes are assumed to lie in the subring with trivial action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import InputDataError
from .motivic import L, MOT_ONE, MotivicClass


@dataclass(frozen=True)
class StratumRecord:
    """One open stratum E_I with its covering class and multiplicities."""

    index_set: frozenset
    stratum_class: MotivicClass
    multiplicities: tuple = field(default=())

    def __post_init__(self) -> None:
        if not self.index_set:
            raise InputDataError("stratum index set must be nonempty")
        object.__setattr__(self, "index_set", frozenset(self.index_set))
        mults = dict(self.multiplicities) if not isinstance(self.multiplicities, dict) else self.multiplicities
        if set(mults) != set(self.index_set):
            raise InputDataError("multiplicities must be given exactly on the index set")
        if any(int(n) <= 0 for n in mults.values()):
            raise InputDataError("multiplicities must be positive integers")
        object.__setattr__(
            self, "multiplicities", tuple(sorted((i, int(n)) for i, n in mults.items()))
        )

    @classmethod
    def of(cls, indices, stratum_class: MotivicClass, multiplicities=None) -> "StratumRecord":
        indices = frozenset(indices)
        if multiplicities is None:
            multiplicities = {i: 1 for i in indices}
        return cls(indices, stratum_class, multiplicities)

    @property
    def monodromy_order(self) -> int:
        """m_I: gcd of the multiplicities over the index set."""
        out = 0
        for _, n in self.multiplicities:
            out = gcd(out, n)
        return out

    def to_json_dict(self) -> dict:
        return {
            "I": sorted(self.index_set),
            "mult": {str(i): n for i, n in self.multiplicities},
            "class": self.stratum_class.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "StratumRecord":
        try:
            indices = [int(i) for i in data["I"]]
            mults = {int(i): int(n) for i, n in data["mult"].items()}
            stratum_class = MotivicClass.from_json_dict(data["class"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputDataError(f"malformed stratum record: {exc}") from exc
        return cls(frozenset(indices), stratum_class, mults)


@dataclass(frozen=True)
class SncData:
    """Strata of one resolution, the ambient dimension, and [X_0].

    Records with equal index sets are allowed and simply add up; the sum
    below is linear in the stratum classes.
    """

    strata: tuple
    ambient_dimension: int
    central_fiber_class: MotivicClass | None = None

    def __post_init__(self) -> None:
        if self.ambient_dimension < 1:
            raise InputDataError("ambient dimension must be at least 1")
        object.__setattr__(self, "strata", tuple(self.strata))

    def to_json_dict(self) -> dict:
        out = {
            "dim": self.ambient_dimension,
            "strata": [s.to_json_dict() for s in self.strata],
        }
        if self.central_fiber_class is not None:
            out["x0_class"] = self.central_fiber_class.to_json_dict()
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SncData":
        try:
            dim = int(data["dim"])
            strata = tuple(StratumRecord.from_json_dict(s) for s in data.get("strata", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputDataError(f"malformed SNC data: {exc}") from exc
        x0 = data.get("x0_class")
        central = MotivicClass.from_json_dict(x0) if x0 is not None else None
        return cls(strata, dim, central)


def nearby_class(data: SncData) -> MotivicClass:
    """S = sum over nonempty I of (1 - L)^(|I|-1) [stratum_I]."""
    total = MotivicClass.zero()
    for record in data.strata:
        weight = (MOT_ONE - L) ** (len(record.index_set) - 1)
        total = total + weight * record.stratum_class
    return total


def local_nearby_class(data: SncData) -> MotivicClass:
    """Same alternating sum, taken on fiber classes over a chosen point.

    The caller restricts the stratum classes to the fiber; the combinatorial
    sum is identical to the global one.
    """
    return nearby_class(data)


def virtual_class_critical_locus(
    s_f: MotivicClass, x0: MotivicClass, dim_x: int
) -> MotivicClass:
    """-L^(-dim/2) (S_f - [X_0]); odd dimensions use the half power of L."""
    return -MotivicClass.u_power(-dim_x) * (s_f - x0)


def virtual_class_torus(x0: MotivicClass, x1: MotivicClass, dim_x: int) -> MotivicClass:
    """-L^(-dim/2) ([X_1] - [X_0]); the caller asserts circle-compact equivariance."""
    return -MotivicClass.u_power(-dim_x) * (x1 - x0)
