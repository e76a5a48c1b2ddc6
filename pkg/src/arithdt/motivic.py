"""The Tate subring Z[L^{1/2}, L^{-1/2}] of the ring of motivic weights.

A MotivicClass is a Laurent polynomial in the half power u = L^{1/2} with
integer coefficients (exponents are stored in u-units, so L^{k/2} is exact
for every integer k), optionally extended by named symbolic generators for
point classes that are not Tate -- e.g. the class of Spec C over R.  Only
finitely many generators are ever needed and products of two generator
parts fall outside the supported subring and are rejected.

Three ring morphisms specialize a class:

* ``chi_complex`` sends u to -1 (so L goes to 1): the topological Euler
  characteristic with compact support;
* ``chi_real`` sends u to i (so L goes to -1), with values in Z[i];
* ``chi_a1`` sends u to alpha with alpha^2 = <-1>, with values in
  GW(k)(alpha): the compactly supported A^1-Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArithdtError, GeneratorProductError, InexactDivisionError
from .fields import BaseField, QQ
from .gw import (
    GaussianInteger,
    GwAlphaElement,
    GwElement,
    alpha_power,
    diagonalize_symmetric,
    gaussian_i_power,
)

_UTerms = tuple  # tuple[tuple[int, int], ...], ascending exponents


def _normalize_u(terms) -> _UTerms:
    acc: dict[int, int] = {}
    if hasattr(terms, "items"):
        terms = terms.items()
    for e, c in terms:
        e, c = int(e), int(c)
        if c:
            acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def _add_u(a: _UTerms, b: _UTerms) -> _UTerms:
    acc = dict(a)
    for e, c in b:
        acc[e] = acc.get(e, 0) + c
    return _normalize_u(acc)


def _mul_u(a: _UTerms, b: _UTerms) -> _UTerms:
    acc: dict[int, int] = {}
    for e1, c1 in a:
        for e2, c2 in b:
            acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
    return _normalize_u(acc)


def _neg_u(a: _UTerms) -> _UTerms:
    return tuple((e, -c) for e, c in a)


class MotivicClass:
    """An element of Z[L^{1/2}, L^{-1/2}], possibly with symbolic generators."""

    __slots__ = ("u_terms", "extras")

    def __init__(self, u_terms=(), extras=()):
        self.u_terms: _UTerms = _normalize_u(u_terms)
        if hasattr(extras, "items"):
            extras = extras.items()
        cleaned = []
        for name, coeff in extras:
            coeff = _normalize_u(coeff)
            if coeff:
                cleaned.append((str(name), coeff))
        cleaned.sort()
        self.extras: tuple = tuple(cleaned)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "MotivicClass":
        return cls()

    @classmethod
    def from_int(cls, n: int) -> "MotivicClass":
        return cls([(0, n)])

    @classmethod
    def one(cls) -> "MotivicClass":
        return cls.from_int(1)

    @classmethod
    def u_power(cls, e: int, coeff: int = 1) -> "MotivicClass":
        """coeff * L^{e/2}; e counts half powers."""
        return cls([(e, coeff)])

    @classmethod
    def lefschetz(cls, k: int = 1) -> "MotivicClass":
        """L^k for any integer k."""
        return cls([(2 * k, 1)])

    @classmethod
    def generator(cls, name: str, coeff: int = 1) -> "MotivicClass":
        return cls((), [(name, [(0, coeff)])])

    # -- ring structure ------------------------------------------------------

    def is_tate(self) -> bool:
        return not self.extras

    def __add__(self, other):
        if isinstance(other, int):
            other = MotivicClass.from_int(other)
        if not isinstance(other, MotivicClass):
            return NotImplemented
        acc = dict(self.extras)
        for name, coeff in other.extras:
            acc[name] = _add_u(acc.get(name, ()), coeff)
        return MotivicClass(_add_u(self.u_terms, other.u_terms), acc)

    __radd__ = __add__

    def __neg__(self) -> "MotivicClass":
        return MotivicClass(_neg_u(self.u_terms), [(n, _neg_u(c)) for n, c in self.extras])

    def __sub__(self, other):
        if isinstance(other, int):
            other = MotivicClass.from_int(other)
        if not isinstance(other, MotivicClass):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = MotivicClass.from_int(other)
        if not isinstance(other, MotivicClass):
            return NotImplemented
        if self.extras and other.extras:
            raise GeneratorProductError(
                "product of two non-Tate generator classes is outside the supported subring"
            )
        u = _mul_u(self.u_terms, other.u_terms)
        extras: dict[str, _UTerms] = {}
        for name, coeff in self.extras:
            extras[name] = _add_u(extras.get(name, ()), _mul_u(coeff, other.u_terms))
        for name, coeff in other.extras:
            extras[name] = _add_u(extras.get(name, ()), _mul_u(coeff, self.u_terms))
        return MotivicClass(u, extras)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MotivicClass":
        if n < 0:
            raise ArithdtError("negative powers are only defined for monomials; use u_power")
        out = MotivicClass.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MotivicClass)
            and self.u_terms == other.u_terms
            and self.extras == other.extras
        )

    def __hash__(self) -> int:
        return hash((self.u_terms, self.extras))

    def is_zero(self) -> bool:
        return not self.u_terms and not self.extras

    def min_u_exponent(self) -> int:
        if not self.u_terms:
            raise ArithdtError("zero class has no exponents")
        return self.u_terms[0][0]

    def max_u_exponent(self) -> int:
        if not self.u_terms:
            raise ArithdtError("zero class has no exponents")
        return self.u_terms[-1][0]

    # -- rendering and JSON ----------------------------------------------------

    @staticmethod
    def _render_u_power(e: int) -> str:
        if e == 0:
            return "1"
        if e == 2:
            return "L"
        if e % 2 == 0:
            return f"L^{{{e // 2}}}"
        return f"L^{{{e}/2}}"

    def render(self) -> str:
        pieces: list[tuple[str, int]] = []
        for e, c in reversed(self.u_terms):
            pieces.append((self._render_u_power(e), c))
        for name, coeff in self.extras:
            if len(coeff) == 1 and coeff[0][0] == 0:
                pieces.append((f"[{name}]", coeff[0][1]))
            else:
                inner = MotivicClass(coeff).render()
                pieces.append((f"({inner})*[{name}]", 1))
        if not pieces:
            return "0"
        out = []
        for idx, (sym, c) in enumerate(pieces):
            mag = abs(c)
            body = sym if (mag == 1 and sym != "1") else (str(mag) if sym == "1" else f"{mag}*{sym}")
            if idx == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MotivicClass({self.render()})"

    def to_json_dict(self) -> dict:
        return {
            "u_coeffs": [[e, c] for e, c in self.u_terms],
            "extras": {name: [[e, c] for e, c in coeff] for name, coeff in self.extras},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MotivicClass":
        return cls(
            [(int(e), int(c)) for e, c in data.get("u_coeffs", [])],
            {name: [(int(e), int(c)) for e, c in coeff] for name, coeff in data.get("extras", {}).items()},
        )


L = MotivicClass.lefschetz()
L_HALF = MotivicClass.u_power(1)
L_INV = MotivicClass.lefschetz(-1)
MOT_ONE = MotivicClass.one()
MOT_ZERO = MotivicClass.zero()


@dataclass(frozen=True)
class GeneratorSpec:
    """Specialization data for one symbolic generator class.

    chi_a1 is stored over Q and reinterpreted over the requested field; the
    three values must be mutually consistent (rank and signature of chi_a1
    recover chi_complex and chi_real).
    """

    name: str
    chi_complex: int
    chi_real: GaussianInteger
    chi_a1: GwAlphaElement

    def __post_init__(self) -> None:
        if self.chi_a1.numeric_complex() != self.chi_complex:
            raise ArithdtError(f"generator {self.name}: chi_a1 rank does not match chi_complex")
        if self.chi_a1.numeric_real() != self.chi_real:
            raise ArithdtError(f"generator {self.name}: chi_a1 signature does not match chi_real")


def quadratic_point_generator(d: int) -> GeneratorSpec:
    """Generator for the class of Spec of a quadratic field Q(sqrt(d)).

    The A^1-Euler characteristic is the trace form of the extension, with
    Gram matrix diag(2, 2d) on the basis (1, sqrt(d)).
    """
    from .fields import squarefree_part

    if d in (0, 1) or squarefree_part(d) != d:
        raise ArithdtError(f"d must be a square-free integer != 1, got {d}")
    chi_a1 = GwAlphaElement.from_even(diagonalize_symmetric([[2, 0], [0, 2 * d]], QQ))
    chi_real = GaussianInteger(2 if d > 0 else 0, 0)
    return GeneratorSpec(f"SpecQ(sqrt({d}))", 2, chi_real, chi_a1)


# The class of Spec C over R: a conjugate pair of points.
SPEC_C = GeneratorSpec(
    "SpecC",
    2,
    GaussianInteger(0, 0),
    GwAlphaElement.from_even(GwElement.hyperbolic(QQ)),
)

DEFAULT_GENERATORS: dict[str, GeneratorSpec] = {SPEC_C.name: SPEC_C}


def _resolve_generator(name: str, generators) -> GeneratorSpec:
    table = DEFAULT_GENERATORS if generators is None else generators
    try:
        return table[name]
    except KeyError:
        raise ArithdtError(f"unknown generator class [{name}]") from None


def chi_complex(m: MotivicClass, generators=None) -> int:
    """Evaluate u -> -1; the compactly supported complex Euler characteristic."""
    total = sum(c * (-1) ** (e % 2) for e, c in m.u_terms)
    for name, coeff in m.extras:
        spec = _resolve_generator(name, generators)
        total += sum(c * (-1) ** (e % 2) for e, c in coeff) * spec.chi_complex
    return total


def chi_real(m: MotivicClass, generators=None) -> GaussianInteger:
    """Evaluate u -> i; the compactly supported real Euler characteristic in Z[i]."""
    total = GaussianInteger(0, 0)
    for e, c in m.u_terms:
        total = total + gaussian_i_power(e) * c
    for name, coeff in m.extras:
        spec = _resolve_generator(name, generators)
        part = GaussianInteger(0, 0)
        for e, c in coeff:
            part = part + gaussian_i_power(e) * c
        total = total + part * spec.chi_real
    return total


def chi_a1(m: MotivicClass, field: BaseField = QQ, generators=None) -> GwAlphaElement:
    """Evaluate u -> alpha; the compactly supported A^1-Euler characteristic."""
    total = GwAlphaElement.zero(field)
    for e, c in m.u_terms:
        total = total + alpha_power(field, e) * c
    for name, coeff in m.extras:
        spec = _resolve_generator(name, generators)
        part = GwAlphaElement.zero(field)
        for e, c in coeff:
            part = part + alpha_power(field, e) * c
        total = total + part * spec.chi_a1.to_field(field)
    return total


def projective_space_class(n: int) -> MotivicClass:
    """[P^n] = 1 + L + ... + L^n."""
    if n < 0:
        raise ArithdtError("projective spaces need n >= 0")
    return MotivicClass([(2 * i, 1) for i in range(n + 1)])


def _exact_divide_tate(num: MotivicClass, den: MotivicClass) -> MotivicClass:
    """Exact division in Z[u, u^{-1}]; raises if the quotient is not there."""
    if not num.is_tate() or not den.is_tate():
        raise ArithdtError("exact division is only defined on the Tate subring")
    if den.is_zero():
        raise ArithdtError("division by zero")
    if num.is_zero():
        return MotivicClass.zero()
    from fractions import Fraction

    shift_num = num.min_u_exponent()
    shift_den = den.min_u_exponent()
    a = [Fraction(0)] * (num.max_u_exponent() - shift_num + 1)
    for e, c in num.u_terms:
        a[e - shift_num] = Fraction(c)
    b = [Fraction(0)] * (den.max_u_exponent() - shift_den + 1)
    for e, c in den.u_terms:
        b[e - shift_den] = Fraction(c)
    if len(a) < len(b):
        raise InexactDivisionError("division is not exact (degree too small)")
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = a[:]
    for k in range(len(quot) - 1, -1, -1):
        coeff = rem[k + len(b) - 1] / b[-1]
        quot[k] = coeff
        if coeff:
            for j, bc in enumerate(b):
                rem[k + j] -= coeff * bc
    if any(rem):
        raise InexactDivisionError("division left a nonzero remainder")
    terms = []
    for k, c in enumerate(quot):
        if c:
            if c.denominator != 1:
                raise InexactDivisionError("quotient has non-integer coefficients")
            terms.append((k + shift_num - shift_den, int(c)))
    return MotivicClass(terms)


def grassmannian_class(n: int, k: int) -> MotivicClass:
    """[Gr(n, k)] as the Gaussian-binomial quotient, by exact division in L.

    An inexact division here signals an implementation bug, not bad input.
    """
    if not 0 <= k <= n:
        raise ArithdtError("Grassmannians need 0 <= k <= n")

    def q_factorial(j: int) -> MotivicClass:
        out = MotivicClass.one()
        for i in range(1, j + 1):
            out = out * (MotivicClass.lefschetz(i) - MOT_ONE)
        return out

    return _exact_divide_tate(q_factorial(n), q_factorial(n - k) * q_factorial(k))
