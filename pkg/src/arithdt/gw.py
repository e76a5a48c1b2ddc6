"""Grothendieck-Witt ring arithmetic over the supported base fields.

A GwElement is a finite integer combination of rank-one forms <a> with a in
canonical square-class form.  Multiplicities may be negative: the ring is a
group completion, so elements are virtual differences of genuine quadratic
forms.  Structural equality (`==`) compares canonical term lists; semantic
equality (`gw_equal`) decides whether two virtual forms define the same
class, using the complete system of invariants of each field:

* C: rank;
* R: rank and signature;
* F_p: rank and discriminant;
* Q: rank, signature, discriminant and Hasse invariants at 2 and at every
  prime dividing a diagonal entry (the local symbol is +1 elsewhere).

GwAlphaElement adjoins a formal square root alpha of <-1>, the receptacle
for half powers of the Lefschetz class under the compactly supported
A^1-Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    ArithdtError,
    FieldMismatchError,
    SingularMatrixError,
    UnsupportedFieldError,
)
from .fields import (
    BaseField,
    QQ,
    SquareClass,
    is_prime,
    legendre_symbol,
    prime_factors,
    square_class_rep,
    squarefree_part,
)

INFINITE_PLACE = "inf"


@dataclass(frozen=True)
class GaussianInteger:
    """Exact element of Z[i], the value ring of the real Euler characteristic."""

    re: int
    im: int

    def __add__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInteger":
        return GaussianInteger(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        if isinstance(other, GaussianInteger):
            return GaussianInteger(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GaussianInteger":
        if n < 0:
            raise ArithdtError("negative powers of Gaussian integers are not defined here")
        out = GaussianInteger(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+}i"

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        return {"re": self.re, "im": self.im}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GaussianInteger":
        return cls(int(data["re"]), int(data["im"]))


GAUSSIAN_ZERO = GaussianInteger(0, 0)
GAUSSIAN_ONE = GaussianInteger(1, 0)
GAUSSIAN_I = GaussianInteger(0, 1)

# i^e for e mod 4
_I_POWERS = (GAUSSIAN_ONE, GAUSSIAN_I, GaussianInteger(-1, 0), GaussianInteger(0, -1))


def gaussian_i_power(e: int) -> GaussianInteger:
    return _I_POWERS[e % 4]


def _term_sort_key(rep: int) -> tuple:
    return (abs(rep), rep < 0)


def _mul_reps(field: BaseField, a: int, b: int) -> int:
    """Product of two canonical square-class representatives, canonical again."""
    if field.kind == BaseField.RATIONALS:
        # both square-free: strip the shared part, the rest is square-free
        g = gcd(abs(a), abs(b))
        return (a // g) * (b // g)
    if field.kind == BaseField.REALS:
        return a * b
    if field.kind == BaseField.COMPLEXES:
        return 1
    return square_class_rep(field, a * b)


class GwElement:
    """An element of GW(k): a formal Z-combination of square classes <a>."""

    __slots__ = ("field", "terms")

    def __init__(self, field: BaseField, terms=()):
        acc: dict[int, int] = {}
        if hasattr(terms, "items"):
            terms = terms.items()
        for rep, mult in terms:
            mult = int(mult)
            if mult == 0:
                continue
            rep = square_class_rep(field, rep)
            acc[rep] = acc.get(rep, 0) + mult
        self.field = field
        self.terms = tuple(sorted(((r, m) for r, m in acc.items() if m != 0), key=lambda t: _term_sort_key(t[0])))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: BaseField = QQ) -> "GwElement":
        return cls(field)

    @classmethod
    def unit(cls, field: BaseField, a) -> "GwElement":
        """The rank-one form <a>."""
        return cls(field, [(square_class_rep(field, a), 1)])

    @classmethod
    def one(cls, field: BaseField = QQ) -> "GwElement":
        return cls.unit(field, 1)

    @classmethod
    def hyperbolic(cls, field: BaseField = QQ) -> "GwElement":
        """H = <1> + <-1>."""
        return cls(field, [(1, 1), (square_class_rep(field, -1), 1)])

    @classmethod
    def from_diagonal(cls, field: BaseField, entries) -> "GwElement":
        """Sum of <a> over the (nonzero) diagonal entries a."""
        return cls(field, [(square_class_rep(field, a), 1) for a in entries])

    # -- ring structure ----------------------------------------------------

    def _check_field(self, other: "GwElement") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"mixed base fields {self.field} and {other.field}")

    def __add__(self, other: "GwElement") -> "GwElement":
        if not isinstance(other, GwElement):
            return NotImplemented
        self._check_field(other)
        acc = dict(self.terms)
        for rep, mult in other.terms:
            acc[rep] = acc.get(rep, 0) + mult
        return GwElement(self.field, acc)

    def __sub__(self, other: "GwElement") -> "GwElement":
        return self + (-other)

    def __neg__(self) -> "GwElement":
        return GwElement(self.field, [(r, -m) for r, m in self.terms])

    def __mul__(self, other):
        if isinstance(other, int):
            return GwElement(self.field, [(r, m * other) for r, m in self.terms])
        if not isinstance(other, GwElement):
            return NotImplemented
        self._check_field(other)
        acc: dict[int, int] = {}
        for r1, m1 in self.terms:
            for r2, m2 in other.terms:
                rep = _mul_reps(self.field, r1, r2)
                acc[rep] = acc.get(rep, 0) + m1 * m2
        return GwElement(self.field, acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GwElement)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field, self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    # -- invariants ----------------------------------------------------------

    def rank(self) -> int:
        return sum(m for _, m in self.terms)

    def signature(self) -> int:
        if not self.field.is_ordered:
            raise UnsupportedFieldError(f"signature is undefined over {self.field}")
        return sum(m if r > 0 else -m for r, m in self.terms)

    def discriminant(self) -> SquareClass:
        """Square class of the product of diagonal entries with multiplicity.

        Only defined on genuine forms (nonnegative multiplicities); a virtual
        difference has no diagonal representative to read the product from.
        """
        if any(m < 0 for _, m in self.terms):
            raise ArithdtError("discriminant requires a diagonal representative "
                               "(all multiplicities nonnegative)")
        rep = 1
        for r, m in self.terms:
            if m % 2:
                rep = _mul_reps(self.field, rep, r)
        return SquareClass(self.field, rep)

    def diagonal_entries(self) -> list[int]:
        """Diagonal representative as a multiplicity-expanded list of reps."""
        if any(m < 0 for _, m in self.terms):
            raise ArithdtError("no diagonal representative: negative multiplicities present")
        out: list[int] = []
        for r, m in self.terms:
            out.extend([r] * m)
        return out

    def _split(self) -> tuple["GwElement", "GwElement"]:
        pos = GwElement(self.field, [(r, m) for r, m in self.terms if m > 0])
        neg = GwElement(self.field, [(r, -m) for r, m in self.terms if m < 0])
        return pos, neg

    def gw_equal(self, other: "GwElement") -> bool:
        """Whether self and other are the same class in GW(k).

        Decided on the difference self - other, split into two genuine forms
        whose complete invariants are compared (Witt cancellation makes this
        sound for the group completion).
        """
        if not isinstance(other, GwElement):
            raise ArithdtError("gw_equal compares GwElements")
        self._check_field(other)
        pos, neg = (self - other)._split()
        if pos.rank() != neg.rank():
            return False
        kind = self.field.kind
        if kind == BaseField.COMPLEXES:
            return True
        if kind == BaseField.REALS:
            return pos.signature() == neg.signature()
        if kind == BaseField.FINITE:
            return pos.discriminant() == neg.discriminant()
        if pos.signature() != neg.signature():
            return False
        if pos.discriminant() != neg.discriminant():
            return False
        a_entries = pos.diagonal_entries()
        b_entries = neg.diagonal_entries()
        places = {2}
        for entry in a_entries + b_entries:
            places.update(prime_factors(entry))
        return all(
            hasse_invariant(a_entries, p) == hasse_invariant(b_entries, p)
            for p in sorted(places)
        )

    def to_field(self, field: BaseField) -> "GwElement":
        """Reinterpret the same diagonal entries over another base field.

        Only meaningful when every representative is a unit there (always
        true from Q to R or C; may fail into F_p).
        """
        if field == self.field:
            return self
        return GwElement(field, [(r, m) for r, m in self.terms])

    # -- rendering and JSON --------------------------------------------------

    def render(self, contract_h: bool = False) -> str:
        terms = dict(self.terms)
        pieces: list[str] = []
        if contract_h:
            m_pos, m_neg = terms.get(1, 0), terms.get(-1, 0)
            h = 0
            if m_pos > 0 and m_neg > 0:
                h = min(m_pos, m_neg)
            elif m_pos < 0 and m_neg < 0:
                h = max(m_pos, m_neg)
            if h:
                for rep in (1, -1):
                    terms[rep] -= h
                    if not terms[rep]:
                        del terms[rep]
                pieces.append(("H", h))
        entries = [(f"<{r}>", m) for r, m in sorted(terms.items(), key=lambda t: _term_sort_key(t[0]))]
        if contract_h and pieces:
            entries = pieces + entries
        if not entries:
            return "0"
        out = []
        for idx, (sym, mult) in enumerate(entries):
            sign = "-" if mult < 0 else "+"
            mag = abs(mult)
            body = sym if mag == 1 else f"{mag}*{sym}"
            if idx == 0:
                out.append(body if mult > 0 else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GwElement({self.field}; {self.render()})"

    def to_json_dict(self) -> dict:
        return {"field": self.field.label(), "terms": [[r, m] for r, m in self.terms]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GwElement":
        from .fields import parse_field_label

        field = parse_field_label(data["field"])
        return cls(field, [(int(r), int(m)) for r, m in data["terms"]])


class GwAlphaElement:
    """even + odd*alpha in GW(k)(alpha), where alpha^2 = <-1>."""

    __slots__ = ("even", "odd")

    def __init__(self, even: GwElement, odd: GwElement):
        if even.field != odd.field:
            raise FieldMismatchError("even and odd parts over different fields")
        self.even = even
        self.odd = odd

    @property
    def field(self) -> BaseField:
        return self.even.field

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: BaseField = QQ) -> "GwAlphaElement":
        z = GwElement.zero(field)
        return cls(z, z)

    @classmethod
    def one(cls, field: BaseField = QQ) -> "GwAlphaElement":
        return cls(GwElement.one(field), GwElement.zero(field))

    @classmethod
    def alpha(cls, field: BaseField = QQ) -> "GwAlphaElement":
        return cls(GwElement.zero(field), GwElement.one(field))

    @classmethod
    def from_even(cls, even: GwElement) -> "GwAlphaElement":
        return cls(even, GwElement.zero(even.field))

    # -- ring structure ----------------------------------------------------

    def _check_field(self, other: "GwAlphaElement") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"mixed base fields {self.field} and {other.field}")

    def __add__(self, other: "GwAlphaElement") -> "GwAlphaElement":
        if not isinstance(other, GwAlphaElement):
            return NotImplemented
        self._check_field(other)
        return GwAlphaElement(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "GwAlphaElement") -> "GwAlphaElement":
        return self + (-other)

    def __neg__(self) -> "GwAlphaElement":
        return GwAlphaElement(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, int):
            return GwAlphaElement(self.even * other, self.odd * other)
        if isinstance(other, GwElement):
            other = GwAlphaElement.from_even(other)
        if not isinstance(other, GwAlphaElement):
            return NotImplemented
        self._check_field(other)
        minus_one = GwElement.unit(self.field, -1)
        even = self.even * other.even + minus_one * (self.odd * other.odd)
        odd = self.even * other.odd + self.odd * other.even
        return GwAlphaElement(even, odd)

    def __rmul__(self, other):
        if isinstance(other, (int, GwElement)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GwAlphaElement)
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self) -> int:
        return hash((self.even, self.odd))

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def gw_equal(self, other: "GwAlphaElement") -> bool:
        return self.even.gw_equal(other.even) and self.odd.gw_equal(other.odd)

    # -- specializations -----------------------------------------------------

    def rank(self) -> int:
        """Total rank of the underlying form, alpha treated as a unit."""
        return self.even.rank() + self.odd.rank()

    def numeric_complex(self) -> int:
        """Rank termwise with alpha sent to -1: the count over the closure."""
        return self.even.rank() - self.odd.rank()

    def numeric_real(self) -> GaussianInteger:
        """Signature termwise with alpha sent to i: the signed real count."""
        return GaussianInteger(self.even.signature(), self.odd.signature())

    def to_field(self, field: BaseField) -> "GwAlphaElement":
        return GwAlphaElement(self.even.to_field(field), self.odd.to_field(field))

    def render(self, contract_h: bool = False) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if not self.even.is_zero():
            parts.append(self.even.render(contract_h))
        if not self.odd.is_zero():
            body = self.odd.render(contract_h)
            if " " in body or body.startswith("-"):
                body = f"({body})"
            parts.append(f"a*{body}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GwAlphaElement({self.field}; {self.render()})"

    def to_json_dict(self) -> dict:
        return {"even": self.even.to_json_dict(), "odd": self.odd.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GwAlphaElement":
        return cls(GwElement.from_json_dict(data["even"]), GwElement.from_json_dict(data["odd"]))


def alpha_power(field: BaseField, e: int) -> GwAlphaElement:
    """alpha^e for any integer e, using alpha^2 = <-1> and alpha^-1 = <-1>alpha."""
    if e % 2 == 0:
        j = e // 2
        rep = -1 if j % 2 else 1
        return GwAlphaElement.from_even(GwElement.unit(field, rep))
    j = (e - 1) // 2
    rep = -1 if j % 2 else 1
    return GwAlphaElement(GwElement.zero(field), GwElement.unit(field, rep))


# -- local symbols and form classification ----------------------------------


def _two_adic_split(x: Fraction) -> tuple[int, int]:
    """Valuation at 2 and the odd part mod 8 of a nonzero rational."""
    n = x.numerator * x.denominator  # same square class, and v_2 only matters mod 2
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v, n % 8


def _p_adic_split(x: Fraction, p: int) -> tuple[int, int]:
    """Valuation at p and the unit part mod p of a nonzero rational."""
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    unit = num * pow(den, -1, p) % p
    return v, unit


def hilbert_symbol(a, b, place) -> int:
    """The local Hilbert symbol (a, b) at a finite prime or at infinity."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ArithdtError("Hilbert symbols require nonzero arguments")
    if place in (INFINITE_PLACE, float("inf")):
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    if not is_prime(p):
        raise ArithdtError(f"place must be a prime or infinity, got {place!r}")
    if p == 2:
        va, ua = _two_adic_split(a)
        vb, ub = _two_adic_split(b)
        eps_a, eps_b = (ua - 1) // 2 % 2, (ub - 1) // 2 % 2
        om_a, om_b = (ua * ua - 1) // 8 % 2, (ub * ub - 1) // 8 % 2
        exponent = eps_a * eps_b + va * om_b + vb * om_a
        return -1 if exponent % 2 else 1
    va, ua = _p_adic_split(a, p)
    vb, ub = _p_adic_split(b, p)
    sym = 1
    if va * vb % 2:
        sym *= legendre_symbol(-1, p)
    if vb % 2:
        sym *= legendre_symbol(ua, p)
    if va % 2:
        sym *= legendre_symbol(ub, p)
    return sym


def hasse_invariant(entries, place) -> int:
    """Hasse invariant of the diagonal form <a_1,...,a_n> at one place."""
    entries = list(entries)
    sym = 1
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            sym *= hilbert_symbol(entries[i], entries[j], place)
    return sym


def diagonalize_symmetric(mat, field: BaseField = QQ) -> GwElement:
    """GW class of a nondegenerate symmetric rational matrix.

    Symmetric congruence reduction: the first nonzero diagonal entry is
    used as a pivot; when every remaining diagonal entry vanishes, the
    lexicographically first nonzero off-diagonal pair is consumed as a
    hyperbolic plane.  Deterministic by construction.
    """
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ArithdtError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ArithdtError("matrix is not symmetric")

    entries: list[Fraction] = []
    active = list(range(n))

    def eliminate_rows(targets, pivots, coeffs):
        # rows then columns: S^T M S with S built from the pivot columns
        for k, cs in zip(targets, coeffs):
            for piv, c in zip(pivots, cs):
                if c:
                    for l in range(n):
                        m[k][l] -= c * m[piv][l]
        for k, cs in zip(targets, coeffs):
            for piv, c in zip(pivots, cs):
                if c:
                    for l in range(n):
                        m[l][k] -= c * m[l][piv]

    while active:
        pivot = next((i for i in active if m[i][i] != 0), None)
        if pivot is not None:
            piv = m[pivot][pivot]
            others = [j for j in active if j != pivot]
            eliminate_rows(others, [pivot], [[m[j][pivot] / piv] for j in others])
            entries.append(piv)
            active.remove(pivot)
            continue
        block = next(
            ((i, j) for i in active for j in active if i < j and m[i][j] != 0),
            None,
        )
        if block is None:
            raise SingularMatrixError("matrix is singular")
        i, j = block
        b = m[i][j]
        others = [k for k in active if k not in (i, j)]
        eliminate_rows(others, [i, j], [[m[k][j] / b, m[k][i] / b] for k in others])
        entries.extend([Fraction(1), Fraction(-1)])
        active.remove(i)
        active.remove(j)

    return GwElement.from_diagonal(field, entries)


def trace_form(d: int, u, v=0) -> GwElement:
    """Transfer of <beta> from Q(sqrt(d)) to Q, for beta = u + v*sqrt(d).

    The Gram matrix of x -> Tr(beta * x^2) on the basis (1, sqrt(d)) is
    [[2u, 2dv], [2dv, 2du]]; the result is its diagonalization in GW(Q).
    """
    d = int(d)
    if d in (0, 1) or squarefree_part(d) != d:
        raise ArithdtError(f"d must be a square-free integer != 1, got {d}")
    u = Fraction(u)
    v = Fraction(v)
    if u == 0 and v == 0:
        raise ArithdtError("beta must be nonzero")
    gram = [[2 * u, 2 * d * v], [2 * d * v, 2 * d * u]]
    return diagonalize_symmetric(gram, QQ)
