"""Local algebraic degrees via residue pairings on local algebras.

For a polynomial map P: A^n -> A^n with an isolated zero at the origin, the
local degree is the Grothendieck-Witt class of the symmetric bilinear form
(p, q) -> phi(p*q) on the quotient algebra A = Q[x]/(P), where phi is any
linear functional taking the value 1 on the distinguished socle element
E = det(J)/dim(A) (characteristic zero lets the Jacobian determinant stand
in for the Bezoutian trace element).  The class does not depend on the
choice of phi.

The gradient version refines the Milnor number of an isolated hypersurface
singularity, and a report-producing checker compares it against the
A^1-Euler characteristic of a user-supplied motivic Milnor fiber.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    ArithdtError,
    DegenerateSystemError,
    InputDataError,
    SingularMatrixError,
    UnsupportedExtensionError,
)
from .fields import BaseField, QQ, squarefree_part
from .groebner import QuotientAlgebra, grevlex_key
from .gw import GwAlphaElement, GwElement, diagonalize_symmetric, trace_form
from .motivic import chi_a1
from .multipoly import MultiPoly


@dataclass(frozen=True)
class EklResult:
    """Residue-pairing class of a map with isolated zero at the origin."""

    gw_class: GwElement
    rank: int
    gram: tuple
    distinguished_socle: MultiPoly
    algebra: QuotientAlgebra


@dataclass(frozen=True)
class ConjugatePair:
    """A conjugate pair of points with coordinates u + v*sqrt(d) in Q(sqrt(d))."""

    d: int
    coords: tuple

    def __post_init__(self) -> None:
        if self.d in (0, 1) or squarefree_part(self.d) != self.d:
            raise ArithdtError("d must be a square-free integer != 1")


def _jacobian_determinant(system) -> MultiPoly:
    n = len(system)
    variables = system[0].variables
    rows = [[p.partial(j) for j in range(n)] for p in system]

    def det(idx_rows, idx_cols):
        if len(idx_rows) == 1:
            return rows[idx_rows[0]][idx_cols[0]]
        total = MultiPoly.zero(variables)
        r = idx_rows[0]
        for pos, c in enumerate(idx_cols):
            minor = det(idx_rows[1:], idx_cols[:pos] + idx_cols[pos + 1 :])
            term = rows[r][c] * minor
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return det(list(range(n)), list(range(n)))


def _validate_square_system(system) -> tuple:
    system = list(system)
    if not system:
        raise ArithdtError("empty polynomial system")
    variables = system[0].variables
    for p in system:
        if p.variables != variables:
            raise ArithdtError("system components over different variable lists")
    if len(system) != len(variables):
        raise ArithdtError(
            f"need a square system: {len(system)} polynomials in {len(variables)} variables"
        )
    return variables


def ekl_class(system, field: BaseField = QQ, functional=None) -> EklResult:
    """Local degree class of a square system with isolated zero at the origin.

    ``functional`` optionally fixes phi as coordinates over the standard
    monomial basis; it must satisfy phi(E) = 1.  By default phi is dual to
    the grevlex-highest monomial appearing in E, rescaled.
    """
    _validate_square_system(system)
    algebra = QuotientAlgebra.of_ideal(system)
    dim = algebra.dimension

    det_j = algebra.normal_form(_jacobian_determinant(system))
    if det_j.is_zero():
        raise DegenerateSystemError("Jacobian determinant vanishes in the local algebra")
    socle = det_j * Fraction(1, dim)

    socle_coords = algebra.coordinates(socle)
    if functional is None:
        lead = max(socle.terms, key=grevlex_key)
        idx = algebra.standard_monomials.index(lead)
        phi = [Fraction(0)] * dim
        phi[idx] = 1 / socle.terms[lead]
    else:
        phi = [Fraction(x) for x in functional]
        if len(phi) != dim:
            raise ArithdtError("functional has wrong length")
    if sum(p * c for p, c in zip(phi, socle_coords)) != 1:
        raise DegenerateSystemError("normalization phi(E) = 1 is not satisfied")

    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            value = sum(
                (phi[k] * c for k, c in algebra.basis_product(i, j).items()),
                Fraction(0),
            )
            gram[i][j] = gram[j][i] = value

    try:
        gw_class = diagonalize_symmetric(gram, field)
    except SingularMatrixError as exc:
        raise DegenerateSystemError(f"residue pairing is degenerate: {exc}") from exc
    return EklResult(
        gw_class=gw_class,
        rank=dim,
        gram=tuple(tuple(row) for row in gram),
        distinguished_socle=socle,
        algebra=algebra,
    )


def local_degree_simple(system, point, field: BaseField = QQ) -> GwElement:
    """<det J> at a simple zero: a rational point or a conjugate quadratic pair."""
    _validate_square_system(system)
    det_j = _jacobian_determinant(system)
    if isinstance(point, ConjugatePair):
        u, v = det_j.evaluate_quadratic(point.coords, point.d)
        if u == 0 and v == 0:
            raise DegenerateSystemError("Jacobian determinant vanishes at the point")
        return trace_form(point.d, u, v).to_field(field)
    value = det_j.evaluate(point)
    if value == 0:
        raise DegenerateSystemError("Jacobian determinant vanishes at the point")
    return GwElement.unit(field, value)


# -- univariate fiber machinery ------------------------------------------------


def _poly_trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _poly_deriv(c: list) -> list:
    return [k * c[k] for k in range(1, len(c))]


def _poly_eval(c: list, x: Fraction) -> Fraction:
    total = Fraction(0)
    for coeff in reversed(c):
        total = total * x + coeff
    return total


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        _poly_trim(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[k] = factor
        for i, bc in enumerate(b):
            a[k + i] -= factor * bc
        _poly_trim(a)
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd_is_constant(a: list, b: list) -> bool:
    a, b = a[:], b[:]
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return len(_poly_trim(a)) <= 1


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.update((d, n // d, -d, -(n // d)))
    return sorted(out)


def _primitive_integer(c: list) -> list[int]:
    from math import gcd, lcm

    denom = lcm(*(x.denominator for x in c)) if c else 1
    ints = [int(x * denom) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def _rational_roots(c: list) -> list[Fraction]:
    """All rational roots of a nonzero polynomial (Fraction coefficients)."""
    roots = []
    work = c[:]
    while work and work[0] == 0:
        roots.append(Fraction(0))
        work = work[1:]
    ints = _primitive_integer(work)
    if len(ints) <= 1:
        return sorted(set(roots))
    seen = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if q <= 0:
                continue
            cand = Fraction(p, q)
            if cand in seen:
                continue
            seen.add(cand)
            if _poly_eval(work, cand) == 0:
                roots.append(cand)
    return sorted(set(roots))


def _kronecker_quadratic_factor(c: list) -> list | None:
    """A quadratic factor of an integer polynomial via value interpolation.

    Any factor g satisfies g(k) | c(k); interpolating candidate quadratics
    through divisor triples at -1, 0, 1 and testing exact division finds a
    degree-2 factor whenever one exists.  Desk-scale inputs only.
    """
    ints = _primitive_integer(c)
    vals = [
        _poly_eval([Fraction(x) for x in ints], Fraction(t)) for t in (-1, 0, 1)
    ]
    if any(v == 0 for v in vals):
        return None  # a rational root remains; not this helper's job
    for d0 in _divisors(int(vals[1])):
        for d1 in _divisors(int(vals[2])):
            for dm1 in _divisors(int(vals[0])):
                if (d1 + dm1) % 2 or (d1 - dm1) % 2:
                    continue
                c2 = (d1 + dm1) // 2 - d0
                c1 = (d1 - dm1) // 2
                if c2 == 0:
                    continue
                g = [Fraction(d0), Fraction(c1), Fraction(c2)]
                q, r = _poly_divmod([Fraction(x) for x in ints], g)
                if not r:
                    return g
    return None


def global_degree_univariate(p: MultiPoly, y, field: BaseField = QQ) -> GwElement:
    """Degree of a univariate polynomial map as a sum of local degrees over a fiber.

    The preimages of y may be rational or quadratic over Q; an irreducible
    fiber factor of degree three or more is reported as unsupported.
    """
    if len(p.variables) != 1:
        raise ArithdtError("global degrees are implemented for univariate maps")
    y = Fraction(y)
    deg = p.total_degree()
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        coeffs[e[0]] = c
    coeffs[0] -= y
    _poly_trim(coeffs)
    if len(coeffs) <= 1:
        raise DegenerateSystemError("constant map has no degree")
    deriv = _poly_deriv(coeffs)
    if not _poly_gcd_is_constant(coeffs, deriv):
        raise DegenerateSystemError("fiber has repeated roots; y is not a regular value")

    total = GwElement.zero(field)
    remaining = coeffs[:]
    for root in _rational_roots(coeffs):
        jet = _poly_eval(deriv, root)
        total = total + GwElement.unit(field, jet)
        remaining, rem = _poly_divmod(remaining, [-root, Fraction(1)])
        assert not rem
    while len(remaining) - 1 >= 2:
        if len(remaining) - 1 == 2:
            quad = remaining
        else:
            quad = _kronecker_quadratic_factor(remaining)
            if quad is None:
                raise UnsupportedExtensionError(
                    "fiber contains an irreducible factor of degree >= 3; "
                    "only quadratic residue fields are supported"
                )
        c0, c1, c2 = quad
        # monic x^2 + px + q with root -p/2 + sqrt(disc)/2
        pp, qq = c1 / c2, c0 / c2
        disc = pp * pp - 4 * qq
        d = squarefree_part(disc.numerator * disc.denominator)
        ratio = disc / d
        s = Fraction(isqrt(ratio.numerator), isqrt(ratio.denominator))
        assert s * s == ratio
        root_q = ((-pp / 2, s / 2),)
        u, v = _eval_univariate_quadratic(deriv, root_q[0], d)
        total = total + trace_form(d, u, v).to_field(field)
        remaining, rem = _poly_divmod(remaining, quad)
        assert not rem
    return total


def _eval_univariate_quadratic(c: list, coord, d: int) -> tuple[Fraction, Fraction]:
    u = Fraction(0)
    v = Fraction(0)
    xu, xv = coord
    pu, pv = Fraction(1), Fraction(0)
    for coeff in c:
        u += coeff * pu
        v += coeff * pv
        pu, pv = pu * xu + d * pv * xv, pu * xv + pv * xu
    return u, v


def milnor_number_a1(f: MultiPoly, field: BaseField = QQ) -> EklResult:
    """Residue-pairing refinement of the Milnor number: the class of grad f."""
    grads = f.gradient()
    if all(g.is_zero() for g in grads):
        raise DegenerateSystemError("gradient vanishes identically")
    return ekl_class(grads, field)


@dataclass(frozen=True)
class MilnorReport:
    """Evidence record comparing the two refinements of the Milnor number.

    lhs is the A^1-Euler characteristic of the supplied motivic Milnor
    fiber; rhs is 1 + (-1)^(n-1) times the gradient class.  Disagreement is
    recorded, not raised: the identity is conjectural beyond the cases the
    supplied resolution data covers.
    """

    function: MultiPoly
    lhs: GwAlphaElement
    rhs: GwElement
    milnor: EklResult
    agrees: bool
    note: str


def milnor_chi_relation(f: MultiPoly, strata, field: BaseField = QQ, generators=None) -> MilnorReport:
    from .nearby import SncData, local_nearby_class

    if strata is None:
        raise InputDataError("missing resolution strata data")
    if not isinstance(strata, SncData):
        raise InputDataError("strata must be SncData")
    lhs = chi_a1(local_nearby_class(strata), field, generators)
    milnor = milnor_number_a1(f, field)
    n = len(f.variables)
    sign = 1 if (n - 1) % 2 == 0 else -1
    rhs = GwElement.one(field) + milnor.gw_class * sign
    alpha_free = lhs.odd.is_zero()
    agrees = alpha_free and lhs.even.gw_equal(rhs)
    if not alpha_free:
        note = "nearby class has a half-power part; comparison is outside GW(k)"
    elif agrees:
        note = "both sides agree in GW(k)"
    else:
        note = f"sides differ: chi = {lhs.even.render()} vs 1 + (-1)^(n-1)*mu = {rhs.render()}"
    return MilnorReport(function=f, lhs=lhs, rhs=rhs, milnor=milnor, agrees=agrees, note=note)
