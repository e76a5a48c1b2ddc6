"""Exact multivariate polynomials over Q with a fixed ordered variable list.

Terms map exponent vectors to Fraction coefficients; instances are treated
as immutable after construction.  This is the input language for the
quotient-algebra and local-degree machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArithdtError

Exponents = tuple


def _as_fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables: tuple[str, ...] = tuple(variables)
        cleaned: dict[Exponents, Fraction] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(self.variables):
                    raise ArithdtError("exponent vector length does not match variables")
                if any(e < 0 for e in exps):
                    raise ArithdtError("exponents must be nonnegative")
                coeff = _as_fraction(coeff)
                if coeff:
                    cleaned[exps] = cleaned.get(exps, Fraction(0)) + coeff
        self.terms = {e: c for e, c in cleaned.items() if c}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables, c) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name: str) -> "MultiPoly":
        variables = tuple(variables)
        idx = variables.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls(variables, {exps: 1})

    @classmethod
    def from_pairs(cls, variables, pairs) -> "MultiPoly":
        """Build from [(exponent_vector, coefficient), ...] with rational strings allowed."""
        return cls(variables, [(tuple(e), _as_fraction(c)) for e, c in pairs])

    @classmethod
    def parse(cls, variables, text: str) -> "MultiPoly":
        """Evaluate a polynomial expression like \"x**2 - y**2\" (trusted input only)."""
        variables = tuple(variables)
        env = {name: cls.variable(variables, name) for name in variables}
        env["Fraction"] = Fraction
        try:
            value = eval(text, {"__builtins__": {}}, env)  # noqa: S307
        except Exception as exc:
            raise ArithdtError(f"cannot parse polynomial {text!r}: {exc}") from exc
        if isinstance(value, (int, Fraction)):
            return cls.constant(variables, value)
        if not isinstance(value, MultiPoly):
            raise ArithdtError(f"{text!r} is not a polynomial expression")
        return value

    # -- ring structure ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, str)):
            return MultiPoly.constant(self.variables, other)
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ArithdtError("polynomials over different variable lists")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return MultiPoly(self.variables, acc)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ArithdtError("negative polynomial powers are undefined")
        out = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- calculus and evaluation ----------------------------------------------

    def partial(self, index: int) -> "MultiPoly":
        acc: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                continue
            key = tuple(v - 1 if i == index else v for i, v in enumerate(e))
            acc[key] = acc.get(key, Fraction(0)) + c * e[index]
        return MultiPoly(self.variables, acc)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial(i) for i in range(len(self.variables))]

    def evaluate(self, point) -> Fraction:
        point = [_as_fraction(x) for x in point]
        if len(point) != len(self.variables):
            raise ArithdtError("point dimension does not match variables")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return total

    def evaluate_quadratic(self, point, d: int) -> tuple[Fraction, Fraction]:
        """Evaluate at a point of Q(sqrt(d)); coordinates are (u, v) pairs u + v*sqrt(d)."""
        coords = [(Fraction(u), Fraction(v)) for u, v in point]
        if len(coords) != len(self.variables):
            raise ArithdtError("point dimension does not match variables")

        def mul(a, b):
            return (a[0] * b[0] + d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

        total = (Fraction(0), Fraction(0))
        for e, c in self.terms.items():
            term = (Fraction(c), Fraction(0))
            for x, k in zip(coords, e):
                for _ in range(k):
                    term = mul(term, x)
            total = (total[0] + term[0], total[1] + term[1])
        return total

    # -- presentation -----------------------------------------------------------

    def to_pairs(self) -> list:
        """JSON-ready [(exponents, coefficient-string), ...] in a stable order."""
        return [[list(e), str(c)] for e, c in sorted(self.terms.items())]

    def render(self) -> str:
        if not self.terms:
            return "0"
        monos = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            parts = []
            for name, k in zip(self.variables, e):
                if k == 1:
                    parts.append(name)
                elif k > 1:
                    parts.append(f"{name}^{k}")
            body = "*".join(parts)
            if not body:
                monos.append((str(abs(c)), c < 0))
            elif abs(c) == 1:
                monos.append((body, c < 0))
            else:
                monos.append((f"{abs(c)}*{body}", c < 0))
        out = []
        for idx, (body, negative) in enumerate(monos):
            if idx == 0:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f"{'-' if negative else '+'} {body}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}; {self.render()})"
