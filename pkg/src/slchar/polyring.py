"""Exact multivariate polynomials with rational coefficients.

Coefficients are Python ints or :class:`fractions.Fraction`; integer
coefficients stay ints internally so the heavy trace-polynomial
arithmetic runs at native-int speed.  Exponent vectors are dense
tuples sized to the variable set (all the sets used here have at most
eight variables).  Terms iterate in graded lexicographic order of the
declared variable order, which fixes the text form and the JSON form.

Text form: ``3/2*x^2*y - z + 1``.
JSON form: ``{"variables": [...], "terms": [{"exp": [...], "num": ..., "den": ...}]}``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "VariableSet",
    "Polynomial",
    "F2_VARS",
    "F3_VARS",
    "S04_VARS",
    "S12_VARS",
    "reduce_mod_phi",
]


class VariableSet:
    """An ordered set of distinct variable names.

    The order is part of the identity: it fixes exponent-vector layout
    and the graded-lex term order.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self.names}") from None

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableSet({self.names!r})"


#: Character coordinates of a free group of rank 2: tr X, tr Y, tr XY.
F2_VARS = VariableSet(("x", "y", "z"))

#: The seven coordinates of the rank-3 character hypersurface.
F3_VARS = VariableSet(("x1", "x2", "x3", "x12", "x13", "x23", "x123"))

#: Four-holed sphere: boundary traces a,b,c,d and curve traces x,y,z.
S04_VARS = VariableSet(("a", "b", "c", "d", "x", "y", "z"))

#: Two-holed torus: boundary traces a,b; generator traces u,x,y;
#: double-product traces v,w,z.
S12_VARS = VariableSet(("a", "b", "u", "v", "w", "x", "y", "z"))


def _norm_coeff(c):
    """Collapse Fractions with denominator one to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    """Immutable exact polynomial over a fixed :class:`VariableSet`."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: VariableSet, terms: Mapping[tuple, object] | None = None):
        self.variables = variables
        clean: dict[tuple, object] = {}
        if terms:
            nvars = len(variables)
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ValueError(
                        f"exponent vector {exp} does not match {nvars} variables"
                    )
                c = _norm_coeff(c)
                if c:
                    clean[tuple(exp)] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: VariableSet) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: VariableSet, c) -> "Polynomial":
        return cls(variables, {(0,) * len(variables): Fraction(c)})

    @classmethod
    def variable(cls, variables: VariableSet, name: str) -> "Polynomial":
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): 1})

    @classmethod
    def from_coeffs(cls, variables: VariableSet, entries: Mapping[tuple, object]) -> "Polynomial":
        return cls(variables, {e: Fraction(c) for e, c in entries.items()})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self._terms), default=0)

    def coefficient(self, exp: tuple) -> Fraction:
        return Fraction(self._terms.get(tuple(exp), 0))

    def terms(self):
        """Iterate ``(exponent, Fraction coefficient)`` in canonical order."""
        order = sorted(self._terms, key=lambda e: (sum(e), e), reverse=True)
        for e in order:
            yield e, Fraction(self._terms[e])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self._terms.items())))

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise ValueError(
                    f"incompatible variable sets {self.variables} and {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple, object] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(map(sum, zip(ea, eb)))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = _norm_coeff(Fraction(c))
        if not c:
            return Polynomial.zero(self.variables)
        return Polynomial(self.variables, {e: v * c for e, v in self._terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- evaluation and substitution -----------------------------------------

    def evaluate(self, assignment: Mapping[str, complex]) -> complex:
        """Evaluate at a complex point.  Every variable must be bound."""
        vals = []
        for name in self.variables:
            if name not in assignment:
                raise KeyError(f"variable {name!r} not bound in assignment")
            vals.append(complex(assignment[name]))
        total = 0j
        for e, c in self._terms.items():
            term = complex(c)
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def evaluate_exact(self, assignment: Mapping[str, Rational]) -> Fraction:
        """Evaluate at a rational point with exact arithmetic."""
        vals = []
        for name in self.variables:
            if name not in assignment:
                raise KeyError(f"variable {name!r} not bound in assignment")
            vals.append(Fraction(assignment[name]))
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(
        self,
        mapping: Mapping[str, "Polynomial"],
        target: VariableSet | None = None,
    ) -> "Polynomial":
        """Substitute polynomials for variables.

        Unmapped variables are carried over by name, so they must exist
        in the target set.  When all images share one variable set the
        target may be omitted.
        """
        if target is None:
            for img in mapping.values():
                target = img.variables
                break
            else:
                target = self.variables
        images: list[Polynomial] = []
        for name in self.variables:
            if name in mapping:
                img = mapping[name]
                if img.variables != target:
                    raise ValueError(
                        f"image of {name!r} is over {img.variables}, expected {target}"
                    )
                images.append(img)
            else:
                images.append(Polynomial.variable(target, name))
        out = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for img, k in zip(images, e):
                if k:
                    term = term * img**k
            out = out + term
        return out

    def rename_variables(self, target: VariableSet) -> "Polynomial":
        """Reinterpret over a same-length variable set, positionally."""
        if len(target) != len(self.variables):
            raise ValueError("variable sets must have equal length")
        return Polynomial(target, dict(self._terms))

    # -- canonical text and JSON ------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            mon = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.variables, e)
                if k
            )
            mag = abs(c)
            if not mon:
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = f"{mag}*{mon}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r} over {self.variables.names})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables.names),
            "terms": [
                {"exp": list(e), "num": c.numerator, "den": c.denominator}
                for e, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        variables = VariableSet(data["variables"])
        terms = {
            tuple(t["exp"]): Fraction(t["num"], t.get("den", 1))
            for t in data["terms"]
        }
        return cls(variables, terms)


def _f3_poly(entries: Mapping[tuple, int]) -> Polynomial:
    return Polynomial(F3_VARS, entries)


def _monomial(variables: VariableSet, coeff: int, **powers: int) -> Polynomial:
    exp = [0] * len(variables)
    for name, k in powers.items():
        exp[variables.index(name)] = k
    return Polynomial(variables, {tuple(exp): coeff})


def _build_sum_relation() -> Polynomial:
    # x12*x3 + x13*x2 + x23*x1 - x1*x2*x3
    m = lambda c, **p: _monomial(F3_VARS, c, **p)
    return (
        m(1, x12=1, x3=1)
        + m(1, x13=1, x2=1)
        + m(1, x23=1, x1=1)
        + m(-1, x1=1, x2=1, x3=1)
    )


def _build_product_relation() -> Polynomial:
    m = lambda c, **p: _monomial(F3_VARS, c, **p)
    return (
        m(1, x1=2) + m(1, x2=2) + m(1, x3=2)
        + m(1, x12=2) + m(1, x23=2) + m(1, x13=2)
        + m(-1, x1=1, x2=1, x12=1)
        + m(-1, x2=1, x3=1, x23=1)
        + m(-1, x3=1, x1=1, x13=1)
        + m(1, x12=1, x23=1, x13=1)
        + Polynomial.constant(F3_VARS, -4)
    )


#: Coefficients of the monic quadratic  t^2 - SUM_RELATION*t + PRODUCT_RELATION
#: whose roots are the two triple traces.
SUM_RELATION = _build_sum_relation()
PRODUCT_RELATION = _build_product_relation()

#: The defining polynomial of the rank-3 character hypersurface:
#: PHI = x123^2 - SUM_RELATION*x123 + PRODUCT_RELATION.
PHI = (
    _monomial(F3_VARS, 1, x123=2)
    - SUM_RELATION * _monomial(F3_VARS, 1, x123=1)
    + PRODUCT_RELATION
)

_X123_INDEX = F3_VARS.index("x123")


def reduce_mod_phi(p: Polynomial) -> Polynomial:
    """Canonical representative of ``p`` modulo the hypersurface relation.

    Repeatedly eliminates ``x123^2`` using the monic quadratic PHI, so
    the result has degree at most one in ``x123``.  Requires ``p`` over
    the seven-variable rank-3 set.
    """
    if p.variables != F3_VARS:
        raise ValueError("reduce_mod_phi expects a polynomial over the F3 set")
    # x123^2 == SUM_RELATION*x123 - PRODUCT_RELATION on the hypersurface
    x123 = _monomial(F3_VARS, 1, x123=1)
    replacement = SUM_RELATION * x123 - PRODUCT_RELATION
    i = _X123_INDEX
    while True:
        d = p.degree_in("x123")
        if d <= 1:
            return p
        high = {e: c for e, c in p._terms.items() if e[i] == d}
        rest = {e: c for e, c in p._terms.items() if e[i] != d}
        lowered = {}
        for e, c in high.items():
            e2 = list(e)
            e2[i] = d - 2
            lowered[tuple(e2)] = c
        p = Polynomial(F3_VARS, rest) + Polynomial(F3_VARS, lowered) * replacement
