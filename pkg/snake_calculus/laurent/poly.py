"""
Exact multivariate Laurent polynomials with integer coefficients.

A monomial is a sorted tuple of ``(variable, exponent)`` pairs with nonzero
exponents; the polynomial maps monomials to nonzero integers.
"""

from typing import Dict, Iterable, List, Mapping, Tuple, Union

import sympy

Monomial = Tuple[Tuple[str, int], ...]

ONE: Monomial = ()


def _normalize(exponents: Mapping[str, int]) -> Monomial:
    return tuple(sorted((name, exp) for name, exp in exponents.items() if exp != 0))


def _multiply(a: Monomial, b: Monomial) -> Monomial:
    exponents: Dict[str, int] = dict(a)
    for name, exp in b:
        exponents[name] = exponents.get(name, 0) + exp
    return _normalize(exponents)


def _format_monomial(monomial: Monomial) -> str:
    return ' '.join(name if exp == 1 else f"{name}^{exp}" for name, exp in monomial)


class LaurentPoly:
    """Sparse Laurent polynomial; instances are immutable values."""

    __slots__ = ('terms',)

    def __init__(self, terms: Mapping[Monomial, int] = None):
        self.terms: Dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, value: int) -> 'LaurentPoly':
        return cls({ONE: value})

    @classmethod
    def variable(cls, name: str, exp: int = 1) -> 'LaurentPoly':
        return cls({_normalize({name: exp}): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coefficient: int = 1) -> 'LaurentPoly':
        return cls({_normalize(exponents): coefficient})

    @classmethod
    def product(cls, factors: Iterable['LaurentPoly']) -> 'LaurentPoly':
        result = cls.constant(1)
        for factor in factors:
            result = result * factor
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> List[str]:
        return sorted({name for monomial in self.terms for name, _ in monomial})

    def __add__(self, other: Union['LaurentPoly', int]) -> 'LaurentPoly':
        other = _coerce(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union['LaurentPoly', int]) -> 'LaurentPoly':
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> 'LaurentPoly':
        return _coerce(other) - self

    def __mul__(self, other: Union['LaurentPoly', int]) -> 'LaurentPoly':
        other = _coerce(other)
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _multiply(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def inverse(self) -> 'LaurentPoly':
        """Inverse of a monomial with coefficient +1 or -1."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"Only monomials are invertible, not {self}")
        (monomial, coefficient), = self.terms.items()
        if coefficient not in (1, -1):
            raise ZeroDivisionError(f"Coefficient {coefficient} is not a unit")
        return LaurentPoly({tuple((name, -exp) for name, exp in monomial): coefficient})

    def __truediv__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self * other.inverse()

    def __pow__(self, exp: int) -> 'LaurentPoly':
        if exp < 0:
            return self.inverse() ** -exp
        result = LaurentPoly.constant(1)
        for _ in range(exp):
            result = result * self
        return result

    def substitute(self, values: Mapping[str, Union['LaurentPoly', int]]) -> 'LaurentPoly':
        """Replace variables by integers or polynomials; integers must be units if raised to negative powers."""
        total = LaurentPoly()
        for monomial, coefficient in self.terms.items():
            term = LaurentPoly.constant(coefficient)
            for name, exp in monomial:
                if name in values:
                    term = term * (_coerce(values[name]) ** exp)
                else:
                    term = term * LaurentPoly.variable(name, exp)
            total = total + term
        return total

    def specialize(self, prefix: str, value: int = 1) -> 'LaurentPoly':
        """Set every variable starting with ``prefix`` to ``value``."""
        return self.substitute({name: value for name in self.variables() if name.startswith(prefix)})

    def evaluate(self) -> int:
        """Value once every variable is set to 1."""
        return sum(self.terms.values())

    def as_expr(self) -> sympy.Expr:
        expr = sympy.Integer(0)
        for monomial, coefficient in self.terms.items():
            term = sympy.Integer(coefficient)
            for name, exp in monomial:
                term *= sympy.Symbol(name) ** exp
            expr += term
        return expr

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def format_terms(self) -> List[str]:
        """One ``<coef> <variables>`` line per monomial in canonical order."""
        return [f"{coefficient} {_format_monomial(monomial)}".rstrip() for monomial, coefficient in self.sorted_terms()]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        parts = []
        for monomial, coefficient in self.sorted_terms():
            body = '*'.join(name if exp == 1 else f"{name}^{exp}" for name, exp in monomial)
            magnitude = abs(coefficient)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            parts.append(('- ' if coefficient < 0 else '+ ') + text)
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _coerce(value: Union[LaurentPoly, int]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"Cannot use {value!r} as a Laurent polynomial")
